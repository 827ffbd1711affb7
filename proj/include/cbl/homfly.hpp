#ifndef CBL_HOMFLY_HPP
#define CBL_HOMFLY_HPP

#include "cbl/braid.hpp"
#include "cbl/laurent.hpp"

namespace cbl {

struct resource_error : error {
  using error::error;
};

struct DegreeSpan {
  int min_v = 0;
  int max_v = 0;
  bool operator==(const DegreeSpan&) const = default;
};

// HOMFLY polynomial of the closure, convention
//   v^-1 P(L+) - v P(L-) = z P(L0),  P(unknot) = 1,  split union factor
//   delta = (v^-1 - v)/z
LaurentPoly2 homfly_poly(const BraidWord& w, int crossing_cap = 16);

// [writhe - n + 1, writhe + n - 1], contains the v-degree span of P
DegreeSpan mfw_bounds(const BraidWord& w);

enum class Obstruction { obstructed, inconclusive };

// sound quasipositivity obstruction: fires iff min_v P < 1 - chi_s_upper;
// chi_s_upper must be a certified upper bound for chi_s of the closure
Obstruction qp_obstruction(const BraidWord& w, int chi_s_upper,
                           int crossing_cap = 16);

}  // namespace cbl

#endif
