#ifndef CBL_QP_HPP
#define CBL_QP_HPP

#include <optional>
#include <vector>

#include "cbl/braid.hpp"

namespace cbl {

// one band: conjugator * sigma_index^sign * conjugator^{-1}
struct BandFactor {
  std::vector<int> conjugator;
  int index = 1;
  int sign = 1;

  std::vector<int> flatten() const;
};

struct BandFactorization {
  int strands = 1;
  std::vector<BandFactor> factors;

  std::vector<int> flatten() const;  // concatenation of all factor letters
};

// search for an all-positive factorization whose concatenation free-reduces
// to w; conjugators up to `budget` letters; sound but not complete
std::optional<BandFactorization> find_qp_factorization(const BraidWord& w, int budget);

}  // namespace cbl

#endif
