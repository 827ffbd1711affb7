#ifndef CBL_TESTS_HOMFLY_ORACLE_HPP
#define CBL_TESTS_HOMFLY_ORACLE_HPP

#include "cbl/braid.hpp"
#include "cbl/laurent.hpp"

namespace cbl::testing {

// brute-force resolution-tree HOMFLY: walk the closure in a canonical order,
// switch-and-smooth the first crossing reached on its under-pass, and end at
// descending diagrams (unlinks); exponential, only for small words
LaurentPoly2 homfly_oracle(const BraidWord& w);

}  // namespace cbl::testing

#endif
