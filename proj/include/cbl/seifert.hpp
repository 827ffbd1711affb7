#ifndef CBL_SEIFERT_HPP
#define CBL_SEIFERT_HPP

#include <vector>

#include "cbl/braid.hpp"

namespace cbl {

// signature of an integer symmetric matrix, exact arithmetic
int symmetric_signature(const std::vector<std::vector<int>>& m);

// symmetrized Seifert form of the Bennequin surface of the closure;
// generators are consecutive same-column letter pairs, in column-major order
std::vector<std::vector<int>> seifert_symmetrized(const BraidWord& w);

// signature of the closure, sign convention anchored at signature("1 1") = +1
// (the negative of the textbook convention); additive over disjoint strand
// blocks and negated by mirror
int signature(const BraidWord& w);

}  // namespace cbl

#endif
