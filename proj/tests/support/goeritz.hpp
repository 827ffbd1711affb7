#ifndef CBL_TESTS_GOERITZ_HPP
#define CBL_TESTS_GOERITZ_HPP

#include "cbl/braid.hpp"

namespace cbl::testing {

// independent signature oracle: Goeritz matrix of the checkerboard coloring of
// the standard closed-braid diagram with the Gordon-Litherland correction.
// The handful of diagram-convention signs is calibrated once, at first use,
// against textbook anchor values and then frozen; throws if no convention
// matches the anchors.
int signature_oracle(const BraidWord& w);

}  // namespace cbl::testing

#endif
