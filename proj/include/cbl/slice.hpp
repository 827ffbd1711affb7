#ifndef CBL_SLICE_HPP
#define CBL_SLICE_HPP

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cbl/braid.hpp"
#include "cbl/qp.hpp"
#include "cbl/seifert.hpp"

namespace cbl {

// positions of negative letters to switch to positive (one negative double
// point each)
struct SwitchSet {
  std::vector<int> positions;
};

// adjacent inverse pairs (p, p+1) to cancel, applied in order; indices refer
// to the current word at each step
struct CancelScript {
  std::vector<int> pairs;
};

struct ChiBounds {
  std::optional<int> chi_s_lower, chi_s_upper;
  std::optional<int> chi_minus_lower, chi_minus_upper;
  std::vector<std::string> provenance;
};

enum class ChiTarget { chi_s, chi_minus };

enum class Tri { yes, no, unknown };

// class membership of the mirror (or reverse-mirror) link, when known
struct MirrorClass {
  Tri in_b = Tri::unknown;
  Tri in_sb = Tri::unknown;
};

// checks that the factor concatenation equals w letter-for-letter after the
// recorded cancellations; returns chi = n - k on success, throws cbl::error
// with the first disagreement otherwise
int verify_band_factorization(const BraidWord& w, const BandFactorization& f,
                              const CancelScript& cancellations = {});

// switch the listed negative letters, cancel per the script, then verify the
// factorization of the reduced word; returns n - k, a certified lower bound
// for chi_s^- of the closure of w
int chi_minus_lower(const BraidWord& w, const SwitchSet& s,
                    const CancelScript& reduction, const BandFactorization& f);

// certified upper bound for the chosen target, minimum over the applicable
// rules (component count with linking cap, knot signature, slice-Bennequin),
// adjusted down to the parity chi == mu (mod 2)
int chi_upper(const BraidWord& w, ChiTarget target,
              std::vector<std::string>* provenance = nullptr);

// decision rules; emits every conclusion the supplied data certifies
std::set<std::string> classify(const ChiBounds& chi, const LinkFingerprint& fp,
                               std::optional<MirrorClass> mirror_class = {});

}  // namespace cbl

#endif
