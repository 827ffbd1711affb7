#ifndef CBL_CERT_HPP
#define CBL_CERT_HPP

#include <optional>
#include <string>
#include <vector>

#include "cbl/braid.hpp"
#include "cbl/qp.hpp"
#include "cbl/slice.hpp"

namespace cbl {

// a banded word item: either a braid generator or a band attached to the
// closure at this angular position
struct Item {
  bool is_band = false;
  int letter = 0;                   // gen: signed generator index
  int id = 0;                       // band: numeric id from the B<id> token
  int lo = 0, hi = 0;               // band: attached strands, lo < hi
  bool posmono = false;             // band flavor: positive monotone vs flat
};

Item gen_item(int letter);
Item band_item(int id, int lo, int hi, bool posmono);

// circular word of items read at increasing angle around the braid axis
struct BandedWord {
  int strands = 1;
  std::vector<Item> items;
};

struct CertStep {
  enum Kind {
    far_commute,       // swap commuting adjacent generators
    braid_relation,    // aba -> bab at p, p+1, p+2
    cancel_pair,       // delete inverse generators at p, p+1
    insert_pair,       // insert sign*index, -sign*index at p
    rotate,            // cyclic rotation by k
    stabilize,         // add a strand and a positive generator on it
    destabilize,       // inverse of stabilize
    band_move,         // insert a positive generator at p (positive band move)
    band_commute       // swap an adjacent pair involving a band
  };
  Kind kind;
  int p = 0;
  int index = 0;
  int sign = 1;
  int k = 0;
};

struct FinalClaim {
  int band_id = 0;
  bool trivial = false;  // trivial(strand) vs posmono
  int strand = 0;
};

// optional euler-characteristic script carried alongside the certificate
struct ChiScript {
  SwitchSet switches;
  CancelScript cancellations;
  std::optional<BandFactorization> factorization;
};

struct Certificate {
  BandedWord initial;
  BandFactorization initial_qp;
  std::vector<CertStep> steps;
  std::vector<FinalClaim> final_claims;
  BraidWord result;
  std::optional<ChiScript> chi;
};

// components and linking data of the link obtained by surgering the closure
// of the gen part along the bands; when no flat band is present the surgered
// object is again a braid word and is returned for stronger comparisons
struct SurgeryFingerprint {
  int components = 0;
  std::vector<std::vector<int>> linking_matrix;
  std::optional<BraidWord> braid;
};

SurgeryFingerprint surgery_fingerprint(const BandedWord& w);

// replays one step; throws cbl::error when the applicability predicate fails
void apply_step(BandedWord& w, const CertStep& s);

// connectivity certificate for strongness: arcs of the banded words along the
// sequence, with identity edges for persisting arcs and cliques at band moves
struct StrongnessResult {
  bool holds = false;
  int vertices = 0;
  int edges = 0;
  std::vector<std::string> notes;
};

StrongnessResult strongness_check(const Certificate& c);

struct VerifyResult {
  bool accepted = false;
  bool c_boundary = false;
  std::string strong = "undetermined";  // "yes" or "undetermined"
  std::vector<std::string> report;
};

VerifyResult verify_certificate(const Certificate& c);

// text format round-trip; parse throws cbl::error with a line number on
// malformed input
Certificate parse_certificate(const std::string& text);
std::string render_certificate(const Certificate& c);

enum class ExampleKind { split_mirror, connected_mirror, mixed_monoid };

// builds a certificate for the standard constructions applied to the closure
// of a quasipositive word beta with the supplied verified factorization; k is
// the spared strand for mixed_monoid
Certificate generate_example_cert(ExampleKind kind, const BraidWord& beta,
                                  const BandFactorization& beta_qp, int k = 0);

}  // namespace cbl

#endif
