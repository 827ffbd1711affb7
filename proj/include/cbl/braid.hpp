#ifndef CBL_BRAID_HPP
#define CBL_BRAID_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cbl {

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// word in the braid group B_n; letter +i / -i means sigma_i / sigma_i^{-1},
// with 1 <= i <= strands-1 (empty words are fine on any strand count)
struct BraidWord {
  int strands = 1;
  std::vector<int> letters;

  int exponent_sum() const;
  bool operator==(const BraidWord&) const = default;
};

// images[x] = final position of the strand entering at position x (0-based)
struct Permutation {
  std::vector<int> images;

  static Permutation identity(int n);
  int size() const { return (int)images.size(); }
  int operator()(int x) const { return images[x]; }
  bool operator==(const Permutation&) const = default;
};

Permutation braid_permutation(const BraidWord& w);

struct LinkFingerprint {
  int components = 1;
  std::vector<std::vector<int>> linking_matrix;  // mu x mu, zero diagonal
  int writhe = 0;
  int exponent_sum = 0;
  int strands = 1;

  bool operator==(const LinkFingerprint&) const = default;
};

// tokens: signed decimal integers separated by spaces, tabs or commas
BraidWord parse_word(const std::string& text,
                     std::optional<int> declared_strands = std::nullopt);
std::string render_word(const BraidWord& w);

LinkFingerprint link_fingerprint(const BraidWord& w);

// component id of each strand position at angle 0; components are numbered
// 0.. in order of their lowest strand position
std::vector<int> strand_components(const BraidWord& w);

// linking numbers for component pairs (a,b), a<b, in lexicographic order
std::vector<int> pairwise_linking(const LinkFingerprint& fp);

// equality up to renumbering the components (conjugation and rotation can
// permute the lowest-strand component order)
bool fingerprint_equivalent(const LinkFingerprint& a, const LinkFingerprint& b);

BraidWord mirror(const BraidWord& w);
BraidWord reverse(const BraidWord& w);
BraidWord cyclic_shift(const BraidWord& w, int k);
BraidWord conjugate(const BraidWord& w, int letter);
BraidWord stabilize(const BraidWord& w, int sign);
BraidWord destabilize(const BraidWord& w);

// cancel adjacent inverse pairs until none remain (confluent, so any order)
std::vector<int> free_reduce(std::vector<int> letters);

std::vector<int> inverse_letters(const std::vector<int>& letters);

}  // namespace cbl

#endif
