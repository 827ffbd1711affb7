#include "homfly_oracle.hpp"

#include <cstdlib>
#include <vector>

namespace cbl::testing {

namespace {

struct Pass {
  int time;   // letter index
  bool left;  // strand entered the crossing from position i (vs i+1)
};

// passes of the closure traversal: components in order of smallest strand at
// angle 0, each followed all the way around
std::vector<Pass> traversal(const BraidWord& w) {
  std::vector<Pass> out;
  std::vector<bool> started(w.strands, false);
  for (int s0 = 0; s0 < w.strands; ++s0) {
    if (started[s0]) continue;
    int p = s0;
    do {
      started[p] = true;
      for (int t = 0; t < (int)w.letters.size(); ++t) {
        int i = std::abs(w.letters[t]) - 1;
        if (p == i) {
          out.push_back({t, true});
          p = i + 1;
        } else if (p == i + 1) {
          out.push_back({t, false});
          p = i;
        }
      }
    } while (p != s0);
  }
  return out;
}

LaurentPoly2 delta_pow(int e) {
  LaurentPoly2 d = LaurentPoly2::mono(-1, -1, 1) - LaurentPoly2::mono(1, -1, 1);
  LaurentPoly2 r = LaurentPoly2::one();
  for (int i = 0; i < e; ++i) r = r * d;
  return r;
}

}  // namespace

LaurentPoly2 homfly_oracle(const BraidWord& w) {
  // first bad crossing: first crossing whose first-reached pass goes under;
  // convention: at a positive crossing the left-entering strand passes over
  std::vector<Pass> passes = traversal(w);
  std::vector<bool> seen(w.letters.size(), false);
  for (const Pass& ps : passes) {
    if (seen[ps.time]) continue;
    seen[ps.time] = true;
    bool positive = w.letters[ps.time] > 0;
    bool over = (positive == ps.left);
    if (over) continue;
    BraidWord switched = w;
    switched.letters[ps.time] = -switched.letters[ps.time];
    BraidWord smoothed = w;
    smoothed.letters.erase(smoothed.letters.begin() + ps.time);
    LaurentPoly2 ps_ = homfly_oracle(switched);
    LaurentPoly2 p0 = homfly_oracle(smoothed);
    if (positive)  // P(L+) = v^2 P(L-) + v z P(L0)
      return ps_.shifted(2, 0) + p0.shifted(1, 1);
    // P(L-) = v^-2 P(L+) - v^-1 z P(L0)
    return ps_.shifted(-2, 0) - p0.shifted(-1, 1);
  }
  // descending: unlink with mu components
  return delta_pow(link_fingerprint(w).components - 1);
}

}  // namespace cbl::testing
