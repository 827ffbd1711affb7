#include "cbl/slice.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace cbl {

namespace {

std::string letters_string(const std::vector<int>& v) {
  BraidWord w;
  w.strands = 2;
  for (int x : v) w.strands = std::max(w.strands, std::abs(x) + 1);
  w.letters = v;
  return render_word(w);
}

// apply adjacent-inverse-pair cancellations in order; indices refer to the
// current word at each step
void apply_cancellations(std::vector<int>& v, const CancelScript& script,
                         const char* what) {
  for (int p : script.pairs) {
    if (p < 0 || p + 1 >= (int)v.size())
      throw error(std::string(what) + ": cancellation position " +
                  std::to_string(p) + " out of range");
    if (v[p] != -v[p + 1])
      throw error(std::string(what) + ": letters at positions " +
                  std::to_string(p) + "," + std::to_string(p + 1) + " (" +
                  std::to_string(v[p]) + "," + std::to_string(v[p + 1]) +
                  ") are not an inverse pair");
    v.erase(v.begin() + p, v.begin() + p + 2);
  }
}

// parity adjustment: certified bounds satisfy chi == mu (mod 2), so an
// off-parity bound can be lowered by one
int parity_down(int bound, int mu) {
  if (((bound - mu) % 2 + 2) % 2 != 0) --bound;
  return bound;
}

}  // namespace

int verify_band_factorization(const BraidWord& w, const BandFactorization& f,
                              const CancelScript& cancellations) {
  if (f.strands != w.strands)
    throw error("band factorization strand count " +
                std::to_string(f.strands) + " does not match word on " +
                std::to_string(w.strands) + " strands");
  std::vector<int> prod = f.flatten();
  apply_cancellations(prod, cancellations, "band factorization");
  if (prod != w.letters) {
    size_t i = 0;
    while (i < prod.size() && i < w.letters.size() &&
           prod[i] == w.letters[i])
      ++i;
    throw error("band factorization product mismatch at position " +
                std::to_string(i) + ": product \"" + letters_string(prod) +
                "\" vs target \"" + letters_string(w.letters) + "\"");
  }
  return w.strands - (int)f.factors.size();
}

int chi_minus_lower(const BraidWord& w, const SwitchSet& s,
                    const CancelScript& reduction,
                    const BandFactorization& f) {
  std::vector<int> v = w.letters;
  std::set<int> seen;
  for (int p : s.positions) {
    if (p < 0 || p >= (int)v.size())
      throw error("switch position " + std::to_string(p) + " out of range");
    if (!seen.insert(p).second)
      throw error("switch position " + std::to_string(p) + " listed twice");
    if (v[p] >= 0)
      throw error("switch position " + std::to_string(p) +
                  " does not hold a negative letter");
    v[p] = -v[p];
  }
  apply_cancellations(v, reduction, "switch reduction");
  BraidWord reduced;
  reduced.strands = w.strands;
  reduced.letters = std::move(v);
  return verify_band_factorization(reduced, f);
}

int chi_upper(const BraidWord& w, ChiTarget target,
              std::vector<std::string>* provenance) {
  LinkFingerprint fp = link_fingerprint(w);
  int mu = fp.components;
  std::vector<std::pair<int, std::string>> bounds;

  // (a) mu disjoint disks, impossible when linking obstructs them: any
  // nonzero pairwise linking rules out embedded disks; for the negatively
  // immersed bound only positive linking obstructs (negative intersections
  // are allowed)
  int cap = mu;
  bool capped = false;
  for (int lk : pairwise_linking(fp)) {
    bool obstructs = target == ChiTarget::chi_s ? lk != 0 : lk > 0;
    if (obstructs) {
      cap = mu - 2;
      capped = true;
      break;
    }
  }
  bounds.push_back({cap, capped ? "component bound mu-2 (nonzero linking)"
                                : "component bound mu"});

  // (b) signature bound, knots and the embedded target only
  if (mu == 1 && target == ChiTarget::chi_s)
    bounds.push_back(
        {1 - std::abs(signature(w)), "signature bound 1-|sigma|"});

  // (c) slice-Bennequin
  bounds.push_back({w.strands - w.exponent_sum(), "slice-Bennequin n-e"});

  int best = 0;
  const std::string* why = nullptr;
  bool first = true;
  for (auto& [b, p] : bounds) {
    int adj = parity_down(b, mu);
    if (first || adj < best) {
      best = adj;
      why = &p;
      first = false;
    }
  }
  if (provenance) provenance->push_back(*why);
  return best;
}

std::set<std::string> classify(const ChiBounds& chi, const LinkFingerprint& fp,
                               std::optional<MirrorClass> mirror_class) {
  std::set<std::string> out;

  // chi_s < chi_s^- is certified when the upper bound for chi_s sits below
  // the lower bound for chi_s^-
  bool chi_differ = chi.chi_s_upper && chi.chi_minus_lower &&
                    *chi.chi_s_upper < *chi.chi_minus_lower;
  if (chi_differ) {
    out.insert("not_SB");
    // the B-clause additionally needs every proper nonempty sublink to have
    // nonzero total linking with its complement (vacuous for knots)
    int mu = fp.components;
    bool zero_partition = false;
    for (int mask = 1; mask + 1 < (1 << mu); ++mask) {
      int total = 0;
      for (int a = 0; a < mu; ++a)
        for (int b = 0; b < mu; ++b)
          if ((mask >> a & 1) && !(mask >> b & 1))
            total += fp.linking_matrix[a][b];
      if (total == 0) {
        zero_partition = true;
        break;
      }
    }
    if (!zero_partition) out.insert("not_B");
  }

  // Prop 3.3: membership of the mirror forces chi_s = chi_s^- >= 1; the
  // negation is certified by chi_differ or by chi_s <= 0
  bool chi_condition =
      chi_differ || (chi.chi_s_upper && *chi.chi_s_upper < 1);
  if (mirror_class && chi_condition) {
    if (mirror_class->in_sb == Tri::yes) out.insert("not_B via Prop 3.3");
    if (mirror_class->in_b == Tri::yes) out.insert("not_SB via Prop 3.3");
  }
  return out;
}

}  // namespace cbl
