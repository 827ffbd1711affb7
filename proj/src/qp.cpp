#include "cbl/qp.hpp"

#include <algorithm>
#include <cstdint>
#include <unordered_map>
#include <unordered_set>

namespace cbl {

std::vector<int> BandFactor::flatten() const {
  std::vector<int> out = conjugator;
  out.push_back(sign > 0 ? index : -index);
  std::vector<int> inv = inverse_letters(conjugator);
  out.insert(out.end(), inv.begin(), inv.end());
  return out;
}

std::vector<int> BandFactorization::flatten() const {
  std::vector<int> out;
  for (const BandFactor& f : factors) {
    std::vector<int> fl = f.flatten();
    out.insert(out.end(), fl.begin(), fl.end());
  }
  return out;
}

namespace {

uint64_t word_hash(const std::vector<int>& w, int depth) {
  uint64_t h = 1469598103934665603ull ^ (uint64_t)depth;
  for (int l : w) {
    h ^= (uint64_t)(uint32_t)l;
    h *= 1099511628211ull;
  }
  return h;
}

struct Searcher {
  int n = 2;
  std::vector<BandFactor> cands;      // candidate factors, short conjugators first
  std::vector<std::vector<int>> cinv; // reduced inverse of each candidate
  std::unordered_set<uint64_t> failed;
  std::vector<int> chosen;            // candidate indices along current path
  long nodes = 0;
  long node_cap = 200000000;

  void enumerate(int budget) {
    cands.clear();
    std::vector<std::vector<int>> conjs = {{}};
    for (int len = 0; len <= budget; ++len) {
      std::vector<std::vector<int>> next;
      for (const std::vector<int>& c : conjs) {
        for (int i = 1; i < n; ++i) {
          if (!c.empty() && std::abs(c.back()) == i) continue;  // redundant conjugator
          cands.push_back(BandFactor{c, i, 1});
        }
        if (len < budget)
          for (int g = 1; g < n; ++g)
            for (int s : {1, -1}) {
              if (!c.empty() && c.back() == -s * g) continue;  // would cancel
              std::vector<int> c2 = c;
              c2.push_back(s * g);
              next.push_back(std::move(c2));
            }
      }
      conjs = std::move(next);
    }
    cinv.clear();
    for (const BandFactor& f : cands) cinv.push_back(inverse_letters(f.flatten()));
  }

  // can the reduced word t be written as a product of k candidate factors?
  // explores shortest remainders first, so easy words resolve quickly
  bool dfs(const std::vector<int>& t, int k, int budget) {
    if (k == 0) return t.empty();
    if ((int)t.size() > k * (2 * budget + 1)) return false;
    if (++nodes > node_cap) return false;
    uint64_t h = word_hash(t, k);
    if (failed.count(h)) return false;
    std::vector<std::pair<std::vector<int>, int>> nexts;
    for (size_t ci = 0; ci < cands.size(); ++ci) {
      std::vector<int> t2 = cinv[ci];
      t2.insert(t2.end(), t.begin(), t.end());
      t2 = free_reduce(std::move(t2));
      if ((int)t2.size() > (k - 1) * (2 * budget + 1)) continue;
      nexts.emplace_back(std::move(t2), (int)ci);
    }
    std::stable_sort(nexts.begin(), nexts.end(),
                     [](const auto& a, const auto& b) { return a.first.size() < b.first.size(); });
    for (auto& [t2, ci] : nexts) {
      chosen.push_back(ci);
      if (dfs(t2, k - 1, budget)) return true;
      chosen.pop_back();
    }
    failed.insert(h);
    return false;
  }
};

}  // namespace

std::optional<BandFactorization> find_qp_factorization(const BraidWord& w, int budget) {
  std::vector<int> target = free_reduce(w.letters);
  int k = w.exponent_sum();
  if (k < 0) return std::nullopt;
  if (k == 0) {
    if (!target.empty()) return std::nullopt;
    return BandFactorization{w.strands, {}};
  }
  Searcher s;
  s.n = w.strands;
  // iterative deepening keeps easy words cheap
  for (int b = 0; b <= budget; ++b) {
    if ((int)target.size() > k * (2 * b + 1)) continue;
    s.enumerate(b);
    s.failed.clear();
    s.chosen.clear();
    s.nodes = 0;
    if (s.dfs(target, k, b)) {
      BandFactorization f;
      f.strands = w.strands;
      for (int ci : s.chosen) f.factors.push_back(s.cands[ci]);
      return f;
    }
  }
  return std::nullopt;
}

}  // namespace cbl
