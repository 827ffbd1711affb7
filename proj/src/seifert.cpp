#include "cbl/seifert.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdlib>
#include <vector>

namespace cbl {

namespace mp = boost::multiprecision;

int symmetric_signature(const std::vector<std::vector<int>>& m) {
  int n = (int)m.size();
  std::vector<std::vector<mp::cpp_rational>> a(n, std::vector<mp::cpp_rational>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = m[i][j];
  std::vector<int> live(n);
  for (int i = 0; i < n; ++i) live[i] = i;
  int sig = 0;
  while (!live.empty()) {
    int pk = -1;
    for (int k : live)
      if (a[k][k] != 0) {
        pk = k;
        break;
      }
    if (pk < 0) {
      // all diagonal zero: make one nonzero from an off-diagonal pair
      int bi = -1, bj = -1;
      for (int i : live) {
        for (int j : live)
          if (i != j && a[i][j] != 0) {
            bi = i;
            bj = j;
            break;
          }
        if (bi >= 0) break;
      }
      if (bi < 0) break;  // zero form on the rest
      for (int j : live) a[bi][j] += a[bj][j];
      for (int i : live) a[i][bi] += a[i][bj];
      continue;
    }
    sig += a[pk][pk] > 0 ? 1 : -1;
    std::vector<int> rest;
    for (int k : live)
      if (k != pk) rest.push_back(k);
    for (int i : rest)
      for (int j : rest) a[i][j] -= a[i][pk] * a[pk][j] / a[pk][pk];
    live = std::move(rest);
  }
  return sig;
}

std::vector<std::vector<int>> seifert_symmetrized(const BraidWord& w) {
  // one generator per pair of consecutive letters in the same column: the cycle
  // running along the two bands and the disks between them.  V + V^T entries:
  //   diagonal          -(sign_a + sign_b)
  //   shared band       +(shared sign)
  //   adjacent columns  -1 when the lower column pair starts first and the
  //                     pairs interleave, +1 when the higher column pair
  //                     starts first, 0 when nested or disjoint
  struct Gen {
    int col;     // generator index of the column (1-based)
    int p1, p2;  // word positions of the two letters
  };
  std::vector<Gen> gens;
  for (int col = 1; col < w.strands; ++col) {
    std::vector<int> pos;
    for (int t = 0; t < (int)w.letters.size(); ++t)
      if (std::abs(w.letters[t]) == col) pos.push_back(t);
    for (size_t r = 0; r + 1 < pos.size(); ++r)
      gens.push_back({col, pos[r], pos[r + 1]});
  }
  int g = (int)gens.size();
  std::vector<std::vector<int>> m(g, std::vector<int>(g, 0));
  auto sgn = [&](int t) { return w.letters[t] > 0 ? 1 : -1; };
  for (int x = 0; x < g; ++x) {
    m[x][x] = -(sgn(gens[x].p1) + sgn(gens[x].p2));
    for (int y = x + 1; y < g; ++y) {
      const Gen &e = gens[x], &f = gens[y];
      int entry = 0;
      if (e.col == f.col) {
        if (e.p2 == f.p1)
          entry = sgn(e.p2);
        else if (f.p2 == e.p1)
          entry = sgn(f.p2);
      } else if (std::abs(e.col - f.col) == 1) {
        const Gen& lo = e.col < f.col ? e : f;  // lower column
        const Gen& hi = e.col < f.col ? f : e;
        if (lo.p1 < hi.p1 && hi.p1 < lo.p2 && lo.p2 < hi.p2)
          entry = -1;
        else if (hi.p1 < lo.p1 && lo.p1 < hi.p2 && hi.p2 < lo.p2)
          entry = 1;
      }
      m[x][y] = m[y][x] = entry;
    }
  }
  return m;
}

int signature(const BraidWord& w) {
  // anchor flip: the raw form gives -1 for "1 1", the documented convention
  // wants +1
  return -symmetric_signature(seifert_symmetrized(w));
}

}  // namespace cbl
