#include "cbl/homfly.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <vector>

// The word is evaluated in the quotient algebra H_n where each generator T_i
// satisfies T_i^2 = z T_i + 1, with states kept in the T_w basis indexed by
// permutations; a Markov-property trace is then applied recursively, peeling
// one strand at a time.  Permutations compose left to right: (pq)(x) = q(p(x)).

namespace cbl {

namespace {

using Perm = std::vector<int>;  // images, 0-based
using Element = std::map<Perm, LaurentPoly2>;  // coeffs are polys in z only

void add_term(Element& e, const Perm& w, const LaurentPoly2& c) {
  LaurentPoly2& t = e[w];
  t += c;
  if (t.is_zero()) e.erase(w);
}

// w * s_i : swap values i, i+1; length rises iff value i appears before i+1
Element right_mul_gen(const Element& e, int i) {
  Element out;
  for (const auto& [w, c] : e) {
    Perm ws = w;
    for (int& v : ws) {
      if (v == i)
        v = i + 1;
      else if (v == i + 1)
        v = i;
    }
    int pi = -1, pi1 = -1;
    for (int x = 0; x < (int)w.size(); ++x) {
      if (w[x] == i) pi = x;
      if (w[x] == i + 1) pi1 = x;
    }
    if (pi < pi1) {
      add_term(out, ws, c);
    } else {
      add_term(out, ws, c);
      add_term(out, w, c.shifted(0, 1));  // z * T_w
    }
  }
  return out;
}

// s_i * w : swap entries at positions i, i+1; length rises iff w[i] < w[i+1]
Element left_mul_gen(const Element& e, int i) {
  Element out;
  for (const auto& [w, c] : e) {
    Perm sw = w;
    std::swap(sw[i], sw[i + 1]);
    if (w[i] < w[i + 1]) {
      add_term(out, sw, c);
    } else {
      add_term(out, sw, c);
      add_term(out, w, c.shifted(0, 1));
    }
  }
  return out;
}

// trace values are polynomials in (c, z); the c-degree is stored in the
// v-exponent slot of LaurentPoly2
struct Tracer {
  std::map<Perm, LaurentPoly2> memo;

  LaurentPoly2 trace(const Perm& w) {
    int m = (int)w.size();
    if (m <= 1) return LaurentPoly2::one();
    auto it = memo.find(w);
    if (it != memo.end()) return it->second;
    LaurentPoly2 result;
    if (w[m - 1] == m - 1) {
      Perm r(w.begin(), w.end() - 1);
      result = trace(r);
    } else {
      int a = 0;
      while (w[a] != m - 1) ++a;
      // w = (s_a s_{a+1} ... s_{m-2}) * u with lengths adding; the trace
      // eats the unique T_{s_{m-2}} and leaves T_{s_a}...T_{s_{m-3}} T_u
      Perm u(m - 1);
      for (int y = 0; y < m - 1; ++y) u[y] = (y < a) ? w[y] : w[y + 1];
      Element q;
      q[u] = LaurentPoly2::one();
      for (int g = m - 3; g >= a; --g) q = left_mul_gen(q, g);
      LaurentPoly2 sum;
      for (const auto& [x, coeff] : q) sum += coeff * trace(x);
      result = sum.shifted(1, 0);  // * c
    }
    memo.emplace(w, result);
    return result;
  }
};

}  // namespace

LaurentPoly2 homfly_poly(const BraidWord& w, int crossing_cap) {
  if ((int)w.letters.size() > crossing_cap)
    throw resource_error("homfly: word length " + std::to_string(w.letters.size()) +
                         " exceeds crossing cap " + std::to_string(crossing_cap));
  int n = w.strands;
  Element rho;
  Perm id(n);
  std::iota(id.begin(), id.end(), 0);
  rho[id] = LaurentPoly2::one();
  for (int l : w.letters) {
    int g = std::abs(l) - 1;
    if (l > 0) {
      rho = right_mul_gen(rho, g);
    } else {
      // sigma_i^-1 maps to v^-1 (T_i - z); the v factor is tracked globally
      Element a = right_mul_gen(rho, g);
      for (const auto& [p, c] : rho) add_term(a, p, -c.shifted(0, 1));
      rho = a;
    }
  }
  Tracer tr;
  LaurentPoly2 tau;  // in (c, z), c-degree in the v slot
  for (const auto& [p, c] : rho) tau += c * tr.trace(p);

  int e = w.exponent_sum();
  LaurentPoly2 delta =
      LaurentPoly2::mono(-1, 0, 1) - LaurentPoly2::mono(1, 0, 1);  // times z^-1
  LaurentPoly2 out;
  for (const auto& [exps, coeff] : tau.terms) {
    int k = exps.first, zdeg = exps.second;
    LaurentPoly2 part = pow(delta, n - 1 - k)
                            .shifted(-k, zdeg - (n - 1 - k), coeff);
    out += part;
  }
  return out.shifted(e, 0);
}

DegreeSpan mfw_bounds(const BraidWord& w) {
  int e = w.exponent_sum();
  return DegreeSpan{e - w.strands + 1, e + w.strands - 1};
}

Obstruction qp_obstruction(const BraidWord& w, int chi_s_upper, int crossing_cap) {
  LaurentPoly2 p = homfly_poly(w, crossing_cap);
  if (!p.is_zero() && p.min_v() < 1 - chi_s_upper) return Obstruction::obstructed;
  return Obstruction::inconclusive;
}

}  // namespace cbl
