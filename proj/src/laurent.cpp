#include "cbl/laurent.hpp"

#include <stdexcept>

namespace cbl {

LaurentPoly2 LaurentPoly2::mono(int v_exp, int z_exp, BigInt coeff) {
  LaurentPoly2 p;
  if (coeff != 0) p.terms[{v_exp, z_exp}] = std::move(coeff);
  return p;
}

LaurentPoly2& LaurentPoly2::operator+=(const LaurentPoly2& o) {
  for (const auto& [e, c] : o.terms) {
    BigInt& t = terms[e];
    t += c;
    if (t == 0) terms.erase(e);
  }
  return *this;
}

LaurentPoly2& LaurentPoly2::operator-=(const LaurentPoly2& o) {
  for (const auto& [e, c] : o.terms) {
    BigInt& t = terms[e];
    t -= c;
    if (t == 0) terms.erase(e);
  }
  return *this;
}

LaurentPoly2 LaurentPoly2::operator+(const LaurentPoly2& o) const {
  LaurentPoly2 r = *this;
  r += o;
  return r;
}

LaurentPoly2 LaurentPoly2::operator-(const LaurentPoly2& o) const {
  LaurentPoly2 r = *this;
  r -= o;
  return r;
}

LaurentPoly2 LaurentPoly2::operator*(const LaurentPoly2& o) const {
  LaurentPoly2 r;
  for (const auto& [e1, c1] : terms)
    for (const auto& [e2, c2] : o.terms) {
      std::pair<int, int> e{e1.first + e2.first, e1.second + e2.second};
      BigInt& t = r.terms[e];
      t += c1 * c2;
      if (t == 0) r.terms.erase(e);
    }
  return r;
}

LaurentPoly2 LaurentPoly2::operator-() const {
  LaurentPoly2 r;
  for (const auto& [e, c] : terms) r.terms[e] = -c;
  return r;
}

LaurentPoly2 LaurentPoly2::shifted(int dv, int dz, const BigInt& coeff) const {
  LaurentPoly2 r;
  if (coeff == 0) return r;
  for (const auto& [e, c] : terms)
    r.terms[{e.first + dv, e.second + dz}] = c * coeff;
  return r;
}

LaurentPoly2 LaurentPoly2::vz_flip() const {
  LaurentPoly2 r;
  for (const auto& [e, c] : terms)
    r.terms[{-e.first, e.second}] = (e.second % 2 != 0) ? BigInt(-c) : c;
  return r;
}

int LaurentPoly2::min_v() const {
  if (terms.empty()) throw std::logic_error("min_v of zero polynomial");
  int m = terms.begin()->first.first;
  for (const auto& [e, c] : terms) m = std::min(m, e.first);
  return m;
}

int LaurentPoly2::max_v() const {
  if (terms.empty()) throw std::logic_error("max_v of zero polynomial");
  int m = terms.begin()->first.first;
  for (const auto& [e, c] : terms) m = std::max(m, e.first);
  return m;
}

LaurentPoly2 pow(const LaurentPoly2& p, int e) {
  if (e < 0) throw std::logic_error("pow: negative exponent");
  LaurentPoly2 r = LaurentPoly2::one();
  for (int i = 0; i < e; ++i) r = r * p;
  return r;
}

std::string render_poly(const LaurentPoly2& p) {
  if (p.terms.empty()) return "0";
  std::string s;
  for (const auto& [e, c] : p.terms) {
    if (!s.empty()) s += ' ';
    s += '(' + std::to_string(e.first) + ',' + std::to_string(e.second) +
         "):" + c.str();
  }
  return s;
}

}  // namespace cbl
