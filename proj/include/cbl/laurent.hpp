#ifndef CBL_LAURENT_HPP
#define CBL_LAURENT_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <string>
#include <utility>

namespace cbl {

using BigInt = boost::multiprecision::cpp_int;

// integer Laurent polynomial in two variables (v, z); exact arithmetic,
// no zero coefficients stored
struct LaurentPoly2 {
  std::map<std::pair<int, int>, BigInt> terms;  // (v_exp, z_exp) -> coeff

  static LaurentPoly2 zero() { return {}; }
  static LaurentPoly2 one() { return mono(0, 0, 1); }
  static LaurentPoly2 mono(int v_exp, int z_exp, BigInt coeff);

  bool is_zero() const { return terms.empty(); }

  LaurentPoly2& operator+=(const LaurentPoly2& o);
  LaurentPoly2& operator-=(const LaurentPoly2& o);
  LaurentPoly2 operator+(const LaurentPoly2& o) const;
  LaurentPoly2 operator-(const LaurentPoly2& o) const;
  LaurentPoly2 operator*(const LaurentPoly2& o) const;
  LaurentPoly2 operator-() const;
  bool operator==(const LaurentPoly2& o) const { return terms == o.terms; }

  // multiply by coeff * v^dv * z^dz
  LaurentPoly2 shifted(int dv, int dz, const BigInt& coeff = 1) const;

  // substitute v -> v^-1, z -> -z
  LaurentPoly2 vz_flip() const;

  int min_v() const;  // requires nonzero
  int max_v() const;
};

LaurentPoly2 pow(const LaurentPoly2& p, int e);

// frozen rendering: terms ascending by (v_exp, z_exp), "(v,z):c" joined by
// single spaces; the zero polynomial renders as "0"
std::string render_poly(const LaurentPoly2& p);

}  // namespace cbl

#endif
