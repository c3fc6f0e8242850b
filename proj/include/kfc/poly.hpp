#pragma once

#include <cstdint>
#include <map>
#include <string>

// Laurent polynomials in v over the integers (q = v^2).  All graded
// dimensions, recharge ledgers and Kostka-Foulkes polynomials live here;
// exponents are kept integral by storing everything doubled in v.

namespace kfc {

class LaurentPoly {
 public:
  using Coeffs = std::map<int, long long>;  // exponent -> nonzero coefficient

  LaurentPoly() = default;
  static LaurentPoly one() { return monomial(0); }
  static LaurentPoly monomial(int exp, long long coeff = 1);

  bool is_zero() const { return c_.empty(); }
  long long coeff(int exp) const;
  const Coeffs& coeffs() const { return c_; }
  int min_exp() const;  // throws on zero
  int max_exp() const;

  void add_term(int exp, long long coeff);
  LaurentPoly shift(int k) const;  // multiply by v^k
  long long eval_one() const;      // sum of coefficients

  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  bool operator==(const LaurentPoly& o) const { return c_ == o.c_; }

  // The same polynomial as a q-series, q = v^2: reduced fractions
  // (numerator, denominator) with denominator 1 or 2, ascending.
  std::map<std::pair<int, int>, long long> as_q_poly() const;

  // Canonical text form: ascending exponents, explicit signs, v^k with the
  // exponent omitted for k = 1 ("v^-2+1", "2v^4", "0").
  std::string to_string() const;
  // Same polynomial written in q = v^2; half-integer exponents are printed
  // as fractions ("q^1/2+q^2").
  std::string to_q_string() const;
  static LaurentPoly parse(const std::string& text);

 private:
  Coeffs c_;
};

}  // namespace kfc
