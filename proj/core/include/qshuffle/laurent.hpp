#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace qshuffle {

// Arbitrary precision: pseudo-remainder gcds over Z[v] can grow quickly.
using Integer = boost::multiprecision::cpp_int;

Integer integer_gcd(Integer a, Integer b);

// Integer-coefficient Laurent polynomial in one variable (v = q^{1/2}).
// Stored densely from the lowest nonzero exponent; zero is the empty vector.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  static LaurentPoly constant(Integer c) { return monomial(std::move(c), 0); }
  static LaurentPoly monomial(Integer c, int exponent);
  static LaurentPoly from_terms(const std::vector<std::pair<int, Integer>>& terms);

  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const { return shift_ == 0 && coeffs_.size() == 1 && coeffs_[0] == 1; }
  bool is_constant() const { return is_zero() || (shift_ == 0 && coeffs_.size() == 1); }
  bool is_monomial() const { return coeffs_.size() == 1; }
  int min_exp() const { return shift_; }
  int max_exp() const { return shift_ + static_cast<int>(coeffs_.size()) - 1; }
  int span() const { return static_cast<int>(coeffs_.size()) - 1; }
  Integer coeff(int exponent) const;
  const Integer& leading() const { return coeffs_.back(); }
  const Integer& trailing() const { return coeffs_.front(); }
  const std::vector<Integer>& coeffs() const { return coeffs_; }
  std::vector<std::pair<int, Integer>> terms() const;

  LaurentPoly shifted(int by) const;
  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const Integer& c);
  // this += a * b without a temporary.
  void add_product(const LaurentPoly& a, const LaurentPoly& b);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(LaurentPoly a, const Integer& c) { return a *= c; }
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) = default;
  friend std::strong_ordering operator<=>(const LaurentPoly& a, const LaurentPoly& b);

  // Positive gcd of the coefficients (0 for the zero polynomial).
  Integer content() const;
  // Substitute x -> x^k (k may be negative).
  LaurentPoly stretched(int k) const;
  double evaluate(double x) const;
  std::string to_string(const char* var = "v") const;

 private:
  void trim();
  int shift_ = 0;
  std::vector<Integer> coeffs_;
};

// gcd in Z[v] of the two polynomials after removing powers of v; normalized
// to minimal exponent 0 and positive leading coefficient. gcd(0, 0) = 0.
LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b);
// Exact division a / b in Z[v, 1/v]; throws std::domain_error if inexact.
LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b);

// [n]_q as a polynomial in v: v^{2(n-1)} + v^{2(n-3)} + ... + v^{-2(n-1)}.
LaurentPoly bracket_poly(int n);
// q^k - q^{-k} in v.
LaurentPoly c_poly(int k);

}  // namespace qshuffle
