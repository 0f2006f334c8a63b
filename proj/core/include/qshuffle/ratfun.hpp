#pragma once

#include "qshuffle/laurent.hpp"

#include <compare>
#include <string>

namespace qshuffle {

// Element of Q(v) as num/den. Always normalized: gcd(num, den) is a unit,
// den has minimal exponent 0 and positive leading coefficient.
class RatFun {
 public:
  RatFun() : den_(LaurentPoly::constant(1)) {}
  RatFun(long long c) : num_(LaurentPoly::constant(Integer(c))), den_(LaurentPoly::constant(1)) {}
  explicit RatFun(LaurentPoly num) : num_(std::move(num)), den_(LaurentPoly::constant(1)) {}
  RatFun(LaurentPoly num, LaurentPoly den);

  // v^k
  static RatFun vpow(int k) { return RatFun(LaurentPoly::monomial(1, k)); }

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }

  RatFun operator-() const;
  RatFun inverse() const;
  friend RatFun operator+(const RatFun& a, const RatFun& b);
  friend RatFun operator-(const RatFun& a, const RatFun& b) { return a + (-b); }
  friend RatFun operator*(const RatFun& a, const RatFun& b);
  friend RatFun operator/(const RatFun& a, const RatFun& b) { return a * b.inverse(); }
  RatFun& operator+=(const RatFun& o) { return *this = *this + o; }
  RatFun& operator-=(const RatFun& o) { return *this = *this - o; }
  RatFun& operator*=(const RatFun& o) { return *this = *this * o; }
  friend bool operator==(const RatFun& a, const RatFun& b) = default;
  friend std::strong_ordering operator<=>(const RatFun& a, const RatFun& b) {
    if (auto c = a.num_ <=> b.num_; c != 0) return c;
    return a.den_ <=> b.den_;
  }

  // Value at v = sqrt(q); throws std::domain_error if the denominator vanishes.
  double evaluate_v(double v) const;
  std::string to_string() const;

 private:
  struct Normalized {};
  RatFun(LaurentPoly num, LaurentPoly den, Normalized) : num_(std::move(num)), den_(std::move(den)) {}
  LaurentPoly num_;
  LaurentPoly den_;
};

}  // namespace qshuffle
