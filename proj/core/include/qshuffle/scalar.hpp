#pragma once

#include "qshuffle/ratfun.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace qshuffle {

// Square-free product of sqrt([n]_q) for n in a finite set; bit n set means
// sqrt([n]_q) is present. Index 1 is never stored since [1]_q = 1.
class RadicalSignature {
 public:
  static constexpr int kMaxIndex = 63;

  RadicalSignature() = default;
  static RadicalSignature from_mask(std::uint64_t m) { return RadicalSignature(m); }
  // Throws std::out_of_range for n outside [1, kMaxIndex].
  static RadicalSignature single(int n);

  std::uint64_t mask() const { return mask_; }
  bool empty() const { return mask_ == 0; }
  std::vector<int> indices() const;

  friend auto operator<=>(const RadicalSignature&, const RadicalSignature&) = default;

 private:
  explicit RadicalSignature(std::uint64_t m) : mask_(m) {}
  std::uint64_t mask_ = 0;
};

// Product over the indices of [n]_q, as a polynomial in v.
LaurentPoly bracket_product(std::uint64_t mask);

// Element of Q(v)(sqrt([2]_q), sqrt([3]_q), ...): a finite sum of
// rational functions times radical signatures, sorted by signature.
class Scalar {
 public:
  using Term = std::pair<RadicalSignature, RatFun>;

  Scalar() = default;
  Scalar(long long c) : Scalar(RatFun(c)) {}
  explicit Scalar(RatFun r);
  Scalar(RadicalSignature sig, RatFun r);
  static Scalar vpow(int k) { return Scalar(RatFun::vpow(k)); }
  static Scalar from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first.empty()); }
  // The rational part; throws std::domain_error unless is_rational().
  const RatFun& rational() const;

  Scalar operator-() const;
  // Only single-term scalars are invertible here; throws std::domain_error otherwise.
  Scalar inverse() const;
  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  friend bool operator==(const Scalar& a, const Scalar& b) = default;

  std::string to_string() const;

 private:
  std::vector<Term> terms_;
};

inline bool is_zero(const Scalar& s) { return s.is_zero(); }

Scalar qint(int n);
Scalar qfact(int n);
// prod sqrt([n]_q) over the multiset; pairs are pulled into the rational part.
Scalar sqrt_brackets(std::span<const int> indices);
// sqrt(prod [n]_q / prod [m]_q).
Scalar sqrt_bracket_ratio(std::span<const int> numer, std::span<const int> denom);
// q^k - q^{-k}
Scalar c_of_qpow(int k);

double eval_numeric(const Scalar& x, double q);
double eval_numeric(const RatFun& x, double q);

}  // namespace qshuffle
