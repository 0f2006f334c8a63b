#include "qshuffle/ratfun.hpp"

#include <cmath>
#include <stdexcept>

namespace qshuffle {

RatFun::RatFun(LaurentPoly num, LaurentPoly den) {
  if (den.is_zero()) throw std::domain_error("RatFun: zero denominator");
  if (num.is_zero()) {
    den_ = LaurentPoly::constant(1);
    return;
  }
  const int s = den.min_exp();
  num = num.shifted(-s);
  den = den.shifted(-s);
  if (!den.is_one()) {
    LaurentPoly g;
    if (den.is_constant()) {
      g = LaurentPoly::constant(integer_gcd(num.content(), den.leading()));
    } else {
      g = poly_gcd(num, den);
    }
    if (!g.is_one()) {
      num = exact_div(num, g);
      den = exact_div(den, g);
    }
    if (den.leading() < 0) {
      num = -num;
      den = -den;
    }
  }
  num_ = std::move(num);
  den_ = std::move(den);
}

RatFun RatFun::operator-() const { return RatFun(-num_, den_, Normalized{}); }

RatFun RatFun::inverse() const {
  if (is_zero()) throw std::domain_error("RatFun: inverse of zero");
  return RatFun(den_, num_);
}

RatFun operator+(const RatFun& a, const RatFun& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) {
    if (a.den_.is_one()) return RatFun(a.num_ + b.num_);
    return RatFun(a.num_ + b.num_, a.den_);
  }
  if (a.den_.is_one()) return RatFun(a.num_ * b.den_ + b.num_, b.den_, RatFun::Normalized{});
  if (b.den_.is_one()) return RatFun(b.num_ * a.den_ + a.num_, a.den_, RatFun::Normalized{});
  return RatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFun operator*(const RatFun& a, const RatFun& b) {
  if (a.is_zero() || b.is_zero()) return RatFun();
  if (a.den_.is_one() && b.den_.is_one()) return RatFun(a.num_ * b.num_);
  LaurentPoly an = a.num_, ad = a.den_, bn = b.num_, bd = b.den_;
  if (!bd.is_one()) {
    LaurentPoly g = poly_gcd(an, bd);
    if (!g.is_one()) {
      an = exact_div(an, g);
      bd = exact_div(bd, g);
    }
  }
  if (!ad.is_one()) {
    LaurentPoly g = poly_gcd(bn, ad);
    if (!g.is_one()) {
      bn = exact_div(bn, g);
      ad = exact_div(ad, g);
    }
  }
  return RatFun(an * bn, ad * bd, RatFun::Normalized{});
}

double RatFun::evaluate_v(double v) const {
  const double d = den_.evaluate(v);
  if (d == 0.0 || !std::isfinite(d)) throw std::domain_error("RatFun: denominator vanishes at sample point");
  return num_.evaluate(v) / d;
}

std::string RatFun::to_string() const {
  if (den_.is_one()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}  // namespace qshuffle
