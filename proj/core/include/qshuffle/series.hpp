#pragma once

#include "qshuffle/errors.hpp"
#include "qshuffle/shuffle.hpp"

#include <array>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qshuffle {

// Exponent vector over (t, s, k).
using Exp3 = std::array<int, 3>;
enum class Var : std::uint8_t { t = 0, s = 1, k = 2 };

inline int ts_degree(const Exp3& e) { return e[0] + e[1]; }
inline Exp3 operator+(const Exp3& a, const Exp3& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }
inline Exp3 unit_exp(Var v, int power = 1) {
  Exp3 e{0, 0, 0};
  e[static_cast<int>(v)] = power;
  return e;
}

// sign * v^vexp * t^mono[0] s^mono[1] k^mono[2]
struct MonomialArg {
  int sign = 1;
  int vexp = 0;
  Exp3 mono{0, 0, 0};

  static MonomialArg of(Var var, int power = 1, int vexp = 0, int sign = 1) {
    return {sign, vexp, unit_exp(var, power)};
  }
  static MonomialArg constant(int vexp, int sign = 1) { return {sign, vexp, {0, 0, 0}}; }
  int degree() const { return ts_degree(mono); }
  // (this)^n
  MonomialArg pow(int n) const {
    return {(n % 2 != 0) ? sign : 1, vexp * n, {mono[0] * n, mono[1] * n, mono[2] * n}};
  }
  friend bool operator==(const MonomialArg&, const MonomialArg&) = default;
};

// Truncated Laurent series in (t, s, k) with word-polynomial coefficients.
// When bound() is set, only monomials of total (t,s)-degree <= bound are
// stored and they are exact; unset means the series is an exact polynomial.
template <class C>
class Series {
 public:
  using Poly = WordPoly<C>;
  using Map = std::map<Exp3, Poly>;

  Series() = default;
  explicit Series(std::optional<int> bound) : bound_(bound) {}
  static Series monomial(Exp3 e, Poly p, std::optional<int> bound = std::nullopt) {
    Series s(bound);
    s.add_term(e, std::move(p));
    return s;
  }
  static Series constant(Poly p) { return monomial({0, 0, 0}, std::move(p)); }

  const Map& terms() const { return terms_; }
  std::optional<int> bound() const { return bound_; }
  bool is_zero() const { return terms_.empty(); }
  std::uint8_t declared_vars() const { return vars_; }
  void declare(Var v) { vars_ |= static_cast<std::uint8_t>(1u << static_cast<int>(v)); }
  void declare_mask(std::uint8_t m) { vars_ |= m; }
  // Declared variables plus those occurring in the support.
  std::uint8_t vars() const {
    std::uint8_t m = vars_;
    for (const auto& [e, p] : terms_)
      for (int i = 0; i < 3; ++i)
        if (e[i] != 0) m |= static_cast<std::uint8_t>(1u << i);
    return m;
  }

  Poly coefficient_of(const Exp3& e) const {
    if (bound_ && ts_degree(e) > *bound_)
      throw UsageError("coefficient_of: degree " + std::to_string(ts_degree(e)) + " beyond truncation bound " +
                       std::to_string(*bound_));
    auto it = terms_.find(e);
    return it == terms_.end() ? Poly{} : it->second;
  }

  // Adds p to the coefficient of e (dropped if beyond the bound).
  void add_term(const Exp3& e, Poly p) {
    if (p.is_zero() || (bound_ && ts_degree(e) > *bound_)) return;
    auto [it, fresh] = terms_.try_emplace(e, std::move(p));
    if (!fresh) {
      it->second += p;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Series truncated(std::optional<int> d) const {
    if (!d) return *this;
    if (bound_ && *bound_ <= *d) return *this;
    Series s(d);
    s.vars_ = vars_;
    for (const auto& [e, p] : terms_)
      if (ts_degree(e) <= *d) s.terms_.emplace(e, p);
    return s;
  }

  int min_degree() const {
    int m = std::numeric_limits<int>::max();
    for (const auto& [e, p] : terms_) m = std::min(m, ts_degree(e));
    return m;
  }
  int max_degree() const {
    int m = std::numeric_limits<int>::min();
    for (const auto& [e, p] : terms_) m = std::max(m, ts_degree(e));
    return m;
  }
  // Every word has length equal to the (t,s)-degree of its monomial.
  bool is_graded() const {
    for (const auto& [e, p] : terms_)
      if (!p.is_homogeneous(ts_degree(e))) return false;
    return true;
  }

  Series operator-() const {
    Series s = *this;
    for (auto& [e, p] : s.terms_) p = -p;
    return s;
  }
  friend Series operator+(const Series& a, const Series& b) {
    Series s(min_bound(a.bound_, b.bound_));
    s.vars_ = a.vars_ | b.vars_;
    for (const auto& [e, p] : a.terms_) s.add_term(e, p);
    for (const auto& [e, p] : b.terms_) s.add_term(e, p);
    return s;
  }
  friend Series operator-(const Series& a, const Series& b) { return a + (-b); }
  friend bool operator==(const Series& a, const Series& b) { return a.bound_ == b.bound_ && a.terms_ == b.terms_; }

  // Multiplication by a monomial in (t, s, k).
  Series shifted(const Exp3& by) const {
    Series s(bound_ ? std::optional<int>(*bound_ + ts_degree(by)) : std::nullopt);
    s.vars_ = vars_;
    for (const auto& [e, p] : terms_) s.terms_.emplace(e + by, p);
    return s;
  }

  template <class Fn>
  Series map_polys(Fn&& f) const {
    Series s(bound_);
    s.vars_ = vars_;
    for (const auto& [e, p] : terms_) s.add_term(e, f(p));
    return s;
  }

  static std::optional<int> min_bound(std::optional<int> a, std::optional<int> b) {
    if (!a) return b;
    if (!b) return a;
    return std::min(*a, *b);
  }

 private:
  Map terms_;
  std::optional<int> bound_;
  std::uint8_t vars_ = 0;
};

template <class C>
Series<C> scale(const C& c, const Series<C>& s) {
  return s.map_polys([&c](const WordPoly<C>& p) { return scale(c, p); });
}

template <class C>
Series<C> erase_map(const Series<C>& s, Side side, Letter a) {
  return s.map_polys([&](const WordPoly<C>& p) { return erase(p, side, a); });
}

template <class C>
Series<C> letter_power_map(const Series<C>& s, Side side, Letter a, int e) {
  return s.map_polys([&](const WordPoly<C>& p) { return letter_power(p, side, a, e); });
}

template <class C>
Series<C> zeta_map(const Series<C>& s) {
  return s.map_polys([](const WordPoly<C>& p) { return zeta(p); });
}

template <class C>
Series<C> swap_letters_map(const Series<C>& s) {
  return s.map_polys([](const WordPoly<C>& p) { return swap_letters(p); });
}

// Checks that the product of a and b is exact at the combined bound.
template <class C>
void require_sound_product(const Series<C>& a, const Series<C>& b) {
  const auto d = Series<C>::min_bound(a.bound(), b.bound());
  if (!d || a.is_zero() || b.is_zero()) return;
  if (b.bound() && a.min_degree() < *d - *b.bound())
    throw std::logic_error("series product would lose exactness: negative-degree factor against a truncated series");
  if (a.bound() && b.min_degree() < *d - *a.bound())
    throw std::logic_error("series product would lose exactness: negative-degree factor against a truncated series");
}

// Accumulates sums of products of series with deferred normalization.
template <class F>
class SeriesAccumulator {
 public:
  using C = typename F::value_type;
  using S = Series<C>;

  explicit SeriesAccumulator(const F& field) : field_(&field) {}

  // += a * b with the q-shuffle product on coefficients
  void add_product(const S& a, const S& b) {
    if (a.is_zero() || b.is_zero()) {
      note(a, b);
      return;
    }
    require_sound_product(a, b);
    note(a, b);
    for (const auto& [ea, pa] : a.terms()) {
      for (const auto& [eb, pb] : b.terms()) {
        const Exp3 e = ea + eb;
        if (bound_ && ts_degree(e) > *bound_) continue;
        auto& slot = acc_[e];
        for (const auto& [u, cu] : pa.terms()) {
          for (const auto& [w, cw] : pb.terms()) {
            const auto p = field_->prepare(cu, cw);
            for (const auto& [z, weight] : field_->shuffle_row(u, w)) slot[z].add(p, weight);
          }
        }
      }
    }
  }

  // += a * b with concatenation on coefficients
  void add_concat_product(const S& a, const S& b) {
    require_sound_product(a, b);
    note(a, b);
    for (const auto& [ea, pa] : a.terms()) {
      for (const auto& [eb, pb] : b.terms()) {
        const Exp3 e = ea + eb;
        if (bound_ && ts_degree(e) > *bound_) continue;
        auto& slot = acc_[e];
        for (const auto& [u, cu] : pa.terms())
          for (const auto& [w, cw] : pb.terms()) slot[u.concat(w)].add(field_->prepare(cu, cw));
      }
    }
  }

  // += c * s (scalars are central)
  void add_scaled(const C& c, const S& s) {
    note_one(s);
    if (coeff_is_zero(c)) return;
    for (const auto& [e, p] : s.terms()) {
      if (bound_ && ts_degree(e) > *bound_) continue;
      auto& slot = acc_[e];
      for (const auto& [w, cw] : p.terms()) slot[w].add(field_->prepare(c, cw));
    }
  }

  void add(const S& s) {
    note_one(s);
    for (const auto& [e, p] : s.terms()) {
      if (bound_ && ts_degree(e) > *bound_) continue;
      auto& slot = acc_[e];
      for (const auto& [w, cw] : p.terms()) slot[w].add(field_->prepare(cw));
    }
  }

  S finish() const {
    S out(bound_);
    out.declare_mask(vars_);
    for (const auto& [e, words] : acc_) {
      if (bound_ && ts_degree(e) > *bound_) continue;
      std::vector<typename WordPoly<C>::Term> terms;
      terms.reserve(words.size());
      for (const auto& [w, a] : words) {
        C c = a.finish();
        if (!coeff_is_zero(c)) terms.emplace_back(w, std::move(c));
      }
      if (!terms.empty()) out.add_term(e, WordPoly<C>::from_sorted(std::move(terms)));
    }
    return out;
  }

 private:
  void note_one(const S& s) {
    bound_ = S::min_bound(bound_, s.bound());
    vars_ |= s.declared_vars();
  }
  void note(const S& a, const S& b) {
    note_one(a);
    note_one(b);
  }

  const F* field_;
  std::optional<int> bound_;
  std::uint8_t vars_ = 0;
  std::map<Exp3, std::map<Word, typename F::Accumulator>> acc_;
};

template <class F>
Series<typename F::value_type> shuffle_mul(const Series<typename F::value_type>& a,
                                           const Series<typename F::value_type>& b, const F& field) {
  SeriesAccumulator<F> acc(field);
  acc.add_product(a, b);
  return acc.finish();
}

template <class F>
Series<typename F::value_type> concat_mul(const Series<typename F::value_type>& a,
                                          const Series<typename F::value_type>& b, const F& field) {
  SeriesAccumulator<F> acc(field);
  acc.add_concat_product(a, b);
  return acc.finish();
}

template <class F>
typename F::value_type arg_factor(const MonomialArg& arg, int n, const F& field) {
  auto c = field.vpow(arg.vexp * n);
  if (arg.sign < 0 && n % 2 != 0) c = -c;
  return c;
}

// Replaces the variable `var` by arg. A truncated series may only be
// substituted with an argument of (t,s)-degree 1, which keeps the bound exact.
template <class F>
Series<typename F::value_type> substitute(const Series<typename F::value_type>& s, Var var, const MonomialArg& arg,
                                          const F& field) {
  using C = typename F::value_type;
  const int vi = static_cast<int>(var);
  std::optional<int> bound = s.bound();
  if (bound) {
    const int target_deg = (vi == 2) ? 0 : 1;
    if (arg.degree() != target_deg)
      throw UsageError("substitute: truncated series requires a degree-preserving argument");
  }
  std::uint8_t vars = s.declared_vars() & static_cast<std::uint8_t>(~(1u << vi));
  for (int i = 0; i < 3; ++i)
    if (arg.mono[i] != 0) vars |= static_cast<std::uint8_t>(1u << i);
  Series<C> out(bound);
  out.declare_mask(vars);
  for (const auto& [e, p] : s.terms()) {
    const int n = e[vi];
    Exp3 ne = e;
    ne[vi] = 0;
    for (int i = 0; i < 3; ++i) ne[i] += n * arg.mono[i];
    if (n == 0 || (arg.vexp == 0 && arg.sign > 0)) {
      out.add_term(ne, p);
    } else {
      out.add_term(ne, scale(arg_factor(arg, n, field), p));
    }
  }
  return out;
}

template <class C>
Series<C> series_one(const C& one) {
  return Series<C>::constant(WordPoly<C>::monomial(Word(), one));
}

template <class C>
Series<C> series_scalar(const C& c, Exp3 e = {0, 0, 0}) {
  return Series<C>::monomial(e, WordPoly<C>::monomial(Word(), c));
}

// ---- generating functions ------------------------------------------------

template <class F>
Series<typename F::value_type> gen_series(AltKind kind, const MonomialArg& arg, int D, const F& field) {
  using C = typename F::value_type;
  if (D < 0) throw UsageError("gen_series: negative truncation degree");
  if (arg.degree() <= 0) throw UsageError("gen_series: argument must have positive (t,s)-degree");
  Series<C> out(D);
  for (int i = 0; i < 3; ++i)
    if (arg.mono[i] != 0) out.declare(static_cast<Var>(i));
  for (int n = 0; n * arg.degree() <= D; ++n) {
    const MonomialArg a = arg.pow(n);
    out.add_term(a.mono, WordPoly<C>::monomial(alternating_word(kind, n), arg_factor(arg, n, field)));
  }
  return out;
}

template <class F>
WordPoly<typename F::value_type> delta_n(int m, int n, const F& field) {
  using C = typename F::value_type;
  std::vector<typename WordPoly<C>::Term> terms;
  for (Word w : catalan_words(n)) {
    C c = field.one();
    int h = 0;
    for (int i = 0; i < w.length() && !coeff_is_zero(c); ++i) {
      if (w.at(i) == Letter::x) {
        c = c * field.qint(h + m);
        ++h;
      } else {
        c = c * field.qint(h);
        --h;
      }
    }
    if (!coeff_is_zero(c)) terms.emplace_back(w, std::move(c));
  }
  return WordPoly<C>::from_sorted(std::move(terms));
}

template <class F>
Series<typename F::value_type> delta_series(int m, const MonomialArg& arg, int D, const F& field) {
  using C = typename F::value_type;
  if (D < 0) throw UsageError("delta_series: negative truncation degree");
  if (arg.degree() <= 0) throw UsageError("delta_series: argument must have positive (t,s)-degree");
  Series<C> out(D);
  for (int i = 0; i < 3; ++i)
    if (arg.mono[i] != 0) out.declare(static_cast<Var>(i));
  for (int n = 0; n * arg.degree() <= D; ++n) {
    const MonomialArg a = arg.pow(n);
    out.add_term(a.mono, scale(arg_factor(arg, n, field), delta_n(m, n, field)));
  }
  return out;
}

// The letter-swapped companion of delta_series.
template <class F>
Series<typename F::value_type> tdelta_series(int m, const MonomialArg& arg, int D, const F& field) {
  return swap_letters_map(delta_series(m, arg, D, field));
}

}  // namespace qshuffle
