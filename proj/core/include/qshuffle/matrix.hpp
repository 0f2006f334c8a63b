#pragma once

#include "qshuffle/series.hpp"

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

namespace qshuffle {

// Dense row-major matrix; indices are 0-based here, 1-based in reports.
template <class T>
class Mat {
 public:
  Mat() = default;
  Mat(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {
    if (rows <= 0 || cols <= 0) throw std::invalid_argument("Mat: dimensions must be positive");
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  T& at(int i, int j) { return data_[index(i, j)]; }
  const T& at(int i, int j) const { return data_[index(i, j)]; }
  const std::vector<T>& data() const { return data_; }

  template <class Fn>
  auto map(Fn&& f) const {
    using U = decltype(f(data_[0]));
    Mat<U> out(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) out.at(i, j) = f(at(i, j));
    return out;
  }

  friend bool operator==(const Mat& a, const Mat& b) = default;

 private:
  std::size_t index(int i, int j) const {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_) throw std::out_of_range("Mat index out of range");
    return static_cast<std::size_t>(i) * cols_ + j;
  }
  int rows_ = 0;
  int cols_ = 0;
  std::vector<T> data_;
};

template <class C>
using SMat = Mat<Series<C>>;

template <class C>
bool entry_is_zero(const C& c) {
  return coeff_is_zero(c);
}
template <class C>
bool entry_is_zero(const Series<C>& s) {
  return s.is_zero();
}

template <class F>
Mat<typename F::value_type> identity_scalar(int n, const F& field) {
  Mat<typename F::value_type> m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = field.one();
  return m;
}

template <class F>
SMat<typename F::value_type> identity_series(int n, const F& field) {
  SMat<typename F::value_type> m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = series_one(field.one());
  return m;
}

template <class C>
SMat<C> to_series(const Mat<C>& m) {
  return m.map([](const C& c) { return series_scalar(c); });
}

// Constant coefficient matrix of a series matrix whose entries are exact
// constants with empty words; throws otherwise.
template <class C>
Mat<C> constant_part(const SMat<C>& m) {
  return m.map([](const Series<C>& s) {
    C out{};
    for (const auto& [e, p] : s.terms()) {
      if (e != Exp3{0, 0, 0}) throw std::domain_error("constant_part: entry is not constant");
      for (const auto& [w, c] : p.terms()) {
        if (!w.empty()) throw std::domain_error("constant_part: entry carries words");
        out = c;
      }
    }
    return out;
  });
}

namespace detail {

inline void check_mul_dims(int acols, int brows) {
  if (acols != brows)
    throw std::invalid_argument("mat_mul: dimension mismatch (" + std::to_string(acols) + " vs " +
                                std::to_string(brows) + ")");
}

template <class F>
void accumulate(SeriesAccumulator<F>& acc, const Series<typename F::value_type>& a,
                const Series<typename F::value_type>& b) {
  acc.add_product(a, b);
}
template <class F>
void accumulate(SeriesAccumulator<F>& acc, const typename F::value_type& a, const Series<typename F::value_type>& b) {
  acc.add_scaled(a, b);
}
template <class F>
void accumulate(SeriesAccumulator<F>& acc, const Series<typename F::value_type>& a, const typename F::value_type& b) {
  acc.add_scaled(b, a);
}

}  // namespace detail

// Row-column product. Entry products keep the written left-to-right order;
// the result is scalar-valued only when both factors are.
template <class F, class A, class B>
auto mat_mul(const Mat<A>& a, const Mat<B>& b, const F& field) {
  using C = typename F::value_type;
  detail::check_mul_dims(a.cols(), b.rows());
  if constexpr (std::is_same_v<A, C> && std::is_same_v<B, C>) {
    Mat<C> out(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i) {
      for (int j = 0; j < b.cols(); ++j) {
        typename F::Accumulator acc;
        for (int l = 0; l < a.cols(); ++l) {
          const auto& x = a.at(i, l);
          const auto& y = b.at(l, j);
          if (coeff_is_zero(x) || coeff_is_zero(y)) continue;
          acc.add(field.prepare(x, y));
        }
        out.at(i, j) = acc.finish();
      }
    }
    return out;
  } else {
    SMat<C> out(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i) {
      for (int j = 0; j < b.cols(); ++j) {
        SeriesAccumulator<F> acc(field);
        for (int l = 0; l < a.cols(); ++l) {
          const auto& x = a.at(i, l);
          const auto& y = b.at(l, j);
          if (entry_is_zero(x) || entry_is_zero(y)) continue;
          detail::accumulate(acc, x, y);
        }
        out.at(i, j) = acc.finish();
      }
    }
    return out;
  }
}

template <class C>
Mat<C> mat_add(const Mat<C>& a, const Mat<C>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("mat_add: shape mismatch");
  Mat<C> out(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out.at(i, j) = a.at(i, j) + b.at(i, j);
  return out;
}

template <class C>
Mat<C> mat_scale(const C& c, const Mat<C>& m) {
  return m.map([&c](const C& x) { return C(c * x); });
}

template <class C>
SMat<C> mat_scale(const C& c, const SMat<C>& m) {
  return m.map([&c](const Series<C>& x) { return scale(c, x); });
}

namespace detail {
template <class F>
typename F::value_type entry_product(const typename F::value_type& a, const typename F::value_type& b, const F&) {
  return a * b;
}
template <class F>
Series<typename F::value_type> entry_product(const Series<typename F::value_type>& a,
                                             const Series<typename F::value_type>& b, const F& field) {
  return shuffle_mul(a, b, field);
}
}  // namespace detail

// Kronecker product, leg 1 slowest. Entry products keep the order a then b.
template <class F, class T>
Mat<T> kron(const Mat<T>& a, const Mat<T>& b, const F& field) {
  Mat<T> out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      if (entry_is_zero(a.at(i, j))) continue;
      for (int k = 0; k < b.rows(); ++k)
        for (int l = 0; l < b.cols(); ++l) {
          if (entry_is_zero(b.at(k, l))) continue;
          out.at(i * b.rows() + k, j * b.cols() + l) = detail::entry_product(a.at(i, j), b.at(k, l), field);
        }
    }
  return out;
}

struct LegSpec {
  std::vector<int> dims;  // leg dimensions, 2 or 3 legs
  std::vector<int> legs;  // 1-based target legs, increasing
};

// Places a square matrix acting on spec.legs into the full tensor space,
// with the identity on the remaining legs.
template <class T>
Mat<T> leg_embed(const Mat<T>& m, const LegSpec& spec, const T& one) {
  const int nl = static_cast<int>(spec.dims.size());
  if (nl < 1 || nl > 3) throw std::invalid_argument("leg_embed: 1 to 3 legs supported");
  int sub = 1, total = 1;
  std::vector<bool> on(static_cast<std::size_t>(nl), false);
  for (int leg : spec.legs) {
    if (leg < 1 || leg > nl || on[static_cast<std::size_t>(leg - 1)])
      throw std::invalid_argument("leg_embed: bad leg list");
    on[static_cast<std::size_t>(leg - 1)] = true;
    sub *= spec.dims[static_cast<std::size_t>(leg - 1)];
  }
  for (int d : spec.dims) total *= d;
  if (m.rows() != sub || m.cols() != sub) throw std::invalid_argument("leg_embed: dimension mismatch");
  auto split = [&](int idx) {
    std::vector<int> digits(static_cast<std::size_t>(nl));
    for (int l = nl - 1; l >= 0; --l) {
      digits[static_cast<std::size_t>(l)] = idx % spec.dims[static_cast<std::size_t>(l)];
      idx /= spec.dims[static_cast<std::size_t>(l)];
    }
    return digits;
  };
  auto sub_index = [&](const std::vector<int>& digits) {
    int idx = 0;
    for (int leg : spec.legs) idx = idx * spec.dims[static_cast<std::size_t>(leg - 1)] + digits[static_cast<std::size_t>(leg - 1)];
    return idx;
  };
  Mat<T> out(total, total);
  for (int r = 0; r < total; ++r) {
    const auto dr = split(r);
    for (int c = 0; c < total; ++c) {
      const auto dc = split(c);
      bool spectator_match = true;
      for (int l = 0; l < nl; ++l)
        if (!on[static_cast<std::size_t>(l)] && dr[static_cast<std::size_t>(l)] != dc[static_cast<std::size_t>(l)])
          spectator_match = false;
      if (!spectator_match) continue;
      if (spec.legs.empty()) {
        out.at(r, c) = (r == c) ? one : T{};
      } else {
        out.at(r, c) = m.at(sub_index(dr), sub_index(dc));
      }
    }
  }
  return out;
}

// ---- comparison -----------------------------------------------------------

template <class C>
struct Witness {
  int row = 0;  // 1-based
  int col = 0;  // 1-based
  Exp3 exp{0, 0, 0};
  WordPoly<C> diff;  // left minus right at that monomial
};

template <class C>
struct MatCompare {
  bool equal = true;
  std::optional<Witness<C>> witness;
};

// Exact entrywise comparison at the common truncation bound; the witness is
// the first differing (row, col, monomial) in row-major, exponent order.
template <class C>
MatCompare<C> mat_equal(const SMat<C>& a, const SMat<C>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("mat_equal: shape mismatch");
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) {
      const auto& x = a.at(i, j);
      const auto& y = b.at(i, j);
      const auto d = Series<C>::min_bound(x.bound(), y.bound());
      const Series<C> diff = x.truncated(d) - y.truncated(d);
      if (!diff.is_zero()) {
        const auto& [e, p] = *diff.terms().begin();
        return {false, Witness<C>{i + 1, j + 1, e, p}};
      }
    }
  }
  return {};
}

template <class C>
MatCompare<C> mat_equal(const Mat<C>& a, const Mat<C>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("mat_equal: shape mismatch");
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      C diff = a.at(i, j) - b.at(i, j);
      if (!coeff_is_zero(diff)) return {false, Witness<C>{i + 1, j + 1, {0, 0, 0}, WordPoly<C>::monomial(Word(), diff)}};
    }
  return {};
}

// Max-abs entrywise difference normalized by the largest magnitude on
// either side (numeric backend).
struct Residual {
  double max_diff = 0.0;
  double scale = 0.0;
  double normalized() const { return scale > 0.0 ? max_diff / scale : max_diff; }
};

inline void residual_merge(Residual& r, const Residual& o) {
  r.max_diff = std::max(r.max_diff, o.max_diff);
  r.scale = std::max(r.scale, o.scale);
}

inline Residual residual(const SMat<double>& a, const SMat<double>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("residual: shape mismatch");
  Residual r;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      const auto& x = a.at(i, j);
      const auto& y = b.at(i, j);
      const auto d = Series<double>::min_bound(x.bound(), y.bound());
      const Series<double> xt = x.truncated(d), yt = y.truncated(d);
      for (const auto* s : {&xt, &yt})
        for (const auto& [e, p] : s->terms())
          for (const auto& [w, c] : p.terms()) r.scale = std::max(r.scale, std::abs(c));
      const Series<double> diff = xt - yt;
      for (const auto& [e, p] : diff.terms())
        for (const auto& [w, c] : p.terms()) r.max_diff = std::max(r.max_diff, std::abs(c));
    }
  return r;
}

inline Residual residual(const Mat<double>& a, const Mat<double>& b) {
  Residual r;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      r.scale = std::max({r.scale, std::abs(a.at(i, j)), std::abs(b.at(i, j))});
      r.max_diff = std::max(r.max_diff, std::abs(a.at(i, j) - b.at(i, j)));
    }
  return r;
}

}  // namespace qshuffle
