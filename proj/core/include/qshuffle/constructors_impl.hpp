#pragma once

// Member definitions of Builder; included by constructors.cpp only, which
// instantiates the two supported fields.

#include "qshuffle/constructors.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace qshuffle {

template <class F>
auto Builder<F>::fusion_E(Spin j) const -> M {
  const int J = j.twice();
  M e(2 * J + 2, J + 2);
  for (int a = 1; a <= J + 1; ++a) {
    const std::array<int, 1> n1{J + 2 - a}, n2{a}, d{J + 1};
    e.at(a - 1, a - 1) = f_.sqrt_bracket_ratio(n1, d);
    e.at(a + J, a) = f_.sqrt_bracket_ratio(n2, d);
  }
  return e;
}

template <class F>
auto Builder<F>::fusion_F(Spin j) const -> M {
  const int J = j.twice();
  M m(J + 2, 2 * J + 2);
  for (int a = 1; a <= J + 1; ++a) {
    const std::array<int, 2> n1{J + 2 - a, J + 1}, n2{a, J + 1};
    m.at(a - 1, a - 1) = f_.sqrt_bracket_ratio(n1, {}) * f_.inverse(f_.qint(J + 2 - a) + f_.qint(a - 1));
    m.at(a, a + J) = f_.sqrt_bracket_ratio(n2, {}) * f_.inverse(f_.qint(J + 1 - a) + f_.qint(a));
  }
  return m;
}

template <class F>
auto Builder<F>::fusion_H(Spin j) const -> M {
  const int J = j.twice();
  C prefactor = f_.one();
  for (int k = 1; k <= J; ++k) prefactor = prefactor * f_.c_qpow(k);
  M h(J + 2, J + 2);
  for (int a = 1; a <= J + 2; ++a) h.at(a - 1, a - 1) = prefactor * (f_.qint(J + 2 - a) + f_.qint(a - 1));
  return h;
}

template <class F>
auto Builder<F>::Rhat(Spin j1, Spin j2) const -> M {
  const int J1 = j1.twice(), J2 = j2.twice();
  const int n = (J1 + 1) * (J2 + 1);
  M m(n, n);
  for (int a = 0; a <= J1; ++a)
    for (int b = 0; b <= J2; ++b) {
      const int i = a * (J2 + 1) + b;
      m.at(i, i) = f_.vpow((J1 - 2 * a) * (J2 - 2 * b));
    }
  return m;
}

template <class F>
auto Builder<F>::Rhat_blocks(Spin j1, Spin j2) const -> M {
  const int J1 = j1.twice(), J2 = j2.twice();
  const int d2 = J2 + 1;
  M omega(d2, d2), omega_inv(d2, d2);
  for (int b = 0; b < d2; ++b) {
    omega.at(b, b) = f_.vpow(J2 - 2 * b);
    omega_inv.at(b, b) = f_.vpow(2 * b - J2);
  }
  M out((J1 + 1) * d2, (J1 + 1) * d2);
  for (int a = 0; a <= J1; ++a) {
    const int e = J1 - 2 * a;
    M block = identity_scalar(d2, f_);
    for (int i = 0; i < std::abs(e); ++i) block = mat_mul(block, e > 0 ? omega : omega_inv, f_);
    for (int r = 0; r < d2; ++r)
      for (int c = 0; c < d2; ++c) out.at(a * d2 + r, a * d2 + c) = block.at(r, c);
  }
  return out;
}

template <class F>
auto Builder<F>::c_series(int vexp, Var var) const -> S {
  S s = series_scalar(f_.vpow(vexp), unit_exp(var, 1)) + series_scalar(-f_.vpow(-vexp), unit_exp(var, -1));
  s.declare(var);
  return s;
}

template <class F>
auto Builder<F>::substitute_all(const SM& m, Var var, const MonomialArg& arg) const -> SM {
  return m.map([&](const S& s) { return substitute(s, var, arg, f_); });
}

template <class F>
auto Builder<F>::R_t(Spin j1, Spin j2) -> const SM& {
  const auto key = std::make_pair(j1.twice(), j2.twice());
  if (auto it = r_cache_.find(key); it != r_cache_.end()) return it->second;
  const int J1 = j1.twice(), J2 = j2.twice();
  SM out;
  if (J1 == 1 && J2 == 1) {
    out = SM(4, 4);
    const S cqt = c_series(2), ct = c_series(0), cq = series_scalar(f_.c_qpow(1));
    out.at(0, 0) = cqt;
    out.at(1, 1) = ct;
    out.at(1, 2) = cq;
    out.at(2, 1) = cq;
    out.at(2, 2) = ct;
    out.at(3, 3) = cqt;
  } else if (J1 > 1) {
    // R^{(j1+1/2, j2)} = F12 R^{(1/2,j2)}_13(q^{-j1} t) R^{(j1,j2)}_23(q^{1/2} t) E12
    const Spin jl = Spin::from_twice(J1 - 1);
    const std::vector<int> dims{2, J1, J2 + 1};
    const SM r13 = embed(substitute_all(R_t(half(), j2), Var::t, MonomialArg::of(Var::t, 1, -(J1 - 1))), dims, {1, 3});
    const SM r23 = embed(substitute_all(R_t(jl, j2), Var::t, MonomialArg::of(Var::t, 1, 1)), dims, {2, 3});
    const M f12 = pad_right(fusion_F(jl), J2 + 1);
    const M e12 = pad_right(fusion_E(jl), J2 + 1);
    out = mat_mul(mat_mul(mat_mul(f12, r13, f_), r23, f_), e12, f_);
  } else {
    // R^{(1/2, j2+1/2)} = F23 R^{(1/2,j2)}_13(q^{-1/2} t) R^{(1/2,1/2)}_12(q^{j2} t) E23
    const Spin jl = Spin::from_twice(J2 - 1);
    const std::vector<int> dims{2, 2, J2};
    const SM r13 = embed(substitute_all(R_t(half(), jl), Var::t, MonomialArg::of(Var::t, 1, -1)), dims, {1, 3});
    const SM r12 = embed(substitute_all(R_t(half(), half()), Var::t, MonomialArg::of(Var::t, 1, J2 - 1)), dims, {1, 2});
    const M f23 = pad_left(fusion_F(jl), 2);
    const M e23 = pad_left(fusion_E(jl), 2);
    out = mat_mul(mat_mul(mat_mul(f23, r13, f_), r12, f_), e23, f_);
  }
  return r_cache_.emplace(key, std::move(out)).first->second;
}

template <class F>
auto Builder<F>::R(Spin j1, Spin j2, const MonomialArg& arg) -> SM {
  return substitute_all(R_t(j1, j2), Var::t, arg);
}

template <class F>
auto Builder<F>::R_half_closed(Spin j, const MonomialArg& arg) const -> SM {
  const int J = j.twice();
  const int n = 2 * J + 2;
  S prod = one_series();
  for (int k = 0; k <= J - 2; ++k) prod = shuffle_mul(prod, c_series(J - 1 - 2 * k), f_);
  SM out(n, n);
  for (int a = 1; a <= J + 1; ++a) {
    const S diag = shuffle_mul(c_series(J + 3 - 2 * a), prod, f_);
    out.at(a - 1, a - 1) = diag;
    out.at(2 * J + 2 - a, 2 * J + 2 - a) = diag;
  }
  for (int a = 2; a <= J + 1; ++a) {
    const std::array<int, 2> idx{J + 2 - a, a - 1};
    const S off = scale(C(f_.c_qpow(1) * f_.sqrt_bracket_ratio(idx, {})), prod);
    out.at(a - 1, a + J - 1) = off;
    out.at(a + J - 1, a - 1) = off;
  }
  return substitute_all(out, Var::t, arg);
}

template <class F>
auto Builder<F>::factorial_ratio_sqrt(int a, int b, int J, bool inverted) const -> C {
  std::vector<int> num, den;
  auto push = [](std::vector<int>& v, int n) {
    for (int i = 2; i <= n; ++i) v.push_back(i);
  };
  push(num, a - 1);
  push(num, J + 1 - b);
  push(den, b - 1);
  push(den, J + 1 - a);
  if (inverted) std::swap(num, den);
  return f_.sqrt_bracket_ratio(num, den);
}

template <class F>
auto Builder<F>::phi(int a, int b, Spin j) const -> C {
  const int J = j.twice();
  C fact = f_.one();
  for (int i = 2; i <= J; ++i) fact = fact * f_.qint(i);
  return f_.vpow(rho_twice(a, b, J)) * f_.inverse(fact) * factorial_ratio_sqrt(a, b, J, false);
}

template <class F>
auto Builder<F>::psi(int a, int b, Spin j) const -> C {
  const int J = j.twice();
  C fact = f_.one();
  for (int i = 2; i <= J; ++i) fact = fact * f_.qint(i);
  return f_.vpow(rho_twice(a, b, J)) * f_.inverse(fact) * factorial_ratio_sqrt(a, b, J, true);
}

template <class F>
auto Builder<F>::K_closed_t(Spin j, int D, bool alt) const -> SM {
  const int J = j.twice();
  const MonomialArg arg{-1, 0, {2, 0, 0}};
  // Largest erasure count is 2J; the base series must reach D + 2J.
  const S base = alt ? tdelta_series(-J, arg, D + 2 * J, f_) : delta_series(-J, arg, D + 2 * J, f_);
  SM out(J + 1, J + 1);
  for (int a = 1; a <= J + 1; ++a) {
    for (int b = 1; b <= J + 1; ++b) {
      S e;
      int shift;
      C coeff;
      if (!alt) {
        e = letter_power_map(letter_power_map(base, Side::left, Letter::x, 1 - b), Side::right, Letter::y, a - J - 1);
        shift = a - b - J;
        coeff = phi(a, b, j);
      } else {
        e = letter_power_map(letter_power_map(base, Side::left, Letter::y, b - J - 1), Side::right, Letter::x, 1 - a);
        shift = b - a - J;
        coeff = psi(a, b, j);
      }
      S entry = scale(coeff, e.shifted({shift, 0, 0}).truncated(D));
      if (!entry.is_graded()) throw std::logic_error("K entry is not graded by word length");
      entry.declare(Var::t);
      out.at(a - 1, b - 1) = std::move(entry);
    }
  }
  return out;
}

template <class F>
auto Builder<F>::K_half_explicit(int D, Var var) const -> SM {
  const MonomialArg t2 = MonomialArg::of(Var::t, 2);
  auto odd = [&](AltKind kind) {
    if (D < 1) {
      S z(D);
      z.declare(Var::t);
      return z;
    }
    return scale(f_.vpow(2), gen_series(kind, t2, D - 1, f_).shifted({1, 0, 0}));
  };
  SM k(2, 2);
  k.at(0, 0) = odd(AltKind::Wminus);
  k.at(0, 1) = gen_series(AltKind::G, t2, D, f_);
  k.at(1, 0) = gen_series(AltKind::Gtilde, t2, D, f_);
  k.at(1, 1) = odd(AltKind::Wplus);
  if (var == Var::t) return k;
  return substitute_all(k, Var::t, MonomialArg::of(var));
}

template <class F>
auto Builder<F>::K_fused_t(Spin j, int D) -> const SM& {
  const auto key = std::make_pair(j.twice(), D);
  if (auto it = k_fused_cache_.find(key); it != k_fused_cache_.end()) return it->second;
  const int J = j.twice();
  SM out;
  if (J == 1) {
    out = K_half_explicit(D);
  } else {
    // K^{(j+1/2)}(t) = F * K^{(1/2)}_1(q^j t) * Rhat^{(1/2,j)} * K^{(j)}_2(q^{-1/2} t) * E
    const Spin jl = Spin::from_twice(J - 1);
    const int d = J;  // dim of spin jl
    const SM k1 = kron(substitute_all(K_half_explicit(D), Var::t, MonomialArg::of(Var::t, 1, J - 1)),
                       identity_series(d, f_), f_);
    const SM k2 = kron(identity_series(2, f_), substitute_all(K_fused_t(jl, D), Var::t, MonomialArg::of(Var::t, 1, -1)), f_);
    const SM left = mat_mul(mat_mul(fusion_F(jl), k1, f_), Rhat(half(), jl), f_);
    out = mat_mul(mat_mul(left, k2, f_), fusion_E(jl), f_);
  }
  return k_fused_cache_.emplace(key, std::move(out)).first->second;
}

template <class F>
auto Builder<F>::K(Spin j, int D, Var var, KConstruction how) -> SM {
  if (D < 0) throw UsageError("truncation degree must be non-negative");
  if (var == Var::k) throw UsageError("K entries live in t or s");
  SM k;
  switch (how) {
    case KConstruction::closed: k = K_closed_t(j, D, false); break;
    case KConstruction::alt: k = K_closed_t(j, D, true); break;
    case KConstruction::fused: k = K_fused_t(j, D); break;
  }
  if (var == Var::t) return k;
  return substitute_all(k, Var::t, MonomialArg::of(var));
}

template <class F>
auto Builder<F>::gauge_D(Spin j) const -> SM {
  const int n = j.dim();
  SM d(n, n);
  for (int i = 0; i < n; ++i) {
    d.at(i, i) = series_scalar(f_.one(), unit_exp(Var::k, i));
    d.at(i, i).declare(Var::k);
  }
  return d;
}

template <class F>
auto Builder<F>::Kbar(Spin j, int D, Var var, KConstruction how) -> SM {
  SM k = K(j, D, var, how);
  for (int a = 0; a < k.rows(); ++a)
    for (int b = 0; b < k.cols(); ++b) {
      k.at(a, b) = k.at(a, b).shifted(unit_exp(Var::k, b - a));
      k.at(a, b).declare(Var::k);
    }
  return k;
}

}  // namespace qshuffle
