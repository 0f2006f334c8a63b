#pragma once

#include "qshuffle/field.hpp"
#include "qshuffle/matrix.hpp"
#include "qshuffle/spin.hpp"

#include <map>
#include <string>
#include <tuple>
#include <utility>

namespace qshuffle {

enum class KConstruction { closed, alt, fused };
std::string to_string(KConstruction c);
KConstruction parse_k_construction(const std::string& s);

// 2rho(a, b, j) with J = 2j; rho itself may be a half-integer.
int rho_twice(int a, int b, int J);

// Builders for the fusion matrices E, F, H, the R-, R-hat- and K-matrices and
// the gauge matrices. Indices (a, b) in comments are 1-based. A Builder owns
// memo caches and the field's shuffle table: use one instance per task.
template <class F>
class Builder {
 public:
  using C = typename F::value_type;
  using S = Series<C>;
  using M = Mat<C>;
  using SM = SMat<C>;

  explicit Builder(const F& field) : f_(field) {}
  const F& field() const { return f_; }

  // E^{(j+1/2)}, F^{(j+1/2)}, H^{(j+1/2)}; the argument is j.
  M fusion_E(Spin j) const;
  M fusion_F(Spin j) const;
  M fusion_H(Spin j) const;

  M Rhat(Spin j1, Spin j2) const;
  // Same matrix assembled from powers of omega^{(j2)} blocks.
  M Rhat_blocks(Spin j1, Spin j2) const;

  // R^{(j1,j2)} in the variable t, an exact Laurent polynomial matrix.
  const SM& R_t(Spin j1, Spin j2);
  // R^{(j1,j2)}(arg)
  SM R(Spin j1, Spin j2, const MonomialArg& arg);
  // Closed form of R^{(1/2,j)}(arg) from the half-spin row formula.
  SM R_half_closed(Spin j, const MonomialArg& arg) const;

  // K^{(j)} in `var`, truncated at total degree D.
  SM K(Spin j, int D, Var var = Var::t, KConstruction how = KConstruction::closed);
  // K^{(1/2)} written directly with the alternating generating functions.
  SM K_half_explicit(int D, Var var = Var::t) const;
  SM gauge_D(Spin j) const;
  SM Kbar(Spin j, int D, Var var = Var::t, KConstruction how = KConstruction::closed);

  C phi(int a, int b, Spin j) const;
  C psi(int a, int b, Spin j) const;

  // c(v^vexp * var) = v^vexp var - v^-vexp var^-1
  S c_series(int vexp, Var var = Var::t) const;
  SM substitute_all(const SM& m, Var var, const MonomialArg& arg) const;
  S one_series() const { return series_one(f_.one()); }

  // Embeddings onto legs used in the fusion formulas.
  SM embed(const SM& m, std::vector<int> dims, std::vector<int> legs) const {
    return leg_embed(m, LegSpec{std::move(dims), std::move(legs)}, one_series());
  }
  M embed(const M& m, std::vector<int> dims, std::vector<int> legs) const {
    return leg_embed(m, LegSpec{std::move(dims), std::move(legs)}, f_.one());
  }
  M pad_left(const M& m, int d) const { return kron(identity_scalar(d, f_), m, f_); }
  M pad_right(const M& m, int d) const { return kron(m, identity_scalar(d, f_), f_); }

 private:
  SM K_closed_t(Spin j, int D, bool alt) const;
  const SM& K_fused_t(Spin j, int D);
  C factorial_ratio_sqrt(int a, int b, int J, bool inverted) const;

  const F& f_;
  std::map<std::pair<int, int>, SM> r_cache_;
  std::map<std::pair<int, int>, SM> k_fused_cache_;
};

extern template class Builder<ExactField>;
extern template class Builder<NumericField>;

}  // namespace qshuffle
