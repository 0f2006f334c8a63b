#include "qshuffle/checks.hpp"
#include "qshuffle/constructors.hpp"

#include <catch_amalgamated.hpp>

#include <cmath>

using namespace qshuffle;
using S = Series<Scalar>;
using SM = SMat<Scalar>;

namespace {

// c(v^k t^e) as a series
S c_mono(int k, int e) {
  S s;
  s.add_term({e, 0, 0}, WordPoly<Scalar>::monomial(Word(), Scalar::vpow(k)));
  s.add_term({-e, 0, 0}, WordPoly<Scalar>::monomial(Word(), -Scalar::vpow(-k)));
  return s;
}

S c_const(int k) { return series_scalar(c_of_qpow(k / 2)); }

}  // namespace

TEST_CASE("spin parsing", "[constructors]") {
  CHECK(Spin::parse("1/2").twice() == 1);
  CHECK(Spin::parse("3/2").twice() == 3);
  CHECK(Spin::parse("2").twice() == 4);
  CHECK(Spin::parse("3/2").str() == "3/2");
  CHECK_THROWS_AS(Spin::parse("0"), UsageError);
  CHECK_THROWS_AS(Spin::parse("1/3"), UsageError);
  CHECK_THROWS_AS(Spin::parse("x"), UsageError);
  CHECK_THROWS_AS(Spin::parse("-1/2"), UsageError);
}

TEST_CASE("spin-1/2 R and R-hat", "[constructors]") {
  const ExactField f;
  Builder<ExactField> b(f);
  const Spin h = half();
  SM expected(4, 4);
  expected.at(0, 0) = c_mono(2, 1);
  expected.at(3, 3) = c_mono(2, 1);
  expected.at(1, 1) = c_mono(0, 1);
  expected.at(2, 2) = c_mono(0, 1);
  expected.at(1, 2) = c_const(2);
  expected.at(2, 1) = c_const(2);
  CHECK(mat_equal(b.R_t(h, h), expected).equal);
  Mat<Scalar> rhat(4, 4);
  rhat.at(0, 0) = rhat.at(3, 3) = Scalar::vpow(1);
  rhat.at(1, 1) = rhat.at(2, 2) = Scalar::vpow(-1);
  CHECK(b.Rhat(h, h) == rhat);
}

TEST_CASE("spin-1/2 K is q t W-(t^2), G(t^2) / G~(t^2), q t W+(t^2)", "[constructors]") {
  const ExactField f;
  Builder<ExactField> b(f);
  const int D = 5;
  const auto k = b.K(half(), D);
  const MonomialArg t2{1, 0, {2, 0, 0}};
  const auto wm = gen_series(AltKind::Wminus, t2, D - 1, f).shifted({1, 0, 0});
  const auto wp = gen_series(AltKind::Wplus, t2, D - 1, f).shifted({1, 0, 0});
  SM expected(2, 2);
  expected.at(0, 0) = scale(Scalar::vpow(2), wm);
  expected.at(1, 1) = scale(Scalar::vpow(2), wp);
  expected.at(0, 1) = gen_series(AltKind::G, t2, D, f);
  expected.at(1, 0) = gen_series(AltKind::Gtilde, t2, D, f);
  CHECK(mat_equal(k, expected).equal);
  for (const auto& e : k.data()) CHECK(e.bound() == std::optional<int>(D));
}

TEST_CASE("fusion matrices", "[constructors]") {
  const ExactField f;
  Builder<ExactField> b(f);
  for (int J = 1; J <= 4; ++J) {
    const Spin j = Spin::from_twice(J);
    const auto E = b.fusion_E(j), F = b.fusion_F(j);
    CHECK(E.rows() == 2 * (J + 1));
    CHECK(E.cols() == J + 2);
    CHECK(mat_mul(F, E, f) == identity_scalar(J + 2, f));
  }
}

TEST_CASE("K entries are graded and truncation is consistent", "[constructors]") {
  const ExactField f;
  Builder<ExactField> b(f);
  for (int J = 1; J <= 2; ++J) {
    const Spin j = Spin::from_twice(J);
    const auto k6 = b.K(j, 6);
    for (int d = 0; d < 6; ++d) {
      const auto kd = b.K(j, d);
      const auto cut = k6.map([d](const S& s) { return s.truncated(d); });
      CHECK(mat_equal(cut, kd).equal);
      for (const auto& e : kd.data()) CHECK(e.is_graded());
    }
  }
}

TEST_CASE("truncated FM verdicts agree across nested degrees", "[constructors]") {
  for (int J : {1, 2}) {
    for (int D = 1; D <= 5; ++D) {
      CheckSpec s;
      s.check = "fm";
      s.spins = {half(), Spin::from_twice(J)};
      s.degree = D;
      CHECK(run_check(s, false).pass);
    }
  }
}

TEST_CASE("a corrupted R entry breaks FM with a witness", "[constructors]") {
  const ExactField f;
  Builder<ExactField> b(f);
  const Spin h = half();
  auto r = b.R_t(h, h);
  r.at(1, 2) = scale(Scalar(2), r.at(1, 2));
  Judge<ExactField> good, bad;
  const auto k = b.K(h, 4);
  CHECK(fm_equation(f, b.R_t(h, h), b.Rhat(h, h), k, k, false, good, "fm"));
  CHECK_FALSE(fm_equation(f, r, b.Rhat(h, h), k, k, false, bad, "fm"));
  REQUIRE(bad.witness());
  CHECK(bad.witness()->row >= 1);
  CHECK(bad.witness()->col >= 1);
}

TEST_CASE("R with the inverted ratio fails FM", "[constructors]") {
  const ExactField f;
  Builder<ExactField> b(f);
  const Spin h = half();
  const auto flipped = b.R(h, h, MonomialArg::of(Var::t, -1));
  const auto k = b.K(h, 4);
  Judge<ExactField> judge;
  CHECK_FALSE(fm_equation(f, flipped, b.Rhat(h, h), k, k, false, judge, "fm"));
}

TEST_CASE("numeric constructors match exact ones evaluated", "[constructors]") {
  const double q = 1.3;
  const ExactField ef;
  const NumericField nf(q);
  Builder<ExactField> be(ef);
  Builder<NumericField> bn(nf);
  const Spin j1 = Spin::from_twice(2), j2 = Spin::from_twice(1);
  const auto re = be.Rhat(j1, j2);
  const auto rn = bn.Rhat(j1, j2);
  for (int i = 0; i < re.rows(); ++i)
    for (int k = 0; k < re.cols(); ++k) CHECK(rn.at(i, k) == Catch::Approx(eval_numeric(re.at(i, k), q)).margin(1e-12));
  const auto ke = be.K(j1, 3);
  const auto kn = bn.K(j1, 3);
  for (int i = 0; i < ke.rows(); ++i)
    for (int k = 0; k < ke.cols(); ++k) {
      const auto& xe = ke.at(i, k);
      const auto& xn = kn.at(i, k);
      REQUIRE(xe.terms().size() == xn.terms().size());
      for (const auto& [e, pe] : xe.terms()) {
        const auto pn = xn.coefficient_of(e);
        REQUIRE(pe.size() == pn.size());
        for (std::size_t w = 0; w < pe.size(); ++w)
          CHECK(pn.terms()[w].second == Catch::Approx(eval_numeric(pe.terms()[w].second, q)).epsilon(1e-10));
      }
    }
}

TEST_CASE("rho and the K constructions parse", "[constructors]") {
  CHECK(rho_twice(1, 1, 1) == 2);
  CHECK(parse_k_construction("fused") == KConstruction::fused);
  CHECK_THROWS_AS(parse_k_construction("other"), UsageError);
}
