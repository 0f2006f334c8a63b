#include "qshuffle/field.hpp"
#include "qshuffle/scalar.hpp"

#include <catch_amalgamated.hpp>

#include <cmath>
#include <random>

using namespace qshuffle;
using Catch::Approx;

namespace {

LaurentPoly random_poly(std::mt19937& rng) {
  std::uniform_int_distribution<int> len(0, 4), ex(-5, 5), co(-6, 6);
  std::vector<std::pair<int, Integer>> terms;
  for (int i = len(rng); i > 0; --i) terms.emplace_back(ex(rng), Integer(co(rng)));
  return LaurentPoly::from_terms(terms);
}

// Random element of Q(v)[sqrt[2], sqrt[3]] with nonzero denominators.
Scalar random_scalar(std::mt19937& rng) {
  std::uniform_int_distribution<int> pick(0, 3), small(1, 4);
  Scalar s;
  for (int mask = 0; mask < 4; ++mask) {
    if (pick(rng) == 0) continue;
    RatFun r(random_poly(rng));
    if (pick(rng) == 0) r = r / RatFun(bracket_poly(small(rng)));
    std::uint64_t m = 0;
    if (mask & 1) m |= RadicalSignature::single(2).mask();
    if (mask & 2) m |= RadicalSignature::single(3).mask();
    s += Scalar(RadicalSignature::from_mask(m), r);
  }
  return s;
}

double qint_oracle(int n, double q) { return (std::pow(q, n) - std::pow(q, -n)) / (q - 1.0 / q); }

}  // namespace

TEST_CASE("Laurent polynomials agree with pointwise evaluation", "[scalar]") {
  std::mt19937 rng(7);
  for (int i = 0; i < 300; ++i) {
    const auto a = random_poly(rng), b = random_poly(rng);
    const double v = 1.1 + 0.1 * (i % 7);
    CHECK((a + b).evaluate(v) == Approx(a.evaluate(v) + b.evaluate(v)));
    CHECK((a * b).evaluate(v) == Approx(a.evaluate(v) * b.evaluate(v)));
    CHECK((a - a).is_zero());
  }
}

TEST_CASE("q-integers", "[scalar]") {
  for (int n = -4; n <= 8; ++n) {
    const double q = 1.37;
    CHECK(eval_numeric(qint(n), q) == Approx(qint_oracle(n, q)));
    CHECK(NumericField(q).qint(n) == Approx(qint_oracle(n, q)));
  }
  CHECK(qint(0).is_zero());
  CHECK(qint(1) == Scalar(1));
  CHECK(qint(-3) == -qint(3));
  CHECK(qfact(4) == qint(2) * qint(3) * qint(4));
  CHECK(eval_numeric(c_of_qpow(2), 1.5) == Approx(1.5 * 1.5 - 1.0 / 2.25));
}

TEST_CASE("Scalar field axioms on random elements", "[scalar]") {
  std::mt19937 rng(11);
  const double q = 1.29;
  for (int i = 0; i < 200; ++i) {
    const auto a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - a).is_zero());
    CHECK(a * Scalar(1) == a);
    CHECK(eval_numeric(a * b, q) == Approx(eval_numeric(a, q) * eval_numeric(b, q)).margin(1e-9));
  }
}

TEST_CASE("square roots of q-integers", "[scalar]") {
  const int two[] = {2}, three[] = {3}, none[] = {0};
  const Scalar r2 = sqrt_brackets(two);
  CHECK(r2 * r2 == qint(2));
  CHECK_FALSE(r2.is_rational());
  const Scalar ratio = sqrt_bracket_ratio(two, three);
  CHECK(ratio * ratio == qint(2) / qint(3));
  CHECK(eval_numeric(ratio, 1.4) == Approx(std::sqrt(qint_oracle(2, 1.4) / qint_oracle(3, 1.4))));
  CHECK(sqrt_bracket_ratio(none, three).is_zero());
  CHECK(r2 * r2.inverse() == Scalar(1));
  const int four[] = {2, 2};
  CHECK(sqrt_brackets(four) == qint(2));
}

TEST_CASE("numeric field matches exact evaluation", "[scalar]") {
  const NumericField nf(1.7);
  const ExactField ef;
  const int n[] = {3, 4}, d[] = {2};
  CHECK(nf.sqrt_bracket_ratio(n, d) == Approx(eval_numeric(ef.sqrt_bracket_ratio(n, d), 1.7)));
  CHECK(nf.vpow(3) == Approx(std::pow(1.7, 1.5)));
  CHECK(nf.c_qpow(1) == Approx(1.7 - 1 / 1.7));
}
