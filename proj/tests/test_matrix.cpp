#include "qshuffle/field.hpp"
#include "qshuffle/matrix.hpp"

#include <catch_amalgamated.hpp>

#include <random>

using namespace qshuffle;
using M = Mat<Scalar>;

namespace {

M random_mat(std::mt19937& rng, int r, int c) {
  std::uniform_int_distribution<int> d(-3, 3);
  M m(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m.at(i, j) = Scalar(d(rng)) * Scalar::vpow(d(rng));
  return m;
}

// Permutation of a 3-leg space exchanging legs 2 and 3: |a,b,c> -> |a,c,b>.
M swap23(int d1, int d2, int d3) {
  M p(d1 * d2 * d3, d1 * d2 * d3);
  for (int a = 0; a < d1; ++a)
    for (int b = 0; b < d2; ++b)
      for (int c = 0; c < d3; ++c) p.at((a * d3 + c) * d2 + b, (a * d2 + b) * d3 + c) = Scalar(1);
  return p;
}

M transpose(const M& m) {
  M t(m.cols(), m.rows());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) t.at(j, i) = m.at(i, j);
  return t;
}

}  // namespace

TEST_CASE("Kronecker product entries", "[matrix]") {
  const ExactField f;
  std::mt19937 rng(1);
  const auto a = random_mat(rng, 2, 3), b = random_mat(rng, 3, 2);
  const auto k = kron(a, b, f);
  REQUIRE(k.rows() == 6);
  REQUIRE(k.cols() == 6);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 3; ++j)
      for (int p = 0; p < 3; ++p)
        for (int q = 0; q < 2; ++q) CHECK(k.at(i * 3 + p, j * 2 + q) == a.at(i, j) * b.at(p, q));
}

TEST_CASE("mixed product and associativity for scalar matrices", "[matrix]") {
  const ExactField f;
  std::mt19937 rng(2);
  for (int rep = 0; rep < 10; ++rep) {
    const auto a = random_mat(rng, 2, 2), b = random_mat(rng, 3, 3), c = random_mat(rng, 2, 2), d = random_mat(rng, 3, 3);
    CHECK(mat_mul(kron(a, b, f), kron(c, d, f), f) == kron(mat_mul(a, c, f), mat_mul(b, d, f), f));
    CHECK(mat_mul(mat_mul(a, c, f), a, f) == mat_mul(a, mat_mul(c, a, f), f));
  }
}

TEST_CASE("leg embeddings against explicit permutations", "[matrix]") {
  const ExactField f;
  std::mt19937 rng(3);
  const int d1 = 2, d2 = 3, d3 = 2;
  const auto x12 = random_mat(rng, d1 * d2, d1 * d2);
  const auto x13 = random_mat(rng, d1 * d3, d1 * d3);
  const auto x23 = random_mat(rng, d2 * d3, d2 * d3);
  const Scalar one(1);
  CHECK(leg_embed(x12, {{d1, d2, d3}, {1, 2}}, one) == kron(x12, identity_scalar(d3, f), f));
  CHECK(leg_embed(x23, {{d1, d2, d3}, {2, 3}}, one) == kron(identity_scalar(d1, f), x23, f));
  // x13 acts on legs (1,3): conjugate (x13 (x) I_{d2}) on legs (1,3,2) by the swap.
  const auto p = swap23(d1, d3, d2);
  const auto expected = mat_mul(mat_mul(p, kron(x13, identity_scalar(d2, f), f), f), transpose(p), f);
  CHECK(leg_embed(x13, {{d1, d2, d3}, {1, 3}}, one) == expected);
  CHECK_THROWS(leg_embed(x13, {{d1, d2, d3}, {1, 2}}, one));
}

TEST_CASE("comparison witnesses are 1-based and first in order", "[matrix]") {
  const ExactField f;
  auto a = identity_series(3, f);
  auto b = a;
  b.at(2, 1).add_term({1, 0, 0}, WordPoly<Scalar>::monomial(Word::parse("xy"), Scalar(2)));
  b.at(2, 2).add_term({2, 0, 0}, WordPoly<Scalar>::monomial(Word::parse("x"), Scalar(1)));
  const auto cmp = mat_equal(a, b);
  REQUIRE_FALSE(cmp.equal);
  CHECK(cmp.witness->row == 3);
  CHECK(cmp.witness->col == 2);
  CHECK(cmp.witness->exp == Exp3{1, 0, 0});
  CHECK(cmp.witness->diff == WordPoly<Scalar>::monomial(Word::parse("xy"), Scalar(-2)));
  CHECK(mat_equal(a, a).equal);
}

TEST_CASE("comparison respects the common truncation bound", "[matrix]") {
  const ExactField f;
  SMat<Scalar> a(1, 1), b(1, 1);
  a.at(0, 0) = Series<Scalar>(2);
  b.at(0, 0) = Series<Scalar>(4);
  b.at(0, 0).add_term({3, 0, 0}, WordPoly<Scalar>::monomial(Word::parse("xyx"), Scalar(1)));
  CHECK(mat_equal(a, b).equal);
  b.at(0, 0).add_term({2, 0, 0}, WordPoly<Scalar>::monomial(Word::parse("xy"), Scalar(1)));
  CHECK_FALSE(mat_equal(a, b).equal);
}

TEST_CASE("numeric residuals are normalized", "[matrix]") {
  Mat<double> a(2, 2), b(2, 2);
  a.at(0, 0) = 100.0;
  b.at(0, 0) = 100.0;
  a.at(1, 1) = 1.0;
  b.at(1, 1) = 1.5;
  const auto r = residual(a, b);
  CHECK(r.max_diff == Catch::Approx(0.5));
  CHECK(r.scale == Catch::Approx(100.0));
  CHECK(r.normalized() == Catch::Approx(0.005));
}

TEST_CASE("series matrix products keep factor order", "[matrix]") {
  const ExactField f;
  SMat<Scalar> a(1, 1), b(1, 1);
  a.at(0, 0) = Series<Scalar>::constant(WordPoly<Scalar>::monomial(Word::parse("x"), Scalar(1)));
  b.at(0, 0) = Series<Scalar>::constant(WordPoly<Scalar>::monomial(Word::parse("y"), Scalar(1)));
  const auto ab = mat_mul(a, b, f), ba = mat_mul(b, a, f);
  CHECK_FALSE(ab == ba);
  // x * y = xy + q^{-2} yx
  const auto expected = WordPoly<Scalar>::monomial(Word::parse("xy"), Scalar(1)) +
                        WordPoly<Scalar>::monomial(Word::parse("yx"), Scalar::vpow(-4));
  CHECK(ab.at(0, 0) == Series<Scalar>::constant(expected));
}
