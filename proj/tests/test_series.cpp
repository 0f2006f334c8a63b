#include "qshuffle/field.hpp"
#include "qshuffle/series.hpp"
#include "qshuffle/shuffle.hpp"

#include <catch_amalgamated.hpp>

#include <random>

using namespace qshuffle;
using S = Series<Scalar>;
using P = WordPoly<Scalar>;

namespace {

P mono(const char* w, Scalar c = Scalar(1)) { return P::monomial(Word::parse(w), std::move(c)); }

// Literal evaluation of the defining sum: over all words a_1..a_{2n} whose
// bar prefix sums (x = +1, y = -1) stay non-negative and end at zero, take
// the product of [a_1 + ... + a_{i-1} + m (a_i + 1) / 2].
P delta_oracle(int m, int n) {
  P out;
  const int len = 2 * n;
  for (unsigned bits = 0; bits < (1u << len); ++bits) {
    std::string w;
    int prefix = 0, low = 0;
    Scalar c(1);
    for (int i = 0; i < len; ++i) {
      const int bar = ((bits >> i) & 1u) ? -1 : 1;
      w += bar == 1 ? 'x' : 'y';
      c = c * qint(prefix + m * (bar + 1) / 2);
      prefix += bar;
      low = std::min(low, prefix);
    }
    if (low < 0 || prefix != 0 || c.is_zero()) continue;
    out += P::monomial(Word::parse(n == 0 ? "1" : w), c);
  }
  return out;
}

}  // namespace

TEST_CASE("series arithmetic basics", "[series]") {
  const ExactField f;
  S a = series_one(Scalar(1));
  a.add_term({1, 0, 0}, mono("xy"));
  CHECK(shuffle_mul(a, series_one(Scalar(1)), f) == a);
  CHECK(concat_mul(series_one(Scalar(1)), a, f) == a);
  const S b = S::monomial({1, 0, 0}, mono("x"), 3);
  const S ab = concat_mul(b, b, f);
  CHECK(ab.bound() == std::optional<int>(3));
  CHECK(ab == S::monomial({2, 0, 0}, mono("xx"), 3));
  CHECK((a - a).is_zero());
}

TEST_CASE("generating functions of alternating words", "[series]") {
  const ExactField f;
  const auto w = gen_series(AltKind::Wminus, MonomialArg::of(Var::t), 3, f);
  CHECK(w.bound() == std::optional<int>(3));
  S expected(3);
  expected.add_term({0, 0, 0}, mono("x"));
  expected.add_term({1, 0, 0}, mono("xyx"));
  expected.add_term({2, 0, 0}, mono("xyxyx"));
  expected.add_term({3, 0, 0}, mono("xyxyxyx"));
  CHECK(w == expected);
  // G(q t^2): coefficient of t^2 is q (yx)
  const auto g = gen_series(AltKind::G, MonomialArg{1, 2, {2, 0, 0}}, 4, f);
  CHECK(g.terms().size() == 3);
  CHECK(g.coefficient_of({2, 0, 0}) == mono("yx", Scalar::vpow(2)));
}

TEST_CASE("Delta coefficients match direct evaluation", "[series]") {
  const ExactField f;
  for (int m = -4; m <= 4; ++m)
    for (int n = 0; n <= 4; ++n) CHECK(delta_n(m, n, f) == delta_oracle(m, n));
  CHECK(delta_n(0, 1, f).is_zero());
  const auto d = delta_series(3, MonomialArg{-1, 0, {2, 0, 0}}, 4, f);
  // coefficient of t^2 in Delta^{(m)}(-t^2) is -[m] xy
  bool found = false;
  for (const auto& [e, p] : d.terms())
    if (e == Exp3{2, 0, 0}) {
      found = true;
      CHECK(p == mono("xy", -qint(3)));
    }
  CHECK(found);
  CHECK(delta_series(0, MonomialArg::of(Var::t), 6, f) == S::monomial({0, 0, 0}, mono("1"), 6));
  const auto td = tdelta_series(2, MonomialArg::of(Var::t), 4, f);
  CHECK(td == swap_letters_map(delta_series(2, MonomialArg::of(Var::t), 4, f)));
}

TEST_CASE("erasing the right y of Delta^{(-1)}(-t^2)", "[series]") {
  const ExactField f;
  const auto d = delta_series(-1, MonomialArg{-1, 0, {2, 0, 0}}, 2, f);
  const auto e = erase_map(d, Side::right, Letter::y);
  S expected(2);
  expected.add_term({2, 0, 0}, mono("x"));
  CHECK(e == expected);
}

TEST_CASE("substitution of monomial arguments", "[series]") {
  const ExactField f;
  S s;
  s.add_term({1, 0, 0}, mono("x"));
  s.add_term({-1, 0, 0}, mono("y"));
  const auto r = substitute(s, Var::t, MonomialArg{-1, 2, {1, -1, 0}}, f);
  S expected;
  expected.add_term({1, -1, 0}, mono("x", -Scalar::vpow(2)));
  expected.add_term({-1, 1, 0}, mono("y", -Scalar::vpow(-2)));
  CHECK(r == expected);
  const auto tr = S::monomial({1, 0, 0}, mono("x"), 4);
  CHECK_THROWS(substitute(tr, Var::t, MonomialArg{1, 0, {2, 0, 0}}, f));
  CHECK_NOTHROW(substitute(tr, Var::t, MonomialArg::of(Var::s), f));
}

TEST_CASE("truncated products are exact below the bound", "[series]") {
  const ExactField f;
  const MonomialArg t = MonomialArg::of(Var::t);
  for (int D = 0; D <= 6; ++D) {
    const auto a = gen_series(AltKind::G, t, 6, f), b = gen_series(AltKind::Wplus, t, 6, f);
    const auto full = shuffle_mul(a, b, f).truncated(D);
    const auto small = shuffle_mul(a.truncated(D), b.truncated(D), f);
    CHECK(full == small);
  }
}

TEST_CASE("letter powers on series", "[series]") {
  const ExactField f;
  const auto d = delta_series(-2, MonomialArg{-1, 0, {1, 0, 0}}, 4, f);
  const auto back = letter_power_map(letter_power_map(d, Side::left, Letter::x, 1), Side::left, Letter::x, -1);
  CHECK(back == d);
  CHECK(zeta_map(zeta_map(d)) == d);
}
