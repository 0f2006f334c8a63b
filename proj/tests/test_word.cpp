#include "qshuffle/field.hpp"
#include "qshuffle/shuffle.hpp"

#include <catch_amalgamated.hpp>

#include <map>
#include <random>
#include <set>

using namespace qshuffle;
using P = WordPoly<Scalar>;

namespace {

// Right-end recursion: u*v = (u * v') v_s + (u' * v) u_r q^{<u_r, v>}, with
// <x,x> = <y,y> = 2 and <x,y> = -2. Coefficients map v-exponents to integers.
using Coeffs = std::map<int, long long>;
using Oracle = std::map<std::string, Coeffs>;

Oracle oracle_shuffle(const std::string& u, const std::string& v) {
  if (u.empty()) return {{v, {{0, 1}}}};
  if (v.empty()) return {{u, {{0, 1}}}};
  Oracle out;
  for (const auto& [w, c] : oracle_shuffle(u, v.substr(0, v.size() - 1)))
    for (const auto& [e, k] : c) out[w + v.back()][e] += k;
  int pair = 0;
  for (char b : v) pair += b == u.back() ? 2 : -2;
  for (const auto& [w, c] : oracle_shuffle(u.substr(0, u.size() - 1), v))
    for (const auto& [e, k] : c) out[w + u.back()][e + 2 * pair] += k;
  return out;
}

P to_poly(const Oracle& o) {
  P out;
  for (const auto& [w, c] : o) {
    std::vector<std::pair<int, Integer>> terms;
    for (const auto& [e, k] : c) terms.emplace_back(e, Integer(k));
    const auto lp = LaurentPoly::from_terms(terms);
    if (!lp.is_zero()) out += P::monomial(Word::parse(w.empty() ? "1" : w), Scalar(RatFun(lp)));
  }
  return out;
}

std::string random_word(std::mt19937& rng, int maxlen) {
  std::uniform_int_distribution<int> len(0, maxlen), bit(0, 1);
  std::string s;
  for (int i = len(rng); i > 0; --i) s += bit(rng) ? 'y' : 'x';
  return s;
}

P mono(const std::string& s) { return P::monomial(Word::parse(s.empty() ? "1" : s), Scalar(1)); }

}  // namespace

TEST_CASE("words parse, print and transform", "[word]") {
  const Word w = Word::parse("xxyxy");
  CHECK(w.str() == "xxyxy");
  CHECK(w.length() == 5);
  CHECK(w.reversed().str() == "yxyxx");
  CHECK(w.swapped().str() == "yyxyx");
  CHECK(Word::parse("1").empty());
  CHECK(Word::parse("xy").concat(Word::parse("yx")).str() == "xyyx");
  CHECK(Word::parse("x") < Word::parse("y"));
  CHECK(Word::parse("y") < Word::parse("xx"));
  CHECK_THROWS(Word::parse("xz"));
}

TEST_CASE("alternating words", "[word]") {
  CHECK(alternating_word(AltKind::Wminus, 1).str() == "xyx");
  CHECK(alternating_word(AltKind::Wplus, 1).str() == "yxy");
  CHECK(alternating_word(AltKind::Gtilde, 2).str() == "xyxy");
  CHECK(alternating_word(AltKind::G, 2).str() == "yxyx");
  CHECK(alternating_word(AltKind::G, 0).empty());
  CHECK(alternating_word(AltKind::Wminus, 0).str() == "x");
}

TEST_CASE("shuffle agrees with the right-end recursion", "[word]") {
  const ExactField f;
  std::mt19937 rng(3);
  for (int i = 0; i < 400; ++i) {
    const auto u = random_word(rng, 4), v = random_word(rng, 4);
    CHECK(shuffle(mono(u), mono(v), f) == to_poly(oracle_shuffle(u, v)));
  }
  // x * y = xy + q^{-2} yx
  CHECK(shuffle(mono("x"), mono("y"), f) == mono("xy") + P::monomial(Word::parse("yx"), Scalar::vpow(-4)));
  CHECK(shuffle(mono("x"), mono("x"), f) == P::monomial(Word::parse("xx"), Scalar(1) + Scalar::vpow(4)));
}

TEST_CASE("shuffle is associative, unital and graded", "[word]") {
  const ExactField f;
  std::mt19937 rng(5);
  for (int i = 0; i < 500; ++i) {
    const auto a = mono(random_word(rng, 4)), b = mono(random_word(rng, 4)), c = mono(random_word(rng, 4));
    CHECK(shuffle(shuffle(a, b, f), c, f) == shuffle(a, shuffle(b, c, f), f));
  }
  for (int i = 0; i < 50; ++i) {
    const auto u = random_word(rng, 5), v = random_word(rng, 5);
    CHECK(shuffle(mono(""), mono(u), f) == mono(u));
    CHECK(shuffle(mono(u), mono(""), f) == mono(u));
    const auto s = shuffle(mono(u), mono(v), f);
    CHECK(s.is_homogeneous(static_cast<int>(u.size() + v.size())));
  }
}

TEST_CASE("zeta reverses both products, swap preserves them", "[word]") {
  const ExactField f;
  std::mt19937 rng(9);
  for (int i = 0; i < 500; ++i) {
    const auto v = mono(random_word(rng, 4)), w = mono(random_word(rng, 4));
    const auto vw = P::monomial(v.terms()[0].first.concat(w.terms()[0].first), Scalar(1));
    const auto wv = P::monomial(zeta(w).terms()[0].first.concat(zeta(v).terms()[0].first), Scalar(1));
    CHECK(zeta(vw) == wv);
    CHECK(zeta(shuffle(v, w, f)) == shuffle(zeta(w), zeta(v), f));
    CHECK(swap_letters(shuffle(v, w, f)) == shuffle(swap_letters(v), swap_letters(w), f));
  }
}

TEST_CASE("erasure undoes concatenation", "[word]") {
  std::mt19937 rng(13);
  for (int i = 0; i < 100; ++i) {
    const auto w = random_word(rng, 5);
    CHECK(erase(mono("x" + w), Side::left, Letter::x) == mono(w));
    CHECK(erase(mono(w + "y"), Side::right, Letter::y) == mono(w));
    CHECK(letter_power(mono(w), Side::left, Letter::x, 2) == mono("xx" + w));
    CHECK(letter_power(letter_power(mono(w), Side::right, Letter::y, 2), Side::right, Letter::y, -2) == mono(w));
  }
  CHECK(erase(mono("yx"), Side::left, Letter::x).is_zero());
  CHECK(letter_power(mono("xyxx"), Side::left, Letter::x, -2).is_zero());
  CHECK(erase(mono(""), Side::left, Letter::x).is_zero());
}

TEST_CASE("Catalan words", "[word]") {
  const int expected[] = {1, 1, 2, 5, 14, 42, 132};
  for (int n = 0; n <= 6; ++n) {
    const auto ws = catalan_words(n);
    CHECK(static_cast<int>(ws.size()) == expected[n]);
    CHECK(std::is_sorted(ws.begin(), ws.end()));
    for (Word w : ws) {
      CHECK(is_catalan(w));
      CHECK(w.length() == 2 * n);
      CHECK(w.bar_sum() == 0);
    }
  }
  std::set<std::string> three;
  for (Word w : catalan_words(3)) three.insert(w.str());
  CHECK(three == std::set<std::string>{"xyxyxy", "xxyyxy", "xyxxyy", "xxyxyy", "xxxyyy"});
  CHECK_FALSE(is_catalan(Word::parse("yx")));
  CHECK_FALSE(is_catalan(Word::parse("xxy")));
  CHECK(height(Word::parse("xxyxyy")) == 2);
}

TEST_CASE("q-Serre relations", "[word]") {
  const ExactField f;
  auto s = [&](const P& a, const P& b) { return shuffle(a, b, f); };
  const auto x = mono("x"), y = mono("y");
  const Scalar q3 = qint(3);
  const P serre = s(s(s(x, x), x), y) - scale(q3, s(s(s(x, x), y), x)) + scale(q3, s(s(s(x, y), x), x)) -
                  s(s(s(y, x), x), x);
  CHECK(serre.is_zero());
  const P mirror = s(s(s(y, y), y), x) - scale(q3, s(s(s(y, y), x), y)) + scale(q3, s(s(s(y, x), y), y)) -
                   s(s(s(x, y), y), y);
  CHECK(mirror.is_zero());
  // Changing [3] breaks it.
  const P wrong = s(s(s(x, x), x), y) - scale(qint(2), s(s(s(x, x), y), x)) + scale(q3, s(s(s(x, y), x), x)) -
                  s(s(s(y, x), x), x);
  CHECK_FALSE(wrong.is_zero());
}
