#include "qshuffle/constructors.hpp"
#include "qshuffle/serialize.hpp"

#include <catch_amalgamated.hpp>

using namespace qshuffle;

TEST_CASE("scalars round-trip through JSON", "[serialize]") {
  const int two[] = {2}, three[] = {3, 5};
  const Scalar samples[] = {Scalar(0), Scalar(1), Scalar(-7), Scalar::vpow(-3), qint(4) / qint(3),
                            sqrt_brackets(two) + qint(2), sqrt_bracket_ratio(three, two) * Scalar::vpow(5)};
  for (const auto& s : samples) {
    const json j = to_json_value(s);
    CHECK(coeff_from_json<Scalar>(j) == s);
    CHECK(coeff_from_json<Scalar>(json::parse(j.dump())) == s);
    CHECK(j.contains("text"));
  }
  CHECK(coeff_from_json<double>(to_json_value(1.25)) == 1.25);
}

TEST_CASE("large integers survive serialization", "[serialize]") {
  LaurentPoly p = LaurentPoly::constant(Integer("123456789012345678901234567"));
  const Scalar s{RatFun(p)};
  CHECK(coeff_from_json<Scalar>(to_json_value(s)) == s);
  CHECK(laurent_from_json(to_json_value(p)) == p);
}

TEST_CASE("word polynomials and series round-trip", "[serialize]") {
  const ExactField f;
  const auto d = delta_series(-2, MonomialArg{-1, 0, {2, 0, 0}}, 6, f);
  const json j = to_json_value(d);
  CHECK(series_from_json<Scalar>(j) == d);
  CHECK(j.at("bound") == 6);
  const auto p = delta_n(3, 2, f);
  CHECK(wordpoly_from_json<Scalar>(to_json_value(p)) == p);
  CHECK(to_json_value(WordPoly<Scalar>::monomial(Word(), Scalar(1)))[0].at("word") == "1");
  const Series<Scalar> untruncated = series_one(Scalar(3));
  CHECK(to_json_value(untruncated).at("bound").is_null());
  CHECK(series_from_json<Scalar>(to_json_value(untruncated)) == untruncated);
}

TEST_CASE("matrices round-trip and omit zero entries", "[serialize]") {
  const ExactField f;
  Builder<ExactField> b(f);
  const auto k = b.K(Spin::from_twice(2), 4);
  const json j = to_json_value(k);
  CHECK(series_mat_from_json<Scalar>(j) == k);
  const auto rhat = b.Rhat(Spin::from_twice(1), Spin::from_twice(2));
  const json jr = to_json_value(rhat);
  CHECK(jr.at("entries").size() == 6);
  CHECK(scalar_mat_from_json<Scalar>(jr) == rhat);
  CHECK(jr.at("entries")[0].at("row") == 1);

  const NumericField nf(1.3);
  Builder<NumericField> bn(nf);
  const auto kn = bn.K(Spin::from_twice(1), 3);
  CHECK(series_mat_from_json<double>(json::parse(to_json_value(kn).dump())) == kn);
}

TEST_CASE("text formatting", "[serialize]") {
  const ExactField f;
  Builder<ExactField> b(f);
  const auto text = mat_text(b.K(half(), 2));
  CHECK(text.rfind("2x2 matrix\n", 0) == 0);
  CHECK(text.find("(1,1) = ") != std::string::npos);
  CHECK(text.find("O(deg 3)") != std::string::npos);
  CHECK(exp_text({1, -1, 0}) == "t*s^-1");
  CHECK(exp_text({0, 0, 0}).empty());
}
