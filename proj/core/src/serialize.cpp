#include "qshuffle/serialize.hpp"

#include "qshuffle/errors.hpp"

#include <charconv>

namespace qshuffle {

json to_json_value(const LaurentPoly& p) {
  json out = json::array();
  for (const auto& [e, c] : p.terms()) out.push_back({e, c.str()});
  return out;
}

LaurentPoly laurent_from_json(const json& j) {
  std::vector<std::pair<int, Integer>> terms;
  for (const auto& t : j) terms.emplace_back(t.at(0).get<int>(), Integer(t.at(1).get<std::string>()));
  return LaurentPoly::from_terms(terms);
}

json to_json_value(const Scalar& c) {
  json terms = json::array();
  for (const auto& [sig, r] : c.terms())
    terms.push_back({{"sqrt", sig.indices()}, {"num", to_json_value(r.num())}, {"den", to_json_value(r.den())}});
  return {{"terms", terms}, {"text", c.to_string()}};
}

json to_json_value(double c) { return c; }

template <>
Scalar coeff_from_json<Scalar>(const json& j) {
  std::vector<Scalar::Term> terms;
  for (const auto& t : j.at("terms")) {
    std::uint64_t mask = 0;
    for (const auto& n : t.at("sqrt")) mask |= RadicalSignature::single(n.get<int>()).mask();
    terms.emplace_back(RadicalSignature::from_mask(mask), RatFun(laurent_from_json(t.at("num")), laurent_from_json(t.at("den"))));
  }
  return Scalar::from_terms(std::move(terms));
}

template <>
double coeff_from_json<double>(const json& j) {
  return j.get<double>();
}

std::string coeff_text(const Scalar& c) { return c.to_string(); }

std::string coeff_text(double c) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, c);
  return std::string(buf, ptr);
}

std::string var_name(Var v) {
  switch (v) {
    case Var::t: return "t";
    case Var::s: return "s";
    case Var::k: return "k";
  }
  return "t";
}

Var parse_var(const std::string& s) {
  if (s == "t") return Var::t;
  if (s == "s") return Var::s;
  if (s == "k") return Var::k;
  throw UsageError("unknown variable '" + s + "' (expected t, s or k)");
}

std::string exp_text(const Exp3& e) {
  std::string out;
  for (int i = 0; i < 3; ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += var_name(static_cast<Var>(i));
    if (e[i] != 1) out += "^" + std::to_string(e[i]);
  }
  return out;
}

}  // namespace qshuffle
