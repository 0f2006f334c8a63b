#pragma once

#include "qshuffle/matrix.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

namespace qshuffle {

using json = nlohmann::json;

// Exact coefficients serialize as {"terms": [{"sqrt": [...], "num": [[e, "c"], ...],
// "den": [...]}], "text": "..."}; integers are decimal strings. Doubles are
// plain JSON numbers. "text" is informational and ignored when reading.
json to_json_value(const LaurentPoly& p);
LaurentPoly laurent_from_json(const json& j);
json to_json_value(const Scalar& c);
json to_json_value(double c);

template <class C>
C coeff_from_json(const json& j);
template <>
Scalar coeff_from_json<Scalar>(const json& j);
template <>
double coeff_from_json<double>(const json& j);

std::string coeff_text(const Scalar& c);
std::string coeff_text(double c);

std::string var_name(Var v);
Var parse_var(const std::string& s);
std::string exp_text(const Exp3& e);

// [{"word": "xy", "coeff": ...}, ...]; the empty word is written "1".
template <class C>
json to_json_value(const WordPoly<C>& p) {
  json out = json::array();
  for (const auto& [w, c] : p.terms()) out.push_back({{"word", w.empty() ? std::string("1") : w.str()}, {"coeff", to_json_value(c)}});
  return out;
}

template <class C>
WordPoly<C> wordpoly_from_json(const json& j) {
  std::vector<typename WordPoly<C>::Term> terms;
  for (const auto& t : j) terms.emplace_back(Word::parse(t.at("word").get<std::string>()), coeff_from_json<C>(t.at("coeff")));
  return WordPoly<C>::from_terms(std::move(terms));
}

template <class C>
std::string wordpoly_text(const WordPoly<C>& p) {
  if (p.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [w, c] : p.terms()) {
    if (!first) s += " + ";
    first = false;
    s += coeff_text(c);
    s += w.empty() ? std::string("*1") : "*" + w.str();
  }
  return s;
}

// {"bound": D | null, "vars": ["t", ...], "terms": [{"exp": [a, b, c], "poly": [...]}]}
template <class C>
json to_json_value(const Series<C>& s) {
  json vars = json::array();
  for (int i = 0; i < 3; ++i)
    if (s.vars() & (1u << i)) vars.push_back(var_name(static_cast<Var>(i)));
  json terms = json::array();
  for (const auto& [e, p] : s.terms()) terms.push_back({{"exp", {e[0], e[1], e[2]}}, {"poly", to_json_value(p)}});
  return {{"bound", s.bound() ? json(*s.bound()) : json(nullptr)}, {"vars", vars}, {"terms", terms}};
}

template <class C>
Series<C> series_from_json(const json& j) {
  std::optional<int> bound;
  if (!j.at("bound").is_null()) bound = j.at("bound").get<int>();
  Series<C> s(bound);
  for (const auto& v : j.at("vars")) s.declare(parse_var(v.get<std::string>()));
  for (const auto& t : j.at("terms")) {
    const auto& e = t.at("exp");
    s.add_term(Exp3{e.at(0).get<int>(), e.at(1).get<int>(), e.at(2).get<int>()}, wordpoly_from_json<C>(t.at("poly")));
  }
  return s;
}

template <class C>
std::string series_text(const Series<C>& s) {
  std::string out;
  bool first = true;
  for (const auto& [e, p] : s.terms()) {
    if (!first) out += " + ";
    first = false;
    const std::string m = exp_text(e);
    out += "(" + wordpoly_text(p) + ")" + (m.empty() ? "" : "*" + m);
  }
  if (first) out = "0";
  if (s.bound()) out += " + O(deg " + std::to_string(*s.bound() + 1) + ")";
  return out;
}

// {"rows": r, "cols": c, "entries": [{"row": i, "col": j, "value": ...}]} with
// 1-based indices; zero entries are omitted.
template <class T>
json to_json_value(const Mat<T>& m) {
  json entries = json::array();
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) {
      const auto& x = m.at(i, j);
      if (entry_is_zero(x)) continue;
      entries.push_back({{"row", i + 1}, {"col", j + 1}, {"value", to_json_value(x)}});
    }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

template <class C>
Mat<C> scalar_mat_from_json(const json& j) {
  Mat<C> m(j.at("rows").get<int>(), j.at("cols").get<int>());
  for (const auto& e : j.at("entries")) m.at(e.at("row").get<int>() - 1, e.at("col").get<int>() - 1) = coeff_from_json<C>(e.at("value"));
  return m;
}

template <class C>
SMat<C> series_mat_from_json(const json& j) {
  SMat<C> m(j.at("rows").get<int>(), j.at("cols").get<int>());
  for (const auto& e : j.at("entries"))
    m.at(e.at("row").get<int>() - 1, e.at("col").get<int>() - 1) = series_from_json<C>(e.at("value"));
  return m;
}

// One line per nonzero entry: "(i,j) = ...", columns aligned on '='.
template <class T>
std::string mat_text(const Mat<T>& m) {
  std::vector<std::pair<std::string, std::string>> rows;
  std::size_t width = 0;
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) {
      const auto& x = m.at(i, j);
      if (entry_is_zero(x)) continue;
      std::string idx = "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
      width = std::max(width, idx.size());
      if constexpr (std::is_same_v<T, Scalar> || std::is_same_v<T, double>) {
        rows.emplace_back(std::move(idx), coeff_text(x));
      } else {
        rows.emplace_back(std::move(idx), series_text(x));
      }
    }
  std::string out = std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + " matrix\n";
  for (const auto& [idx, val] : rows) out += idx + std::string(width - idx.size(), ' ') + " = " + val + "\n";
  return out;
}

}  // namespace qshuffle
