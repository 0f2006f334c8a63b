#include "qshuffle/checks.hpp"
#include "qshuffle/errors.hpp"

#include <catch_amalgamated.hpp>

using namespace qshuffle;

namespace {

CheckSpec spec(std::string name, std::vector<int> twice, int degree = 2) {
  CheckSpec s;
  s.check = std::move(name);
  for (int t : twice) s.spins.push_back(Spin::from_twice(t));
  s.degree = degree;
  return s;
}

std::vector<int> arity(const std::string& name) { return std::vector<int>(check_info(name).spins, 1); }

}  // namespace

TEST_CASE("every check passes at small parameters on both backends", "[checks]") {
  for (const auto& info : check_catalog()) {
    auto s = spec(info.name, arity(info.name));
    if (info.name == "delta") s.max_m = 2;
    if (info.name == "mutation") {
      s.degree = 4;
      s.mutations = 3;
    }
    for (Backend be : {Backend::exact, Backend::numeric}) {
      s.backend = be;
      const auto r = run_check(s, false);
      INFO(info.name << " " << to_string(be) << " " << report_text(r));
      CHECK(r.pass);
      CHECK_FALSE(r.error);
      CHECK_FALSE(r.witness);
      CHECK(r.millis == 0);
    }
  }
}

TEST_CASE("usage errors are reported, not thrown", "[checks]") {
  CHECK_THROWS_AS(check_info("nonsense"), UsageError);
  auto r = run_check(spec("nonsense", {}), false);
  CHECK_FALSE(r.pass);
  REQUIRE(r.error);
  CHECK(r.error->find("nonsense") != std::string::npos);
  r = run_check(spec("fm", {1}), false);
  CHECK_FALSE(r.pass);
  CHECK(r.error);
  auto neg = spec("fm", {1, 1});
  neg.degree = -1;
  CHECK_THROWS_AS(validate(neg), UsageError);
  auto bad_q = spec("fm", {1, 1});
  bad_q.backend = Backend::numeric;
  bad_q.q_samples = {0.5};
  CHECK_THROWS_AS(validate(bad_q), UsageError);
}

TEST_CASE("reports round-trip through JSON", "[checks]") {
  const auto ok = run_check(spec("fm", {1, 2}), true);
  CHECK(report_from_json(json::parse(to_json_value(ok).dump())) == ok);
  const auto numeric = [] {
    auto s = spec("unitarity", {1, 1});
    s.backend = Backend::numeric;
    return run_check(s, false);
  }();
  CHECK(report_from_json(to_json_value(numeric)) == numeric);
  CHECK(numeric.details.at("samples").size() == 2);
  ExactField f;
  Builder<ExactField> b(f);
  Judge<ExactField> judge;
  auto r = b.R_t(half(), half());
  r.at(0, 0) = Series<Scalar>();
  const auto k = b.K(half(), 2);
  fm_equation(f, r, b.Rhat(half(), half()), k, k, false, judge, "broken");
  REQUIRE(judge.witness());
  Report failed;
  failed.check = "fm";
  failed.params = json::object();
  failed.witness = judge.witness();
  failed.details = {{"equations", judge.equations()}};
  CHECK(report_from_json(to_json_value(failed)) == failed);
  CHECK(report_text(failed).find("witness: broken at entry (") != std::string::npos);
}

TEST_CASE("unitarity reports lambda at spin 1/2", "[checks]") {
  const auto r = run_check(spec("unitarity", {1, 1}), false);
  REQUIRE(r.pass);
  CHECK(r.details.contains("lambda"));
  CHECK(r.details.at("equations").size() == 4);
}

TEST_CASE("mutations are all detected and logged", "[checks]") {
  auto s = spec("mutation", {}, 4);
  s.mutations = 10;
  const auto r = run_check(s, false);
  REQUIRE(r.pass);
  const auto& log = r.details.at("mutations");
  REQUIRE(log.size() == 10);
  for (const auto& m : log) {
    CHECK(m.at("detected") == true);
    CHECK(m.contains("witness"));
  }
  s.seed = 1;
  const auto other = run_check(s, false);
  CHECK(other.pass);
  CHECK(other.details.at("mutations") != log);
}

TEST_CASE("suites are deterministic in order and content", "[checks]") {
  std::vector<CheckSpec> specs{spec("fm", {1, 1}, 3), spec("ybe", {1, 1, 1}), spec("catalan", {}),
                               spec("k_consistency", {2}, 3), spec("band", {2, 2})};
  const auto serial = run_suite(specs, 1, false);
  const auto parallel = run_suite(specs, 4, false);
  REQUIRE(serial.size() == specs.size());
  CHECK(serial == parallel);
  for (std::size_t i = 0; i < specs.size(); ++i) CHECK(serial[i].check == specs[i].check);
}

TEST_CASE("acceptance suite covers ten criteria", "[checks]") {
  const auto items = acceptance_suite();
  REQUIRE(items.size() == 10);
  for (int i = 0; i < 10; ++i) {
    CHECK(items[static_cast<std::size_t>(i)].criterion == i + 1);
    CHECK_FALSE(items[static_cast<std::size_t>(i)].specs.empty());
    for (const auto& s : items[static_cast<std::size_t>(i)].specs) CHECK_NOTHROW(validate(s));
  }
  for (const auto& s : items[8].specs) CHECK(s.backend == Backend::numeric);
  std::size_t total = 0;
  for (const auto& it : items) total += it.specs.size();
  CHECK(default_specs().size() == total);
}
