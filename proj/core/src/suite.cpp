#include "qshuffle/checks.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace qshuffle {

std::vector<Report> run_suite(const std::vector<CheckSpec>& specs, int jobs, bool timing) {
  std::vector<Report> out(specs.size());
  const int workers = std::max(1, std::min<int>(jobs, static_cast<int>(specs.size())));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < specs.size(); i = next++) out[i] = run_check(specs[i], timing);
  };
  if (workers == 1) {
    work();
    return out;
  }
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) pool.emplace_back(work);
  for (auto& t : pool) t.join();
  return out;
}

namespace {

CheckSpec make(std::string check, std::vector<int> twice, int degree = 4) {
  CheckSpec s;
  s.check = std::move(check);
  for (int t : twice) s.spins.push_back(Spin::from_twice(t));
  s.degree = degree;
  return s;
}

const std::vector<std::pair<int, int>> kFmPairs{{1, 2}, {2, 1}, {2, 2}, {1, 3}, {3, 1}, {2, 3}};

}  // namespace

std::vector<AcceptanceItem> acceptance_suite() {
  std::vector<AcceptanceItem> items;

  items.push_back({1, "spin-1/2 Freidel-Maillet equation through degree 6", {make("fm", {1, 1}, 6)}});

  {
    AcceptanceItem it{2, "mixed-spin Freidel-Maillet equations through degree 6", {}};
    for (auto [a, b] : kFmPairs) it.specs.push_back(make("fm", {a, b}, 6));
    items.push_back(std::move(it));
  }
  {
    AcceptanceItem it{3, "alternative Freidel-Maillet arrangement through degree 4", {}};
    it.specs.push_back(make("fm_alt", {1, 1}, 4));
    for (auto [a, b] : kFmPairs) it.specs.push_back(make("fm_alt", {a, b}, 4));
    items.push_back(std::move(it));
  }
  {
    AcceptanceItem it{4, "closed, alternative and fused K-matrices agree through degree 8", {}};
    for (int J = 1; J <= 3; ++J) it.specs.push_back(make("k_consistency", {J}, 8));
    items.push_back(std::move(it));
  }
  {
    AcceptanceItem it{5, "R-matrix closed form, fusion recursions and band structure", {}};
    for (int J = 1; J <= 4; ++J) it.specs.push_back(make("r_closed", {J}));
    for (int a = 1; a <= 4; ++a)
      for (int b = 1; a + b <= 5; ++b) it.specs.push_back(make("r_fusion", {a, b}));
    for (int a = 1; a <= 3; ++a)
      for (int b = 1; b <= 3; ++b) it.specs.push_back(make("band", {a, b}));
    items.push_back(std::move(it));
  }
  {
    AcceptanceItem it{6, "fusion identities, unitarity, Yang-Baxter and R-hat structure", {}};
    for (int J = 1; J <= 3; ++J) it.specs.push_back(make("ef", {J}));
    for (int a = 1; a <= 3; ++a)
      for (int b = 1; a + b <= 4; ++b) {
        it.specs.push_back(make("unitarity", {a, b}));
        it.specs.push_back(make("limit", {a, b}));
      }
    const std::vector<std::vector<int>> triples{{1, 1, 1}, {2, 1, 1}, {1, 2, 1}, {1, 1, 2}};
    for (const auto& t : triples) {
      it.specs.push_back(make("ybe", t));
      it.specs.push_back(make("mixed", t));
    }
    for (int a = 1; a <= 4; ++a)
      for (int b = 1; a + b <= 5; ++b) it.specs.push_back(make("rhat_fusion", {a, b}));
    for (int a = 1; a <= 4; ++a)
      for (int b = 1; b <= 4; ++b) it.specs.push_back(make("rhat_block", {a, b}));
    items.push_back(std::move(it));
  }
  {
    AcceptanceItem it{7, "Catalan words, Delta identities and q-Serre relations", {}};
    it.specs.push_back(make("catalan", {}));
    auto d = make("delta", {}, 8);
    d.max_m = 3;
    it.specs.push_back(d);
    it.specs.push_back(make("serre", {}));
    items.push_back(std::move(it));
  }
  {
    AcceptanceItem it{8, "gauge symmetry of R and the gauged K-matrices", {}};
    for (int a = 1; a <= 3; ++a)
      for (int b = 1; b <= 3; ++b) it.specs.push_back(make("ddr", {a, b}));
    it.specs.push_back(make("gauge", {1, 1}, 4));
    it.specs.push_back(make("gauge", {1, 2}, 4));
    it.specs.push_back(make("gauge_k1", {1, 1}, 6));
    for (auto [a, b] : kFmPairs) it.specs.push_back(make("gauge_k1", {a, b}, 6));
    items.push_back(std::move(it));
  }
  {
    AcceptanceItem it{9, "numeric backend reproduces criteria 1-8", {}};
    for (const auto& prev : items)
      for (auto s : prev.specs) {
        s.backend = Backend::numeric;
        it.specs.push_back(std::move(s));
      }
    items.push_back(std::move(it));
  }
  {
    auto m = make("mutation", {}, 4);
    m.mutations = 10;
    items.push_back({10, "single sign flips in K^{(1/2)} are detected", {m}});
  }
  return items;
}

std::vector<CheckSpec> default_specs() {
  std::vector<CheckSpec> out;
  for (const auto& it : acceptance_suite())
    for (const auto& s : it.specs) out.push_back(s);
  return out;
}

}  // namespace qshuffle
