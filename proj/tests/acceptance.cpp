// Runs the acceptance criteria and prints one PASS/FAIL line per criterion.
#include "qshuffle/checks.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <thread>

using namespace qshuffle;

int main() {
  const int jobs = std::max(1u, std::thread::hardware_concurrency());
  bool all = true;
  const auto start = std::chrono::steady_clock::now();
  for (const auto& item : acceptance_suite()) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto reports = run_suite(item.specs, jobs, true);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    int passed = 0;
    for (const auto& r : reports) passed += r.pass ? 1 : 0;
    const bool ok = passed == static_cast<int>(reports.size());
    all = all && ok;
    std::printf("%s criterion %d: %s (%d/%zu checks, %.2f s)\n", ok ? "PASS" : "FAIL", item.criterion,
                item.title.c_str(), passed, reports.size(), secs);
    for (const auto& r : reports)
      if (!r.pass) std::printf("    %s\n", report_text(r).c_str());
  }
  const double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%s: acceptance suite finished in %.2f s\n", all ? "PASS" : "FAIL", total);
  return all ? 0 : 1;
}
