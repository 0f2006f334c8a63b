#pragma once

#include "qshuffle/constructors.hpp"
#include "qshuffle/serialize.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace qshuffle {

enum class Backend { exact, numeric };
std::string to_string(Backend b);
Backend parse_backend(const std::string& s);

struct CheckSpec {
  std::string check;
  std::vector<Spin> spins;
  int degree = 4;
  Backend backend = Backend::exact;
  std::vector<double> q_samples{1.3, 1.7};
  double tolerance = 1e-8;
  int max_m = 3;       // delta
  int max_n = 5;       // catalan
  int mutations = 10;  // mutation
  std::uint32_t seed = 20240611;
};

struct CheckInfo {
  std::string name;
  int spins = 0;  // number of spin arguments
  bool uses_degree = false;
  std::string summary;
};

const std::vector<CheckInfo>& check_catalog();
// Throws UsageError for unknown names.
const CheckInfo& check_info(const std::string& name);
// Throws UsageError when the spec does not fit its check.
void validate(const CheckSpec& spec);

struct ReportWitness {
  std::string equation;
  int row = 0;  // 1-based
  int col = 0;
  Exp3 exp{0, 0, 0};
  json diff;  // left minus right at that monomial, a serialized WordPoly
  std::string diff_text;
  friend bool operator==(const ReportWitness&, const ReportWitness&) = default;
};

struct Report {
  std::string check;
  json params;
  bool pass = false;
  std::optional<ReportWitness> witness;
  long long millis = 0;
  json details;
  std::optional<std::string> error;
  friend bool operator==(const Report&, const Report&) = default;
};

json to_json_value(const Report& r);
Report report_from_json(const json& j);
// "PASS fm j1=1/2 j2=1/2 D=4 (12 ms)" plus an indented witness line on failure.
std::string report_text(const Report& r);
json spec_params(const CheckSpec& spec);

// Collects equation verdicts for one check run. Exact fields compare
// entrywise; numeric fields compare normalized residuals against tol.
template <class F>
class Judge {
 public:
  using C = typename F::value_type;

  explicit Judge(double tol = 1e-8) : tol_(tol) {}

  bool compare(const std::string& eq, const SMat<C>& lhs, const SMat<C>& rhs);
  bool compare(const std::string& eq, const Mat<C>& lhs, const Mat<C>& rhs);
  bool require(const std::string& eq, bool ok, const std::string& note = "");

  bool pass() const { return pass_; }
  const std::optional<ReportWitness>& witness() const { return witness_; }
  const json& equations() const { return equations_; }
  double max_residual() const { return max_residual_; }
  json& extra() { return extra_; }
  const json& extra() const { return extra_; }

 private:
  void record(const std::string& eq, bool ok, std::optional<double> residual);

  double tol_;
  bool pass_ = true;
  std::optional<ReportWitness> witness_;
  json equations_ = json::array();
  json extra_ = json::object();
  double max_residual_ = 0.0;
};

// The two Freidel-Maillet arrangements for given K^{(j1)}, K^{(j2)} (both in
// t), R^{(j1,j2)}(t) and R-hat. alt = false: R(t/s) K1(s) Rhat K2(t) =
// K2(t) Rhat K1(s) R(t/s); alt = true: K1(s) Rhat K2(t) R(s/t) =
// R(s/t) K2(t) Rhat K1(s).
template <class F>
bool fm_equation(const F& field, const SMat<typename F::value_type>& r_t, const Mat<typename F::value_type>& rhat,
                 const SMat<typename F::value_type>& k1_t, const SMat<typename F::value_type>& k2_t, bool alt,
                 Judge<F>& judge, const std::string& name);

// Runs one check; failures are reported, usage errors land in Report::error.
// With timing = false, millis is always 0 so output is reproducible.
Report run_check(const CheckSpec& spec, bool timing = true);
// Runs specs on up to `jobs` threads; output order follows the input.
std::vector<Report> run_suite(const std::vector<CheckSpec>& specs, int jobs = 1, bool timing = true);

struct AcceptanceItem {
  int criterion = 0;
  std::string title;
  std::vector<CheckSpec> specs;
};
// The desk-scale acceptance suite, criterion by criterion.
std::vector<AcceptanceItem> acceptance_suite();
// Every spec of acceptance_suite() flattened in order.
std::vector<CheckSpec> default_specs();

extern template class Judge<ExactField>;
extern template class Judge<NumericField>;

}  // namespace qshuffle
