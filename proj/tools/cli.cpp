#include "cli.hpp"

#include "qshuffle/checks.hpp"
#include "qshuffle/errors.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace qshuffle::cli {

int max_degree() {
  if (const char* env = std::getenv("QSHUFFLE_MAX_DEGREE")) {
    int v = 0;
    const std::string_view s(env);
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec == std::errc() && p == s.data() + s.size() && v >= 0) return v;
  }
  return 8;
}

namespace {

struct VerifyOpts {
  std::string check;
  bool all = false;
  std::string j, j1, j2, j3;
  int degree = 4;
  std::string backend = "exact";
  std::vector<double> q{1.3, 1.7};
  double tol = 1e-8;
  int max_m = 3;
  int max_n = 5;
  int mutations = 10;
  std::uint32_t seed = 20240611;
  int jobs = 1;
  bool no_timing = false;
};

struct DumpOpts {
  std::string matrix;
  std::string j, j1, j2;
  int degree = 4;
  std::string construction = "closed";
  std::string var = "t";
  std::string backend = "exact";
  double q = 1.3;
  int m = 1;
};

struct BenchOpts {
  std::string check = "fm";
  std::string j, j1 = "1/2", j2 = "1/2";
  std::vector<int> degrees{2, 4, 6};
  std::string backend = "exact";
  int repeat = 1;
};

Spin spin_flag(const std::string& flag, const std::string& value) {
  if (value.empty()) throw UsageError(flag + " is required for this check");
  try {
    return Spin::parse(value);
  } catch (const UsageError& e) {
    throw UsageError(flag + ": " + e.what());
  }
}

void degree_guard(int degree) {
  const int max = max_degree();
  if (degree < 0) throw UsageError("--degree: must be non-negative (got " + std::to_string(degree) + ")");
  if (degree > max)
    throw UsageError("--degree: " + std::to_string(degree) + " exceeds the maximum " + std::to_string(max) +
                     " (set QSHUFFLE_MAX_DEGREE to raise it)");
}

std::vector<Spin> spins_for(int count, const std::string& j, const std::string& j1, const std::string& j2,
                            const std::string& j3) {
  if (count == 1) return {spin_flag("--j", j.empty() ? j1 : j)};
  std::vector<Spin> out;
  if (count >= 1) out.push_back(spin_flag("--j1", j1));
  if (count >= 2) out.push_back(spin_flag("--j2", j2));
  if (count >= 3) out.push_back(spin_flag("--j3", j3));
  return out;
}

Backend backend_flag(const std::string& s) {
  try {
    return parse_backend(s);
  } catch (const UsageError& e) {
    throw UsageError(std::string("--backend: ") + e.what());
  }
}

std::vector<CheckSpec> verify_specs(const VerifyOpts& o) {
  const Backend backend = backend_flag(o.backend);
  if (o.all) {
    if (!o.check.empty()) throw UsageError("--all and --check are mutually exclusive");
    return default_specs();
  }
  if (o.check.empty()) throw UsageError("--check: required unless --all is given");
  const CheckInfo* info = nullptr;
  try {
    info = &check_info(o.check);
  } catch (const UsageError& e) {
    throw UsageError(std::string("--check: ") + e.what());
  }
  degree_guard(o.degree);
  CheckSpec s;
  s.check = o.check;
  s.spins = spins_for(info->spins, o.j, o.j1, o.j2, o.j3);
  s.degree = o.degree;
  s.backend = backend;
  s.q_samples = o.q;
  s.tolerance = o.tol;
  s.max_m = o.max_m;
  s.max_n = o.max_n;
  s.mutations = o.mutations;
  s.seed = o.seed;
  validate(s);
  return {s};
}

class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw UsageError("--output: cannot open '" + path + "'");
    }
    os_ = path.empty() ? &fallback : &file_;
  }
  std::ostream& os() { return *os_; }

 private:
  std::ofstream file_;
  std::ostream* os_;
};

int run_verify(const VerifyOpts& o, const std::string& format, const std::string& output, std::ostream& out) {
  const auto specs = verify_specs(o);
  if (o.jobs < 1) throw UsageError("--jobs: must be at least 1");
  const auto reports = run_suite(specs, o.jobs, !o.no_timing);
  bool all = true;
  for (const auto& r : reports) all = all && r.pass;
  Sink sink(output, out);
  if (format == "json") {
    json arr = json::array();
    for (const auto& r : reports) arr.push_back(to_json_value(r));
    sink.os() << json{{"pass", all}, {"reports", arr}}.dump(2) << "\n";
  } else {
    int passed = 0;
    for (const auto& r : reports) {
      sink.os() << report_text(r) << "\n";
      passed += r.pass ? 1 : 0;
    }
    sink.os() << passed << "/" << reports.size() << " checks passed\n";
  }
  for (const auto& r : reports)
    if (r.error && r.error->rfind("internal error", 0) != 0) return 2;
  return all ? 0 : 1;
}

template <class F>
json dump_value(const DumpOpts& o, const F& field, std::string& text) {
  Builder<F> b(field);
  const std::string& m = o.matrix;
  auto one = [&](const std::string& flag, const std::string& v) { return spin_flag(flag, v); };
  auto jj = [&] { return one("--j", o.j.empty() ? o.j1 : o.j); };
  Var var;
  try {
    var = parse_var(o.var);
  } catch (const std::exception& e) {
    throw UsageError(std::string("--var: ") + e.what());
  }
  if (m == "K" || m == "Kbar") {
    degree_guard(o.degree);
    KConstruction how;
    try {
      how = parse_k_construction(o.construction);
    } catch (const UsageError& e) {
      throw UsageError(std::string("--construction: ") + e.what());
    }
    const auto k = m == "K" ? b.K(jj(), o.degree, var, how) : b.Kbar(jj(), o.degree, var, how);
    text = mat_text(k);
    return to_json_value(k);
  }
  if (m == "R") {
    const auto r = b.R(one("--j1", o.j1), one("--j2", o.j2), MonomialArg::of(var));
    text = mat_text(r);
    return to_json_value(r);
  }
  if (m == "Rhat") {
    const auto r = b.Rhat(one("--j1", o.j1), one("--j2", o.j2));
    text = mat_text(r);
    return to_json_value(r);
  }
  if (m == "E" || m == "F" || m == "H") {
    const Spin j = jj();
    const auto r = m == "E" ? b.fusion_E(j) : m == "F" ? b.fusion_F(j) : b.fusion_H(j);
    text = mat_text(r);
    return to_json_value(r);
  }
  if (m == "D") {
    const auto r = b.gauge_D(jj());
    text = mat_text(r);
    return to_json_value(r);
  }
  if (m == "delta" || m == "tdelta") {
    if (o.degree < 0 || o.degree > 12) throw UsageError("--degree: delta tables need 0 <= n <= 12");
    json rows = json::array();
    for (int n = 0; n <= o.degree; ++n) {
      auto p = delta_n(o.m, n, field);
      if (m == "tdelta") p = swap_letters(p);
      text += "n=" + std::to_string(n) + ": " + wordpoly_text(p) + "\n";
      rows.push_back({{"n", n}, {"poly", to_json_value(p)}});
    }
    return rows;
  }
  throw UsageError("--matrix: unknown matrix '" + m + "' (expected K, Kbar, R, Rhat, E, F, H, D, delta or tdelta)");
}

int run_dump(const DumpOpts& o, const std::string& format, const std::string& output, std::ostream& out) {
  const Backend backend = backend_flag(o.backend);
  std::string text;
  json value;
  if (backend == Backend::exact) {
    const ExactField field;
    value = dump_value(o, field, text);
  } else {
    if (!(o.q > 1.0)) throw UsageError("--q: must exceed 1");
    const NumericField field(o.q);
    value = dump_value(o, field, text);
  }
  Sink sink(output, out);
  if (format == "json") {
    json params{{"matrix", o.matrix}, {"backend", o.backend}};
    if (!o.j.empty()) params["j"] = o.j;
    if (!o.j1.empty()) params["j1"] = o.j1;
    if (!o.j2.empty()) params["j2"] = o.j2;
    if (o.matrix == "K" || o.matrix == "Kbar") {
      params["degree"] = o.degree;
      params["construction"] = o.construction;
    }
    if (o.matrix == "delta" || o.matrix == "tdelta") {
      params["m"] = o.m;
      params["max_n"] = o.degree;
    }
    if (o.matrix == "K" || o.matrix == "Kbar" || o.matrix == "R") params["var"] = o.var;
    if (backend == Backend::numeric) params["q"] = o.q;
    sink.os() << json{{"params", params}, {"value", value}}.dump(2) << "\n";
  } else {
    sink.os() << text;
  }
  return 0;
}

int run_bench(const BenchOpts& o, const std::string& output, std::ostream& out) {
  const Backend backend = backend_flag(o.backend);
  const CheckInfo* info = nullptr;
  try {
    info = &check_info(o.check);
  } catch (const UsageError& e) {
    throw UsageError(std::string("--check: ") + e.what());
  }
  if (o.repeat < 1) throw UsageError("--repeat: must be at least 1");
  const auto spins = spins_for(info->spins, o.j, o.j1, o.j2, "");
  for (int d : o.degrees) degree_guard(d);
  Sink sink(output, out);
  sink.os() << "check,spins,degree,backend,repeat,seconds,pass\n";
  bool all = true;
  for (int d : o.degrees) {
    CheckSpec s;
    s.check = o.check;
    s.spins = spins;
    s.degree = d;
    s.backend = backend;
    validate(s);
    double best = 0.0;
    bool pass = true;
    for (int rep = 0; rep < o.repeat; ++rep) {
      const auto t0 = std::chrono::steady_clock::now();
      const auto r = run_check(s, false);
      const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      best = rep == 0 ? secs : std::min(best, secs);
      pass = pass && r.pass;
    }
    all = all && pass;
    std::string sp;
    for (const auto& j : spins) sp += (sp.empty() ? "" : ";") + j.str();
    std::ostringstream row;
    row << o.check << "," << sp << "," << d << "," << o.backend << "," << o.repeat << "," << best << ","
        << (pass ? "true" : "false");
    sink.os() << row.str() << "\n";
  }
  return all ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"q-shuffle verification of Freidel-Maillet K-matrices"};
  app.name("qshuffle");
  app.require_subcommand(1);

  std::string format = "text", output;
  auto add_io = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));
    sub->add_option("-o,--output", output, "Write to this file instead of standard output");
  };

  VerifyOpts v;
  auto* verify = app.add_subcommand("verify", "Run verification checks");
  verify->add_option("--check", v.check, "Check name (see 'list')");
  verify->add_flag("--all", v.all, "Run the full acceptance suite");
  verify->add_option("--j", v.j, "Spin for one-spin checks, e.g. 3/2");
  verify->add_option("--j1", v.j1, "First spin");
  verify->add_option("--j2", v.j2, "Second spin");
  verify->add_option("--j3", v.j3, "Third spin");
  verify->add_option("-D,--degree", v.degree, "Truncation degree");
  verify->add_option("--backend", v.backend, "exact or numeric");
  verify->add_option("--q", v.q, "Numeric q samples");
  verify->add_option("--tol", v.tol, "Numeric tolerance on normalized residuals");
  verify->add_option("--max-m", v.max_m, "Largest m for the Delta identities");
  verify->add_option("--max-n", v.max_n, "Largest n for the Catalan check");
  verify->add_option("--mutations", v.mutations, "Number of sign flips for the mutation check");
  verify->add_option("--seed", v.seed, "Seed for the mutation check");
  verify->add_option("--jobs", v.jobs, "Worker threads");
  verify->add_flag("--no-timing", v.no_timing, "Report millis = 0 for reproducible output");
  add_io(verify);

  DumpOpts d;
  auto* dump = app.add_subcommand("dump", "Print a matrix or a Delta table");
  dump->add_option("--matrix", d.matrix, "K, Kbar, R, Rhat, E, F, H, D, delta or tdelta")->required();
  dump->add_option("--j", d.j, "Spin for K, Kbar, E, F, H, D");
  dump->add_option("--j1", d.j1, "First spin for R, Rhat");
  dump->add_option("--j2", d.j2, "Second spin for R, Rhat");
  dump->add_option("-D,--degree", d.degree, "Truncation degree (K, Kbar) or largest n (delta tables)");
  dump->add_option("--construction", d.construction, "closed, alt or fused (K, Kbar)");
  dump->add_option("--var", d.var, "Spectral variable: t, s or k");
  dump->add_option("--m", d.m, "Superscript m for delta tables");
  dump->add_option("--backend", d.backend, "exact or numeric");
  dump->add_option("--q", d.q, "q for the numeric backend");
  add_io(dump);

  BenchOpts b;
  std::string bench_out;
  auto* bench = app.add_subcommand("bench", "Time a check at increasing degrees, CSV output");
  bench->add_option("--check", b.check, "Check name");
  bench->add_option("--j", b.j, "Spin for one-spin checks");
  bench->add_option("--j1", b.j1, "First spin");
  bench->add_option("--j2", b.j2, "Second spin");
  bench->add_option("--degrees", b.degrees, "Degrees to time")->delimiter(',');
  bench->add_option("--backend", b.backend, "exact or numeric");
  bench->add_option("--repeat", b.repeat, "Repetitions per degree, best time reported");
  bench->add_option("-o,--output", bench_out, "Write CSV to this file");

  auto* list = app.add_subcommand("list", "List the available checks");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (verify->parsed()) return run_verify(v, format, output, out);
    if (dump->parsed()) return run_dump(d, format, output, out);
    if (bench->parsed()) return run_bench(b, bench_out, out);
    if (list->parsed()) {
      for (const auto& c : check_catalog()) {
        out << c.name << " (" << c.spins << " spin" << (c.spins == 1 ? "" : "s") << (c.uses_degree ? ", degree" : "")
            << "): " << c.summary << "\n";
      }
      return 0;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace qshuffle::cli
