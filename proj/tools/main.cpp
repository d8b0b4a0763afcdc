// Batch front end: evaluate closed forms, run the verification suite,
// tabulate over grids, and dump raw latent-variable draws.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "umbra/closed_forms.hpp"
#include "umbra/format.hpp"
#include "umbra/report.hpp"
#include "umbra/verify_suite.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitRowError = 2;
constexpr int kExitIo = 3;

const std::map<std::string, umbra::UmbraKind> kUmbraMap = {
    {"bernoulli", umbra::UmbraKind::Bernoulli},
    {"euler", umbra::UmbraKind::Euler},
};

const std::map<std::string, umbra::ReportFormat> kFormatMap = {
    {"json", umbra::ReportFormat::JSON},
    {"csv", umbra::ReportFormat::CSV},
    {"text", umbra::ReportFormat::PrettyText},
};

const std::map<std::string, umbra::SampleConstruction> kConstructionMap = {
    {"uniform_logit", umbra::SampleConstruction::UniformLogit},
    {"exponential_ratio", umbra::SampleConstruction::ExponentialRatio},
    {"cauchy_log", umbra::SampleConstruction::CauchyLog},
    {"gaussian_log_ratio", umbra::SampleConstruction::GaussianLogRatio},
};

std::uint64_t env_default_seed() {
  if (const char* env = std::getenv("UMBRA_SEED")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0') return v;
  }
  return 1;
}

// "start:stop:step", endpoints inclusive within half a step.
std::vector<double> parse_range(const std::string& spec) {
  double start = 0, stop = 0, step = 0;
  if (std::sscanf(spec.c_str(), "%lf:%lf:%lf", &start, &stop, &step) != 3)
    throw CLI::ValidationError("--x-range", "expected start:stop:step");
  if (step <= 0) throw CLI::ValidationError("--x-range", "step must be > 0");
  if (stop < start) throw CLI::ValidationError("--x-range", "stop must be >= start");
  std::vector<double> xs;
  for (int i = 0;; ++i) {
    const double v = start + i * step;
    if (v > stop + 0.5 * step) break;
    xs.push_back(v);
  }
  return xs;
}

struct FuncSel {
  std::string func;                        // log | invpow | pochhammer | logsin | logcosh
  std::optional<umbra::UmbraKind> forced;  // set by combined aliases like logB
};

FuncSel resolve_func(const std::string& name) {
  static const std::map<std::string, FuncSel> aliases = {
      {"log", {"log", {}}},
      {"invpow", {"invpow", {}}},
      {"pochhammer", {"pochhammer", {}}},
      {"logsin", {"logsin", umbra::UmbraKind::Bernoulli}},
      {"logcosh", {"logcosh", umbra::UmbraKind::Bernoulli}},
      {"logB", {"log", umbra::UmbraKind::Bernoulli}},
      {"logE", {"log", umbra::UmbraKind::Euler}},
      {"invpowB", {"invpow", umbra::UmbraKind::Bernoulli}},
      {"invpowE", {"invpow", umbra::UmbraKind::Euler}},
      {"pochB", {"pochhammer", umbra::UmbraKind::Bernoulli}},
      {"pochE", {"pochhammer", umbra::UmbraKind::Euler}},
  };
  const auto it = aliases.find(name);
  if (it == aliases.end())
    throw CLI::ValidationError("--func", "unknown function '" + name + "'");
  return it->second;
}

struct EvalOptions {
  std::string func;
  std::string umbra_name;
  std::vector<double> xs;
  std::string x_range;
  int k = 1;
  int n = 0;
  bool check = false;
  std::string out;
  std::string format_name;
};

umbra::ClosedFormResult eval_closed(const std::string& func, umbra::UmbraKind kind,
                                    double x, int k, int n) {
  const bool b = kind == umbra::UmbraKind::Bernoulli;
  if (func == "log")
    return b ? umbra::log_moment_bernoulli(x) : umbra::log_moment_euler(x);
  if (func == "invpow")
    return b ? umbra::inv_moment_bernoulli(k, x) : umbra::inv_moment_euler(k, x);
  if (func == "pochhammer")
    return b ? umbra::pochhammer_bernoulli(n, x) : umbra::pochhammer_euler(n, x);
  throw std::logic_error("eval_closed: unexpected func");
}

double eval_oracle(const std::string& func, umbra::UmbraKind kind, double x, int k,
                   int n, const umbra::QuadratureSpec& quad) {
  umbra::Integrand h{umbra::IntegrandKind::Log, 0};
  if (func == "invpow") h = {umbra::IntegrandKind::InvPowerK, k};
  if (func == "pochhammer") h = {umbra::IntegrandKind::RisingFactorialN, n};
  if (func == "logsin") h = {umbra::IntegrandKind::LogSinHalfPi, 0};
  if (func == "logcosh") h = {umbra::IntegrandKind::LogCoshPiL, 0};
  return umbra::expect_quadrature({kind, x}, h, quad).real();
}

std::vector<umbra::EvalRow> build_rows(const EvalOptions& opt, umbra::UmbraKind kind,
                                       const std::string& func) {
  umbra::QuadratureSpec quad;
  std::vector<double> xs = opt.xs;
  if (!opt.x_range.empty()) {
    const auto more = parse_range(opt.x_range);
    xs.insert(xs.end(), more.begin(), more.end());
  }
  const bool needs_x = func == "log" || func == "invpow" || func == "pochhammer";
  if (needs_x && xs.empty())
    throw CLI::ValidationError("--x", "function '" + func + "' needs --x or --x-range");
  if (!needs_x) xs = {0.0};  // logsin / logcosh are fixed identities at x = 0

  std::vector<umbra::EvalRow> rows;
  for (double x : xs) {
    umbra::EvalRow row;
    row.inputs.emplace_back("func", func);
    row.inputs.emplace_back("umbra", umbra::kind_name(kind));
    if (needs_x) row.inputs.emplace_back("x", umbra::fmt_g17(x));
    if (func == "invpow") row.inputs.emplace_back("k", std::to_string(opt.k));
    if (func == "pochhammer") row.inputs.emplace_back("n", std::to_string(opt.n));
    try {
      if (func == "logsin") {
        const auto r = umbra::log_sin_half_pi_bernoulli();
        row.value = r.value;
        row.branch = umbra::branch_name(r.branch);
      } else if (func == "logcosh") {
        row.value = umbra::log_cosh_pi_moment();
      } else {
        const auto r = eval_closed(func, kind, x, opt.k, opt.n);
        row.value = r.value;
        row.branch = umbra::branch_name(r.branch);
      }
      row.has_value = true;
      if (opt.check) {
        row.oracle = eval_oracle(func, kind, x, opt.k, opt.n, quad);
        row.abs_err = std::fabs(row.value - row.oracle);
        row.has_oracle = true;
      }
    } catch (const std::exception& e) {
      row.error = e.what();
      row.has_value = false;
      row.has_oracle = false;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

int write_out(const umbra::ReportDocument& doc, umbra::ReportFormat fmt,
              const std::string& out_path) {
  const std::string payload = umbra::render(doc, fmt);
  if (out_path.empty()) {
    std::cout << payload;
    return kExitOk;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file) {
    std::cerr << "error: cannot open '" << out_path << "' for writing\n";
    return kExitIo;
  }
  file << payload;
  file.flush();
  if (!file) {
    std::cerr << "error: short write to '" << out_path << "'\n";
    return kExitIo;
  }
  return kExitOk;
}

umbra::ReportFormat pick_format(const std::string& name, umbra::ReportFormat fallback) {
  if (name.empty()) return fallback;
  return kFormatMap.at(name);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Nonlinear moments of the Bernoulli and Euler umbrae: closed forms "
               "with quadrature, Monte Carlo and series verification"};
  app.require_subcommand(1);
  const std::uint64_t default_seed = env_default_seed();

  // ---- eval ----
  EvalOptions ev;
  auto* eval_cmd = app.add_subcommand("eval", "evaluate a closed form at points");
  eval_cmd->add_option("--func", ev.func, "log|invpow|pochhammer|logsin|logcosh or logB/invpowE/... aliases")->required();
  eval_cmd->add_option("--umbra", ev.umbra_name, "bernoulli|euler")
      ->check(CLI::IsMember({"bernoulli", "euler"}));
  eval_cmd->add_option("--x", ev.xs, "evaluation point(s)");
  eval_cmd->add_option("--x-range", ev.x_range, "grid start:stop:step (inclusive)");
  eval_cmd->add_option("--k", ev.k, "inverse-power order (invpow)")->check(CLI::PositiveNumber);
  eval_cmd->add_option("--n", ev.n, "rising-factorial order (pochhammer)")
      ->check(CLI::NonNegativeNumber);
  eval_cmd->add_flag("--check", ev.check, "cross-check each row against the quadrature oracle");
  eval_cmd->add_option("--out", ev.out, "output file (stdout if absent)");
  eval_cmd->add_option("--format", ev.format_name, "json|csv|text")
      ->check(CLI::IsMember({"json", "csv", "text"}));

  // ---- table ----
  EvalOptions tb;
  auto* table_cmd = app.add_subcommand("table", "tabulate a closed form over an x grid");
  table_cmd->add_option("--func", tb.func, "function (same names as eval)")->required();
  table_cmd->add_option("--umbra", tb.umbra_name, "bernoulli|euler")
      ->check(CLI::IsMember({"bernoulli", "euler"}));
  table_cmd->add_option("--x-range", tb.x_range, "grid start:stop:step (inclusive)");
  table_cmd->add_option("--x", tb.xs, "extra explicit points");
  table_cmd->add_option("--k", tb.k, "inverse-power order")->check(CLI::PositiveNumber);
  table_cmd->add_option("--n", tb.n, "rising-factorial order")->check(CLI::NonNegativeNumber);
  table_cmd->add_flag("--check", tb.check, "cross-check rows against quadrature");
  table_cmd->add_option("--out", tb.out, "output file (stdout if absent)");
  table_cmd->add_option("--format", tb.format_name, "json|csv|text")
      ->check(CLI::IsMember({"json", "csv", "text"}));

  // ---- verify ----
  umbra::SuiteConfig vc;
  std::string verify_out, verify_format;
  auto* verify_cmd = app.add_subcommand("verify", "run the identity verification suite");
  verify_cmd->add_option("--suite", vc.suite,
                         "all|golden|moments|log|invpow|logsin|pochhammer|integrals");
  verify_cmd->add_option("--tol", vc.tol, "quadrature-vs-closed-form tolerance")
      ->check(CLI::PositiveNumber);
  vc.seed = default_seed;
  verify_cmd->add_option("--seed", vc.seed, "master seed (env UMBRA_SEED as default)");
  verify_cmd->add_option("--samples", vc.mc_samples, "Monte Carlo sample count")
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--out", verify_out, "report file (stdout if absent)");
  verify_cmd->add_option("--format", verify_format, "json|csv|text")
      ->check(CLI::IsMember({"json", "csv", "text"}));

  // ---- sample ----
  std::string sm_umbra, sm_construction, sm_out, sm_format;
  std::int64_t sm_count = 10;
  std::uint64_t sm_seed = default_seed;
  auto* sample_cmd = app.add_subcommand("sample", "draw latent-variable samples");
  sample_cmd->add_option("--umbra", sm_umbra, "bernoulli|euler")
      ->check(CLI::IsMember({"bernoulli", "euler"}))
      ->required();
  sample_cmd->add_option("--samples", sm_count, "number of draws")->check(CLI::PositiveNumber);
  sample_cmd->add_option("--seed", sm_seed, "seed (env UMBRA_SEED as default)");
  sample_cmd->add_option("--construction", sm_construction,
                         "uniform_logit|exponential_ratio|cauchy_log|gaussian_log_ratio");
  sample_cmd->add_option("--out", sm_out, "output file (stdout if absent)");
  sample_cmd->add_option("--format", sm_format, "json|csv|text")
      ->check(CLI::IsMember({"json", "csv", "text"}));

  CLI11_PARSE(app, argc, argv);

  const auto t0 = std::chrono::steady_clock::now();
  int exit_code = kExitOk;
  try {
    umbra::ReportDocument doc;
    if (*eval_cmd || *table_cmd) {
      const EvalOptions& opt = *eval_cmd ? ev : tb;
      const FuncSel sel = resolve_func(opt.func);
      umbra::UmbraKind kind;
      if (sel.forced) {
        kind = *sel.forced;
        if (!opt.umbra_name.empty() && kUmbraMap.at(opt.umbra_name) != kind)
          throw CLI::ValidationError("--umbra", "conflicts with function alias");
      } else {
        if (opt.umbra_name.empty())
          throw CLI::ValidationError("--umbra", "required for function '" + sel.func + "'");
        kind = kUmbraMap.at(opt.umbra_name);
      }
      doc.config_echo = {{"command", *eval_cmd ? "eval" : "table"},
                         {"func", sel.func},
                         {"umbra", umbra::kind_name(kind)}};
      doc.rows = build_rows(opt, kind, sel.func);
      doc.summary = umbra::summarize_rows(doc.rows);
      const auto fmt = pick_format(opt.format_name, *eval_cmd
                                                        ? umbra::ReportFormat::PrettyText
                                                        : umbra::ReportFormat::CSV);
      exit_code = write_out(doc, fmt, opt.out);
      if (exit_code == kExitOk && doc.summary.fail > 0) exit_code = kExitRowError;
    } else if (*verify_cmd) {
      doc.config_echo = {{"command", "verify"},
                         {"suite", vc.suite},
                         {"tol", umbra::fmt_g17(vc.tol)},
                         {"seed", std::to_string(vc.seed)},
                         {"samples", std::to_string(vc.mc_samples)}};
      doc.records = umbra::run_verification(vc);
      doc.summary = umbra::summarize_records(doc.records);
      const auto fmt = pick_format(verify_format, umbra::ReportFormat::JSON);
      exit_code = write_out(doc, fmt, verify_out);
      if (exit_code == kExitOk && doc.summary.fail > 0) exit_code = kExitVerifyFail;
    } else if (*sample_cmd) {
      const umbra::UmbraKind kind = kUmbraMap.at(sm_umbra);
      umbra::SampleSpec spec;
      spec.count = sm_count;
      spec.seed = sm_seed;
      spec.construction = sm_construction.empty()
                              ? umbra::default_construction(kind)
                              : kConstructionMap.at(sm_construction);
      const std::vector<double> draws = umbra::sample(kind, spec);
      doc.config_echo = {{"command", "sample"},
                         {"umbra", umbra::kind_name(kind)},
                         {"samples", std::to_string(sm_count)},
                         {"seed", std::to_string(sm_seed)}};
      doc.rows.reserve(draws.size());
      for (std::size_t i = 0; i < draws.size(); ++i) {
        umbra::EvalRow row;
        row.inputs = {{"func", "sample"},
                      {"umbra", umbra::kind_name(kind)},
                      {"index", std::to_string(i)}};
        row.value = draws[i];
        row.has_value = true;
        doc.rows.push_back(std::move(row));
      }
      doc.summary = umbra::summarize_rows(doc.rows);
      const auto fmt = pick_format(sm_format, umbra::ReportFormat::CSV);
      exit_code = write_out(doc, fmt, sm_out);
    }
    const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
    std::fprintf(stderr, "wall_time_seconds=%.3f\n", dt.count());
  } catch (const CLI::Error& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitRowError;
  }
  return exit_code;
}
