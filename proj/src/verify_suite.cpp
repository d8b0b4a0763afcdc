#include "umbra/verify_suite.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "umbra/closed_forms.hpp"
#include "umbra/format.hpp"
#include "umbra/polynomials.hpp"
#include "umbra/special_functions.hpp"

namespace umbra {

namespace {

using Inputs = std::vector<std::pair<std::string, std::string>>;
using Records = std::vector<VerificationRecord>;

constexpr double kGoldenTol = 1e-12;
constexpr double kLadderTol = 1e-6;
constexpr double kImagTol = 1e-10;
constexpr double kSeriesStirlingTol = 1e-10;

Inputs in_kx(UmbraKind kind, double x) {
  return {{"umbra", kind_name(kind)}, {"x", fmt_g17(x)}};
}

Inputs in_kxn(UmbraKind kind, double x, const char* key, int n) {
  return {{"umbra", kind_name(kind)}, {"x", fmt_g17(x)}, {key, std::to_string(n)}};
}

double central_diff(double (*f)(int, double), int k, double x, double h) {
  return (f(k, x + h) - f(k, x - h)) / (2.0 * h);
}

void golden_suite(const SuiteConfig& cfg, Records& out) {
  // log B(1) = -gamma
  {
    const auto cf = log_moment_bernoulli(1.0);
    out.push_back(make_record("golden.log_moment.bernoulli", in_kx(UmbraKind::Bernoulli, 1.0),
                              cf.value, -kEulerGamma, OracleKind::Reference, kGoldenTol));
    const auto qv = expect_quadrature({UmbraKind::Bernoulli, 1.0},
                                      {IntegrandKind::Log}, cfg.quad);
    out.push_back(make_record("golden.log_moment.bernoulli.quadrature",
                              in_kx(UmbraKind::Bernoulli, 1.0), cf.value, qv.real(),
                              OracleKind::Quadrature, cfg.tol));
  }
  // B^{-k}(1) = k zeta(k+1), k = 1..6
  for (int k = 1; k <= 6; ++k) {
    const auto cf = inv_moment_bernoulli(k, 1.0);
    out.push_back(make_record("golden.inv_moment.bernoulli",
                              in_kxn(UmbraKind::Bernoulli, 1.0, "k", k), cf.value,
                              k * zeta_int(k + 1), OracleKind::Reference, kGoldenTol));
    const auto qv = expect_quadrature({UmbraKind::Bernoulli, 1.0},
                                      {IntegrandKind::InvPowerK, k}, cfg.quad);
    out.push_back(make_record("golden.inv_moment.bernoulli.quadrature",
                              in_kxn(UmbraKind::Bernoulli, 1.0, "k", k), cf.value,
                              qv.real(), OracleKind::Quadrature, cfg.tol));
  }
  // log sin(pi B / 2) = 1/2 - log 2
  {
    const auto cf = log_sin_half_pi_bernoulli();
    out.push_back(make_record("golden.log_sin_half_pi", {}, cf.value, 0.5 - kLog2,
                              OracleKind::Reference, kGoldenTol));
  }
  // (B(1))_n = n!/(n+1), n = 0..10, plus the quadrature route
  for (int n = 0; n <= 10; ++n) {
    double nfact = 1.0;
    for (int i = 2; i <= n; ++i) nfact *= i;
    const auto cf = pochhammer_bernoulli(n, 1.0);
    out.push_back(make_record("golden.pochhammer.bernoulli",
                              in_kxn(UmbraKind::Bernoulli, 1.0, "n", n), cf.value,
                              nfact / (n + 1), OracleKind::Reference, kGoldenTol));
    const auto qv = expect_quadrature({UmbraKind::Bernoulli, 1.0},
                                      {IntegrandKind::RisingFactorialN, n}, cfg.quad);
    out.push_back(make_record("golden.pochhammer.bernoulli.quadrature",
                              in_kxn(UmbraKind::Bernoulli, 1.0, "n", n), cf.value,
                              qv.real(), OracleKind::Quadrature, cfg.tol));
  }
}

void moments_suite(const SuiteConfig& cfg, Records& out) {
  for (UmbraKind kind : {UmbraKind::Bernoulli, UmbraKind::Euler}) {
    double im_max = 0.0;
    for (int n = 0; n <= 12; ++n) {
      for (double x : standard_grid()) {
        const double exact =
            kind == UmbraKind::Bernoulli ? bernoulli_poly(n, x) : euler_poly(n, x);
        const auto qv =
            expect_quadrature({kind, x}, {IntegrandKind::PowerN, n}, cfg.quad);
        im_max = std::max(im_max, std::fabs(qv.imag()));
        std::string id = "moment.power.";
        id += kind_name(kind);
        out.push_back(make_record(std::move(id), in_kxn(kind, x, "n", n), exact,
                                  qv.real(), OracleKind::Quadrature, cfg.tol));
      }
    }
    std::string id = "moment.power.imag_max.";
    id += kind_name(kind);
    out.push_back(make_record(std::move(id), {{"umbra", kind_name(kind)}}, 0.0,
                              im_max, OracleKind::Quadrature, kImagTol));
  }
}

double log_closed(int kind_tag, double x) {
  return kind_tag == 0 ? log_moment_bernoulli(x).value : log_moment_euler(x).value;
}

double inv_closed_b(int k, double x) { return inv_moment_bernoulli(k, x).value; }
double inv_closed_e(int k, double x) { return inv_moment_euler(k, x).value; }

void log_suite(const SuiteConfig& cfg, Records& out) {
  for (UmbraKind kind : {UmbraKind::Bernoulli, UmbraKind::Euler}) {
    const int tag = kind == UmbraKind::Bernoulli ? 0 : 1;
    for (double x : standard_grid()) {
      const double cf = log_closed(tag, x);
      const auto qv = expect_quadrature({kind, x}, {IntegrandKind::Log}, cfg.quad);
      std::string id = "log_moment.";
      id += kind_name(kind);
      out.push_back(make_record(std::move(id), in_kx(kind, x), cf, qv.real(),
                                OracleKind::Quadrature, cfg.tol));
      // d/dx log moment = first inverse moment (skip the jump point)
      if (x == 0.5) continue;
      const double h = 1e-5;
      const double fd = (log_closed(tag, x + h) - log_closed(tag, x - h)) / (2.0 * h);
      const double inv1 = kind == UmbraKind::Bernoulli ? inv_closed_b(1, x)
                                                       : inv_closed_e(1, x);
      std::string lid = "ladder.log_to_inv1.";
      lid += kind_name(kind);
      out.push_back(make_record(std::move(lid), in_kx(kind, x), inv1, fd,
                                OracleKind::Reference, kLadderTol));
    }
  }
}

void invpow_suite(const SuiteConfig& cfg, Records& out) {
  for (UmbraKind kind : {UmbraKind::Bernoulli, UmbraKind::Euler}) {
    auto closed = kind == UmbraKind::Bernoulli ? inv_closed_b : inv_closed_e;
    for (int k = 1; k <= 6; ++k) {
      for (double x : standard_grid()) {
        std::string id = "inv_moment.";
        id += kind_name(kind);
        if (x == 0.5) {
          if (k == 1) {
            // principal value at the midpoint; no quadrature route here
            out.push_back(make_record(id + ".midpoint", in_kxn(kind, x, "k", k),
                                      closed(k, x), 0.0, OracleKind::Reference,
                                      kGoldenTol));
          }
          continue;
        }
        const double cf = closed(k, x);
        const auto qv =
            expect_quadrature({kind, x}, {IntegrandKind::InvPowerK, k}, cfg.quad);
        out.push_back(make_record(std::move(id), in_kxn(kind, x, "k", k), cf,
                                  qv.real(), OracleKind::Quadrature, cfg.tol));
      }
    }
    // d/dx E w^{-k} = -k E w^{-(k+1)}
    for (int k = 1; k <= 5; ++k) {
      for (double x : standard_grid()) {
        if (x == 0.5) continue;
        const double fd = central_diff(closed, k, x, 1e-5);
        const double rhs = -k * closed(k + 1, x);
        std::string id = "ladder.inv_moment.";
        id += kind_name(kind);
        out.push_back(make_record(std::move(id), in_kxn(kind, x, "k", k), rhs, fd,
                                  OracleKind::Reference, kLadderTol));
      }
    }
  }
}

void logsin_suite(const SuiteConfig& cfg, Records& out) {
  const auto cf = log_sin_half_pi_bernoulli();
  const double intermediate = log_cosh_pi_moment();
  out.push_back(make_record("log_sin_half_pi", {}, cf.value, 0.5 - kLog2,
                            OracleKind::Reference, kGoldenTol));
  out.push_back(make_record("log_cosh_pi", {}, intermediate, 1.0 - kLog2,
                            OracleKind::Reference, kGoldenTol));
  // final = -log2/2 + intermediate/2
  out.push_back(make_record("log_sin_half_pi.composition", {}, cf.value,
                            -0.5 * kLog2 + 0.5 * intermediate, OracleKind::Reference,
                            kGoldenTol));

  const UmbraSpec at_zero{UmbraKind::Bernoulli, 0.0};
  const auto q_sin = expect_quadrature(at_zero, {IntegrandKind::LogSinHalfPi}, cfg.quad);
  out.push_back(make_record("log_sin_half_pi.quadrature", {}, cf.value, q_sin.real(),
                            OracleKind::Quadrature, cfg.tol));
  const auto q_cosh = expect_quadrature(at_zero, {IntegrandKind::LogCoshPiL}, cfg.quad);
  out.push_back(make_record("log_cosh_pi.quadrature", {}, intermediate, q_cosh.real(),
                            OracleKind::Quadrature, cfg.tol));

  SampleSpec mc;
  mc.count = cfg.mc_samples;
  mc.construction = SampleConstruction::UniformLogit;
  mc.seed = split_seed(cfg.seed, 101);
  const auto est_sin = expect_monte_carlo(at_zero, {IntegrandKind::LogSinHalfPi}, mc);
  out.push_back(make_record("log_sin_half_pi.monte_carlo",
                            {{"samples", std::to_string(mc.count)}}, cf.value,
                            est_sin.estimate, OracleKind::MonteCarlo,
                            4.0 * est_sin.std_err, est_sin.std_err));
  out.push_back(make_record("log_sin_half_pi.monte_carlo.std_err", {}, 0.0,
                            est_sin.std_err, OracleKind::Reference, 2e-3));

  mc.seed = split_seed(cfg.seed, 102);
  const auto est_cosh = expect_monte_carlo(at_zero, {IntegrandKind::LogCoshPiL}, mc);
  out.push_back(make_record("log_cosh_pi.monte_carlo",
                            {{"samples", std::to_string(mc.count)}}, intermediate,
                            est_cosh.estimate, OracleKind::MonteCarlo,
                            4.0 * est_cosh.std_err, est_cosh.std_err));
  out.push_back(make_record("log_cosh_pi.monte_carlo.std_err", {}, 0.0,
                            est_cosh.std_err, OracleKind::Reference, 2e-3));
}

void pochhammer_suite(const SuiteConfig& cfg, Records& out) {
  std::vector<double> grid = standard_grid();
  grid.push_back(-1.0);  // removable point not already on the grid
  for (UmbraKind kind : {UmbraKind::Bernoulli, UmbraKind::Euler}) {
    for (int n = 0; n <= 10; ++n) {
      for (double x : grid) {
        const double closed = kind == UmbraKind::Bernoulli
                                  ? pochhammer_bernoulli(n, x).value
                                  : pochhammer_euler(n, x).value;
        const double series = pochhammer_series_oracle(kind, n, x);
        const double stirl = pochhammer_stirling_oracle(kind, n, x);
        const std::string base = std::string("pochhammer.") + kind_name(kind);
        out.push_back(make_record(base + ".closed_vs_series", in_kxn(kind, x, "n", n),
                                  closed, series, OracleKind::Series, cfg.tol));
        out.push_back(make_record(base + ".closed_vs_stirling", in_kxn(kind, x, "n", n),
                                  closed, stirl, OracleKind::StirlingSum, cfg.tol));
        out.push_back(make_record(base + ".series_vs_stirling", in_kxn(kind, x, "n", n),
                                  series, stirl, OracleKind::StirlingSum,
                                  kSeriesStirlingTol));
      }
    }
  }
}

void integrals_suite(const SuiteConfig& cfg, Records& out) {
  for (double t : {0.5, 1.0, 2.0, 5.0}) {
    IntegralIdentityCase c191{IntegralIdentity::Bateman191};
    c191.a = kPi;
    c191.t = t;
    out.push_back(check_integral_identity(c191, cfg.quad));
    IntegralIdentityCase c192{IntegralIdentity::Bateman192};
    c192.a = kPi;
    c192.t = t;
    out.push_back(check_integral_identity(c192, cfg.quad));
  }
  for (double b : {0.25, 1.0, 4.0}) {
    for (double c : {kPi, 2.0 * kPi}) {
      IntegralIdentityCase kase{IntegralIdentity::Prudnikov26302};
      kase.b = b;
      kase.c = c;
      out.push_back(check_integral_identity(kase, cfg.quad));
    }
    IntegralIdentityCase kase{IntegralIdentity::Prudnikov26301};
    kase.b = b;
    out.push_back(check_integral_identity(kase, cfg.quad));
    out.push_back(bisection_identity_check(b, cfg.quad));
  }
}

}  // namespace

const std::vector<double>& standard_grid() {
  static const std::vector<double> grid = {-2.0, -0.75, 0.0,       0.25, 0.5 - 1e-3,
                                           0.5,  0.5 + 1e-3, 1.0,  1.5,  3.0};
  return grid;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "golden", "moments", "log", "invpow", "logsin", "pochhammer", "integrals"};
  return names;
}

std::vector<VerificationRecord> run_verification(const SuiteConfig& config) {
  const auto& names = suite_names();
  if (config.suite != "all" &&
      std::find(names.begin(), names.end(), config.suite) == names.end())
    throw std::invalid_argument("run_verification: unknown suite '" + config.suite + "'");

  auto selected = [&](const char* name) {
    return config.suite == "all" || config.suite == name;
  };
  Records out;
  if (selected("golden")) golden_suite(config, out);
  if (selected("moments")) moments_suite(config, out);
  if (selected("log")) log_suite(config, out);
  if (selected("invpow")) invpow_suite(config, out);
  if (selected("logsin")) logsin_suite(config, out);
  if (selected("pochhammer")) pochhammer_suite(config, out);
  if (selected("integrals")) integrals_suite(config, out);
  return out;
}

}  // namespace umbra
