#include "umbra/oracles.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "umbra/format.hpp"
#include "umbra/polynomials.hpp"
#include "umbra/series.hpp"
#include "umbra/special_functions.hpp"

namespace umbra {

namespace {

using Cplx = std::complex<double>;

Cplx ipow(Cplx w, int n) {
  Cplx r = 1.0;
  while (n > 0) {
    if (n & 1) r *= w;
    w *= w;
    n >>= 1;
  }
  return r;
}

double log_cosh_real(double z) {
  z = std::fabs(z);
  if (z > 20.0) return z - kLog2 + std::log1p(std::exp(-2.0 * z));
  return std::log(std::cosh(z));
}

double factorial_d(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// Core [0, R] plus exponential-tail chunks until the increments vanish.
// g is the already +-u folded integrand.
template <typename G>
Cplx integrate_half_axis(G&& g, const QuadratureSpec& q, bool ts_core) {
  const double r0 = std::max(4.0, q.truncation_radius);
  Cplx total;
  if (ts_core) {
    total = tanh_sinh(g, 0.0, r0);
  } else {
    const int panels = std::max(4, q.node_count / 128);
    Cplx coarse{};
    double l1 = 0.0;
    const double w = r0 / panels;
    for (int i = 0; i < panels; ++i) {
      const Cplx p = detail::gl64_panel(g, i * w, (i + 1) * w);
      coarse += p;
      l1 += std::abs(p);
    }
    const double budget = std::max(std::abs(coarse), l1) * 1e-13 + 1e-18;
    total = integrate_adaptive(g, 0.0, r0, panels, budget);
  }
  double r = r0;
  while (r < 48.0) {
    const double budget = 1e-15 * std::max(1.0, std::abs(total));
    const Cplx chunk = integrate_adaptive(g, r, r + 4.0, 4, budget);
    total += chunk;
    r += 4.0;
    if (std::abs(chunk) <= 5e-15 * std::max(1.0, std::abs(total))) break;
  }
  return total;
}

}  // namespace

Cplx integrand_value(const Integrand& h, Cplx w, Cplx u) {
  switch (h.kind) {
    case IntegrandKind::PowerN:
      return ipow(w, h.order);
    case IntegrandKind::InvPowerK:
      return 1.0 / ipow(w, h.order);
    case IntegrandKind::Log:
      return std::log(w);
    case IntegrandKind::LogSinHalfPi:
      return std::log(std::sin(0.5 * kPi * w));
    case IntegrandKind::LogCoshPiL:
      return {log_cosh_real(kPi * u.real()), 0.0};
    case IntegrandKind::RisingFactorialN: {
      Cplx p = 1.0;
      for (int j = 0; j < h.order; ++j) p *= w + static_cast<double>(j);
      return p;
    }
  }
  throw std::logic_error("integrand_value: unknown kind");
}

Cplx expect_quadrature(const UmbraSpec& spec, const Integrand& h,
                       const QuadratureSpec& q) {
  const double d = spec.x - 0.5;
  switch (h.kind) {
    case IntegrandKind::InvPowerK:
      if (h.order < 1) throw std::invalid_argument("expect_quadrature: k must be >= 1");
      if (d == 0.0)
        throw SingularIntegrandError("expect_quadrature: inverse power at x = 1/2");
      break;
    case IntegrandKind::PowerN:
    case IntegrandKind::RisingFactorialN:
      if (h.order < 0) throw std::invalid_argument("expect_quadrature: n must be >= 0");
      break;
    default:
      break;
  }

  if (h.kind == IntegrandKind::InvPowerK) {
    // Contour shifted away from the w = 0 point at u = i(x - 1/2); the
    // factor |w|^{-k} is then bounded by 4^k regardless of |x - 1/2|.
    const double s = d > 0.0 ? -0.25 : 0.25;
    auto g = [&](double t) -> Cplx {
      const Cplx up(t, s);
      const Cplx um(-t, s);
      const Cplx wp(d - s, t);
      const Cplx wm(d - s, -t);
      return integrand_value(h, wp, up) * density_complex(spec.kind, up) +
             integrand_value(h, wm, um) * density_complex(spec.kind, um);
    };
    return integrate_half_axis(g, q, q.scheme == QuadScheme::TanhSinh);
  }

  auto g = [&](double u) -> Cplx {
    const double f = density(spec.kind, u);
    return (integrand_value(h, Cplx(d, u), Cplx(u, 0.0)) +
            integrand_value(h, Cplx(d, -u), Cplx(-u, 0.0))) *
           f;
  };

  bool ts = q.scheme == QuadScheme::TanhSinh;
  // Distance from the u = 0 node to the integrand's log branch point.
  double sing_dist = std::numeric_limits<double>::infinity();
  if (h.kind == IntegrandKind::Log) sing_dist = std::fabs(d);
  if (h.kind == IntegrandKind::LogSinHalfPi)
    sing_dist = std::fabs(std::remainder(d, 2.0));
  if (sing_dist == 0.0) {
    if (!q.singularity_split)
      throw SingularIntegrandError(
          "expect_quadrature: integrable log singularity at u = 0 requires singularity_split");
    ts = true;
  } else if (sing_dist < 0.05 && q.singularity_split) {
    ts = true;
  }
  return integrate_half_axis(g, q, ts);
}

MonteCarloEstimate expect_monte_carlo(const UmbraSpec& spec, const Integrand& h,
                                      const SampleSpec& s) {
  const std::vector<double> draws = sample(spec.kind, s);
  double mean = 0.0;
  double m2 = 0.0;
  std::int64_t n = 0;
  const double re = spec.x - 0.5;
  for (const double latent : draws) {
    const double v = integrand_value(h, Cplx(re, latent), Cplx(latent, 0.0)).real();
    ++n;
    const double delta = v - mean;
    mean += delta / static_cast<double>(n);
    m2 += delta * (v - mean);
  }
  const double var = n > 1 ? m2 / static_cast<double>(n - 1) : 0.0;
  return {mean, std::sqrt(var / static_cast<double>(n)), n};
}

GenFnSeries genfn_series(UmbraKind kind, double x, int order) {
  if (order < 0 || order > 20)
    throw std::out_of_range("genfn_series: order must be in [0, 20]");
  const PowerSeries base =
      PowerSeries::log_one_minus(order).scale(-(x - 1.0)).exp();
  PowerSeries phi(order);
  if (kind == UmbraKind::Bernoulli) {
    PowerSeries m(order);  // -log(1-t)/t
    for (int k = 0; k <= order; ++k) m[k] = 1.0 / (k + 1);
    phi = base.mul(m);
  } else {
    PowerSeries denom(order);  // 1 - t/2
    denom[0] = 1.0;
    if (order >= 1) denom[1] = -0.5;
    phi = base.div(denom);
  }
  GenFnSeries out;
  out.order = order;
  out.coefficients.resize(static_cast<std::size_t>(order) + 1);
  for (int k = 0; k <= order; ++k) out.coefficients[static_cast<std::size_t>(k)] = phi[k];
  return out;
}

double pochhammer_series_oracle(UmbraKind kind, int n, double x) {
  const GenFnSeries s = genfn_series(kind, x, n);
  return factorial_d(n) * s.coefficients[static_cast<std::size_t>(n)];
}

double pochhammer_stirling_oracle(UmbraKind kind, int n, double x) {
  if (n < 0 || n > StirlingTable::instance().n_max())
    throw std::out_of_range("pochhammer_stirling_oracle: n out of table range");
  double acc = 0.0;
  for (int k = 0; k <= n; ++k) {
    const double s = static_cast<double>(stirling_first_unsigned(n, k));
    if (s == 0.0) continue;
    acc += s * (kind == UmbraKind::Bernoulli ? bernoulli_poly(k, x)
                                             : euler_poly(k, x));
  }
  return acc;
}

double bateman_191_rhs(double a, double t) {
  return kPi / (2.0 * a) / std::cosh(kPi * t / (2.0 * a));
}

double bateman_192_rhs(double a, double t) {
  if (t == 0.0) return 1.0 / a;
  return kPi * t / (2.0 * a * a) / std::sinh(kPi * t / (2.0 * a));
}

double prudnikov_26301_rhs(double b) {
  const double s = 0.5 / std::sqrt(b);
  return 2.0 * (log_gamma(0.75 + s) - log_gamma(0.25 + s)) - std::log(s);
}

double prudnikov_26302_rhs(double b, double c) {
  const double d = c / (kPi * std::sqrt(b));
  return 2.0 / c * (std::log(d) - digamma(d) - 0.5 / d);
}

const char* oracle_kind_name(OracleKind k) {
  switch (k) {
    case OracleKind::Quadrature: return "quadrature";
    case OracleKind::MonteCarlo: return "monte_carlo";
    case OracleKind::Series: return "series";
    case OracleKind::StirlingSum: return "stirling_sum";
    case OracleKind::Reference: return "reference";
  }
  return "?";
}

VerificationRecord make_record(std::string identity_id,
                               std::vector<std::pair<std::string, std::string>> inputs,
                               double closed_form, double oracle, OracleKind kind,
                               double tol, double mc_std_err) {
  VerificationRecord r;
  r.identity_id = std::move(identity_id);
  r.inputs = std::move(inputs);
  r.closed_form = closed_form;
  r.oracle = oracle;
  r.oracle_kind = kind;
  r.tol = tol;
  r.mc_std_err = mc_std_err;
  r.abs_err = std::fabs(closed_form - oracle);
  const double denom = std::max(std::fabs(closed_form), std::fabs(oracle));
  r.rel_err = denom > 0.0 ? r.abs_err / denom : 0.0;
  if (!std::isfinite(closed_form) || !std::isfinite(oracle)) {
    r.pass = false;
  } else if (kind == OracleKind::MonteCarlo) {
    r.pass = r.abs_err <= 4.0 * mc_std_err;
  } else {
    r.pass = r.abs_err <= tol * std::max(1.0, denom);
  }
  return r;
}

VerificationRecord check_integral_identity(IntegralIdentityCase kase,
                                           const QuadratureSpec& q) {
  const int panels = std::max(8, q.node_count / 128);
  std::string id;
  std::vector<std::pair<std::string, std::string>> inputs;
  switch (kase.id) {
    case IntegralIdentity::Bateman191: {
      if (kase.a <= 0.0) throw std::domain_error("Bateman 1.9.1 requires a > 0");
      const double z_max = 40.0 / kase.a;
      auto f = [&](double z) { return std::cos(z * kase.t) / std::cosh(kase.a * z); };
      kase.lhs = integrate_adaptive(f, 0.0, z_max, panels, 1e-12);
      kase.rhs = bateman_191_rhs(kase.a, kase.t);
      id = "bateman.1.9.1";
      inputs = {{"a", fmt_g17(kase.a)}, {"t", fmt_g17(kase.t)}};
      break;
    }
    case IntegralIdentity::Bateman192: {
      if (kase.a <= 0.0) throw std::domain_error("Bateman 1.9.2 requires a > 0");
      const double z_max = 30.0 / kase.a;
      auto f = [&](double z) {
        const double s = 1.0 / std::cosh(kase.a * z);
        return s * s * std::cos(z * kase.t);
      };
      kase.lhs = integrate_adaptive(f, 0.0, z_max, panels, 1e-12);
      kase.rhs = bateman_192_rhs(kase.a, kase.t);
      id = "bateman.1.9.2";
      inputs = {{"a", fmt_g17(kase.a)}, {"t", fmt_g17(kase.t)}};
      break;
    }
    case IntegralIdentity::Prudnikov26301: {
      if (kase.b <= 0.0) throw std::domain_error("Prudnikov 2.6.30.1 requires b > 0");
      const double z_max = 14.0;
      auto f = [&](double z) { return std::log1p(kase.b * z * z) / std::cosh(kPi * z); };
      kase.lhs = integrate_adaptive(f, 0.0, z_max, panels, 1e-12);
      kase.rhs = prudnikov_26301_rhs(kase.b);
      id = "prudnikov.2.6.30.1";
      inputs = {{"b", fmt_g17(kase.b)}};
      break;
    }
    case IntegralIdentity::Prudnikov26302: {
      if (kase.b <= 0.0 || kase.c <= 0.0)
        throw std::domain_error("Prudnikov 2.6.30.2 requires b > 0 and c > 0");
      const double z_max = 40.0 / kase.c;
      auto f = [&](double z) {
        const double sh = std::sinh(kase.c * z);
        return std::log1p(kase.b * z * z) / (sh * sh);
      };
      kase.lhs = integrate_adaptive(f, 0.0, z_max, panels, 1e-12);
      kase.rhs = prudnikov_26302_rhs(kase.b, kase.c);
      id = "prudnikov.2.6.30.2";
      inputs = {{"b", fmt_g17(kase.b)}, {"c", fmt_g17(kase.c)}};
      break;
    }
  }
  kase.abs_err = std::fabs(kase.lhs - kase.rhs);
  return make_record(id, std::move(inputs), kase.rhs, kase.lhs,
                     OracleKind::Quadrature, 1e-7);
}

VerificationRecord bisection_identity_check(double b, const QuadratureSpec& q) {
  std::vector<std::pair<std::string, std::string>> inputs{{"b", fmt_g17(b)}};
  if (b < 0.0) throw std::domain_error("bisection_identity_check requires b >= 0");
  if (b == 0.0)
    return make_record("bisection.endpoint", std::move(inputs), 0.0, 0.0,
                       OracleKind::Quadrature, 1e-8);
  const int panels = std::max(8, q.node_count / 128);
  auto f = [&](double z) {
    const double s = 1.0 / std::cosh(kPi * z);
    return std::log1p(b * z * z) * s * s;
  };
  const double lhs = kPi * integrate_adaptive(f, 0.0, 10.0, panels, 1e-13);
  const double rhs =
      kPi * (prudnikov_26302_rhs(b, kPi) - 4.0 * prudnikov_26302_rhs(b, 2.0 * kPi));
  return make_record("bisection.endpoint", std::move(inputs), rhs, lhs,
                     OracleKind::Quadrature, 1e-8);
}

}  // namespace umbra
