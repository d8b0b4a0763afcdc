#include "umbra/closed_forms.hpp"

#include <cmath>

#include "umbra/special_functions.hpp"

namespace umbra {

namespace {

constexpr double kPochhammerGuard = 1e-6;

double factorial_d(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

Branch side_of_half(double x) {
  if (x == 0.5) return Branch::Midpoint;
  return x < 0.5 ? Branch::Left : Branch::Right;
}

// (1/(n+1)) sum_i prod_{j != i} (x - 1 + j), j = 0..n: the telescoped
// polynomial form of the Bernoulli Pochhammer moment.  Valid at every x;
// used inside the guard band where the psi difference is ill-conditioned.
double pochhammer_bernoulli_limit(int n, double x) {
  double total = 0.0;
  for (int i = 0; i <= n; ++i) {
    double p = 1.0;
    for (int j = 0; j <= n; ++j)
      if (j != i) p *= x - 1.0 + j;
    total += p;
  }
  return total / (n + 1);
}

}  // namespace

const char* branch_name(Branch b) {
  switch (b) {
    case Branch::Left: return "Left";
    case Branch::Right: return "Right";
    case Branch::Midpoint: return "Midpoint";
    case Branch::LimitPoint: return "LimitPoint";
  }
  return "?";
}

ClosedFormResult log_moment_bernoulli(double x) {
  const double d = std::fabs(x - 0.5);
  return {digamma(0.5 + d), side_of_half(x), "bernoulli.log_moment"};
}

ClosedFormResult log_moment_euler(double x) {
  const double d = std::fabs(x - 0.5);
  const double v = kLog2 + 2.0 * log_gamma(0.75 + 0.5 * d) -
                   2.0 * log_gamma(0.25 + 0.5 * d);
  return {v, side_of_half(x), "euler.log_moment"};
}

ClosedFormResult inv_moment_bernoulli(int k, double x) {
  if (k < 1) throw std::invalid_argument("inv_moment_bernoulli: k must be >= 1");
  const std::string id = "bernoulli.inv_moment";
  if (x == 0.5) {
    if (k == 1) return {0.0, Branch::Midpoint, id};
    throw DivergentMomentError("inv_moment_bernoulli: divergent at x = 1/2 for k >= 2");
  }
  const double f = factorial_d(k - 1);
  if (x > 0.5) {
    const double sign = (k % 2 == 1) ? 1.0 : -1.0;  // (-1)^{k-1}
    return {sign / f * polygamma(k, x), Branch::Right, id};
  }
  return {-1.0 / f * polygamma(k, 1.0 - x), Branch::Left, id};
}

ClosedFormResult inv_moment_euler(int k, double x) {
  if (k < 1) throw std::invalid_argument("inv_moment_euler: k must be >= 1");
  const std::string id = "euler.inv_moment";
  if (x == 0.5) {
    if (k == 1) return {0.0, Branch::Midpoint, id};
    throw DivergentMomentError("inv_moment_euler: divergent at x = 1/2 for k >= 2");
  }
  auto psi_order = [&](double z) {
    return k == 1 ? digamma(z) : polygamma(k - 1, z);
  };
  const double f = factorial_d(k - 1);
  if (x > 0.5) {
    const double c = std::pow(-0.5, k - 1) / f;
    return {c * (psi_order(0.5 * (x + 1.0)) - psi_order(0.5 * x)), Branch::Right, id};
  }
  const double c = std::pow(0.5, k - 1) / f;
  return {c * (psi_order(0.5 * (1.0 - x)) - psi_order(1.0 - 0.5 * x)),
          Branch::Left, id};
}

ClosedFormResult log_sin_half_pi_bernoulli() {
  return {0.5 - kLog2, Branch::Left, "bernoulli.log_sin_half_pi"};
}

double log_cosh_pi_moment() { return 1.0 - kLog2; }

ClosedFormResult pochhammer_bernoulli(int n, double x) {
  if (n < 0) throw std::invalid_argument("pochhammer_bernoulli: n must be >= 0");
  const std::string id = "bernoulli.pochhammer";
  if (n == 0) return {1.0, Branch::Right, id};
  const double nearest = std::nearbyint(x);
  if (nearest <= 1.0 && std::fabs(x - nearest) < kPochhammerGuard)
    return {pochhammer_bernoulli_limit(n, x), Branch::LimitPoint, id};
  const double v = rising_factorial(x - 1.0, n + 1) / (n + 1) *
                   (digamma(x + n) - digamma(x - 1.0));
  return {v, Branch::Right, id};
}

ClosedFormResult pochhammer_euler(int n, double x) {
  if (n < 0) throw std::invalid_argument("pochhammer_euler: n must be >= 0");
  double sum = 0.0;
  double term = 1.0;  // (x-1)_k 2^k / k!
  for (int k = 0; k <= n; ++k) {
    sum += term;
    term *= (x - 1.0 + k) * 2.0 / (k + 1);
  }
  const double v = factorial_d(n) / std::pow(2.0, n) * sum;
  return {v, Branch::Right, "euler.pochhammer"};
}

}  // namespace umbra
