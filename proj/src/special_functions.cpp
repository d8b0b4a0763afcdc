#include "umbra/special_functions.hpp"

#include <cmath>
#include <limits>

namespace umbra {

namespace {

bool is_nonpositive_integer(double x) {
  return x <= 0.0 && x == std::floor(x);
}

// Lanczos coefficients, g = 7, 9 terms (Godfrey).  Good to ~1e-14 relative
// in double for the shifted argument z >= 0.5.
constexpr double kLanczos[9] = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

constexpr double kHalfLog2Pi = 0.91893853320467274178032973640561764;

// log Gamma(z) for z >= 0.5.
double log_gamma_lanczos(double z) {
  const double zm1 = z - 1.0;
  double s = kLanczos[0];
  for (int i = 1; i < 9; ++i) s += kLanczos[i] / (zm1 + i);
  const double t = zm1 + 7.5;
  return kHalfLog2Pi + (zm1 + 0.5) * std::log(t) - t + std::log(s);
}

// Asymptotic tail of psi: psi(x) ~ log x - 1/(2x) - sum B_{2j}/(2j x^{2j}),
// coefficients B_{2j}/(2j) through B_14.  Used for x >= 12.
constexpr double kDigammaTail[7] = {
    1.0 / 12.0,  -1.0 / 120.0,       1.0 / 252.0, -1.0 / 240.0,
    1.0 / 132.0, -691.0 / 32760.0,   1.0 / 12.0};

constexpr int kDigammaThreshold = 12;

// B_2, B_4, ..., B_16 for the polygamma asymptotic series.
constexpr double kEvenBernoulli[8] = {
    1.0 / 6.0,   -1.0 / 30.0, 1.0 / 42.0,      -1.0 / 30.0,
    5.0 / 66.0,  -691.0 / 2730.0, 7.0 / 6.0,   -3617.0 / 510.0};

constexpr int kPolygammaThreshold = 16;

double digamma_positive(double x) {
  double acc = 0.0;
  while (x < kDigammaThreshold) {
    acc -= 1.0 / x;
    x += 1.0;
  }
  const double inv2 = 1.0 / (x * x);
  double tail = 0.0;
  double p = inv2;
  for (double coeff : kDigammaTail) {
    tail -= coeff * p;
    p *= inv2;
  }
  return acc + std::log(x) - 0.5 / x + tail;
}

// psi^(k)(y) for y >= kPolygammaThreshold.
double polygamma_asymptotic(int k, double y) {
  double fact = 1.0;  // (k-1)!
  for (int i = 2; i < k; ++i) fact *= i;
  const double invy = 1.0 / y;
  double s = fact * std::pow(invy, k) * (1.0 + 0.5 * k * invy);
  // sum_j B_{2j} (2j+k-1)! / (2j)! / y^{2j+k}
  double ratio = fact * k * (k + 1) / 2.0;  // (k+1)!/2! at j=1
  double p = std::pow(invy, k + 2);
  for (int j = 1; j <= 8; ++j) {
    s += kEvenBernoulli[j - 1] * ratio * p;
    ratio *= static_cast<double>(2 * j + k) * (2 * j + k + 1) /
             ((2 * j + 1) * (2 * j + 2));
    p *= invy * invy;
  }
  return ((k % 2 == 0) ? -1.0 : 1.0) * s;
}

// (d/dx)^k cot(pi x) = pi^k Q_k(cot(pi x)) with Q_0 = c and
// Q_{j+1} = -(1 + c^2) Q_j'(c); coefficients kept exactly in doubles.
double cot_derivative(int k, double x) {
  std::vector<double> q{0.0, 1.0};  // Q_0(c) = c
  for (int j = 0; j < k; ++j) {
    std::vector<double> d(q.size() + 1, 0.0);
    for (std::size_t i = 1; i < q.size(); ++i) {
      const double di = q[i] * static_cast<double>(i);
      d[i - 1] -= di;
      d[i + 1] -= di;
    }
    q = std::move(d);
  }
  const double c = 1.0 / tan_pi(x);
  double val = 0.0;
  for (std::size_t i = q.size(); i-- > 0;) val = val * c + q[i];
  return std::pow(kPi, k) * val;
}

}  // namespace

double sin_pi(double x) {
  // Reduce to |r| <= 0.5 with exact integer subtraction, then one sin call.
  const double n = std::nearbyint(x);
  const double r = x - n;
  const double s = std::sin(kPi * r);
  return (std::fmod(n, 2.0) == 0.0) ? s : -s;
}

double tan_pi(double x) {
  const double r = x - std::nearbyint(x);
  return std::tan(kPi * r);
}

double log_gamma(double x) {
  if (x <= 0.0) {
    if (is_nonpositive_integer(x)) throw PoleError("log_gamma: pole at nonpositive integer");
    throw std::domain_error("log_gamma: requires x > 0");
  }
  if (x < 0.5) return log_gamma_lanczos(x + 1.0) - std::log(x);
  return log_gamma_lanczos(x);
}

double gamma_fn(double x) {
  if (is_nonpositive_integer(x)) throw PoleError("gamma_fn: pole at nonpositive integer");
  if (x < 0.5) {
    // Reflection; Gamma(1-x) has argument > 0.5 so no recursion.
    return kPi / (sin_pi(x) * std::exp(log_gamma_lanczos(1.0 - x)));
  }
  return std::exp(log_gamma_lanczos(x));
}

double digamma(double x) {
  if (is_nonpositive_integer(x)) throw PoleError("digamma: pole at nonpositive integer");
  if (x < 0.0) {
    // psi(x) = psi(1-x) - pi/tan(pi x)
    return digamma_positive(1.0 - x) - kPi / tan_pi(x);
  }
  return digamma_positive(x);
}

double polygamma(int k, double x) {
  if (k < 1 || k > 10) throw std::invalid_argument("polygamma: order must be in [1, 10]");
  if (is_nonpositive_integer(x)) throw PoleError("polygamma: pole at nonpositive integer");
  if (x < 0.0) {
    const double refl = polygamma(k, 1.0 - x);
    return ((k % 2 == 0) ? refl : -refl) - kPi * cot_derivative(k, x);
  }
  // sum_{j=0}^{m-1} k!/(x+j)^{k+1}, all terms of one sign, then asymptotic.
  double kfact = 1.0;
  for (int i = 2; i <= k; ++i) kfact *= i;
  double acc = 0.0;
  while (x < kPolygammaThreshold) {
    acc += kfact * std::pow(x, -(k + 1));
    x += 1.0;
  }
  const double sign = (k % 2 == 0) ? -1.0 : 1.0;
  return sign * acc + polygamma_asymptotic(k, x);
}

namespace {

// zeta(m) by direct summation to N = 20 plus the Euler-Maclaurin tail.
double zeta_direct(int m) {
  constexpr int N = 20;
  double s = 0.0;
  for (int n = N - 1; n >= 1; --n) s += std::pow(n, -m);
  const double nm = std::pow(N, -m);
  s += nm * N / (m - 1.0) + 0.5 * nm;
  double rising = static_cast<double>(m);  // (m)_{2j-1}
  double fact = 2.0;                       // (2j)!
  double p = nm / N;
  for (int j = 1; j <= 6; ++j) {
    s += kEvenBernoulli[j - 1] / fact * rising * p;
    rising *= static_cast<double>(m + 2 * j - 1) * (m + 2 * j);
    fact *= static_cast<double>(2 * j + 1) * (2 * j + 2);
    p /= static_cast<double>(N) * N;
  }
  return s;
}

}  // namespace

const SpecialConstantTable& SpecialConstantTable::instance() {
  static const SpecialConstantTable table = [] {
    SpecialConstantTable t;
    t.euler_gamma = kEulerGamma;
    t.log2 = kLog2;
    t.pi = kPi;
    t.m_max = 16;
    t.zeta.assign(t.m_max + 1, 0.0);
    for (int m = 2; m <= t.m_max; ++m) t.zeta[m] = zeta_direct(m);
    return t;
  }();
  return table;
}

double zeta_int(int m) {
  const auto& t = SpecialConstantTable::instance();
  if (m < 2 || m > t.m_max) throw std::out_of_range("zeta_int: m must be in [2, 16]");
  return t.zeta[m];
}

double rising_factorial(double x, int n) {
  if (n < 0) throw std::invalid_argument("rising_factorial: n must be >= 0");
  double p = 1.0;
  for (int j = 0; j < n; ++j) p *= x + j;
  return p;
}

StirlingTable::StirlingTable(int n_max) : n_max_(n_max) {
  if (n_max < 0) throw std::invalid_argument("StirlingTable: n_max must be >= 0");
  c_.resize(n_max + 1);
  c_[0] = {1};
  for (int n = 0; n < n_max; ++n) {
    c_[n + 1].assign(n + 2, 0);
    for (int k = 1; k <= n + 1; ++k) {
      const std::uint64_t lower = (k <= n) ? c_[n][k] : 0;
      std::uint64_t scaled = 0, next = 0;
      if (__builtin_mul_overflow(static_cast<std::uint64_t>(n), lower, &scaled) ||
          __builtin_add_overflow(c_[n][k - 1], scaled, &next)) {
        throw std::overflow_error("StirlingTable: entry exceeds 64 bits; reduce n_max");
      }
      c_[n + 1][k] = next;
    }
  }
}

std::uint64_t StirlingTable::unsigned_first(int n, int k) const {
  if (n < 0 || n > n_max_ || k < 0 || k > n)
    throw std::out_of_range("StirlingTable: indices out of range");
  return c_[n][k];
}

const StirlingTable& StirlingTable::instance() {
  static const StirlingTable table(20);
  return table;
}

std::uint64_t stirling_first_unsigned(int n, int k) {
  return StirlingTable::instance().unsigned_first(n, k);
}

}  // namespace umbra
