#ifndef UMBRA_SPECIAL_FUNCTIONS_HPP
#define UMBRA_SPECIAL_FUNCTIONS_HPP

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace umbra {

inline constexpr double kPi = 3.14159265358979323846264338327950288;
inline constexpr double kLog2 = 0.69314718055994530941723212145817657;
inline constexpr double kEulerGamma = 0.57721566490153286060651209008240243;

/// Argument sits on a pole of Gamma/psi (nonpositive integer).
class PoleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Precomputed constants shared by the closed forms.
/// zeta_int(m) is tabulated for 2 <= m <= m_max at startup; all members are
/// immutable after construction and safe to read from any thread.
struct SpecialConstantTable {
  double euler_gamma;
  double log2;
  double pi;
  int m_max;
  std::vector<double> zeta;  // zeta[m], valid for m in [2, m_max]

  static const SpecialConstantTable& instance();
};

/// Gamma(x) for real x not a nonpositive integer.
/// Lanczos (g=7, 9 terms) in log form, reflection for x < 0.5.
/// Relative error <= 1e-12 on [-170, 170] away from poles.
double gamma_fn(double x);

/// log Gamma(x) for x > 0.
double log_gamma(double x);

/// psi(x) for real x not a nonpositive integer.
/// Upward recurrence to x >= 12, then the asymptotic series; reflection
/// for x < 0. Absolute error <= 1e-12 on [1e-6, 1e6].
double digamma(double x);

/// psi^(k)(x) for 1 <= k <= 10, x not a nonpositive integer.
/// Same recurrence/asymptotic scheme (threshold 16); reflection via the
/// k-th derivative of pi*cot(pi x) for x < 0.
double polygamma(int k, double x);

/// zeta(m) for integer m in [2, 16], from the startup table
/// (direct series with Euler-Maclaurin tail; abs error <= 1e-13).
double zeta_int(int m);

/// Rising factorial x(x+1)...(x+n-1); empty product = 1.
double rising_factorial(double x, int n);

/// sin(pi*x) / tan(pi*x) with exact integer-argument reduction.
double sin_pi(double x);
double tan_pi(double x);

/// Unsigned Stirling numbers of the first kind c[n][k] with
/// c[n+1][k] = c[n][k-1] + n*c[n][k], exact in 64 bits up to n_max = 20
/// (overflow during construction is detected and throws).
class StirlingTable {
 public:
  explicit StirlingTable(int n_max);

  int n_max() const { return n_max_; }
  std::uint64_t unsigned_first(int n, int k) const;

  static const StirlingTable& instance();  // n_max = 20

 private:
  int n_max_;
  std::vector<std::vector<std::uint64_t>> c_;
};

/// Table lookup against the shared n_max = 20 instance.
std::uint64_t stirling_first_unsigned(int n, int k);

}  // namespace umbra

#endif  // UMBRA_SPECIAL_FUNCTIONS_HPP
