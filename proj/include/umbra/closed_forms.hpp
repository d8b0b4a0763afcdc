#ifndef UMBRA_CLOSED_FORMS_HPP
#define UMBRA_CLOSED_FORMS_HPP

#include <stdexcept>
#include <string>

namespace umbra {

/// The expectation diverges (inverse moments of order >= 2 at x = 1/2).
class DivergentMomentError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

enum class Branch { Left, Right, Midpoint, LimitPoint };

const char* branch_name(Branch b);

/// Value of a piecewise closed form together with the branch that fired.
/// Midpoint only occurs at x = 1/2; LimitPoint only at the removable
/// points of the Pochhammer formulas.
struct ClosedFormResult {
  double value;
  Branch branch;
  std::string formula_id;
};

/// E log(x - 1/2 + i L) for the Bernoulli umbra: psi(1/2 + |x - 1/2|).
/// Real part of the complex log moment; the imaginary part vanishes by
/// symmetry of the latent density.
ClosedFormResult log_moment_bernoulli(double x);

/// Same for the Euler umbra:
/// log 2 + 2 log Gamma(3/4 + |x-1/2|/2) - 2 log Gamma(1/4 + |x-1/2|/2).
ClosedFormResult log_moment_euler(double x);

/// E (x - 1/2 + i L)^{-k}, k >= 1, piecewise in x with the jump at 1/2.
/// At x = 1/2: k = 1 returns the principal value 0; k >= 2 throws
/// DivergentMomentError.
ClosedFormResult inv_moment_bernoulli(int k, double x);
ClosedFormResult inv_moment_euler(int k, double x);

/// E log sin((pi/2)(-1/2 + i L)) real part = 1/2 - log 2, and the
/// intermediate E log cosh(pi L) = 1 - log 2.
ClosedFormResult log_sin_half_pi_bernoulli();
double log_cosh_pi_moment();

/// Rising-factorial moment of the Bernoulli umbra polynomial:
/// (x-1)_{n+1}/(n+1) * (psi(x+n) - psi(x-1)), with the analytic limit
/// taken inside a 1e-6 guard band around every integer x0 <= 1 (the psi
/// difference telescopes to sum_j 1/(x-1+j), so the formula extends to a
/// polynomial with no genuine poles).
ClosedFormResult pochhammer_bernoulli(int n, double x);

/// Euler counterpart: n!/2^n sum_{k<=n} (x-1)_k 2^k / k!, entire in x.
ClosedFormResult pochhammer_euler(int n, double x);

}  // namespace umbra

#endif  // UMBRA_CLOSED_FORMS_HPP
