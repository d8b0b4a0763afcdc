#ifndef UMBRA_QUADRATURE_HPP
#define UMBRA_QUADRATURE_HPP

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "umbra/special_functions.hpp"

namespace umbra {

enum class QuadScheme { GaussLegendrePanels, TanhSinh };

/// Oracle quadrature configuration.  truncation_radius and node_count size
/// the initial composite rule; adaptive refinement still runs on top, and
/// the radius is extended automatically until the tail is negligible.
struct QuadratureSpec {
  double truncation_radius = 8.0;
  int node_count = 2000;
  QuadScheme scheme = QuadScheme::GaussLegendrePanels;
  bool singularity_split = true;
};

/// Panel refinement failed to settle below tolerance.
class QuadratureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Integrand violates a precondition (e.g. inverse power at x = 1/2).
class SingularIntegrandError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Gauss-Legendre nodes/weights on [-1, 1].
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

GaussRule gauss_legendre(int n);
const GaussRule& gauss_legendre_64();

namespace detail {

template <typename F>
auto gl64_panel(F&& f, double a, double b) {
  const GaussRule& rule = gauss_legendre_64();
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  using R = decltype(f(mid));
  R acc{};
  for (std::size_t i = 0; i < rule.nodes.size(); ++i)
    acc += rule.weights[i] * f(mid + half * rule.nodes[i]);
  return acc * half;
}

template <typename R>
struct AdaptiveState {
  R total{};
  double abs_tol = 0.0;
  double width = 1.0;
  bool converged = true;
};

template <typename F, typename R>
void adaptive_recurse(F& f, double a, double b, const R& whole,
                      AdaptiveState<R>& st, int depth) {
  const double m = 0.5 * (a + b);
  const R left = gl64_panel(f, a, m);
  const R right = gl64_panel(f, m, b);
  const R refined = left + right;
  const double err = std::abs(refined - whole);
  if (err <= st.abs_tol * ((b - a) / st.width) || depth >= 48) {
    if (depth >= 48 && err > 64.0 * st.abs_tol) st.converged = false;
    st.total += refined;
    return;
  }
  adaptive_recurse(f, a, m, left, st, depth + 1);
  adaptive_recurse(f, m, b, right, st, depth + 1);
}

}  // namespace detail

/// Fixed composite 64-point Gauss-Legendre rule with `panels` equal panels.
template <typename F>
auto integrate_panels(F&& f, double a, double b, int panels) {
  using R = decltype(f(a));
  R acc{};
  const double w = (b - a) / panels;
  for (int i = 0; i < panels; ++i)
    acc += detail::gl64_panel(f, a + i * w, a + (i + 1) * w);
  return acc;
}

/// Adaptive bisection on top of the composite rule.  abs_tol is the total
/// error budget, apportioned to panels by width.  Throws QuadratureError if
/// refinement bottoms out far above tolerance.
template <typename F>
auto integrate_adaptive(F&& f, double a, double b, int init_panels,
                        double abs_tol) {
  using R = decltype(f(a));
  detail::AdaptiveState<R> st;
  st.abs_tol = abs_tol;
  st.width = b - a;
  const double w = (b - a) / init_panels;
  for (int i = 0; i < init_panels; ++i) {
    const double pa = a + i * w;
    const double pb = a + (i + 1) * w;
    detail::adaptive_recurse(f, pa, pb, detail::gl64_panel(f, pa, pb), st, 0);
  }
  if (!st.converged)
    throw QuadratureError("integrate_adaptive: panel refinement did not converge");
  return st.total;
}

/// Tanh-sinh rule on [a, b]; integrable endpoint singularities are fine.
/// Abscissas are formed from their exact distance to the nearer endpoint,
/// so f sees accurate arguments arbitrarily close to a and b.
template <typename F>
auto tanh_sinh(F&& f, double a, double b, double target = 1e-13,
               int max_level = 12) {
  using R = decltype(f(a));
  const double half = 0.5 * (b - a);

  // Folded +-t node pair; offset from the nearer endpoint is
  // half * (1 - tanh(z)), z = (pi/2) sinh t, computed cancellation-free.
  auto eval_pair = [&](double t) -> R {
    const double z = 0.5 * kPi * std::sinh(t);
    const double ez = std::exp(-2.0 * z);
    const double dist = half * 2.0 * ez / (1.0 + ez);
    const double ch = std::cosh(z);
    const double w = half * 0.5 * kPi * std::cosh(t) / (ch * ch);
    if (dist <= 0.0 || w <= 0.0 || !std::isfinite(w)) return R{};
    return w * (f(a + dist) + f(b - dist));
  };

  double h = 1.0;
  R sum = 0.5 * kPi * half * f(a + half);  // t = 0 node
  for (double t = h; t <= 7.0; t += h) {
    const R term = eval_pair(t);
    sum += term;
    if (t > 3.0 && std::abs(term) <= 1e-18 * (std::abs(sum) + 1e-300)) break;
  }
  R result = h * sum;

  for (int level = 1; level <= max_level; ++level) {
    h *= 0.5;
    R mid{};
    for (double t = h; t <= 7.0; t += 2.0 * h) {
      const R term = eval_pair(t);
      mid += term;
      if (t > 3.0 &&
          std::abs(term) <= 1e-18 * (std::abs(mid) + std::abs(sum) + 1e-300))
        break;
    }
    sum += mid;
    const R refined = h * sum;
    const double change = std::abs(refined - result);
    result = refined;
    if (level >= 3 && change <= target * (std::abs(result) + 1.0)) break;
  }
  return result;
}

}  // namespace umbra

#endif  // UMBRA_QUADRATURE_HPP
