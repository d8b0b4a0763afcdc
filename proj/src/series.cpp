#include "umbra/series.hpp"

#include <cmath>
#include <stdexcept>

namespace umbra {

PowerSeries PowerSeries::constant(int order, double value) {
  PowerSeries s(order);
  s[0] = value;
  return s;
}

PowerSeries PowerSeries::log_one_minus(int order) {
  PowerSeries s(order);
  for (int k = 1; k <= order; ++k) s[k] = -1.0 / k;
  return s;
}

PowerSeries PowerSeries::exp_linear(int order, double a) {
  PowerSeries s(order);
  double term = 1.0;
  s[0] = 1.0;
  for (int k = 1; k <= order; ++k) {
    term *= a / k;
    s[k] = term;
  }
  return s;
}

PowerSeries PowerSeries::mul(const PowerSeries& other) const {
  const int n = order();
  if (other.order() != n) throw std::invalid_argument("PowerSeries: order mismatch");
  PowerSeries out(n);
  for (int i = 0; i <= n; ++i) {
    if (c_[i] == 0.0) continue;
    for (int j = 0; i + j <= n; ++j) out[i + j] += c_[i] * other[j];
  }
  return out;
}

PowerSeries PowerSeries::div(const PowerSeries& other) const {
  const int n = order();
  if (other.order() != n) throw std::invalid_argument("PowerSeries: order mismatch");
  if (other[0] == 0.0) throw std::domain_error("PowerSeries: division by series with zero constant term");
  PowerSeries q(n);
  for (int k = 0; k <= n; ++k) {
    double acc = c_[k];
    for (int j = 1; j <= k; ++j) acc -= other[j] * q[k - j];
    q[k] = acc / other[0];
  }
  return q;
}

PowerSeries PowerSeries::exp() const {
  // e[0] = exp(c[0]); n e[n] = sum_{k=1}^{n} k c[k] e[n-k].
  const int n = order();
  PowerSeries e(n);
  e[0] = std::exp(c_[0]);
  for (int m = 1; m <= n; ++m) {
    double acc = 0.0;
    for (int k = 1; k <= m; ++k) acc += k * c_[k] * e[m - k];
    e[m] = acc / m;
  }
  return e;
}

PowerSeries PowerSeries::scale(double s) const {
  PowerSeries out(order());
  for (int k = 0; k <= order(); ++k) out[k] = c_[k] * s;
  return out;
}

PowerSeries PowerSeries::shift_down() const {
  if (c_[0] != 0.0) throw std::domain_error("PowerSeries: shift_down needs zero constant term");
  PowerSeries out(order());
  for (int k = 1; k <= order(); ++k) out[k - 1] = c_[k];
  return out;
}

}  // namespace umbra
