#ifndef UMBRA_SERIES_HPP
#define UMBRA_SERIES_HPP

#include <vector>

namespace umbra {

/// Truncated power series sum c[k] t^k, k <= order, coefficients in double.
/// All operations truncate at the common order; no finite differences
/// anywhere — exp/div work by the usual coefficient recurrences.
class PowerSeries {
 public:
  explicit PowerSeries(int order) : c_(static_cast<std::size_t>(order) + 1, 0.0) {}

  static PowerSeries constant(int order, double value);
  /// log(1 - t) = -sum_{k>=1} t^k / k.
  static PowerSeries log_one_minus(int order);
  /// e^{a t} = sum a^k t^k / k!.
  static PowerSeries exp_linear(int order, double a);

  int order() const { return static_cast<int>(c_.size()) - 1; }
  double operator[](int k) const { return c_[static_cast<std::size_t>(k)]; }
  double& operator[](int k) { return c_[static_cast<std::size_t>(k)]; }

  PowerSeries mul(const PowerSeries& other) const;
  PowerSeries div(const PowerSeries& other) const;  // other[0] != 0
  PowerSeries exp() const;
  PowerSeries scale(double s) const;
  /// Divide by t; requires a zero constant term.
  PowerSeries shift_down() const;

 private:
  std::vector<double> c_;
};

}  // namespace umbra

#endif  // UMBRA_SERIES_HPP
