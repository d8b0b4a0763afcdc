#include <doctest.h>

#include <cmath>
#include <random>

#include "umbra/quadrature.hpp"
#include "umbra/special_functions.hpp"

using namespace umbra;

namespace {

// Independent oracle for Gamma at positive arguments: the defining integral
// int_0^inf t^{x-1} e^{-t} dt with t = s^2; tanh-sinh absorbs the endpoint
// singularity when x < 1/2.
double gamma_integral_oracle(double x) {
  auto f = [x](double s) { return 2.0 * std::pow(s, 2.0 * x - 1.0) * std::exp(-s * s); };
  return tanh_sinh(f, 0.0, 16.0);
}

// zeta(m) by brute-force series with a crude integral tail bound pushed far
// enough that the remainder is below 1e-14; independent of the table code.
double zeta_series_oracle(int m) {
  double s = 0.0;
  const int big = 2000;
  for (int n = big; n >= 1; --n) s += std::pow(static_cast<double>(n), -m);
  // integral tail with midpoint correction
  const double nn = big + 0.5;
  s += std::pow(nn, 1.0 - m) / (m - 1.0);
  return s;
}

}  // namespace

TEST_CASE("gamma at reference points") {
  CHECK(gamma_fn(1.0) == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(gamma_fn(5.0) == doctest::Approx(24.0).epsilon(1e-13));
  // sqrt(pi), cross-checked against the Euler integral
  const double root_pi = std::sqrt(kPi);
  CHECK(gamma_fn(0.5) == doctest::Approx(root_pi).epsilon(1e-12));
  CHECK(gamma_integral_oracle(0.5) == doctest::Approx(root_pi).epsilon(1e-10));
  for (double x : {0.25, 1.75, 3.5, 7.0}) {
    CHECK(gamma_fn(x) == doctest::Approx(gamma_integral_oracle(x)).epsilon(1e-10));
  }
}

TEST_CASE("gamma reflection and large arguments") {
  // Gamma(-0.5) = -2 sqrt(pi)
  CHECK(gamma_fn(-0.5) == doctest::Approx(-2.0 * std::sqrt(kPi)).epsilon(1e-12));
  // recurrence at large arguments of both signs stays consistent
  CHECK(gamma_fn(151.0) / gamma_fn(150.0) == doctest::Approx(150.0).epsilon(1e-12));
  CHECK(gamma_fn(-149.5) / gamma_fn(-150.5) == doctest::Approx(-150.5).epsilon(1e-11));
  CHECK_THROWS_AS(gamma_fn(0.0), PoleError);
  CHECK_THROWS_AS(gamma_fn(-3.0), PoleError);
}

TEST_CASE("log_gamma difference identity") {
  for (double x : {0.3, 1.0, 2.5, 17.0, 123.0}) {
    CHECK(log_gamma(x + 1.0) - log_gamma(x) == doctest::Approx(std::log(x)).epsilon(1e-12));
  }
  CHECK_THROWS_AS(log_gamma(-1.0), PoleError);
}

TEST_CASE("digamma reference values") {
  CHECK(digamma(1.0) == doctest::Approx(-kEulerGamma).epsilon(1e-13));
  CHECK(digamma(2.0) == doctest::Approx(1.0 - kEulerGamma).epsilon(1e-13));
  // duplication formula value at 1/2
  CHECK(digamma(0.5) == doctest::Approx(-kEulerGamma - 2.0 * kLog2).epsilon(1e-13));
  CHECK_THROWS_AS(digamma(-2.0), PoleError);
}

TEST_CASE("digamma recurrence on random arguments") {
  std::mt19937_64 rng(12345);
  std::uniform_real_distribution<double> dist(1e-3, 100.0);
  for (int i = 0; i < 1000; ++i) {
    const double x = dist(rng);
    CHECK(std::fabs(digamma(x + 1.0) - digamma(x) - 1.0 / x) <= 1e-12);
  }
}

TEST_CASE("digamma duplication identity") {
  std::mt19937_64 rng(777);
  std::uniform_real_distribution<double> dist(1e-2, 50.0);
  for (int i = 0; i < 500; ++i) {
    const double z = dist(rng);
    const double lhs = digamma(2.0 * z);
    const double rhs = 0.5 * digamma(z) + 0.5 * digamma(z + 0.5) + kLog2;
    CHECK(std::fabs(lhs - rhs) <= 1e-12);
  }
}

TEST_CASE("digamma reflection for negative arguments") {
  for (double x : {-0.5, -1.75, -3.25, -10.9}) {
    const double lhs = digamma(1.0 - x) - digamma(x);
    CHECK(lhs == doctest::Approx(kPi / tan_pi(x)).epsilon(1e-11));
  }
}

TEST_CASE("polygamma at 1 equals the zeta identity") {
  // psi^(k)(1) = (-1)^{k+1} k! zeta(k+1)
  double kfact = 1.0;
  for (int k = 1; k <= 8; ++k) {
    kfact *= k;
    const double expected = ((k % 2 == 1) ? 1.0 : -1.0) * kfact * zeta_int(k + 1);
    CHECK(std::fabs(polygamma(k, 1.0) - expected) <=
          1e-10 * std::max(1.0, std::fabs(expected)));
  }
  CHECK(polygamma(1, 1.0) == doctest::Approx(kPi * kPi / 6.0).epsilon(1e-12));
  CHECK(polygamma(2, 1.0) == doctest::Approx(-2.0 * zeta_int(3)).epsilon(1e-12));
  CHECK(polygamma(1, 2.0) == doctest::Approx(kPi * kPi / 6.0 - 1.0).epsilon(1e-12));
}

TEST_CASE("polygamma recurrence") {
  std::mt19937_64 rng(4242);
  std::uniform_real_distribution<double> dist(0.05, 30.0);
  for (int k = 1; k <= 10; ++k) {
    double kfact = 1.0;
    for (int i = 2; i <= k; ++i) kfact *= i;
    for (int i = 0; i < 100; ++i) {
      const double x = dist(rng);
      const double step = ((k % 2 == 0) ? 1.0 : -1.0) * kfact * std::pow(x, -(k + 1));
      const double lhs = polygamma(k, x + 1.0) - polygamma(k, x);
      CHECK(std::fabs(lhs - step) <= 1e-10 * std::max(1.0, std::fabs(step)));
    }
  }
}

TEST_CASE("polygamma half-integer and negative arguments") {
  // psi'(1/2) = pi^2/2
  CHECK(polygamma(1, 0.5) == doctest::Approx(kPi * kPi / 2.0).epsilon(1e-13));
  // reflection route must agree with the recurrence route
  const double direct = polygamma(1, -1.5);  // via reflection internally
  // psi'(-1.5) = psi'(0.5) - ... upward recurrence from -1.5: psi'(x) =
  // psi'(x+1) + 1/x^2
  const double via_rec = polygamma(1, 0.5) + 1.0 / (1.5 * 1.5) + 1.0 / (0.5 * 0.5);
  CHECK(direct == doctest::Approx(via_rec).epsilon(1e-11));
  CHECK_THROWS_AS(polygamma(11, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(polygamma(0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(polygamma(2, -4.0), PoleError);
}

TEST_CASE("zeta table") {
  CHECK(zeta_int(2) == doctest::Approx(kPi * kPi / 6.0).epsilon(1e-14));
  CHECK(zeta_int(4) == doctest::Approx(std::pow(kPi, 4) / 90.0).epsilon(1e-14));
  CHECK(zeta_int(3) == doctest::Approx(1.2020569031595943).epsilon(1e-13));
  for (int m = 2; m <= 16; ++m)
    CHECK(std::fabs(zeta_int(m) - zeta_series_oracle(m)) <= 1e-10);
  CHECK_THROWS_AS(zeta_int(1), std::out_of_range);
  CHECK_THROWS_AS(zeta_int(17), std::out_of_range);
}

TEST_CASE("special constant table invariants") {
  const auto& t = SpecialConstantTable::instance();
  CHECK(std::fabs(t.euler_gamma + digamma(1.0)) <= 1e-12);
  CHECK(std::fabs(t.zeta[2] - t.pi * t.pi / 6.0) <= 1e-12);
}

TEST_CASE("rising factorial") {
  CHECK(rising_factorial(3.7, 0) == 1.0);
  CHECK(rising_factorial(1.0, 5) == 120.0);
  CHECK(rising_factorial(-0.5, 2) == doctest::Approx(-0.25).epsilon(1e-15));
  CHECK_THROWS_AS(rising_factorial(1.0, -1), std::invalid_argument);
}

TEST_CASE("stirling numbers of the first kind") {
  CHECK(stirling_first_unsigned(0, 0) == 1);
  CHECK(stirling_first_unsigned(3, 1) == 2);  // y(y+1)(y+2) = 2y + 3y^2 + y^3
  CHECK(stirling_first_unsigned(3, 2) == 3);
  CHECK(stirling_first_unsigned(4, 4) == 1);
  for (int n = 1; n <= 20; ++n) CHECK(stirling_first_unsigned(n, 0) == 0);
  // row sums are n!
  double fact = 1.0;
  for (int n = 1; n <= 20; ++n) {
    fact *= n;
    double row = 0.0;
    for (int k = 0; k <= n; ++k)
      row += static_cast<double>(stirling_first_unsigned(n, k));
    CHECK(row == doctest::Approx(fact).epsilon(1e-15));
  }
  CHECK_THROWS_AS(stirling_first_unsigned(21, 1), std::out_of_range);
  CHECK_THROWS_AS(stirling_first_unsigned(3, 4), std::out_of_range);
  // entries beyond ~n = 20 leave 64 bits; construction must notice
  CHECK_THROWS_AS(StirlingTable(30), std::overflow_error);
  CHECK_THROWS_AS(StirlingTable(-1), std::invalid_argument);
}

TEST_CASE("rising factorial expands through stirling numbers") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> dist(-3.0, 3.0);
  for (int n = 0; n <= 12; ++n) {
    for (int rep = 0; rep < 20; ++rep) {
      const double x = dist(rng);
      double expansion = 0.0;
      for (int k = 0; k <= n; ++k)
        expansion += static_cast<double>(stirling_first_unsigned(n, k)) * std::pow(x, k);
      const double direct = rising_factorial(x, n);
      // for x < 0 the expansion cancels, so scale by its own magnitude
      const double scale = std::max(1.0, rising_factorial(std::fabs(x), n));
      CHECK(std::fabs(expansion - direct) <= 1e-12 * scale);
    }
  }
}
