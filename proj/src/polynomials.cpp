#include "umbra/polynomials.hpp"

#include <stdexcept>

namespace umbra {

namespace {

void check_degree(int n) {
  if (n < 0 || n > kMaxPolyDegree)
    throw std::out_of_range("polynomials: degree must be in [0, 30]");
}

std::vector<Rational> bernoulli_list(int n_max) {
  std::vector<Rational> b(n_max + 1);
  b[0] = 1;
  for (int n = 1; n <= n_max; ++n) {
    Rational acc = 0;
    for (int j = 0; j < n; ++j) acc += Rational(binomial_big(n + 1, j)) * b[j];
    b[n] = -acc / (n + 1);
  }
  return b;
}

std::vector<Rational> euler_list(int n_max) {
  // sech * cosh = 1  =>  E_n = -sum_{m>=1} C(n, 2m) E_{n-2m} for even n.
  std::vector<Rational> e(n_max + 1, Rational(0));
  e[0] = 1;
  for (int n = 2; n <= n_max; n += 2) {
    Rational acc = 0;
    for (int m = 1; 2 * m <= n; ++m)
      acc += Rational(binomial_big(n, 2 * m)) * e[n - 2 * m];
    e[n] = -acc;
  }
  return e;
}

// Doubles of the rational coefficient tables, built once for evaluation.
struct EvalTables {
  std::vector<std::vector<double>> bern;   // coeff of x^j in B_n(x)
  std::vector<std::vector<double>> euler;  // coeff of (x-1/2)^j in E_n(x)
};

const EvalTables& eval_tables() {
  static const EvalTables tables = [] {
    EvalTables t;
    const PolySequence b = bernoulli_poly_table(kMaxPolyDegree);
    const PolySequence e = euler_poly_table(kMaxPolyDegree);
    auto widen = [](const std::vector<std::vector<Rational>>& src) {
      std::vector<std::vector<double>> out(src.size());
      for (std::size_t n = 0; n < src.size(); ++n) {
        out[n].reserve(src[n].size());
        for (const Rational& r : src[n]) out[n].push_back(r.convert_to<double>());
      }
      return out;
    };
    t.bern = widen(b.coeffs);
    t.euler = widen(e.coeffs);
    return t;
  }();
  return tables;
}

}  // namespace

BigInt binomial_big(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (int i = 0; i < k; ++i) {
    r *= n - i;
    r /= i + 1;
  }
  return r;
}

PolySequence bernoulli_numbers(int n_max) {
  check_degree(n_max);
  return {PolyKind::BernoulliNumber, n_max, bernoulli_list(n_max), {}};
}

PolySequence euler_numbers(int n_max) {
  check_degree(n_max);
  return {PolyKind::EulerNumber, n_max, euler_list(n_max), {}};
}

PolySequence bernoulli_poly_table(int n_max) {
  check_degree(n_max);
  const auto b = bernoulli_list(n_max);
  std::vector<std::vector<Rational>> coeffs(n_max + 1);
  for (int n = 0; n <= n_max; ++n) {
    coeffs[n].resize(n + 1);
    for (int j = 0; j <= n; ++j)
      coeffs[n][j] = Rational(binomial_big(n, j)) * b[n - j];
  }
  return {PolyKind::BernoulliPoly, n_max, {}, std::move(coeffs)};
}

PolySequence euler_poly_table(int n_max) {
  check_degree(n_max);
  const auto e = euler_list(n_max);
  std::vector<std::vector<Rational>> coeffs(n_max + 1);
  for (int n = 0; n <= n_max; ++n) {
    coeffs[n].resize(n + 1);
    for (int j = 0; j <= n; ++j) {
      const int k = n - j;  // E_k / 2^k against (x-1/2)^j
      coeffs[n][j] = Rational(binomial_big(n, j)) * e[k] /
                     Rational(BigInt(1) << k);
    }
  }
  return {PolyKind::EulerPoly, n_max, {}, std::move(coeffs)};
}

const Rational& bernoulli_number(int n) {
  check_degree(n);
  static const std::vector<Rational> cache = bernoulli_list(kMaxPolyDegree);
  return cache[n];
}

const Rational& euler_number(int n) {
  check_degree(n);
  static const std::vector<Rational> cache = euler_list(kMaxPolyDegree);
  return cache[n];
}

double bernoulli_poly(int n, double x) {
  check_degree(n);
  const auto& c = eval_tables().bern[n];
  double v = 0.0;
  for (int j = n; j >= 0; --j) v = v * x + c[j];
  return v;
}

double euler_poly(int n, double x) {
  check_degree(n);
  const auto& c = eval_tables().euler[n];
  const double s = x - 0.5;
  double v = 0.0;
  for (int j = n; j >= 0; --j) v = v * s + c[j];
  return v;
}

}  // namespace umbra
