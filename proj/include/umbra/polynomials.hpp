#ifndef UMBRA_POLYNOMIALS_HPP
#define UMBRA_POLYNOMIALS_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <vector>

namespace umbra {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

enum class PolyKind { BernoulliNumber, EulerNumber, BernoulliPoly, EulerPoly };

/// Exact-rational table of Bernoulli/Euler numbers or polynomial
/// coefficients up to degree n_max.  For the *Poly kinds, coeffs[n][j] is
/// the coefficient of x^j (Bernoulli) or of (x - 1/2)^j (Euler).
struct PolySequence {
  PolyKind kind;
  int n_max;
  std::vector<Rational> numbers;
  std::vector<std::vector<Rational>> coeffs;
};

inline constexpr int kMaxPolyDegree = 30;

BigInt binomial_big(int n, int k);

/// B_0 .. B_{n_max} via sum_j C(n+1,j) B_j = 0, exact rationals.
PolySequence bernoulli_numbers(int n_max);

/// Euler numbers E_0 .. E_{n_max} (integers; odd orders are 0).
PolySequence euler_numbers(int n_max);

PolySequence bernoulli_poly_table(int n_max);
PolySequence euler_poly_table(int n_max);

const Rational& bernoulli_number(int n);  // cached, n <= 30
const Rational& euler_number(int n);

/// B_n(x) = sum_k C(n,k) B_k x^{n-k}, Horner in x.
double bernoulli_poly(int n, double x);

/// E_n(x) = sum_k C(n,k) (E_k / 2^k) (x - 1/2)^{n-k}, Horner in (x - 1/2).
double euler_poly(int n, double x);

}  // namespace umbra

#endif  // UMBRA_POLYNOMIALS_HPP
