#ifndef UMBRA_DISTRIBUTIONS_HPP
#define UMBRA_DISTRIBUTIONS_HPP

#include <complex>
#include <cstdint>
#include <random>
#include <vector>

namespace umbra {

enum class UmbraKind { Bernoulli, Euler };

const char* kind_name(UmbraKind kind);

/// Which umbra and the shift parameter x of its polynomial form.
struct UmbraSpec {
  UmbraKind kind;
  double x;
};

enum class SampleConstruction {
  UniformLogit,      // Bernoulli: log(U/(1-U)) / (2 pi), U ~ uniform(0,1)
  ExponentialRatio,  // Bernoulli: log(E1/E2) / (2 pi), E_i ~ Exp(1)
  CauchyLog,         // Euler: log|C| / pi, C standard Cauchy
  GaussianLogRatio,  // Euler: (log|N1| - log|N2|) / pi
};

struct SampleSpec {
  std::int64_t count = 1;
  std::uint64_t seed = 0;
  SampleConstruction construction = SampleConstruction::UniformLogit;
};

/// Density of the latent variable: (pi/2) sech^2(pi u) for Bernoulli,
/// sech(pi u) for Euler.  Even in u, total mass 1.
double density(UmbraKind kind, double u);

/// Density continued off the real axis (used by the shifted-contour
/// quadrature); analytic for |Im u| < 1/2.
std::complex<double> density_complex(UmbraKind kind, std::complex<double> u);

/// Characteristic function: (t/2)/sinh(t/2) resp. sech(t/2); equals 1 at 0.
double char_fn(UmbraKind kind, double t);

/// Contour point x - 1/2 + i u of the moment representation.
std::complex<double> contour_point(const UmbraSpec& spec, double u);

/// Seed-splitting rule for independent streams: both the master seed and
/// the stream index are mixed through splitmix64, so derived streams never
/// collide for distinct indices.
std::uint64_t splitmix64(std::uint64_t state);
std::uint64_t split_seed(std::uint64_t master, std::uint64_t stream);

/// Deterministic draw source: mt19937_64 seeded through splitmix64, with
/// uniform doubles taken from the top 53 bits, strictly inside (0,1).
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : engine_(splitmix64(seed)) {}

  double uniform01();
  double exponential();              // unit rate, inverse CDF
  double cauchy();                   // tan of a uniform angle, never 0
  void gaussian_pair(double& n1, double& n2);  // Box-Muller, never 0

 private:
  std::mt19937_64 engine_;
};

/// Deterministic draws of the latent variable.  The construction must match
/// the umbra kind (throws std::invalid_argument otherwise).
std::vector<double> sample(UmbraKind kind, const SampleSpec& spec);

/// Default construction used by the oracles for each kind.
SampleConstruction default_construction(UmbraKind kind);

}  // namespace umbra

#endif  // UMBRA_DISTRIBUTIONS_HPP
