#include "umbra/distributions.hpp"

#include <cmath>
#include <stdexcept>

#include "umbra/special_functions.hpp"

namespace umbra {

namespace {

// sech(z) = 2 e^{-|Re z|-ish} form; stable for large |Re z|.
std::complex<double> sech_complex(std::complex<double> z) {
  if (z.real() < 0.0) z = -z;  // sech is even
  const std::complex<double> e = std::exp(-z);
  return 2.0 * e / (1.0 + e * e);
}

double sech_real(double z) {
  z = std::fabs(z);
  const double e = std::exp(-z);
  return 2.0 * e / (1.0 + e * e);
}

}  // namespace

const char* kind_name(UmbraKind kind) {
  return kind == UmbraKind::Bernoulli ? "bernoulli" : "euler";
}

double density(UmbraKind kind, double u) {
  const double s = sech_real(kPi * u);
  return kind == UmbraKind::Bernoulli ? 0.5 * kPi * s * s : s;
}

std::complex<double> density_complex(UmbraKind kind, std::complex<double> u) {
  const std::complex<double> s = sech_complex(kPi * u);
  return kind == UmbraKind::Bernoulli ? 0.5 * kPi * s * s : s;
}

double char_fn(UmbraKind kind, double t) {
  const double h = 0.5 * t;
  if (kind == UmbraKind::Bernoulli) {
    if (h == 0.0) return 1.0;
    return h / std::sinh(h);
  }
  return sech_real(h);
}

std::complex<double> contour_point(const UmbraSpec& spec, double u) {
  return {spec.x - 0.5, u};
}

std::uint64_t splitmix64(std::uint64_t state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t split_seed(std::uint64_t master, std::uint64_t stream) {
  return splitmix64(splitmix64(master) ^ splitmix64(stream * 0x9e3779b97f4a7c15ULL + 1));
}

double RandomStream::uniform01() {
  // Top 53 bits; +0.5 keeps the value strictly inside (0,1).
  const std::uint64_t bits = engine_() >> 11;
  return (static_cast<double>(bits) + 0.5) * 0x1.0p-53;
}

double RandomStream::exponential() { return -std::log(uniform01()); }

double RandomStream::cauchy() {
  for (;;) {
    const double c = std::tan(kPi * (uniform01() - 0.5));
    if (c != 0.0) return c;
  }
}

void RandomStream::gaussian_pair(double& n1, double& n2) {
  for (;;) {
    const double r = std::sqrt(-2.0 * std::log(uniform01()));
    const double theta = 2.0 * kPi * uniform01();
    n1 = r * std::cos(theta);
    n2 = r * std::sin(theta);
    if (n1 != 0.0 && n2 != 0.0) return;
  }
}

SampleConstruction default_construction(UmbraKind kind) {
  return kind == UmbraKind::Bernoulli ? SampleConstruction::UniformLogit
                                      : SampleConstruction::CauchyLog;
}

std::vector<double> sample(UmbraKind kind, const SampleSpec& spec) {
  if (spec.count < 1) throw std::invalid_argument("sample: count must be >= 1");
  const bool bernoulli_ctor =
      spec.construction == SampleConstruction::UniformLogit ||
      spec.construction == SampleConstruction::ExponentialRatio;
  if (bernoulli_ctor != (kind == UmbraKind::Bernoulli))
    throw std::invalid_argument("sample: construction incompatible with umbra kind");

  RandomStream rng(spec.seed);
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(spec.count));
  const double inv2pi = 1.0 / (2.0 * kPi);
  const double invpi = 1.0 / kPi;
  for (std::int64_t i = 0; i < spec.count; ++i) {
    switch (spec.construction) {
      case SampleConstruction::UniformLogit: {
        const double u = rng.uniform01();
        out.push_back(inv2pi * std::log(u / (1.0 - u)));
        break;
      }
      case SampleConstruction::ExponentialRatio: {
        const double e1 = rng.exponential();
        const double e2 = rng.exponential();
        out.push_back(inv2pi * std::log(e1 / e2));
        break;
      }
      case SampleConstruction::CauchyLog:
        out.push_back(invpi * std::log(std::fabs(rng.cauchy())));
        break;
      case SampleConstruction::GaussianLogRatio: {
        double n1, n2;
        rng.gaussian_pair(n1, n2);
        out.push_back(invpi * (std::log(std::fabs(n1)) - std::log(std::fabs(n2))));
        break;
      }
    }
  }
  return out;
}

}  // namespace umbra
