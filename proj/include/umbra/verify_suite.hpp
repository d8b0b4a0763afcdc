#ifndef UMBRA_VERIFY_SUITE_HPP
#define UMBRA_VERIFY_SUITE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "umbra/oracles.hpp"

namespace umbra {

/// Configuration of the full identity catalogue run.
struct SuiteConfig {
  std::string suite = "all";
  double tol = 1e-8;                  // quadrature-vs-closed-form tolerance
  std::uint64_t seed = 1;             // master seed; MC streams are split off it
  std::int64_t mc_samples = 1000000;
  QuadratureSpec quad;
};

/// x values every identity is checked on: straddles the x = 1/2 jump with
/// delta = 1e-3 and covers both branches plus the removable points.
const std::vector<double>& standard_grid();

const std::vector<std::string>& suite_names();

/// Run the selected suite ("all" or one of suite_names()); records come
/// back in a fixed order independent of execution details.
std::vector<VerificationRecord> run_verification(const SuiteConfig& config);

}  // namespace umbra

#endif  // UMBRA_VERIFY_SUITE_HPP
