#ifndef UMBRA_FORMAT_HPP
#define UMBRA_FORMAT_HPP

#include <string>

namespace umbra {

/// Decimal with 17 significant digits ("%.17g"): lossless double round-trip
/// and byte-stable across runs.
std::string fmt_g17(double v);

}  // namespace umbra

#endif  // UMBRA_FORMAT_HPP
