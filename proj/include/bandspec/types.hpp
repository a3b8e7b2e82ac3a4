#pragma once

#include <cmath>
#include <complex>
#include <limits>

namespace bandspec {

using Complex = std::complex<double>;

inline bool is_finite(Complex z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

/// Square root with non-negative real part; on the imaginary axis the
/// root with Im >= 0 is taken.
inline Complex principal_sqrt(Complex z) {
  Complex w = std::sqrt(z);
  if (w.real() < 0.0) w = -w;
  if (w.real() == 0.0 && w.imag() < 0.0) w = -w;
  return w;
}

/// Three-valued verdict for spectral subdivisions where the underlying
/// theory only provides containments at exceptional points.
enum class Tri { yes, no, unknown };

inline const char* to_string(Tri t) {
  switch (t) {
    case Tri::yes: return "yes";
    case Tri::no: return "no";
    default: return "unknown";
  }
}

inline constexpr const char* kToolVersion = "bandspec 0.1.0";

}  // namespace bandspec
