#pragma once

#include <cmath>

#include "types.hpp"

namespace bchf {

namespace detail {
// Lanczos g = 7, n = 9 coefficients (Godfrey). Relative error ~ 1e-14 on
// the right half plane.
inline constexpr double lanczos_g = 7.0;
inline constexpr double lanczos_c[9] = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};
}  // namespace detail

// log Gamma(z), principal branch, valid away from the poles z = 0, -1, ...
inline cplx log_gamma(cplx z) {
  if (z.real() < 0.5) {
    // reflection: log Gamma(z) = log(pi / sin(pi z)) - log Gamma(1 - z).
    // Direct log-sin is safe for |Im z| < ~200, far beyond anything the
    // spectral ranges here produce.
    const double pi = 3.14159265358979323846;
    return std::log(cplx(pi)) - std::log(std::sin(pi * z)) - log_gamma(1.0 - z);
  }
  cplx zm = z - 1.0;
  cplx acc = detail::lanczos_c[0];
  for (int i = 1; i < 9; ++i) acc += detail::lanczos_c[i] / (zm + double(i));
  cplx t = zm + detail::lanczos_g + 0.5;
  const double half_log_2pi = 0.91893853320467274178;
  return half_log_2pi + (zm + 0.5) * std::log(t) - t + std::log(acc);
}

inline cplx gamma_fn(cplx z) { return std::exp(log_gamma(z)); }

// 1 / Gamma(z): entire, safe at the poles.
inline cplx inv_gamma(cplx z) {
  if (z.real() < 0.5) {
    const double pi = 3.14159265358979323846;
    // 1/Gamma(z) = sin(pi z) Gamma(1-z) / pi
    return std::sin(pi * z) * std::exp(log_gamma(1.0 - z)) / pi;
  }
  return std::exp(-log_gamma(z));
}

// Distance from z to the nearest pole of Gamma (nonpositive integers),
// +inf-ish when Re z > 0.5.
inline double pole_distance(cplx z) {
  if (z.real() > 0.5) return 1e300;
  double n = std::round(z.real());
  if (n > 0.0) n = 0.0;
  return std::abs(z - cplx(n));
}

// True if z is within tol of a nonpositive integer -n; fills n.
inline bool near_pole(cplx z, int& n, double tol = 1e-9) {
  if (z.real() > 0.25) return false;
  double m = std::round(z.real());
  if (m > 0.0) return false;
  if (std::abs(z - cplx(m)) > tol) return false;
  n = int(-m);
  return true;
}

}  // namespace bchf
