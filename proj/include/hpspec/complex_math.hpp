#pragma once

#include <cmath>
#include <complex>
#include <numbers>

namespace hpspec {

using cplx = std::complex<double>;

inline constexpr cplx I{0.0, 1.0};
inline constexpr double kPi = std::numbers::pi;

// Principal branch z^s = exp(s Log z); the cut is the negative real axis.
inline cplx ppow(cplx z, cplx s) {
  if (z == cplx{}) return cplx{};
  return std::exp(s * std::log(z));
}

// i^s on the principal branch, exp(i pi s / 2).
inline cplx ipow(cplx s) { return std::exp(I * (kPi / 2.0) * s); }

// exp(z) - 1 without cancellation for small |z|.
inline cplx expm1(cplx z) {
  const double a = z.real();
  const double b = z.imag();
  const double s = std::sin(0.5 * b);
  return {std::expm1(a) * std::cos(b) - 2.0 * s * s, std::exp(a) * std::sin(b)};
}

inline double rel_diff(cplx a, cplx b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

}  // namespace hpspec
