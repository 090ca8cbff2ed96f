#pragma once

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace bml {

namespace detail {

// Lanczos approximation, g = 7, n = 9 (Godfrey's coefficients).
// Relative error below 1e-13 on the right half plane.
inline constexpr double kLanczosG = 7.0;
inline constexpr double kLanczosCoef[9] = {
    0.99999999999980993,    676.5203681218851,     -1259.1392167224028,
    771.32342877765313,     -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,   9.9843695780195716e-6, 1.5056327351493116e-7};

}  // namespace detail

/// Gamma function for complex argument via Lanczos series with the
/// reflection formula on Re(z) < 1/2.  Shared by the constant tables
/// (Gamma(p+1)) and the imaginary-power multipliers (Gamma(1 - i*gamma)).
inline std::complex<double> gamma_complex(std::complex<double> z) {
  using std::numbers::pi;
  if (z.real() < 0.5) {
    // Gamma(z) Gamma(1-z) = pi / sin(pi z)
    return pi / (std::sin(pi * z) * gamma_complex(1.0 - z));
  }
  z -= 1.0;
  std::complex<double> x = detail::kLanczosCoef[0];
  for (int i = 1; i < 9; ++i) x += detail::kLanczosCoef[i] / (z + double(i));
  const std::complex<double> t = z + detail::kLanczosG + 0.5;
  return std::sqrt(2.0 * pi) * std::pow(t, z + 0.5) * std::exp(-t) * x;
}

inline double gamma_real(double x) {
  if (x <= 0.0 && x == std::floor(x))
    throw std::domain_error("gamma_real: pole at non-positive integer");
  return gamma_complex({x, 0.0}).real();
}

/// Dirichlet beta, beta(s) = sum_k (-1)^k / (2k+1)^s, s > 1.  Alternating
/// series summed until the next term drops below 1e-14; the alternating
/// series test bounds the error by that term.
inline double dirichlet_beta(double s) {
  if (!(s > 1.0)) throw std::domain_error("dirichlet_beta: requires s > 1");
  double sum = 0.0;
  double sign = 1.0;
  for (long k = 0;; ++k) {
    const double term = std::pow(2.0 * double(k) + 1.0, -s);
    if (term < 1e-14) break;
    sum += sign * term;
    sign = -sign;
    if (k > 200000000L)
      throw std::runtime_error("dirichlet_beta: series did not converge");
  }
  return sum;
}

/// Catalan's constant beta(2).
inline double catalan_constant() { return dirichlet_beta(2.0); }

}  // namespace bml
