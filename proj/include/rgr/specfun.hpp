#pragma once

// Gamma-family special functions and the error function for real and complex
// arguments. Everything here is pure and deterministic.

#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>
#include <string>

#include "rgr/detail/faddeeva_grid.hpp"

namespace rgr::specfun {

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr double kTwoOverSqrtPi = 1.1283791670955125738961589031215452;  // 2/sqrt(pi)

inline double ln_gamma(double a) {
  if (!(a > 0.0)) throw std::domain_error("ln_gamma: argument must be positive");
  return std::lgamma(a);
}

namespace detail {

// Series for the regularized lower incomplete gamma P(a,z), valid z < a+1.
inline double reg_lower_gamma_series(double a, double z) {
  double ap = a;
  double del = 1.0 / a;
  double sum = del;
  bool converged = false;
  for (long i = 0; i < 400000; ++i) {  // large a needs O(sqrt(a)) terms
    ap += 1.0;
    del *= z / ap;
    sum += del;
    if (std::abs(del) < std::abs(sum) * 1e-17) {
      converged = true;
      break;
    }
  }
  if (!converged)
    throw std::runtime_error("reg_lower_gamma: series did not converge");
  return sum * std::exp(-z + a * std::log(z) - std::lgamma(a));
}

// Continued fraction (modified Lentz) for the regularized upper incomplete
// gamma Q(a,z), valid z >= a+1.
inline double reg_upper_gamma_cf(double a, double z) {
  constexpr double kTiny = 1e-300;
  double b = z + 1.0 - a;
  double c = 1.0 / kTiny;
  double d = 1.0 / b;
  double h = d;
  for (long i = 1; i <= 400000; ++i) {
    const double an = -i * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < kTiny) d = kTiny;
    c = b + an / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::abs(del - 1.0) < 1e-17) break;
  }
  return std::exp(-z + a * std::log(z) - std::lgamma(a)) * h;
}

}  // namespace detail

// Regularized lower incomplete gamma P(a,z) = gamma(a,z)/Gamma(a).
inline double reg_lower_gamma(double a, double z) {
  if (!(a > 0.0) || !(z >= 0.0) || std::isnan(z))
    throw std::domain_error("reg_lower_gamma: require a > 0 and z >= 0");
  if (z == 0.0) return 0.0;
  if (z < a + 1.0) return detail::reg_lower_gamma_series(a, z);
  return 1.0 - detail::reg_upper_gamma_cf(a, z);
}

// Regularized upper incomplete gamma Q(a,z) = Gamma(a,z)/Gamma(a).
inline double reg_upper_gamma(double a, double z) {
  if (!(a > 0.0) || !(z >= 0.0) || std::isnan(z))
    throw std::domain_error("reg_upper_gamma: require a > 0 and z >= 0");
  if (z == 0.0) return 1.0;
  if (z < a + 1.0) return 1.0 - detail::reg_lower_gamma_series(a, z);
  return detail::reg_upper_gamma_cf(a, z);
}

inline double lower_inc_gamma(double a, double z) {
  return reg_lower_gamma(a, z) * std::exp(std::lgamma(a));
}

inline double upper_inc_gamma(double a, double z) {
  return reg_upper_gamma(a, z) * std::exp(std::lgamma(a));
}

// Inverse of P(a,.) in z: bracketed Newton with bisection fallback.
inline double inv_reg_lower_gamma(double a, double p) {
  if (!(a > 0.0)) throw std::domain_error("inv_reg_lower_gamma: a must be positive");
  if (!(p > 0.0 && p < 1.0))
    throw std::domain_error("inv_reg_lower_gamma: p must lie in (0,1)");

  // expanding bracket around a rough starting point
  double lo = 0.0, hi = std::max(2.0 * a, 2.0);
  while (reg_lower_gamma(a, hi) < p) {
    lo = hi;
    hi *= 2.0;
    if (hi > 1e12)
      throw std::runtime_error("inv_reg_lower_gamma: bracket expansion failed");
  }
  const double lg = std::lgamma(a);
  double z = 0.5 * (lo + hi);
  for (int it = 0; it < 200; ++it) {
    const double f = reg_lower_gamma(a, z) - p;
    if (std::abs(f) <= 1e-14) return z;
    if (f > 0.0) hi = z; else lo = z;
    // density P'(a,z) = z^{a-1} e^{-z} / Gamma(a)
    const double dens = std::exp((a - 1.0) * std::log(z) - z - lg);
    double znew = (dens > 0.0) ? z - f / dens : 0.0;
    if (!(znew > lo && znew < hi)) znew = 0.5 * (lo + hi);
    if ((std::abs(znew - z) <= 4e-16 * std::max(1.0, z) || hi - lo <= 4e-16 * hi) &&
        std::abs(f) <= 1e-12)
      return znew;
    z = znew;
  }
  if (std::abs(reg_lower_gamma(a, z) - p) <= 1e-12) return z;
  throw std::runtime_error("inv_reg_lower_gamma: no convergence after 200 iterations");
}

namespace detail {

// 1/Gamma(k/2 + 1) for the Maclaurin series of w(z).
inline const double* inv_gamma_half_table() {
  static const auto table = [] {
    static double t[96];
    for (int k = 0; k < 96; ++k) t[k] = 1.0 / std::tgamma(0.5 * k + 1.0);
    return t;
  }();
  return table;
}

// Faddeeva function w(z) = exp(-z^2) erfc(-iz) for Im z >= 0.
// Three regimes: Maclaurin series near the origin, Taylor steps from a
// tabulated grid of centers in mid-range, Laplace continued fraction far out.
inline std::complex<double> faddeeva_w(std::complex<double> z) {
  const double x = z.real();
  const double y = z.imag();
  if (x < 0.0) return std::conj(faddeeva_w({-x, y}));  // w(-conj z) = conj w(z)

  const double r2 = x * x + y * y;
  const std::complex<double> two_i_over_sqrt_pi(0.0, kTwoOverSqrtPi);

  if (r2 <= 4.0) {
    // w(z) = sum (iz)^k / Gamma(k/2 + 1)
    const double* ig = inv_gamma_half_table();
    const std::complex<double> iz(-y, x);
    std::complex<double> term(1.0, 0.0);
    std::complex<double> sum(ig[0], 0.0);
    for (int k = 1; k < 96; ++k) {
      term *= iz;
      sum += term * ig[k];
      if (std::abs(term) * ig[k] < 1e-18 * std::abs(sum) && k > 8) break;
    }
    return sum;
  }

  if (r2 <= 59.29) {  // |z| <= 7.7: Taylor step from the nearest grid center
    const int i = static_cast<int>(std::lround(x / kFaddeevaGridStep));
    const int j = static_cast<int>(std::lround(y / kFaddeevaGridStep));
    const std::complex<double> c(i * kFaddeevaGridStep, j * kFaddeevaGridStep);
    const std::complex<double> dz = z - c;
    std::complex<double> a_prev(kFaddeevaGrid[j][i][0], kFaddeevaGrid[j][i][1]);
    std::complex<double> a_cur = -2.0 * c * a_prev + two_i_over_sqrt_pi;
    std::complex<double> sum = a_prev + a_cur * dz;
    std::complex<double> dzk = dz;
    for (int k = 1; k < 96; ++k) {
      // a_{k+1} = -2 (c a_k + a_{k-1}) / (k+1)
      const std::complex<double> a_next = -2.0 * (c * a_cur + a_prev) / double(k + 1);
      dzk *= dz;
      const std::complex<double> term = a_next * dzk;
      sum += term;
      if (std::abs(term) < 1e-18 * std::abs(sum) && k > 12) break;
      a_prev = a_cur;
      a_cur = a_next;
    }
    return sum;
  }

  // Laplace continued fraction: w = (i/sqrt(pi)) / (z - (1/2)/(z - 1/(z - ...)))
  constexpr double kTiny = 1e-300;
  std::complex<double> f = z;
  std::complex<double> C = z;
  std::complex<double> D = 0.0;
  for (int k = 1; k <= 200; ++k) {
    const double ak = -0.5 * k;
    D = z + ak * D;
    if (std::abs(D) < kTiny) D = kTiny;
    C = z + ak / C;
    if (std::abs(C) < kTiny) C = kTiny;
    D = 1.0 / D;
    const std::complex<double> del = C * D;
    f *= del;
    if (std::abs(del - 1.0) < 1e-17) break;
  }
  return std::complex<double>(0.0, 0.5 * kTwoOverSqrtPi) / f;
}

// exp(-y^2) * erf(x + iy) for x >= 0, computed without intermediate overflow.
inline std::complex<double> exp_scaled_erf(double x, double y) {
  if (y < 0.0) return std::conj(exp_scaled_erf(x, -y));
  // e^{-y^2} erf(x+iy) = e^{-y^2} - e^{-x^2} cis(-2xy) w(-y + ix)
  const std::complex<double> w = faddeeva_w({-y, x});
  const double phase = -2.0 * x * y;
  const std::complex<double> rot(std::cos(phase), std::sin(phase));
  return std::exp(-y * y) - std::exp(-x * x) * rot * w;
}

}  // namespace detail

inline constexpr double kErfImagStripLimit = 30.0;

// erf(z) for complex z with |Im z| <= kErfImagStripLimit. True values whose
// magnitude exceeds DBL_MAX saturate to infinity.
inline std::complex<double> erf_complex(std::complex<double> z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
    throw std::domain_error("erf_complex: non-finite argument");
  if (std::abs(z.imag()) > kErfImagStripLimit)
    throw std::domain_error("erf_complex: |Im z| exceeds supported strip " +
                            std::to_string(kErfImagStripLimit));
  if (z.real() < 0.0) return -erf_complex(-z);
  if (z.imag() < 0.0) return std::conj(erf_complex(std::conj(z)));

  const double x = z.real();
  const double y = z.imag();
  // erf(z) = 1 - e^{-z^2} w(iz); |e^{-z^2}| = e^{y^2 - x^2}
  const std::complex<double> w = detail::faddeeva_w({-y, x});
  const double m = y * y - x * x;
  const double phase = -2.0 * x * y;
  const std::complex<double> rot(std::cos(phase), std::sin(phase));
  if (m < 650.0) {
    return 1.0 - std::exp(m) * rot * w;
  }
  // assemble in two half-magnitude factors to delay overflow to the true limit
  const double half = std::exp(0.5 * m);
  return 1.0 - (half * rot) * (half * w);
}

inline double erf_real(double x) { return std::erf(x); }

}  // namespace rgr::specfun
