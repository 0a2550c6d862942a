#pragma once

// Tuning constants for the robust estimators: the MAD scale factor xi, the
// approximate asymptotic relative efficiencies of the Huber / Tukey / L1
// estimators under an isotropic normal in n dimensions, and the Newton
// solve for the cutoff that attains a target efficiency.
//
// All gamma terms are kept relative to Gamma((n+2)/2) so the expressions stay
// in range for large n.

#include <cmath>
#include <stdexcept>

#include "rgr/losses.hpp"
#include "rgr/specfun.hpp"

namespace rgr::tuning {

struct TuningResult {
  int n = 0;
  double xi = 0.0;
  double c_huber = 0.0;
  double c_tukey = 0.0;
  double are_l1 = 0.0;
};

inline double xi(int n) {
  if (n < 1) throw std::domain_error("xi: dimension must be >= 1");
  return std::sqrt(2.0 * specfun::inv_reg_lower_gamma(0.5 * n, 0.5));
}

inline double are_l1(int n) {
  if (n < 1) throw std::domain_error("are_l1: dimension must be >= 1");
  return std::exp(2.0 * specfun::ln_gamma(0.5 * (n + 1)) -
                  specfun::ln_gamma(0.5 * n) - specfun::ln_gamma(0.5 * (n + 2)));
}

namespace detail {

// gamma(a, z) / Gamma((n+2)/2) and Gamma(a, z) / Gamma((n+2)/2)
inline double gl(double a, double z, double lg_norm) {
  return specfun::reg_lower_gamma(a, z) * std::exp(specfun::ln_gamma(a) - lg_norm);
}
inline double gu(double a, double z, double lg_norm) {
  return specfun::reg_upper_gamma(a, z) * std::exp(specfun::ln_gamma(a) - lg_norm);
}

struct AreTerms {
  double value = 0.0;  // A(c,n)
  double deriv = 0.0;  // dA/dc
};

// Huber: A_H = H1^2 / (Gamma((n+2)/2) H2) with
//   H1 = (n/2) g(n/2) + 2^{-3/2} c (n-1) G((n-1)/2)     (second term absent for n=1)
//   H2 = g((n+2)/2) + (c^2/2) G(n/2)
//   H3 = dH1/dc = 2^{-n/2} c^{n-1} e^{-c^2/2} + 2^{-3/2} (n-1) G((n-1)/2)
//   H4 = dH2/dc = c G(n/2)
// where g/G are the lower/upper incomplete gammas at z = c^2/2.
inline AreTerms huber_terms(double c, int n) {
  const double z = 0.5 * c * c;
  const double lgn = specfun::ln_gamma(0.5 * (n + 2));
  double h1 = 0.5 * n * gl(0.5 * n, z, lgn);
  double h3 = std::exp(-0.5 * n * std::log(2.0) + (n - 1) * std::log(c) - z - lgn);
  if (n > 1) {
    const double tail = (n - 1) * gu(0.5 * (n - 1), z, lgn);
    h1 += std::pow(2.0, -1.5) * c * tail;
    h3 += std::pow(2.0, -1.5) * tail;
  }
  const double h2 = gl(0.5 * (n + 2), z, lgn) + z * gu(0.5 * n, z, lgn);
  const double h4 = c * gu(0.5 * n, z, lgn);
  AreTerms out;
  out.value = h1 * h1 / h2;
  out.deriv = (2.0 * h1 * h3 * h2 - h1 * h1 * h4) / (h2 * h2);
  return out;
}

// Tukey: A_T = T1^2 / (Gamma((n+2)/2) T2) with
//   T1 = (2(n+4)/c^4) g((n+4)/2) - (2(n+2)/c^2) g((n+2)/2) + (n/2) g(n/2)
//   T2 = g((n+2)/2) - (8/c^2) g((n+4)/2) + (24/c^4) g((n+6)/2)
//        - (32/c^6) g((n+8)/2) + (16/c^8) g((n+10)/2)
//   T3 = dT1/dc = -(8(n+4)/c^5) g((n+4)/2) + (4(n+2)/c^3) g((n+2)/2)
//   T4 = dT2/dc = (16/c^3) g((n+4)/2) - (96/c^5) g((n+6)/2)
//        + (192/c^7) g((n+8)/2) - (128/c^9) g((n+10)/2)
// The exponential pieces of dT1/dc cancel exactly.
inline AreTerms tukey_terms(double c, int n) {
  const double z = 0.5 * c * c;
  const double lgn = specfun::ln_gamma(0.5 * (n + 2));
  const double g0 = gl(0.5 * n, z, lgn);
  const double g2 = gl(0.5 * (n + 2), z, lgn);
  const double g4 = gl(0.5 * (n + 4), z, lgn);
  const double g6 = gl(0.5 * (n + 6), z, lgn);
  const double g8 = gl(0.5 * (n + 8), z, lgn);
  const double g10 = gl(0.5 * (n + 10), z, lgn);
  const double c2 = c * c, c3 = c2 * c, c4 = c2 * c2, c5 = c4 * c, c6 = c4 * c2,
               c7 = c6 * c, c8 = c4 * c4, c9 = c8 * c;
  const double t1 = 2.0 * (n + 4) / c4 * g4 - 2.0 * (n + 2) / c2 * g2 + 0.5 * n * g0;
  const double t2 = g2 - 8.0 / c2 * g4 + 24.0 / c4 * g6 - 32.0 / c6 * g8 + 16.0 / c8 * g10;
  const double t3 = -8.0 * (n + 4) / c5 * g4 + 4.0 * (n + 2) / c3 * g2;
  const double t4 = 16.0 / c3 * g4 - 96.0 / c5 * g6 + 192.0 / c7 * g8 - 128.0 / c9 * g10;
  AreTerms out;
  out.value = t1 * t1 / t2;
  out.deriv = (2.0 * t1 * t3 * t2 - t1 * t1 * t4) / (t2 * t2);
  return out;
}

}  // namespace detail

inline double are_huber(double c, int n) {
  if (!(c > 0.0)) throw std::domain_error("are_huber: cutoff must be positive");
  if (n < 1) throw std::domain_error("are_huber: dimension must be >= 1");
  return detail::huber_terms(c, n).value;
}

inline double are_tukey(double c, int n) {
  if (!(c > 0.0)) throw std::domain_error("are_tukey: cutoff must be positive");
  if (n < 1) throw std::domain_error("are_tukey: dimension must be >= 1");
  return detail::tukey_terms(c, n).value;
}

inline double are_huber_deriv(double c, int n) { return detail::huber_terms(c, n).deriv; }
inline double are_tukey_deriv(double c, int n) { return detail::tukey_terms(c, n).deriv; }

// Solve A(c, n) = target for c, Newton safeguarded by a maintained bracket.
inline double solve_cutoff(LossKind kind, int n, double target = 0.95) {
  if (kind != LossKind::Huber && kind != LossKind::Tukey)
    throw std::invalid_argument("solve_cutoff: kind must be Huber or Tukey");
  if (n < 1) throw std::domain_error("solve_cutoff: dimension must be >= 1");
  if (!(target > 0.0 && target < 1.0))
    throw std::domain_error("solve_cutoff: target must lie in (0,1)");
  const bool huber = (kind == LossKind::Huber);
  if (huber && target <= are_l1(n))
    throw std::domain_error("solve_cutoff: Huber efficiency cannot go below the L1 limit");

  auto eval = [&](double c) {
    return huber ? detail::huber_terms(c, n) : detail::tukey_terms(c, n);
  };

  // A is increasing in c; expand to a bracket [lo, hi] with A(lo) < target < A(hi)
  double lo = 1e-3, hi = (huber ? 2.0 : 4.0) * xi(n);
  while (eval(hi).value < target) {
    lo = hi;
    hi *= 2.0;
    if (hi > 1e6) throw std::runtime_error("solve_cutoff: bracket expansion failed");
  }
  while (eval(lo).value > target) {
    hi = lo;
    lo *= 0.5;
    if (lo < 1e-12) throw std::runtime_error("solve_cutoff: bracket expansion failed");
  }

  double c = 0.5 * (lo + hi);
  for (int it = 0; it < 200; ++it) {
    const auto t = eval(c);
    const double f = t.value - target;
    if (std::abs(f) <= 1e-8 && it > 0) return c;
    if (f > 0.0) hi = c; else lo = c;
    double cnew = (t.deriv != 0.0) ? c - f / t.deriv : 0.0;
    if (!(cnew > lo && cnew < hi)) cnew = 0.5 * (lo + hi);
    if (std::abs(eval(cnew).value - target) <= 1e-9) return cnew;
    c = cnew;
  }
  if (std::abs(eval(c).value - target) <= 1e-8) return c;
  throw std::runtime_error("solve_cutoff: no convergence after 200 iterations");
}

// Bundle of the constants an estimator setup needs for dimension n.
inline TuningResult tune(int n, double target = 0.95) {
  TuningResult r;
  r.n = n;
  r.xi = xi(n);
  r.c_huber = solve_cutoff(LossKind::Huber, n, target);
  r.c_tukey = solve_cutoff(LossKind::Tukey, n, target);
  r.are_l1 = are_l1(n);
  return r;
}

}  // namespace rgr::tuning
