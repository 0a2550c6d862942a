#pragma once

// Exact Riemannian normal distribution on S^n and the hyperboloid H^n:
// closed-form antiderivatives of sin^m(r) exp(-r^2/2s^2) and
// sinh^m(r) exp(-r^2/2s^2), normalizing constants, radial CDFs,
// inverse-CDF sampling, and the heavy-tailed generators used by the
// simulation studies.

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "rgr/manifold.hpp"
#include "rgr/rng.hpp"
#include "rgr/specfun.hpp"

namespace rgr {

namespace detail {

inline double binom(int m, int j) {
  double b = 1.0;
  for (int i = 1; i <= j; ++i) b *= double(m - i + 1) / double(i);
  return b;
}

// Complex value of G_{m,s2}(R); real part is the antiderivative, the
// imaginary part is roundoff residue.
inline std::complex<double> g_function_complex(int m, double sigma2, double R) {
  if (m < 0) throw std::domain_error("g_function: m must be >= 0");
  if (!(sigma2 > 0.0)) throw std::domain_error("g_function: sigma^2 must be positive");
  if (R < 0.0 || R > specfun::kPi + 1e-12)
    throw std::domain_error("g_function: R must lie in [0, pi]");
  const double s = std::sqrt(0.5 * sigma2);  // sqrt(sigma^2/2)
  if (m * s > specfun::kErfImagStripLimit)
    throw std::domain_error("g_function: (m * sigma / sqrt 2) exceeds the erf strip");
  const double x = R / std::sqrt(2.0 * sigma2);
  std::complex<double> sum(0.0, 0.0);
  for (int j = 0; j <= m; ++j) {
    const double y = s * (m - 2 * j);
    const double coef = ((j & 1) ? -1.0 : 1.0) * binom(m, j);
    // exp(-(m-2j)^2 sigma^2/2) erf(x + iy) = exp(-y^2) erf(x + iy)
    sum += coef * specfun::detail::exp_scaled_erf(x, y);
  }
  // (i/2)^m
  const std::complex<double> i_pow = std::pow(std::complex<double>(0.0, 0.5), m);
  return i_pow * std::sqrt(specfun::kPi * sigma2 / 2.0) * sum;
}

}  // namespace detail

// Antiderivative of sin^m(r) exp(-r^2 / 2 s2):
// g_function(m,s2,R) - g_function(m,s2,0) = int_0^R sin^m(r) exp(-r^2/2 s2) dr.
inline double g_function(int m, double sigma2, double R) {
  const std::complex<double> g = detail::g_function_complex(m, sigma2, R);
  if (std::abs(g.imag()) >= 1e-9 * std::max(1.0, std::abs(g.real())))
    throw std::runtime_error("g_function: imaginary residue exceeds tolerance");
  return g.real();
}

// Antiderivative of sinh^m(r) exp(-r^2 / 2 s2):
// h_function(m,s2,R) - h_function(m,s2,0) = int_0^R sinh^m(r) exp(-r^2/2 s2) dr.
inline double h_function(int m, double sigma2, double R) {
  if (m < 0) throw std::domain_error("h_function: m must be >= 0");
  if (!(sigma2 > 0.0)) throw std::domain_error("h_function: sigma^2 must be positive");
  if (R < 0.0) throw std::domain_error("h_function: R must be >= 0");
  const double s = std::sqrt(0.5 * sigma2);
  const double x = R / std::sqrt(2.0 * sigma2);
  double sum = 0.0;
  for (int j = 0; j <= m; ++j) {
    const double k = double(m - 2 * j);
    const double coef = ((j & 1) ? -1.0 : 1.0) * detail::binom(m, j);
    sum += coef * std::exp(0.5 * k * k * sigma2) * std::erf(x - s * k);
  }
  return std::pow(0.5, m) * std::sqrt(specfun::kPi * sigma2 / 2.0) * sum;
}

// lim_{R->inf} H_{m,s2}(R): all erf factors saturate to 1.
inline double h_limit(int m, double sigma2) {
  if (m < 0) throw std::domain_error("h_limit: m must be >= 0");
  if (!(sigma2 > 0.0)) throw std::domain_error("h_limit: sigma^2 must be positive");
  double sum = 0.0;
  for (int j = 0; j <= m; ++j) {
    const double k = double(m - 2 * j);
    sum += ((j & 1) ? -1.0 : 1.0) * detail::binom(m, j) * std::exp(0.5 * k * k * sigma2);
  }
  return std::pow(0.5, m) * std::sqrt(specfun::kPi * sigma2 / 2.0) * sum;
}

// Distance law of the Riemannian normal: the CDF of d(y, mu) on S^n or H^n.
// Caches the endpoint antiderivatives and a bracketing grid so that repeated
// quantile draws stay cheap. Immutable after construction.
class RadialNormalDistribution {
 public:
  RadialNormalDistribution(ManifoldKind kind, int n, double sigma)
      : kind_(kind), n_(n), sigma_(sigma) {
    if (kind != ManifoldKind::Sphere && kind != ManifoldKind::Hyperbolic)
      throw std::invalid_argument(
          "RadialNormalDistribution: defined on sphere and hyperbolic space only");
    if (n < 1) throw std::domain_error("RadialNormalDistribution: n must be >= 1");
    if (!(sigma > 0.0))
      throw std::domain_error("RadialNormalDistribution: sigma must be positive");
    const double s2 = sigma * sigma;
    if (kind_ == ManifoldKind::Sphere) {
      support_max_ = specfun::kPi;
      lo_ = g_function(n_ - 1, s2, 0.0);
      span_ = g_function(n_ - 1, s2, specfun::kPi) - lo_;
    } else {
      // negligible mass beyond the radial mode plus 40 sigma
      support_max_ = (n_ - 1) * s2 + 42.0 * sigma;
      lo_ = h_function(n_ - 1, s2, 0.0);
      span_ = h_limit(n_ - 1, s2) - lo_;
    }
    if (!(span_ > 0.0) || !std::isfinite(span_))
      throw std::runtime_error("RadialNormalDistribution: degenerate normalization");
    build_grid();
  }

  int dim() const { return n_; }
  double sigma() const { return sigma_; }
  ManifoldKind kind() const { return kind_; }
  double support_max() const { return support_max_; }

  // C_M(mu, sigma^2) = surface(n) * integral of sin^m / sinh^m weight
  double normalizing_constant() const {
    const double surface =
        2.0 * std::pow(specfun::kPi, 0.5 * n_) / std::exp(specfun::ln_gamma(0.5 * n_));
    return surface * span_;
  }

  double cdf(double R) const {
    if (R <= 0.0) return 0.0;
    if (kind_ == ManifoldKind::Sphere) {
      if (R >= specfun::kPi) return 1.0;
      return std::clamp((g_function(n_ - 1, sigma_ * sigma_, R) - lo_) / span_, 0.0, 1.0);
    }
    return std::clamp((h_function(n_ - 1, sigma_ * sigma_, R) - lo_) / span_, 0.0, 1.0);
  }

  // Inverse CDF by bisection between grid brackets.
  double quantile(double t) const {
    if (!(t > 0.0 && t < 1.0))
      throw std::domain_error("radial_quantile: t must lie in (0,1)");
    auto it = std::lower_bound(grid_F_.begin(), grid_F_.end(), t);
    std::size_t hi_idx = std::min<std::size_t>(it - grid_F_.begin(), grid_r_.size() - 1);
    std::size_t lo_idx = hi_idx > 0 ? hi_idx - 1 : 0;
    double lo = grid_r_[lo_idx], hi = grid_r_[hi_idx];
    if (hi <= lo) hi = lo + 1e-12;
    double mid = 0.5 * (lo + hi);
    for (int i = 0; i < 200; ++i) {
      mid = 0.5 * (lo + hi);
      const double f = cdf(mid);
      if (std::abs(f - t) <= 1e-12) return mid;
      (f < t ? lo : hi) = mid;
      if (hi - lo <= 1e-15 * std::max(1.0, mid)) break;
    }
    if (std::abs(cdf(mid) - t) <= 1e-10) return mid;
    throw std::runtime_error("radial_quantile: no convergence");
  }

 private:
  void build_grid() {
    constexpr int kGrid = 257;
    grid_r_.resize(kGrid);
    grid_F_.resize(kGrid);
    double prev = 0.0;
    for (int i = 0; i < kGrid; ++i) {
      grid_r_[i] = support_max_ * double(i) / double(kGrid - 1);
      prev = std::max(prev, cdf(grid_r_[i]));  // enforce monotone table
      grid_F_[i] = prev;
    }
  }

  ManifoldKind kind_;
  int n_;
  double sigma_;
  double support_max_ = 0.0;
  double lo_ = 0.0;
  double span_ = 0.0;
  std::vector<double> grid_r_, grid_F_;
};

// Draw from the Riemannian normal centered at mu using a shared radial law:
// inverse-CDF radius, uniform tangent direction, exponential map.
inline ManifoldPoint sample_riemannian_normal(const ManifoldPoint& mu,
                                              const RadialNormalDistribution& radial,
                                              RandomStream& rng) {
  const double R = radial.quantile(rng.uniform01());
  const Eigen::MatrixXd B = tangent_basis(mu);
  Eigen::VectorXd d(B.cols());
  for (int i = 0; i < d.size(); ++i) d[i] = rng.normal();
  const double nd = d.norm();
  const Eigen::VectorXd v = B * ((R / (nd > 0.0 ? nd : 1.0)) * d);
  return exp_map(mu, v);
}

// Full distribution object: mean point plus radial law.
class RiemannianNormal {
 public:
  RiemannianNormal(ManifoldPoint mu, double sigma)
      : mu_(std::move(mu)), radial_(mu_.tag.kind, mu_.tag.param, sigma) {
    if (mu_.tag.kind == ManifoldKind::Sphere) {
      // the sphere antiderivative needs (n-1) sigma / sqrt(2) inside the strip
      const double y_max = (mu_.tag.param - 1) * sigma / std::sqrt(2.0);
      if (y_max > specfun::kErfImagStripLimit)
        throw std::domain_error(
            "RiemannianNormal: (n-1) sigma / sqrt(2) exceeds the supported strip");
    }
  }

  const ManifoldPoint& mean() const { return mu_; }
  double sigma() const { return radial_.sigma(); }
  const RadialNormalDistribution& radial() const { return radial_; }

  double normalizing_constant() const { return radial_.normalizing_constant(); }
  double radial_cdf(double R) const { return radial_.cdf(R); }
  double radial_quantile(double t) const { return radial_.quantile(t); }

  ManifoldPoint sample(RandomStream& rng) const {
    return sample_riemannian_normal(mu_, radial_, rng);
  }

 private:
  ManifoldPoint mu_;
  RadialNormalDistribution radial_;
};

namespace detail {

// Marsaglia-Tsang gamma generator, shape alpha, unit scale.
inline double sample_gamma(double alpha, RandomStream& rng) {
  if (alpha < 1.0)
    return sample_gamma(alpha + 1.0, rng) * std::pow(rng.uniform01(), 1.0 / alpha);
  const double d = alpha - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double x, v;
    do {
      x = rng.normal();
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    const double u = rng.uniform01();
    if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
    if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
  }
}

}  // namespace detail

// Multivariate t in the tangent space: y = Exp(mu, scale * Z * sqrt(nu/W)),
// Z standard normal, W ~ chi^2_nu. On the sphere, draws whose tangent norm
// reaches the cut locus are rejected and redrawn.
inline ManifoldPoint sample_tangent_t(const ManifoldPoint& mu, double scale, double nu,
                                      RandomStream& rng) {
  if (!(nu > 0.0)) throw std::domain_error("sample_tangent_t: nu must be positive");
  if (!(scale > 0.0)) throw std::domain_error("sample_tangent_t: scale must be positive");
  const Eigen::MatrixXd B = tangent_basis(mu);
  for (int attempt = 0; attempt < 10000; ++attempt) {
    Eigen::VectorXd z(B.cols());
    for (int i = 0; i < z.size(); ++i) z[i] = rng.normal();
    const double chi2 = 2.0 * detail::sample_gamma(0.5 * nu, rng);
    const Eigen::VectorXd v = B * (scale * std::sqrt(nu / chi2) * z);
    if (mu.tag.kind == ManifoldKind::Sphere && v.norm() >= specfun::kPi) continue;
    return exp_map(mu, v);
  }
  throw std::runtime_error("sample_tangent_t: rejection loop failed to terminate");
}

// Two-component Riemannian normal mixture sharing the mean.
class ContaminatedNormal {
 public:
  ContaminatedNormal(const ManifoldPoint& mu, double sigma_main, double sigma_out,
                     double p_out)
      : mu_(mu),
        main_(mu.tag.kind, mu.tag.param, sigma_main),
        out_(mu.tag.kind, mu.tag.param, sigma_out),
        p_out_(p_out) {
    if (!(p_out >= 0.0 && p_out <= 1.0))
      throw std::domain_error("ContaminatedNormal: p_out must lie in [0,1]");
  }

  ManifoldPoint sample(RandomStream& rng) const { return sample_with_component(rng).first; }

  // Draw plus which component produced it (true for the outlier component).
  std::pair<ManifoldPoint, bool> sample_with_component(RandomStream& rng) const {
    const bool outlier = rng.uniform01() < p_out_;
    return {sample_riemannian_normal(mu_, outlier ? out_ : main_, rng), outlier};
  }

 private:
  ManifoldPoint mu_;
  RadialNormalDistribution main_, out_;
  double p_out_;
};

inline ManifoldPoint sample_contaminated(const ManifoldPoint& mu, double sigma_main,
                                         double sigma_out, double p_out,
                                         RandomStream& rng) {
  return ContaminatedNormal(mu, sigma_main, sigma_out, p_out).sample(rng);
}

}  // namespace rgr
