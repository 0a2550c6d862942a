#pragma once

// Manifold backends: the unit sphere S^n, the hyperboloid model of H^n,
// Kendall's planar shape space Sigma_2^K, and flat Euclidean space. Provides
// exp/log/distance, parallel transport, and the adjoint derivatives of the
// exponential map used by the regression gradients.
//
// Shape points are stored as a concrete pre-shape representative (2K reals,
// interleaved re/im). Operations whose result depends on the representative
// (log, transport) express their output at the argument's own representative,
// so a caller that keeps representatives fixed per fit stays consistent.

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "rgr/specfun.hpp"

namespace rgr {

enum class ManifoldKind { Sphere, Hyperbolic, KendallShape, Euclidean };

struct CutLocusError : std::runtime_error {
  explicit CutLocusError(const std::string& what,
                         std::size_t index = static_cast<std::size_t>(-1))
      : std::runtime_error(what), observation_index(index) {}
  std::size_t observation_index;
};

struct ManifoldTag {
  ManifoldKind kind = ManifoldKind::Sphere;
  int param = 2;  // n for sphere/hyperbolic/euclidean, K for shape

  static ManifoldTag sphere(int n) {
    check(n >= 1, "sphere requires n >= 1");
    return {ManifoldKind::Sphere, n};
  }
  static ManifoldTag hyperbolic(int n) {
    check(n >= 1, "hyperbolic requires n >= 1");
    return {ManifoldKind::Hyperbolic, n};
  }
  static ManifoldTag kendall_shape(int K) {
    check(K >= 3, "kendall shape requires K >= 3");
    return {ManifoldKind::KendallShape, K};
  }
  static ManifoldTag euclidean(int n) {
    check(n >= 1, "euclidean requires n >= 1");
    return {ManifoldKind::Euclidean, n};
  }

  int intrinsic_dim() const {
    return kind == ManifoldKind::KendallShape ? 2 * param - 4 : param;
  }
  int ambient_dim() const {
    switch (kind) {
      case ManifoldKind::Sphere:
      case ManifoldKind::Hyperbolic: return param + 1;
      case ManifoldKind::KendallShape: return 2 * param;
      case ManifoldKind::Euclidean: return param;
    }
    return 0;
  }

  bool operator==(const ManifoldTag& o) const {
    return kind == o.kind && param == o.param;
  }
  bool operator!=(const ManifoldTag& o) const { return !(*this == o); }

  std::string name() const {
    switch (kind) {
      case ManifoldKind::Sphere: return "sphere(" + std::to_string(param) + ")";
      case ManifoldKind::Hyperbolic: return "hyperbolic(" + std::to_string(param) + ")";
      case ManifoldKind::KendallShape: return "shape(" + std::to_string(param) + ")";
      case ManifoldKind::Euclidean: return "euclidean(" + std::to_string(param) + ")";
    }
    return "?";
  }

 private:
  static void check(bool ok, const char* msg) {
    if (!ok) throw std::invalid_argument(msg);
  }
};

struct ManifoldPoint {
  ManifoldTag tag;
  Eigen::VectorXd coords;
};

struct TangentVector {
  ManifoldPoint base;
  Eigen::VectorXd vec;
};

namespace detail {

inline void require_same_tag(const ManifoldTag& a, const ManifoldTag& b,
                             const char* where) {
  if (a != b)
    throw std::invalid_argument(std::string(where) + ": manifold tags differ (" +
                                a.name() + " vs " + b.name() + ")");
}

inline double mink_dot(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
  return -a[0] * b[0] + a.tail(a.size() - 1).dot(b.tail(b.size() - 1));
}

using ComplexMap = Eigen::Map<const Eigen::VectorXcd>;
using ComplexMapMut = Eigen::Map<Eigen::VectorXcd>;

inline ComplexMap as_complex(const Eigen::VectorXd& v) {
  return ComplexMap(reinterpret_cast<const std::complex<double>*>(v.data()),
                    v.size() / 2);
}
inline Eigen::VectorXd from_complex(const Eigen::VectorXcd& z) {
  Eigen::VectorXd out(2 * z.size());
  ComplexMapMut(reinterpret_cast<std::complex<double>*>(out.data()), z.size()) = z;
  return out;
}

// <a, b> = sum a_m conj(b_m)
inline std::complex<double> herm(const Eigen::VectorXcd& a, const Eigen::VectorXcd& b) {
  return (b.conjugate().array() * a.array()).sum();
}

}  // namespace detail

// Metric inner product of two ambient vectors at a common base point.
inline double metric_inner(const ManifoldPoint& base, const Eigen::VectorXd& a,
                           const Eigen::VectorXd& b) {
  if (base.tag.kind == ManifoldKind::Hyperbolic) return detail::mink_dot(a, b);
  return a.dot(b);  // sphere, shape (real part of hermitian), euclidean
}

inline double metric_inner(const TangentVector& a, const TangentVector& b) {
  detail::require_same_tag(a.base.tag, b.base.tag, "metric_inner");
  return metric_inner(a.base, a.vec, b.vec);
}

inline double tangent_norm(const TangentVector& v) {
  const double q = metric_inner(v.base, v.vec, v.vec);
  return q > 0.0 ? std::sqrt(q) : 0.0;
}

// Project an ambient vector onto the tangent space at p.
inline Eigen::VectorXd project_to_tangent(const ManifoldPoint& p,
                                          const Eigen::VectorXd& w) {
  switch (p.tag.kind) {
    case ManifoldKind::Sphere:
      return w - p.coords.dot(w) * p.coords;
    case ManifoldKind::Hyperbolic:
      // <p,p>_M = -1, so the projection adds <w,p>_M p
      return w + detail::mink_dot(w, p.coords) * p.coords;
    case ManifoldKind::KendallShape: {
      Eigen::VectorXcd z = detail::as_complex(p.coords);
      Eigen::VectorXcd u = detail::as_complex(w);
      u.array() -= u.mean();
      u -= detail::herm(u, z) * z;
      return detail::from_complex(u);
    }
    case ManifoldKind::Euclidean:
      return w;
  }
  return w;
}

inline TangentVector tangent(const ManifoldPoint& p, const Eigen::VectorXd& ambient) {
  return {p, project_to_tangent(p, ambient)};
}

inline TangentVector zero_tangent(const ManifoldPoint& p) {
  return {p, Eigen::VectorXd::Zero(p.coords.size())};
}

// Pull a nearly-valid ambient vector back onto the manifold. Used after
// closed-form updates to stop roundoff drift from accumulating.
inline Eigen::VectorXd normalize_coords(const ManifoldTag& tag, Eigen::VectorXd c) {
  switch (tag.kind) {
    case ManifoldKind::Sphere:
      return c / c.norm();
    case ManifoldKind::Hyperbolic: {
      const double q = -detail::mink_dot(c, c);
      if (!(q > 0.0) || c[0] <= 0.0)
        throw std::invalid_argument("hyperbolic point left the upper sheet");
      return c / std::sqrt(q);
    }
    case ManifoldKind::KendallShape: {
      Eigen::VectorXcd z = detail::as_complex(c);
      z.array() -= z.mean();
      const double n = std::sqrt(detail::herm(z, z).real());
      if (!(n > 0.0)) throw std::invalid_argument("degenerate shape configuration");
      return detail::from_complex((z / n).eval());
    }
    case ManifoldKind::Euclidean:
      return c;
  }
  return c;
}

// Construct a point, validating the manifold invariants.
inline ManifoldPoint make_point(const ManifoldTag& tag, Eigen::VectorXd coords,
                                double tol = 1e-10) {
  if (coords.size() != tag.ambient_dim())
    throw std::invalid_argument("make_point: wrong ambient dimension for " + tag.name());
  switch (tag.kind) {
    case ManifoldKind::Sphere:
      if (std::abs(coords.norm() - 1.0) > tol)
        throw std::invalid_argument("make_point: sphere point must have unit norm");
      break;
    case ManifoldKind::Hyperbolic:
      if (std::abs(detail::mink_dot(coords, coords) + 1.0) > tol || coords[0] <= 0.0)
        throw std::invalid_argument(
            "make_point: hyperboloid point must satisfy <p,p>_M = -1, p1 > 0");
      break;
    case ManifoldKind::KendallShape: {
      const Eigen::VectorXcd z = detail::as_complex(coords);
      if (std::abs(z.sum()) > tol * z.size() ||
          std::abs(std::sqrt(detail::herm(z, z).real()) - 1.0) > tol)
        throw std::invalid_argument(
            "make_point: pre-shape must be centered with unit norm");
      break;
    }
    case ManifoldKind::Euclidean:
      break;
  }
  return {tag, std::move(coords)};
}

namespace detail {

inline double clamped_acos(double x) { return std::acos(std::min(1.0, std::max(-1.0, x))); }
inline double clamped_acosh(double x) { return std::acosh(std::max(1.0, x)); }

// Optimal rotation e^{i theta*} aligning z2 to z1, as a unit complex number.
inline std::complex<double> align_phase(const Eigen::VectorXcd& z1,
                                        const Eigen::VectorXcd& z2) {
  const std::complex<double> ip = herm(z1, z2);
  const double a = std::abs(ip);
  if (a < 1e-12)
    throw CutLocusError("shape alignment undefined for orthogonal pre-shapes");
  return ip / a;
}

}  // namespace detail

inline double distance(const ManifoldPoint& p1, const ManifoldPoint& p2) {
  detail::require_same_tag(p1.tag, p2.tag, "distance");
  switch (p1.tag.kind) {
    case ManifoldKind::Sphere:
      return detail::clamped_acos(p1.coords.dot(p2.coords));
    case ManifoldKind::Hyperbolic:
      return detail::clamped_acosh(-detail::mink_dot(p1.coords, p2.coords));
    case ManifoldKind::KendallShape: {
      const auto z1 = detail::as_complex(p1.coords);
      const auto z2 = detail::as_complex(p2.coords);
      return detail::clamped_acos(std::abs(detail::herm(z1, z2)));
    }
    case ManifoldKind::Euclidean:
      return (p1.coords - p2.coords).norm();
  }
  return 0.0;
}

inline ManifoldPoint exp_map(const ManifoldPoint& p, const TangentVector& v) {
  detail::require_same_tag(p.tag, v.base.tag, "exp_map");
  if ((p.coords - v.base.coords).lpNorm<Eigen::Infinity>() > 1e-9)
    throw std::invalid_argument("exp_map: tangent vector is based elsewhere");
  const double nv = tangent_norm(v);
  switch (p.tag.kind) {
    case ManifoldKind::Sphere: {
      if (nv < 1e-14) return p;
      return {p.tag, normalize_coords(p.tag, std::cos(nv) * p.coords +
                                                 std::sin(nv) / nv * v.vec)};
    }
    case ManifoldKind::Hyperbolic: {
      if (nv < 1e-14) return p;
      return {p.tag, normalize_coords(p.tag, std::cosh(nv) * p.coords +
                                                 std::sinh(nv) / nv * v.vec)};
    }
    case ManifoldKind::KendallShape: {
      if (nv < 1e-14) return p;
      return {p.tag, normalize_coords(p.tag, std::cos(nv) * p.coords +
                                                 std::sin(nv) / nv * v.vec)};
    }
    case ManifoldKind::Euclidean:
      return {p.tag, p.coords + v.vec};
  }
  return p;
}

inline ManifoldPoint exp_map(const ManifoldPoint& p, const Eigen::VectorXd& vec) {
  return exp_map(p, TangentVector{p, vec});
}

inline TangentVector log_map(const ManifoldPoint& p1, const ManifoldPoint& p2) {
  detail::require_same_tag(p1.tag, p2.tag, "log_map");
  switch (p1.tag.kind) {
    case ManifoldKind::Sphere: {
      const double ip = std::min(1.0, std::max(-1.0, p1.coords.dot(p2.coords)));
      const double d = std::acos(ip);
      if (d > specfun::kPi - 1e-6)
        throw CutLocusError("log_map: sphere points are (near-)antipodal");
      const Eigen::VectorXd dir = p2.coords - ip * p1.coords;
      const double nd = dir.norm();
      if (nd < 1e-14) return zero_tangent(p1);
      return {p1, (d / nd) * dir};
    }
    case ManifoldKind::Hyperbolic: {
      const double ip = detail::mink_dot(p1.coords, p2.coords);
      const double d = detail::clamped_acosh(-ip);
      const Eigen::VectorXd dir = p2.coords + ip * p1.coords;
      const double q = detail::mink_dot(dir, dir);
      if (!(q > 1e-28)) return zero_tangent(p1);
      return {p1, (d / std::sqrt(q)) * dir};
    }
    case ManifoldKind::KendallShape: {
      const auto z1v = detail::as_complex(p1.coords);
      const auto z2v = detail::as_complex(p2.coords);
      const Eigen::VectorXcd z1 = z1v, z2 = z2v;
      const std::complex<double> phase = detail::align_phase(z1, z2);
      const double a = std::min(1.0, std::abs(detail::herm(z1, z2)));
      const double d = std::acos(a);
      const Eigen::VectorXcd dir = z2 * phase - a * z1;
      const double nd = std::sqrt(detail::herm(dir, dir).real());
      if (nd < 1e-14) return zero_tangent(p1);
      return {p1, detail::from_complex(((d / nd) * dir).eval())};
    }
    case ManifoldKind::Euclidean:
      return {p1, p2.coords - p1.coords};
  }
  return zero_tangent(p1);
}

// Parallel transport of v along the minimizing geodesic from its base to p2.
// Uses the split form (rotate the along-geodesic component, keep the rest),
// which is exactly norm-preserving and stable for short geodesics. The output
// is re-projected at p2: in particular, when the endpoints agree to within
// the acos resolution the rotation degenerates to the identity, and the
// projection absorbs the residual first-order tilt.
inline TangentVector parallel_transport(const TangentVector& v, const ManifoldPoint& p2) {
  const ManifoldPoint& p1 = v.base;
  detail::require_same_tag(p1.tag, p2.tag, "parallel_transport");
  switch (p1.tag.kind) {
    case ManifoldKind::Sphere: {
      const double ip = std::min(1.0, std::max(-1.0, p1.coords.dot(p2.coords)));
      const double d = std::acos(ip);
      if (d > specfun::kPi - 1e-6)
        throw CutLocusError("parallel_transport: sphere points are (near-)antipodal");
      const Eigen::VectorXd dir = p2.coords - ip * p1.coords;
      const double nd = dir.norm();
      if (nd < 1e-14) return {p2, project_to_tangent(p2, v.vec)};
      const Eigen::VectorXd w = dir / nd;
      const double c = v.vec.dot(w);
      return {p2, project_to_tangent(
                      p2, v.vec - c * w + c * (std::cos(d) * w - std::sin(d) * p1.coords))};
    }
    case ManifoldKind::Hyperbolic: {
      const double ip = detail::mink_dot(p1.coords, p2.coords);
      const double d = detail::clamped_acosh(-ip);
      const Eigen::VectorXd dir = p2.coords + ip * p1.coords;
      const double q = detail::mink_dot(dir, dir);
      if (!(q > 1e-28)) return {p2, project_to_tangent(p2, v.vec)};
      const Eigen::VectorXd w = dir / std::sqrt(q);
      const double c = detail::mink_dot(v.vec, w);
      return {p2, project_to_tangent(
                      p2, v.vec - c * w + c * (std::cosh(d) * w + std::sinh(d) * p1.coords))};
    }
    case ManifoldKind::KendallShape: {
      const Eigen::VectorXcd z1 = detail::as_complex(p1.coords);
      const Eigen::VectorXcd z2 = detail::as_complex(p2.coords);
      const Eigen::VectorXcd u = detail::as_complex(v.vec);
      const std::complex<double> phase = detail::align_phase(z1, z2);
      const Eigen::VectorXcd z2s = z2 * phase;
      const double a = std::min(1.0, std::abs(detail::herm(z1, z2)));
      const Eigen::VectorXcd dir = z2s - a * z1;
      const double b = std::sqrt(detail::herm(dir, dir).real());
      if (b < 1e-14) return {p2, project_to_tangent(p2, v.vec)};
      const Eigen::VectorXcd zt = dir / b;
      const std::complex<double> c1 = detail::herm(u, z1);
      const std::complex<double> c2 = detail::herm(u, zt);
      // rotate the (z1, zt) plane by the geodesic angle, phase-align to z2's
      // own representative
      Eigen::VectorXcd out = u - c1 * z1 - c2 * zt + (a * c1 - b * c2) * z1 +
                             (b * c1 + a * c2) * zt;
      out /= phase;
      return {p2, project_to_tangent(p2, detail::from_complex(out))};
    }
    case ManifoldKind::Euclidean:
      return {p2, v.vec};
  }
  return {p2, v.vec};
}

namespace detail {

// Adjoints of the exponential-map derivatives via Jacobi-field eigenbases:
// transport e back to p, then rescale the components relative to the
// geodesic direction. `dp` selects d_pExp^† (cos family) over d_vExp^† (sinc
// family). The shape backend carries an extra double-frequency component
// along i*Vx (the complex structure direction, sectional curvature 4).
inline TangentVector adjoint_dexp(const ManifoldPoint& p, const Eigen::VectorXd& vx,
                                  const TangentVector& e, bool dp) {
  TangentVector g = parallel_transport(e, p);
  const double nv = std::sqrt(std::max(0.0, metric_inner(p, vx, vx)));
  if (nv < 1e-14) return g;
  switch (p.tag.kind) {
    case ManifoldKind::Sphere: {
      const Eigen::VectorXd vh = vx / nv;
      const double ct = g.vec.dot(vh);
      const Eigen::VectorXd gperp = g.vec - ct * vh;
      const double coef = dp ? std::cos(nv) : std::sin(nv) / nv;
      return {p, coef * gperp + ct * vh};
    }
    case ManifoldKind::Hyperbolic: {
      const Eigen::VectorXd vh = vx / nv;
      const double ct = mink_dot(g.vec, vh);
      const Eigen::VectorXd gperp = g.vec - ct * vh;
      const double coef = dp ? std::cosh(nv) : std::sinh(nv) / nv;
      return {p, coef * gperp + ct * vh};
    }
    case ManifoldKind::KendallShape: {
      const Eigen::VectorXcd vhc = as_complex(vx) / nv;
      const Eigen::VectorXcd gc = as_complex(g.vec);
      const Eigen::VectorXcd jvh =
          (std::complex<double>(0.0, 1.0) * vhc.array()).matrix();
      // real-metric components along Vx, along i*Vx, and the rest
      const double cw = herm(gc, jvh).real();
      const double ct = herm(gc, vhc).real();
      const Eigen::VectorXcd rest = gc - cw * jvh - ct * vhc;
      const double coef_rest = dp ? std::cos(nv) : std::sin(nv) / nv;
      const double coef_w = dp ? std::cos(2.0 * nv) : std::sin(2.0 * nv) / (2.0 * nv);
      return {p, from_complex((coef_rest * rest + coef_w * cw * jvh + ct * vhc).eval())};
    }
    case ManifoldKind::Euclidean:
      return g;
  }
  return g;
}

inline Eigen::VectorXd combine_velocity(const std::vector<TangentVector>& V,
                                        const Eigen::VectorXd& x) {
  if (V.empty()) throw std::invalid_argument("combine_velocity: empty velocity list");
  if (static_cast<int>(V.size()) != x.size())
    throw std::invalid_argument("combine_velocity: covariate/velocity size mismatch");
  Eigen::VectorXd vx = Eigen::VectorXd::Zero(V[0].vec.size());
  for (std::size_t j = 0; j < V.size(); ++j) vx += x[static_cast<int>(j)] * V[j].vec;
  return vx;
}

}  // namespace detail

// d_pExp(p, Vx)^dagger e, for e tangent at Exp(p, Vx). Result is tangent at p.
inline TangentVector adjoint_dexp_p(const ManifoldPoint& p,
                                    const std::vector<TangentVector>& V,
                                    const Eigen::VectorXd& x, const TangentVector& e) {
  return detail::adjoint_dexp(p, detail::combine_velocity(V, x), e, true);
}

inline TangentVector adjoint_dexp_v(const ManifoldPoint& p,
                                    const std::vector<TangentVector>& V,
                                    const Eigen::VectorXd& x, const TangentVector& e) {
  return detail::adjoint_dexp(p, detail::combine_velocity(V, x), e, false);
}

// Single-velocity overloads taking Vx directly.
inline TangentVector adjoint_dexp_p(const ManifoldPoint& p, const Eigen::VectorXd& vx,
                                    const TangentVector& e) {
  return detail::adjoint_dexp(p, vx, e, true);
}
inline TangentVector adjoint_dexp_v(const ManifoldPoint& p, const Eigen::VectorXd& vx,
                                    const TangentVector& e) {
  return detail::adjoint_dexp(p, vx, e, false);
}

// ---------------------------------------------------------------------------
// Kendall shape helpers

// Centered, unit-norm pre-shape representative of a landmark configuration.
inline ManifoldPoint preshape(const Eigen::VectorXcd& landmarks) {
  if (landmarks.size() < 3)
    throw std::invalid_argument("preshape: need at least 3 landmarks");
  Eigen::VectorXcd z = landmarks;
  z.array() -= z.mean();
  const double n = std::sqrt(detail::herm(z, z).real());
  if (n < 1e-14)
    throw std::invalid_argument("preshape: coincident landmarks (zero norm)");
  z /= n;
  return {ManifoldTag::kendall_shape(static_cast<int>(landmarks.size())),
          detail::from_complex(z)};
}

// Rotate z2's representative so that <z1, result> is real and positive.
inline ManifoldPoint align(const ManifoldPoint& z1, const ManifoldPoint& z2) {
  detail::require_same_tag(z1.tag, z2.tag, "align");
  if (z1.tag.kind != ManifoldKind::KendallShape)
    throw std::invalid_argument("align: shape points required");
  const Eigen::VectorXcd a = detail::as_complex(z1.coords);
  const Eigen::VectorXcd b = detail::as_complex(z2.coords);
  const std::complex<double> phase = detail::align_phase(a, b);
  return {z2.tag, detail::from_complex((b * phase).eval())};
}

// ---------------------------------------------------------------------------
// Poincare ball conversions for the hyperboloid model

inline Eigen::VectorXd poincare_from_hyperboloid(const ManifoldPoint& p) {
  if (p.tag.kind != ManifoldKind::Hyperbolic)
    throw std::invalid_argument("poincare_from_hyperboloid: hyperbolic point required");
  return p.coords.tail(p.coords.size() - 1) / (p.coords[0] + 1.0);
}

inline ManifoldPoint hyperboloid_from_poincare(const Eigen::VectorXd& q) {
  const double s = q.squaredNorm();
  if (!(s < 1.0))
    throw std::invalid_argument("hyperboloid_from_poincare: point must satisfy |q| < 1");
  Eigen::VectorXd c(q.size() + 1);
  c[0] = (1.0 + s) / (1.0 - s);
  c.tail(q.size()) = 2.0 * q / (1.0 - s);
  return {ManifoldTag::hyperbolic(static_cast<int>(q.size())),
          normalize_coords(ManifoldTag::hyperbolic(static_cast<int>(q.size())), c)};
}

// Orthonormal basis of the tangent space at p, as columns (metric-orthonormal).
inline Eigen::MatrixXd tangent_basis(const ManifoldPoint& p) {
  const int amb = static_cast<int>(p.coords.size());
  const int n = p.tag.intrinsic_dim();
  switch (p.tag.kind) {
    case ManifoldKind::Sphere: {
      // Householder reflection mapping e1 to +-p; remaining columns span p-perp
      Eigen::VectorXd u = p.coords;
      u[0] += (p.coords[0] >= 0.0 ? 1.0 : -1.0);
      const double un = u.squaredNorm();
      Eigen::MatrixXd B(amb, n);
      for (int j = 0; j < n; ++j) {
        Eigen::VectorXd ej = Eigen::VectorXd::Zero(amb);
        ej[j + 1] = 1.0;
        B.col(j) = ej - (2.0 * u.dot(ej) / un) * u;
      }
      return B;
    }
    case ManifoldKind::Hyperbolic: {
      // project ambient axes, Gram-Schmidt in the Minkowski metric
      Eigen::MatrixXd B(amb, n);
      for (int j = 0; j < n; ++j) {
        Eigen::VectorXd w = Eigen::VectorXd::Zero(amb);
        w[j + 1] = 1.0;
        w = project_to_tangent(p, w);
        for (int l = 0; l < j; ++l) w -= detail::mink_dot(w, B.col(l)) * B.col(l);
        const double nn = std::sqrt(std::max(detail::mink_dot(w, w), 0.0));
        if (nn < 1e-10)
          throw std::runtime_error("tangent_basis: degenerate hyperbolic basis");
        B.col(j) = w / nn;
      }
      return B;
    }
    case ManifoldKind::Euclidean:
      return Eigen::MatrixXd::Identity(amb, n);
    case ManifoldKind::KendallShape:
      throw std::invalid_argument("tangent_basis: not provided for shape space");
  }
  return {};
}

}  // namespace rgr
