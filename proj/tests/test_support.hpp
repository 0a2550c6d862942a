#pragma once

// Shared helpers for the test suites: deterministic random points/tangents on
// each manifold and finite-difference oracles for the exponential-map
// derivatives. The FD transport for sphere/hyperbolic moves along a geodesic
// whose direction and length are known analytically, which keeps the
// difference quotients clean at small steps.

#include <Eigen/Dense>
#include <cmath>

#include "rgr/manifold.hpp"
#include "rgr/rng.hpp"

namespace testsup {

using rgr::ManifoldKind;
using rgr::ManifoldPoint;
using rgr::ManifoldTag;
using rgr::TangentVector;

inline ManifoldPoint random_point(const ManifoldTag& tag, rgr::RandomStream& rng) {
  switch (tag.kind) {
    case ManifoldKind::Sphere: {
      Eigen::VectorXd c(tag.ambient_dim());
      for (int i = 0; i < c.size(); ++i) c[i] = rng.normal();
      return {tag, c / c.norm()};
    }
    case ManifoldKind::Hyperbolic: {
      Eigen::VectorXd c(tag.ambient_dim());
      c[0] = 0.0;
      for (int i = 1; i < c.size(); ++i) c[i] = 0.7 * rng.normal();
      c[0] = std::sqrt(1.0 + c.tail(c.size() - 1).squaredNorm());
      return {tag, c};
    }
    case ManifoldKind::KendallShape: {
      Eigen::VectorXcd z(tag.param);
      for (int i = 0; i < z.size(); ++i) z[i] = {rng.normal(), rng.normal()};
      return rgr::preshape(z);
    }
    case ManifoldKind::Euclidean: {
      Eigen::VectorXd c(tag.ambient_dim());
      for (int i = 0; i < c.size(); ++i) c[i] = rng.normal();
      return {tag, c};
    }
  }
  throw std::logic_error("random_point");
}

inline TangentVector random_tangent(const ManifoldPoint& p, double scale,
                                    rgr::RandomStream& rng) {
  Eigen::VectorXd w(p.coords.size());
  for (int i = 0; i < w.size(); ++i) w[i] = rng.normal();
  Eigen::VectorXd t = rgr::project_to_tangent(p, w);
  const double n = std::sqrt(std::max(rgr::metric_inner(p, t, t), 1e-300));
  return {p, (scale / n) * t};
}

// Parallel transport along the geodesic t -> Exp(p, t u) with t, u known:
// avoids recovering direction/length from the endpoints.
inline TangentVector transport_along_ray(const ManifoldPoint& p,
                                         const Eigen::VectorXd& u, double t,
                                         const Eigen::VectorXd& v,
                                         const ManifoldPoint& dest) {
  const double nu = std::sqrt(rgr::metric_inner(p, u, u));
  if (nu * std::abs(t) < 1e-300) return {dest, v};
  const Eigen::VectorXd w = (t >= 0 ? 1.0 : -1.0) / nu * u;
  const double d = std::abs(t) * nu;
  const double c = rgr::metric_inner(p, v, w);
  if (p.tag.kind == ManifoldKind::Hyperbolic) {
    return {dest, v - c * w + c * (std::cosh(d) * w + std::sinh(d) * p.coords)};
  }
  return {dest, v - c * w + c * (std::cos(d) * w - std::sin(d) * p.coords)};
}

// Central finite difference of Exp in its base point: the variation
// F(t) = Exp(Exp(p, t u), transport of vx), projected to the tangent at yhat.
inline Eigen::VectorXd fd_dexp_p(const ManifoldPoint& p, const Eigen::VectorXd& vx,
                                 const TangentVector& u, const ManifoldPoint& yhat,
                                 double h = 1e-5) {
  auto F = [&](double t) {
    const ManifoldPoint pt = rgr::exp_map(p, (t * u.vec).eval());
    TangentVector moved = (p.tag.kind == ManifoldKind::KendallShape ||
                           p.tag.kind == ManifoldKind::Euclidean)
                              ? rgr::parallel_transport(TangentVector{p, vx}, pt)
                              : transport_along_ray(p, u.vec, t, vx, pt);
    moved.vec = rgr::project_to_tangent(pt, moved.vec);
    return rgr::exp_map(pt, moved.vec);
  };
  const Eigen::VectorXd diff = (F(h).coords - F(-h).coords) / (2.0 * h);
  return rgr::project_to_tangent(yhat, diff);
}

// Central finite difference of Exp in its velocity argument.
inline Eigen::VectorXd fd_dexp_v(const ManifoldPoint& p, const Eigen::VectorXd& vx,
                                 const TangentVector& u, const ManifoldPoint& yhat,
                                 double h = 1e-5) {
  const Eigen::VectorXd a = rgr::exp_map(p, (vx + h * u.vec).eval()).coords;
  const Eigen::VectorXd b = rgr::exp_map(p, (vx - h * u.vec).eval()).coords;
  return rgr::project_to_tangent(yhat, ((a - b) / (2.0 * h)).eval());
}

}  // namespace testsup
