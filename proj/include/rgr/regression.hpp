#pragma once

// Geodesic regression with M-type estimators: intrinsic mean, robust scale,
// loss/gradient evaluation through Jacobi-field adjoints or parallel
// transport, and the accept/reject gradient descent loop with adaptive step
// size and cutoff refresh.

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <utility>
#include <vector>

#include "rgr/losses.hpp"
#include "rgr/manifold.hpp"
#include "rgr/tuning.hpp"

namespace rgr {

struct Observation {
  Eigen::VectorXd x;  // k covariates (k may be 0 for location-only fits)
  ManifoldPoint y;
};

struct GeodesicModel {
  ManifoldPoint p;
  std::vector<TangentVector> V;  // k velocities, all based at p

  int num_covariates() const { return static_cast<int>(V.size()); }
};

enum class GradientMode { Jacobi, Transport };

struct SolverConfig {
  LossKind loss = LossKind::L2;
  double lambda_max = 1.0;
  double tol_rel = 1e-9;
  int max_iter = 2000;
  bool center_x = true;
  GradientMode gradient_mode = GradientMode::Jacobi;
  double target_efficiency = 0.95;  // sets c_H / c_T through the tuning solve
};

struct FitResult {
  GeodesicModel model;      // in centered covariate coordinates when center_x
  Eigen::VectorXd x_mean;   // the centering offset (zeros when center_x off)
  double final_loss = 0.0;
  int iterations = 0;  // accepted steps
  bool converged = false;
  std::vector<double> residual_norms;
  std::vector<double> loss_trace;  // loss after each accepted step, initial first
  std::optional<double> sigma_hat;  // MAD/xi, Huber/Tukey only
  std::optional<double> cutoff;     // c = c_kind * sigma_hat, Huber/Tukey only
  std::vector<double> cutoff_trace;  // cutoff in force at each accepted step

  // Model re-expressed at x = 0 in the original covariate coordinates.
  GeodesicModel uncentered() const {
    if (x_mean.size() == 0 || x_mean.isZero(0.0)) return model;
    Eigen::VectorXd shift = Eigen::VectorXd::Zero(model.p.coords.size());
    for (std::size_t j = 0; j < model.V.size(); ++j)
      shift -= x_mean[static_cast<int>(j)] * model.V[j].vec;
    GeodesicModel out;
    out.p = exp_map(model.p, shift);
    out.V.reserve(model.V.size());
    for (const auto& v : model.V) {
      TangentVector t = parallel_transport(v, out.p);
      t.vec = project_to_tangent(out.p, t.vec);
      out.V.push_back(std::move(t));
    }
    return out;
  }
};

// Sample intrinsic (Karcher) mean by fixed-point iteration on the log-mean.
inline ManifoldPoint intrinsic_mean(const std::vector<ManifoldPoint>& points,
                                    double tol = 1e-10, int max_iter = 1000) {
  if (points.empty()) throw std::invalid_argument("intrinsic_mean: empty input");
  for (const auto& q : points)
    detail::require_same_tag(points.front().tag, q.tag, "intrinsic_mean");
  ManifoldPoint p = points.front();
  const double n = static_cast<double>(points.size());
  for (int it = 0; it < max_iter; ++it) {
    Eigen::VectorXd g = Eigen::VectorXd::Zero(p.coords.size());
    for (const auto& q : points) g += log_map(p, q).vec;
    g /= n;
    if (std::sqrt(std::max(0.0, metric_inner(p, g, g))) <= tol) return p;
    p = exp_map(p, g);
  }
  throw std::runtime_error("intrinsic_mean: no convergence");
}

inline double frechet_variance(const std::vector<ManifoldPoint>& points,
                               const ManifoldPoint& mean) {
  if (points.empty()) throw std::invalid_argument("frechet_variance: empty input");
  double s = 0.0;
  for (const auto& q : points) {
    const double d = distance(mean, q);
    s += d * d;
  }
  return s / static_cast<double>(points.size());
}

namespace detail {

inline Eigen::VectorXd velocity_at(const GeodesicModel& m, const Eigen::VectorXd& x) {
  Eigen::VectorXd vx = Eigen::VectorXd::Zero(m.p.coords.size());
  for (std::size_t j = 0; j < m.V.size(); ++j) vx += x[static_cast<int>(j)] * m.V[j].vec;
  return vx;
}

inline double median_of(std::vector<double> v) {
  const std::size_t n = v.size();
  std::nth_element(v.begin(), v.begin() + n / 2, v.end());
  double hi = v[n / 2];
  if (n % 2 == 1) return hi;
  std::nth_element(v.begin(), v.begin() + n / 2 - 1, v.begin() + n / 2);
  return 0.5 * (v[n / 2 - 1] + hi);
}

}  // namespace detail

// Sum of rho(d(Exp(p, V x_i), y_i)).
inline double loss_value(const GeodesicModel& model, const std::vector<Observation>& data,
                         const LossSpec& spec) {
  double total = 0.0;
  for (const auto& ob : data) {
    const ManifoldPoint yhat = exp_map(model.p, detail::velocity_at(model, ob.x));
    total += rho(spec, distance(yhat, ob.y));
  }
  return total;
}

struct LossGradients {
  TangentVector p;
  std::vector<TangentVector> v;
};

// Gradients of the robust loss with respect to p and each v^j. Jacobi mode
// applies the exact adjoint derivatives of Exp; transport mode pulls each
// residual back with parallel transport instead.
inline LossGradients gradients(const GeodesicModel& model,
                               const std::vector<Observation>& data,
                               const LossSpec& spec,
                               GradientMode mode = GradientMode::Jacobi) {
  const int k = model.num_covariates();
  const bool jacobi = (mode == GradientMode::Jacobi);
  LossGradients g;
  g.p = zero_tangent(model.p);
  g.v.assign(k, zero_tangent(model.p));
  for (std::size_t i = 0; i < data.size(); ++i) {
    const auto& ob = data[i];
    try {
      const Eigen::VectorXd vx = detail::velocity_at(model, ob.x);
      const ManifoldPoint yhat = exp_map(model.p, vx);
      const TangentVector e = log_map(yhat, ob.y);
      const double r = tangent_norm(e);
      const double w = weight(spec, r);
      if (w == 0.0 || r == 0.0) continue;
      if (jacobi) {
        g.p.vec -= w * adjoint_dexp_p(model.p, vx, e).vec;
        const Eigen::VectorXd av = adjoint_dexp_v(model.p, vx, e).vec;
        for (int j = 0; j < k; ++j) g.v[j].vec -= (ob.x[j] * w) * av;
      } else {
        const Eigen::VectorXd back = parallel_transport(e, model.p).vec;
        g.p.vec -= w * back;
        for (int j = 0; j < k; ++j) g.v[j].vec -= (ob.x[j] * w) * back;
      }
    } catch (const CutLocusError& err) {
      throw CutLocusError(std::string(err.what()) + " (observation " +
                              std::to_string(i) + ")",
                          i);
    }
  }
  g.p.vec = project_to_tangent(model.p, g.p.vec);
  for (auto& gv : g.v) gv.vec = project_to_tangent(model.p, gv.vec);
  return g;
}

// Squared-error pair for one trial: (d(p_hat, p)^2, ||Gamma(v_hat^j) - v^j||^2).
inline std::pair<double, std::vector<double>> mse_pair(const GeodesicModel& fitted,
                                                       const GeodesicModel& truth) {
  detail::require_same_tag(fitted.p.tag, truth.p.tag, "mse_pair");
  const double dp = distance(fitted.p, truth.p);
  std::vector<double> dv;
  dv.reserve(fitted.V.size());
  for (std::size_t j = 0; j < fitted.V.size(); ++j) {
    TangentVector moved = parallel_transport(fitted.V[j], truth.p);
    moved.vec = project_to_tangent(truth.p, moved.vec) - truth.V[j].vec;
    const double q = metric_inner(truth.p, moved.vec, moved.vec);
    dv.push_back(std::max(q, 0.0));
  }
  return {dp * dp, dv};
}

// Algorithm: initialize at the intrinsic mean with V = 0, then accept/reject
// gradient steps with doubling/halving step size; for Huber/Tukey the cutoff
// c = c_kind * MAD/xi is refreshed after every accepted step.
inline FitResult fit(const std::vector<Observation>& data, const SolverConfig& cfg) {
  if (data.empty()) throw std::invalid_argument("fit: empty data");
  if (!(cfg.tol_rel > 0.0)) throw std::invalid_argument("fit: tol_rel must be positive");
  if (!(cfg.lambda_max > 0.0))
    throw std::invalid_argument("fit: lambda_max must be positive");
  if (cfg.max_iter < 1) throw std::invalid_argument("fit: max_iter must be >= 1");
  const int k = static_cast<int>(data.front().x.size());
  if (static_cast<int>(data.size()) < k + 1)
    throw std::invalid_argument("fit: need at least k+1 observations");
  for (const auto& ob : data) {
    detail::require_same_tag(data.front().y.tag, ob.y.tag, "fit");
    if (static_cast<int>(ob.x.size()) != k)
      throw std::invalid_argument("fit: ragged covariates");
  }

  // covariate centering
  Eigen::VectorXd xbar = Eigen::VectorXd::Zero(k);
  if (cfg.center_x && k > 0) {
    for (const auto& ob : data) xbar += ob.x;
    xbar /= static_cast<double>(data.size());
  }
  std::vector<Observation> obs;
  obs.reserve(data.size());
  for (const auto& ob : data) obs.push_back({ob.x - xbar, ob.y});

  std::vector<ManifoldPoint> ys;
  ys.reserve(obs.size());
  for (const auto& ob : obs) ys.push_back(ob.y);

  GeodesicModel model{intrinsic_mean(ys), {}};
  model.V.assign(k, zero_tangent(model.p));

  FitResult result;
  result.x_mean = xbar;

  const bool robust_scale = loss_needs_cutoff(cfg.loss);
  const int n_dim = model.p.tag.intrinsic_dim();
  double c_factor = 0.0, xi_n = 0.0;
  if (robust_scale) {
    xi_n = tuning::xi(n_dim);
    c_factor = tuning::solve_cutoff(cfg.loss, n_dim, cfg.target_efficiency);
  }

  auto residual_norms = [&](const GeodesicModel& m) {
    std::vector<double> r;
    r.reserve(obs.size());
    for (const auto& ob : obs)
      r.push_back(distance(exp_map(m.p, detail::velocity_at(m, ob.x)), ob.y));
    return r;
  };

  LossSpec spec{cfg.loss, 0.0};
  bool perfect_fit = false;
  auto refresh_cutoff = [&](const GeodesicModel& m) {
    const auto r = residual_norms(m);
    const double mad = detail::median_of(r);
    if (mad <= 0.0) {
      const double worst = *std::max_element(r.begin(), r.end());
      if (worst <= 1e-13) {  // every datum fitted exactly
        perfect_fit = true;
        return;
      }
      // more than half the data fitted exactly: a zero scale would disable
      // the loss entirely, so keep the current cutoff (or bootstrap one from
      // the mean residual before the first step)
      if (!result.cutoff) {
        double mean_r = 0.0;
        for (double ri : r) mean_r += ri;
        mean_r /= static_cast<double>(r.size());
        result.sigma_hat = mean_r / xi_n;
        result.cutoff = c_factor * *result.sigma_hat;
        spec.cutoff = *result.cutoff;
      }
      return;
    }
    result.sigma_hat = mad / xi_n;
    result.cutoff = c_factor * *result.sigma_hat;
    spec.cutoff = *result.cutoff;
  };
  if (robust_scale) refresh_cutoff(model);

  double loss = loss_value(model, obs, spec);
  result.loss_trace.push_back(loss);

  auto finish = [&](const GeodesicModel& m, bool converged) {
    result.model = m;
    result.final_loss = loss_value(m, obs, spec);
    result.converged = converged;
    result.residual_norms = residual_norms(m);
    return result;
  };

  if (perfect_fit) return finish(model, true);

  auto compute_gradients = [&](const GeodesicModel& m) {
    return gradients(m, obs, spec, cfg.gradient_mode);
  };

  LossGradients grad = compute_gradients(model);
  double gp_norm = tangent_norm(grad.p);
  double lambda = std::min(0.1, cfg.lambda_max / std::max(gp_norm, 1e-300));
  double lambda_rejected = std::numeric_limits<double>::infinity();

  int accepted = 0;
  // Loss differences at the evaluation-noise scale are ties. With an
  // ordinary tolerance a tie is just a sub-tolerance decrease and ends the
  // run. When the caller asks for a tolerance below the noise floor, ties are
  // instead accepted and iterated -- the gradient still contracts the iterate
  // inside a loss-flat basin -- until the parameter motion is negligible.
  constexpr double kTieEps = 1e-12;
  const bool polish = cfg.tol_rel <= kTieEps;
  for (int it = 0; it < cfg.max_iter; ++it) {
    // propose
    GeodesicModel trial;
    trial.p = exp_map(model.p, (-lambda) * grad.p.vec);
    trial.V.reserve(k);
    for (int j = 0; j < k; ++j) {
      TangentVector bundled{model.p, model.V[j].vec - lambda * grad.v[j].vec};
      TangentVector moved = parallel_transport(bundled, trial.p);
      const Eigen::VectorXd projected = project_to_tangent(trial.p, moved.vec);
      // drift control: transport output may only be off-tangent by roundoff
      if ((projected - moved.vec).lpNorm<Eigen::Infinity>() >
          1e-8 * std::max(1.0, moved.vec.norm()))
        throw std::runtime_error(
            "fit: tangent drift exceeded tolerance (drift=" +
            std::to_string((projected - moved.vec).lpNorm<Eigen::Infinity>()) +
            ", |v|=" + std::to_string(moved.vec.norm()) +
            ", step=" + std::to_string(lambda) +
            ", d=" + std::to_string(distance(model.p, trial.p)) + ")");
      moved.vec = projected;
      trial.V.push_back(std::move(moved));
    }
    const double trial_loss = loss_value(trial, obs, spec);
    const double rel = (loss - trial_loss) / std::max(loss, 1e-300);

    if (rel >= -kTieEps) {  // accept; differences below noise count as ties
      const bool tie = rel <= kTieEps;
      model = std::move(trial);
      ++accepted;
      result.loss_trace.push_back(trial_loss);  // the value the accept rule compared
      result.cutoff_trace.push_back(spec.cutoff);
      if (robust_scale) {
        refresh_cutoff(model);
        if (perfect_fit) {
          result.iterations = accepted;
          return finish(model, true);
        }
      }
      loss = loss_value(model, obs, spec);  // under the refreshed cutoff
      if (rel < cfg.tol_rel && (!tie || !polish)) {
        result.iterations = accepted;
        return finish(model, true);
      }
      grad = compute_gradients(model);
      gp_norm = tangent_norm(grad.p);
      double motion = gp_norm;
      for (const auto& gv : grad.v) motion += tangent_norm(gv);
      if (motion == 0.0 || (tie && polish && lambda * motion < 1e-13)) {
        result.iterations = accepted;
        return finish(model, true);
      }
      // On ties the loss cannot flag instability, so stay well inside the
      // last rejected step size: half of it is exactly the period-two orbit
      // of the stiffest mode, a quarter is safely damped.
      const double cap = tie ? 0.25 * lambda_rejected
                             : std::numeric_limits<double>::infinity();
      if (!tie) lambda_rejected *= 2.0;  // slowly re-open the ceiling
      lambda = std::min(std::min(2.0 * lambda, cap),
                        cfg.lambda_max / std::max(gp_norm, 1e-300));
    } else {
      lambda_rejected = lambda;
      lambda *= 0.5;
      if (lambda < 1e-15) {
        result.iterations = accepted;
        return finish(model, true);
      }
    }
  }
  result.iterations = accepted;
  return finish(model, false);
}

}  // namespace rgr
