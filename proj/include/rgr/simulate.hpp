#pragma once

// Simulation harness: MSE-vs-sample-size studies and relative-efficiency
// studies for the four estimators, with per-trial random streams so results
// are reproducible independently of execution order, and explicit accounting
// of failed trials.

#include <cstdint>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "rgr/regression.hpp"
#include "rgr/version.hpp"
#include "rgr/rnormal.hpp"

namespace rgr {

enum class NoiseKind { Normal, TangentT, Contaminated };

struct NoiseSpec {
  NoiseKind kind = NoiseKind::Normal;
  double sigma = 0.0;                       // Normal
  double scale = 0.0, nu = 0.0;             // TangentT
  double sigma_main = 0.0, sigma_out = 0.0, p_out = 0.0;  // Contaminated

  // sigma = 0 is the degenerate noiseless case
  static NoiseSpec normal(double sigma) {
    NoiseSpec n;
    n.kind = NoiseKind::Normal;
    n.sigma = sigma;
    return n;
  }
  static NoiseSpec tangent_t(double scale, double nu) {
    NoiseSpec n;
    n.kind = NoiseKind::TangentT;
    n.scale = scale;
    n.nu = nu;
    return n;
  }
  static NoiseSpec contaminated(double sigma_main, double sigma_out, double p_out) {
    NoiseSpec n;
    n.kind = NoiseKind::Contaminated;
    n.sigma_main = sigma_main;
    n.sigma_out = sigma_out;
    n.p_out = p_out;
    return n;
  }

  std::string name() const {
    switch (kind) {
      case NoiseKind::Normal: return "N";
      case NoiseKind::TangentT: return "T";
      case NoiseKind::Contaminated: return "C";
    }
    return "?";
  }
};

struct ExperimentSpec {
  GeodesicModel truth;  // intercept and velocities; covariate count = truth.V.size()
  NoiseSpec noise;
  std::vector<int> sample_sizes;
  int trials = 64;
  std::uint64_t seed = 0;
  std::vector<LossKind> losses = {LossKind::L2, LossKind::L1, LossKind::Huber,
                                  LossKind::Tukey};
  SolverConfig solver;
};

struct MseRow {
  std::string manifold;
  std::string noise;
  std::string loss;
  int sample_size = 0;
  int trials_ok = 0;
  int trials_failed = 0;
  double mse_p = 0.0;
  std::vector<double> mse_v;
  std::vector<int> failed_trials;  // indices of failed trials
};

struct MseTable {
  std::vector<MseRow> rows;

  void to_csv(std::ostream& os) const {
    std::size_t k = 0;
    for (const auto& r : rows) k = std::max(k, r.mse_v.size());
    os << "schema_version,manifold,noise,loss,n,trials_ok,trials_failed,mse_p";
    for (std::size_t j = 1; j <= k; ++j) os << ",mse_v" << j;
    os << "\n";
    os.precision(17);
    for (const auto& r : rows) {
      os << kSchemaVersion << ',' << r.manifold << ',' << r.noise << ',' << r.loss
         << ',' << r.sample_size << ',' << r.trials_ok << ',' << r.trials_failed << ','
         << r.mse_p;
      for (std::size_t j = 0; j < k; ++j)
        os << ',' << (j < r.mse_v.size() ? r.mse_v[j] : 0.0);
      os << "\n";
    }
  }

  std::string to_csv() const {
    std::ostringstream os;
    to_csv(os);
    return os.str();
  }

  const MseRow& find(LossKind loss, int n) const {
    for (const auto& r : rows)
      if (r.loss == loss_name(loss) && r.sample_size == n) return r;
    throw std::out_of_range("MseTable::find: no such row");
  }
};

namespace detail {

// substream id from the experiment coordinates, bijective enough to keep
// trials independent across (setting, trial)
inline std::uint64_t stream_id(std::uint64_t setting, std::uint64_t trial) {
  return setting * 0x100000000ULL + trial;
}

inline ManifoldPoint draw_noise(const ManifoldPoint& base, const NoiseSpec& noise,
                                const RadialNormalDistribution* main_radial,
                                const RadialNormalDistribution* out_radial,
                                RandomStream& rng) {
  switch (noise.kind) {
    case NoiseKind::Normal:
      return sample_riemannian_normal(base, *main_radial, rng);
    case NoiseKind::TangentT:
      return sample_tangent_t(base, noise.scale, noise.nu, rng);
    case NoiseKind::Contaminated: {
      const bool outlier = rng.uniform01() < noise.p_out;
      return sample_riemannian_normal(base, outlier ? *out_radial : *main_radial, rng);
    }
  }
  return base;
}

}  // namespace detail

// One simulated dataset for the given truth, covariates U[-1/2,1/2]^k.
inline std::vector<Observation> simulate_dataset(const GeodesicModel& truth,
                                                 const NoiseSpec& noise, int n,
                                                 RandomStream& rng) {
  const auto kind = truth.p.tag.kind;
  std::optional<RadialNormalDistribution> main_radial, out_radial;
  const bool noiseless = noise.kind == NoiseKind::Normal && noise.sigma == 0.0;
  if (noise.kind == NoiseKind::Normal && !noiseless)
    main_radial.emplace(kind, truth.p.tag.param, noise.sigma);
  if (noise.kind == NoiseKind::Contaminated) {
    main_radial.emplace(kind, truth.p.tag.param, noise.sigma_main);
    out_radial.emplace(kind, truth.p.tag.param, noise.sigma_out);
  }
  const int k = truth.num_covariates();
  std::vector<Observation> data;
  data.reserve(n);
  for (int i = 0; i < n; ++i) {
    Eigen::VectorXd x(k);
    for (int j = 0; j < k; ++j) x[j] = rng.uniform(-0.5, 0.5);
    Eigen::VectorXd vx = Eigen::VectorXd::Zero(truth.p.coords.size());
    for (int j = 0; j < k; ++j) vx += x[j] * truth.V[j].vec;
    const ManifoldPoint base = exp_map(truth.p, vx);
    data.push_back({x, noiseless
                           ? base
                           : detail::draw_noise(base, noise,
                                                main_radial ? &*main_radial : nullptr,
                                                out_radial ? &*out_radial : nullptr,
                                                rng)});
  }
  return data;
}

// MSE(p_hat), MSE(v_hat^j) over `trials` per (sample size, loss), averaged
// over the trials that converged; failures are counted, never dropped
// silently.
inline MseTable run_mse_experiment(const ExperimentSpec& spec) {
  if (spec.trials < 1) throw std::invalid_argument("run_mse_experiment: trials >= 1");
  const int k = spec.truth.num_covariates();
  MseTable table;
  for (std::size_t si = 0; si < spec.sample_sizes.size(); ++si) {
    const int n = spec.sample_sizes[si];
    if (n < k + 1)
      throw std::invalid_argument("run_mse_experiment: sample size below k+1");
    std::vector<MseRow> rows(spec.losses.size());
    for (std::size_t li = 0; li < spec.losses.size(); ++li) {
      rows[li].manifold = spec.truth.p.tag.name();
      rows[li].noise = spec.noise.name();
      rows[li].loss = loss_name(spec.losses[li]);
      rows[li].sample_size = n;
      rows[li].mse_v.assign(k, 0.0);
    }
    for (int trial = 0; trial < spec.trials; ++trial) {
      RandomStream rng(spec.seed, detail::stream_id(si, trial));
      const auto data = simulate_dataset(spec.truth, spec.noise, n, rng);
      for (std::size_t li = 0; li < spec.losses.size(); ++li) {
        auto cfg = spec.solver;
        cfg.loss = spec.losses[li];
        try {
          const auto res = fit(data, cfg);
          if (!res.converged) throw std::runtime_error("fit did not converge");
          const auto [dp2, dv2] = mse_pair(res.uncentered(), spec.truth);
          rows[li].mse_p += dp2;
          for (int j = 0; j < k; ++j) rows[li].mse_v[j] += dv2[j];
          rows[li].trials_ok += 1;
        } catch (const std::exception&) {
          rows[li].trials_failed += 1;
          rows[li].failed_trials.push_back(trial);
        }
      }
    }
    for (auto& r : rows) {
      if (r.trials_ok > 0) {
        r.mse_p /= r.trials_ok;
        for (auto& m : r.mse_v) m /= r.trials_ok;
      }
      table.rows.push_back(std::move(r));
    }
  }
  return table;
}

struct EfficiencyRow {
  std::string manifold;
  double sigma = 0.0;
  int sample_size = 0;
  int trials_ok = 0;
  int trials_failed = 0;
  // sample variances of the location estimates around the true mean
  double var_l2 = 0.0, var_l1 = 0.0, var_huber = 0.0, var_tukey = 0.0;

  double ratio_l1() const { return var_l2 / var_l1; }
  double ratio_huber() const { return var_l2 / var_huber; }
  double ratio_tukey() const { return var_l2 / var_tukey; }
};

struct EfficiencyTable {
  std::vector<EfficiencyRow> rows;

  void to_csv(std::ostream& os) const {
    os << "schema_version,manifold,sigma,n,trials_ok,trials_failed,"
          "ratio_l1,ratio_huber,ratio_tukey\n";
    os.precision(17);
    for (const auto& r : rows)
      os << kSchemaVersion << ',' << r.manifold << ',' << r.sigma << ','
         << r.sample_size << ',' << r.trials_ok << ',' << r.trials_failed << ','
         << r.ratio_l1() << ',' << r.ratio_huber() << ',' << r.ratio_tukey() << "\n";
  }

  std::string to_csv() const {
    std::ostringstream os;
    to_csv(os);
    return os.str();
  }
};

// Location-only (k = 0) relative efficiencies of the robust estimators
// against the least-squares estimator: var ratios of the L estimates drawn
// around mu under the exact Riemannian normal.
inline EfficiencyTable run_efficiency_experiment(const ManifoldPoint& mu,
                                                 const std::vector<double>& sigmas,
                                                 int n, int trials, std::uint64_t seed,
                                                 const SolverConfig& solver = {}) {
  EfficiencyTable table;
  for (std::size_t si = 0; si < sigmas.size(); ++si) {
    const double sigma = sigmas[si];
    RadialNormalDistribution radial(mu.tag.kind, mu.tag.param, sigma);
    EfficiencyRow row;
    row.manifold = mu.tag.name();
    row.sigma = sigma;
    row.sample_size = n;
    for (int trial = 0; trial < trials; ++trial) {
      RandomStream rng(seed, detail::stream_id(si, trial));
      std::vector<Observation> data;
      data.reserve(n);
      for (int i = 0; i < n; ++i)
        data.push_back({Eigen::VectorXd(0), sample_riemannian_normal(mu, radial, rng)});
      try {
        double d2[4];
        const LossKind kinds[4] = {LossKind::L2, LossKind::L1, LossKind::Huber,
                                   LossKind::Tukey};
        for (int li = 0; li < 4; ++li) {
          auto cfg = solver;
          cfg.loss = kinds[li];
          const auto res = fit(data, cfg);
          if (!res.converged) throw std::runtime_error("fit did not converge");
          const double d = distance(res.model.p, mu);
          d2[li] = d * d;
        }
        row.var_l2 += d2[0];
        row.var_l1 += d2[1];
        row.var_huber += d2[2];
        row.var_tukey += d2[3];
        row.trials_ok += 1;
      } catch (const std::exception&) {
        row.trials_failed += 1;
      }
    }
    if (row.trials_ok > 0) {
      row.var_l2 /= row.trials_ok;
      row.var_l1 /= row.trials_ok;
      row.var_huber /= row.trials_ok;
      row.var_tukey /= row.trials_ok;
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

}  // namespace rgr
