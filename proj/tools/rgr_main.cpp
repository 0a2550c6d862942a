// Command-line interface: tuning constants, Riemannian-normal sampling,
// robust geodesic regression on data files, and the simulation harness.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "rgr/io.hpp"
#include "rgr/regression.hpp"
#include "rgr/rnormal.hpp"
#include "rgr/shapes.hpp"
#include "rgr/simulate.hpp"
#include "rgr/tuning.hpp"
#include "rgr/version.hpp"

namespace {

using nlohmann::json;

std::ostream& open_output(std::ofstream& file, const std::string& path) {
  if (path.empty() || path == "-") return std::cout;
  file.open(path);
  if (!file) throw std::runtime_error("cannot open output file " + path);
  return file;
}

rgr::ManifoldPoint parse_point(const rgr::ManifoldTag& tag,
                               const std::vector<double>& coords) {
  Eigen::VectorXd c =
      Eigen::Map<const Eigen::VectorXd>(coords.data(), coords.size());
  return rgr::make_point(tag, c, 1e-6);
}

rgr::GeodesicModel parse_model(const rgr::ManifoldTag& tag, const json& j) {
  rgr::GeodesicModel m;
  m.p = parse_point(tag, j.at("p").get<std::vector<double>>());
  if (j.contains("v")) {
    for (const auto& jv : j.at("v")) {
      const auto raw = jv.get<std::vector<double>>();
      Eigen::VectorXd vec = Eigen::Map<const Eigen::VectorXd>(raw.data(), raw.size());
      m.V.push_back(rgr::tangent(m.p, vec));
    }
  }
  return m;
}

rgr::NoiseSpec parse_noise(const json& j) {
  const std::string type = j.at("type").get<std::string>();
  if (type == "N") return rgr::NoiseSpec::normal(j.at("sigma").get<double>());
  if (type == "T")
    return rgr::NoiseSpec::tangent_t(j.at("scale").get<double>(),
                                     j.at("nu").get<double>());
  if (type == "C")
    return rgr::NoiseSpec::contaminated(j.at("sigma_main").get<double>(),
                                        j.at("sigma_out").get<double>(),
                                        j.at("p_out").get<double>());
  throw std::runtime_error("noise type must be N, T, or C");
}

int run_tune(int n, const std::string& estimator, double target,
             const std::string& out_path) {
  json j;
  j["schema_version"] = rgr::kSchemaVersion;
  j["dim"] = n;
  j["target"] = target;
  j["xi"] = rgr::tuning::xi(n);
  j["are_l1"] = rgr::tuning::are_l1(n);
  if (estimator == "huber" || estimator == "all")
    j["c_huber"] = rgr::tuning::solve_cutoff(rgr::LossKind::Huber, n, target);
  if (estimator == "tukey" || estimator == "all")
    j["c_tukey"] = rgr::tuning::solve_cutoff(rgr::LossKind::Tukey, n, target);
  std::ofstream file;
  open_output(file, out_path) << j.dump(2) << "\n";
  return 0;
}

int run_sample(const std::string& manifold, int dim, double sigma, int n_samples,
               std::uint64_t seed, const std::string& out_path) {
  const auto tag = rgr::make_tag(manifold, dim);
  Eigen::VectorXd c = Eigen::VectorXd::Zero(tag.ambient_dim());
  c[0] = 1.0;
  const auto mu = rgr::make_point(tag, c);
  rgr::RiemannianNormal dist(mu, sigma);
  rgr::RandomStream rng(seed, 0);
  std::ofstream file;
  auto& os = open_output(file, out_path);
  os << "# schema_version=" << rgr::kSchemaVersion << " manifold=" << manifold
     << " dim=" << dim << " sigma=" << sigma << " seed=" << seed << "\n";
  os.precision(17);
  for (int i = 0; i < n_samples; ++i) {
    const auto y = dist.sample(rng);
    for (int d = 0; d < y.coords.size(); ++d)
      os << y.coords[d] << (d + 1 < y.coords.size() ? ',' : '\n');
  }
  return 0;
}

int run_fit(const std::string& data_path, const std::string& loss,
            const std::string& mode, const std::string& manifold,
            const std::string& out_path) {
  const auto data = rgr::load_observations(data_path);
  if (!manifold.empty() &&
      manifold != rgr::manifold_kind_name(data.front().y.tag.kind))
    throw std::runtime_error("--manifold " + manifold +
                             " does not match the data file, which declares " +
                             rgr::manifold_kind_name(data.front().y.tag.kind));
  rgr::SolverConfig cfg;
  cfg.loss = rgr::loss_from_name(loss);
  cfg.gradient_mode =
      mode == "transport" ? rgr::GradientMode::Transport : rgr::GradientMode::Jacobi;
  const auto res = rgr::fit(data, cfg);
  std::ofstream file;
  open_output(file, out_path) << rgr::fit_to_json(res, data.front().y.tag).dump(2)
                              << "\n";
  return 0;
}

int run_simulate_mse(const std::string& config_path, std::uint64_t seed_override,
                     bool has_seed, bool full, const std::string& out_path) {
  std::ifstream in(config_path);
  if (!in) throw std::runtime_error("cannot open config " + config_path);
  json j = json::parse(in);

  const auto tag = rgr::make_tag(j.at("manifold").get<std::string>(),
                                 j.at("dim").get<int>());
  rgr::ExperimentSpec spec;
  spec.truth = parse_model(tag, j.at("truth"));
  spec.noise = parse_noise(j.at("noise"));
  if (j.contains("sample_sizes"))
    spec.sample_sizes = j.at("sample_sizes").get<std::vector<int>>();
  else {
    const int h_max = full ? 8 : 6;
    for (int h = 2; h <= h_max; ++h) spec.sample_sizes.push_back(1 << h);
  }
  spec.trials = j.value("trials", full ? 1024 : 64);
  spec.seed = j.value("seed", std::uint64_t{0});
  if (has_seed) spec.seed = seed_override;
  if (j.contains("losses")) {
    spec.losses.clear();
    for (const auto& l : j.at("losses"))
      spec.losses.push_back(rgr::loss_from_name(l.get<std::string>()));
  }
  const auto table = rgr::run_mse_experiment(spec);
  std::ofstream file;
  table.to_csv(open_output(file, out_path));
  return 0;
}

int run_simulate_efficiency(const std::string& manifold, int dim,
                            std::vector<double> sigmas, int n, int trials,
                            std::uint64_t seed, bool full,
                            const std::string& out_path) {
  const auto tag = rgr::make_tag(manifold, dim);
  Eigen::VectorXd c = Eigen::VectorXd::Zero(tag.ambient_dim());
  c[0] = 1.0;
  const auto mu = rgr::make_point(tag, c);
  if (sigmas.empty()) {
    const double pi = rgr::specfun::kPi;
    sigmas = {pi / 32, pi / 16, pi / 8};
    if (full) {
      sigmas.push_back(pi / 4);
      sigmas.push_back(pi / 2);
    }
  }
  if (full && trials == 256) trials = 1024;
  const auto table = rgr::run_efficiency_experiment(mu, sigmas, n, trials, seed);
  std::ofstream file;
  table.to_csv(open_output(file, out_path));
  return 0;
}

int run_shapes_fit(const std::string& data_path, const std::string& tamper_arg,
                   const std::vector<std::string>& losses, std::uint64_t seed,
                   const std::string& out_path) {
  const auto ds = rgr::load_shapes(data_path);
  std::vector<int> tamper_indices;
  if (!tamper_arg.empty()) {
    std::stringstream ss(tamper_arg);
    std::string tok;
    while (std::getline(ss, tok, ',')) tamper_indices.push_back(std::stoi(tok));
  }
  std::vector<rgr::LossKind> kinds;
  for (const auto& l : losses) kinds.push_back(rgr::loss_from_name(l));
  if (kinds.empty()) kinds = {rgr::LossKind::L2, rgr::LossKind::L1, rgr::LossKind::Tukey};
  const auto report = rgr::run_shape_study(ds, tamper_indices, kinds, seed);
  std::ofstream file;
  open_output(file, out_path) << report.to_json().dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Robust geodesic regression on Riemannian manifolds"};
  app.require_subcommand(1);

  std::uint64_t seed = 0;
  bool full = false;
  app.add_option("--seed", seed, "random seed")->capture_default_str();
  app.add_flag("--full", full, "full-scale experiment sizes");

  // tune
  auto* tune = app.add_subcommand("tune", "print tuning constants for a dimension");
  int tune_dim = 2;
  std::string tune_estimator = "all";
  double tune_target = 0.95;
  std::string tune_out;
  tune->add_option("--dim", tune_dim, "intrinsic dimension")->required();
  tune->add_option("--estimator", tune_estimator, "huber|tukey|all")
      ->check(CLI::IsMember({"huber", "tukey", "all"}));
  tune->add_option("--target", tune_target, "target efficiency")
      ->capture_default_str();
  tune->add_option("--out", tune_out, "output file (default stdout)");

  // sample
  auto* sample = app.add_subcommand("sample", "draw from the Riemannian normal");
  std::string sm_manifold;
  int sm_dim = 2, sm_n = 100;
  double sm_sigma = 0.3;
  std::string sm_out;
  sample->add_option("--manifold", sm_manifold, "sphere|hyperbolic")
      ->required()
      ->check(CLI::IsMember({"sphere", "hyperbolic"}));
  sample->add_option("--dim", sm_dim, "intrinsic dimension")->required();
  sample->add_option("--sigma", sm_sigma, "dispersion")->required();
  sample->add_option("--n-samples", sm_n, "number of draws")->required();
  sample->add_option("--out", sm_out, "output CSV (default stdout)");

  // fit
  auto* fitcmd = app.add_subcommand("fit", "fit a geodesic regression model");
  std::string fit_data, fit_loss = "l2", fit_mode = "jacobi", fit_out, fit_manifold;
  fitcmd->add_option("--data", fit_data, "input CSV")->required();
  fitcmd->add_option("--manifold", fit_manifold,
                     "expected manifold kind (validated against the file)");
  fitcmd->add_option("--loss", fit_loss, "l2|l1|huber|tukey")
      ->check(CLI::IsMember({"l2", "l1", "huber", "tukey"}));
  fitcmd->add_option("--gradient-mode", fit_mode, "jacobi|transport")
      ->check(CLI::IsMember({"jacobi", "transport"}));
  fitcmd->add_option("--out", fit_out, "output JSON (default stdout)");

  // simulate {mse, efficiency}
  auto* simulate = app.add_subcommand("simulate", "simulation studies");
  simulate->require_subcommand(1);
  auto* sim_mse = simulate->add_subcommand("mse", "MSE vs sample size");
  std::string mse_config, mse_out;
  sim_mse->add_option("--config", mse_config, "experiment spec JSON")->required();
  sim_mse->add_option("--out", mse_out, "output CSV (default stdout)");

  auto* sim_eff = simulate->add_subcommand("efficiency", "relative efficiencies");
  std::string eff_manifold = "sphere", eff_out;
  int eff_dim = 3, eff_n = 256, eff_trials = 256;
  std::vector<double> eff_sigmas;
  sim_eff->add_option("--manifold", eff_manifold, "sphere|hyperbolic")
      ->check(CLI::IsMember({"sphere", "hyperbolic"}));
  sim_eff->add_option("--dim", eff_dim, "intrinsic dimension");
  sim_eff->add_option("--sigmas", eff_sigmas, "dispersion grid");
  sim_eff->add_option("--n", eff_n, "points per trial");
  sim_eff->add_option("--trials", eff_trials, "number of trials");
  sim_eff->add_option("--out", eff_out, "output CSV (default stdout)");

  // shapes fit
  auto* shapes = app.add_subcommand("shapes", "landmark shape studies");
  shapes->require_subcommand(1);
  auto* sh_fit = shapes->add_subcommand("fit", "age regression on shape data");
  std::string sh_data, sh_tamper, sh_out;
  std::vector<std::string> sh_losses;
  sh_fit->add_option("--data", sh_data, "shapes CSV (age,x1,y1,...)")->required();
  sh_fit->add_option("--tamper-indices", sh_tamper, "comma-separated subject indices");
  sh_fit->add_option("--losses", sh_losses, "subset of l2,l1,huber,tukey");
  sh_fit->add_option("--out", sh_out, "output JSON (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*tune) return run_tune(tune_dim, tune_estimator, tune_target, tune_out);
    if (*sample) return run_sample(sm_manifold, sm_dim, sm_sigma, sm_n, seed, sm_out);
    if (*fitcmd) return run_fit(fit_data, fit_loss, fit_mode, fit_manifold, fit_out);
    if (*sim_mse)
      return run_simulate_mse(mse_config, seed, app.count("--seed") > 0, full, mse_out);
    if (*sim_eff)
      return run_simulate_efficiency(eff_manifold, eff_dim, eff_sigmas, eff_n,
                                     eff_trials, seed, full, eff_out);
    if (*sh_fit) return run_shapes_fit(sh_data, sh_tamper, sh_losses, seed, sh_out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
