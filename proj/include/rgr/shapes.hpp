#pragma once

// Landmark-shape workflow: loading planar landmark datasets, the tampering
// protocol (reflecting selected subjects), and the age-regression study that
// compares robust fits against the least-squares baseline.

#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "rgr/regression.hpp"
#include "rgr/version.hpp"
#include "rgr/tuning.hpp"

namespace rgr {

struct ShapeSubject {
  double age = 0.0;
  Eigen::VectorXcd landmarks;  // K planar landmarks
};

struct ShapeDataset {
  int num_landmarks = 0;
  std::vector<ShapeSubject> subjects;
};

namespace detail {

inline double parse_number(const std::string& tok, std::size_t line_no) {
  std::size_t pos = 0;
  double v = 0.0;
  try {
    v = std::stod(tok, &pos);
  } catch (const std::exception&) {
    throw std::runtime_error("load_shapes: non-numeric field '" + tok + "' on line " +
                             std::to_string(line_no));
  }
  if (pos != tok.size())
    throw std::runtime_error("load_shapes: trailing garbage in field '" + tok +
                             "' on line " + std::to_string(line_no));
  return v;
}

inline std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(tok);
  if (!line.empty() && line.back() == ',') out.push_back("");
  return out;
}

}  // namespace detail

// CSV with header age,x1,y1,...,xK,yK and one subject per row.
inline ShapeDataset load_shapes(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("load_shapes: empty file");
  const auto header = detail::split_csv(line);
  if (header.size() < 7 || header.size() % 2 == 0 || header[0] != "age")
    throw std::runtime_error(
        "load_shapes: header must be age,x1,y1,...,xK,yK with K >= 3");
  const int K = static_cast<int>((header.size() - 1) / 2);

  ShapeDataset ds;
  ds.num_landmarks = K;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto tok = detail::split_csv(line);
    if (tok.size() != header.size())
      throw std::runtime_error("load_shapes: line " + std::to_string(line_no) + " has " +
                               std::to_string(tok.size()) + " fields, expected " +
                               std::to_string(header.size()));
    ShapeSubject s;
    s.age = detail::parse_number(tok[0], line_no);
    s.landmarks.resize(K);
    for (int m = 0; m < K; ++m)
      s.landmarks[m] = {detail::parse_number(tok[1 + 2 * m], line_no),
                        detail::parse_number(tok[2 + 2 * m], line_no)};
    ds.subjects.push_back(std::move(s));
  }
  if (ds.subjects.empty()) throw std::runtime_error("load_shapes: no data rows");
  return ds;
}

inline ShapeDataset load_shapes(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("load_shapes: cannot open " + path);
  return load_shapes(in);
}

// Reflect the selected subjects (negate the second landmark coordinate).
inline ShapeDataset tamper(const ShapeDataset& ds, const std::vector<int>& indices) {
  ShapeDataset out = ds;
  for (int idx : indices) {
    if (idx < 0 || idx >= static_cast<int>(ds.subjects.size()))
      throw std::out_of_range("tamper: subject index " + std::to_string(idx) +
                              " out of range");
    auto& lm = out.subjects[idx].landmarks;
    lm = lm.conjugate();
  }
  return out;
}

inline std::vector<Observation> shape_observations(const ShapeDataset& ds) {
  std::vector<Observation> obs;
  obs.reserve(ds.subjects.size());
  for (const auto& s : ds.subjects)
    obs.push_back({Eigen::VectorXd::Constant(1, s.age), preshape(s.landmarks)});
  return obs;
}

struct ShapeFitEntry {
  LossKind loss;
  bool tampered = false;
  FitResult result;
};

struct ShapeComparison {
  std::string label;   // e.g. "l1" or "l1'" for the tampered fit
  double dist_p = 0.0;  // d(p_hat, p_hat_L2)
  double dist_v = 0.0;  // || transport(v_hat) - v_hat_L2 ||
};

struct ShapeStudyReport {
  int num_landmarks = 0;
  int num_subjects = 0;
  double xbar = 0.0;
  double xi = 0.0;
  double c_tukey = 0.0;
  std::uint64_t seed = 0;
  std::vector<ShapeFitEntry> fits;
  std::vector<ShapeComparison> comparisons;  // against the clean L2 fit
  std::vector<double> sequence_ages;
  // per fit, one shape (2K coords) per age in sequence_ages
  std::vector<std::vector<Eigen::VectorXd>> sequences;

  const ShapeFitEntry& find(LossKind loss, bool tampered) const {
    for (const auto& f : fits)
      if (f.loss == loss && f.tampered == tampered) return f;
    throw std::out_of_range("ShapeStudyReport::find: no such fit");
  }

  const ShapeComparison& comparison(LossKind loss, bool tampered) const {
    const std::string label = std::string(loss_name(loss)) + (tampered ? "'" : "");
    for (const auto& c : comparisons)
      if (c.label == label) return c;
    throw std::out_of_range("ShapeStudyReport::comparison: no such entry");
  }

  nlohmann::json to_json() const;
};

// Age regression per loss on the clean data and, when tamper_indices is
// nonempty, on the tampered data; all comparisons are taken against the
// clean least-squares fit. Also emits the fitted shape trajectories every
// five years from age 50 to 95.
inline ShapeStudyReport run_shape_study(const ShapeDataset& ds,
                                        const std::vector<int>& tamper_indices,
                                        const std::vector<LossKind>& losses,
                                        std::uint64_t seed = 0,
                                        const SolverConfig& solver = {}) {
  ShapeStudyReport report;
  report.num_landmarks = ds.num_landmarks;
  report.num_subjects = static_cast<int>(ds.subjects.size());
  report.seed = seed;
  const int n_dim = 2 * ds.num_landmarks - 4;
  report.xi = tuning::xi(n_dim);
  report.c_tukey = tuning::solve_cutoff(LossKind::Tukey, n_dim);

  const auto clean_obs = shape_observations(ds);
  const bool with_tampered = !tamper_indices.empty();
  const auto tampered_obs =
      with_tampered ? shape_observations(tamper(ds, tamper_indices))
                    : std::vector<Observation>{};

  auto run = [&](LossKind loss, bool tampered_flag) {
    auto cfg = solver;
    cfg.loss = loss;
    ShapeFitEntry e;
    e.loss = loss;
    e.tampered = tampered_flag;
    e.result = fit(tampered_flag ? tampered_obs : clean_obs, cfg);
    return e;
  };

  // clean L2 baseline first
  report.fits.push_back(run(LossKind::L2, false));
  for (const auto loss : losses)
    if (loss != LossKind::L2) report.fits.push_back(run(loss, false));
  if (with_tampered)
    for (const auto loss : losses) report.fits.push_back(run(loss, true));

  report.xbar = report.fits.front().result.x_mean[0];

  const auto& base = report.fits.front().result.model;
  for (const auto& f : report.fits) {
    if (!f.tampered && f.loss == LossKind::L2) continue;
    ShapeComparison c;
    c.label = std::string(loss_name(f.loss)) + (f.tampered ? "'" : "");
    c.dist_p = distance(f.result.model.p, base.p);
    TangentVector moved = parallel_transport(f.result.model.V[0], base.p);
    moved.vec = project_to_tangent(base.p, moved.vec) - base.V[0].vec;
    c.dist_v = std::sqrt(std::max(0.0, metric_inner(base.p, moved.vec, moved.vec)));
    report.comparisons.push_back(std::move(c));
  }

  for (double t = 50.0; t <= 95.0; t += 5.0) report.sequence_ages.push_back(t);
  for (const auto& f : report.fits) {
    std::vector<Eigen::VectorXd> seq;
    for (const double t : report.sequence_ages) {
      const double offset = t - f.result.x_mean[0];
      seq.push_back(
          exp_map(f.result.model.p, (offset * f.result.model.V[0].vec).eval()).coords);
    }
    report.sequences.push_back(std::move(seq));
  }
  return report;
}

inline nlohmann::json ShapeStudyReport::to_json() const {
  nlohmann::json j;
  j["schema_version"] = kSchemaVersion;
  j["num_landmarks"] = num_landmarks;
  j["num_subjects"] = num_subjects;
  j["xbar"] = xbar;
  j["xi"] = xi;
  j["c_tukey"] = c_tukey;
  j["seed"] = seed;
  auto vec_json = [](const Eigen::VectorXd& v) {
    return std::vector<double>(v.data(), v.data() + v.size());
  };
  for (std::size_t i = 0; i < fits.size(); ++i) {
    const auto& f = fits[i];
    nlohmann::json jf;
    jf["loss"] = loss_name(f.loss);
    jf["tampered"] = f.tampered;
    jf["converged"] = f.result.converged;
    jf["iterations"] = f.result.iterations;
    jf["final_loss"] = f.result.final_loss;
    if (f.result.sigma_hat) jf["sigma_hat"] = *f.result.sigma_hat;
    if (f.result.cutoff) jf["cutoff"] = *f.result.cutoff;
    jf["p"] = vec_json(f.result.model.p.coords);
    jf["v"] = vec_json(f.result.model.V[0].vec);
    nlohmann::json seq = nlohmann::json::array();
    for (const auto& s : sequences[i]) seq.push_back(vec_json(s));
    jf["shape_sequence"] = seq;
    j["fits"].push_back(jf);
  }
  j["sequence_ages"] = sequence_ages;
  for (const auto& c : comparisons)
    j["comparisons"].push_back(
        {{"fit", c.label}, {"dist_p", c.dist_p}, {"dist_v", c.dist_v}});
  return j;
}

}  // namespace rgr
