#pragma once

// File formats for the CLI: the regression data CSV (k covariate columns
// followed by ambient coordinates, with a first line declaring the manifold
// and k) and the JSON form of a fit result.

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "rgr/regression.hpp"
#include "rgr/version.hpp"

namespace rgr {

inline std::string manifold_kind_name(ManifoldKind k) {
  switch (k) {
    case ManifoldKind::Sphere: return "sphere";
    case ManifoldKind::Hyperbolic: return "hyperbolic";
    case ManifoldKind::KendallShape: return "shape";
    case ManifoldKind::Euclidean: return "euclidean";
  }
  return "?";
}

inline ManifoldTag make_tag(const std::string& kind, int param) {
  if (kind == "sphere") return ManifoldTag::sphere(param);
  if (kind == "hyperbolic") return ManifoldTag::hyperbolic(param);
  if (kind == "shape") return ManifoldTag::kendall_shape(param);
  if (kind == "euclidean") return ManifoldTag::euclidean(param);
  throw std::invalid_argument("unknown manifold kind: " + kind);
}

// Data CSV layout:
//   # schema_version=1 manifold=sphere dim=2 k=1
//   x1,c1,c2,c3
//   0.25,0.96,0.28,0.0
inline std::vector<Observation> load_observations(std::istream& in) {
  std::string line;
  if (!std::getline(in, line))
    throw std::runtime_error("load_observations: empty file");
  std::string kind;
  int dim = -1, k = -1, schema = -1;
  {
    std::stringstream ss(line);
    std::string tok;
    while (ss >> tok) {
      const auto eq = tok.find('=');
      if (eq == std::string::npos) continue;
      const std::string key = tok.substr(0, eq), val = tok.substr(eq + 1);
      if (key == "manifold") kind = val;
      else if (key == "dim") dim = std::stoi(val);
      else if (key == "k") k = std::stoi(val);
      else if (key == "schema_version") schema = std::stoi(val);
    }
  }
  if (kind.empty() || dim < 1 || k < 0)
    throw std::runtime_error(
        "load_observations: first line must declare manifold=<kind> dim=<d> k=<k>");
  if (schema > kSchemaVersion)
    throw std::runtime_error("load_observations: unsupported schema version");
  const ManifoldTag tag = make_tag(kind, dim);
  const int amb = tag.ambient_dim();

  std::vector<Observation> data;
  std::size_t line_no = 1;
  bool header_skipped = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    std::vector<double> vals;
    {
      std::stringstream ss(line);
      std::string tok;
      bool numeric = true;
      while (std::getline(ss, tok, ',')) {
        try {
          std::size_t pos = 0;
          vals.push_back(std::stod(tok, &pos));
          if (pos != tok.size()) numeric = false;
        } catch (const std::exception&) {
          numeric = false;
        }
        if (!numeric) break;
      }
      if (!numeric) {
        if (!header_skipped && data.empty()) {
          header_skipped = true;  // a column-name row is allowed once
          continue;
        }
        throw std::runtime_error("load_observations: non-numeric data on line " +
                                 std::to_string(line_no));
      }
    }
    if (static_cast<int>(vals.size()) != k + amb)
      throw std::runtime_error("load_observations: line " + std::to_string(line_no) +
                               " has " + std::to_string(vals.size()) +
                               " fields, expected " + std::to_string(k + amb));
    Observation ob;
    ob.x = Eigen::Map<Eigen::VectorXd>(vals.data(), k);
    ob.y = make_point(tag, Eigen::Map<Eigen::VectorXd>(vals.data() + k, amb), 1e-6);
    data.push_back(std::move(ob));
  }
  if (data.empty()) throw std::runtime_error("load_observations: no data rows");
  return data;
}

inline std::vector<Observation> load_observations(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("load_observations: cannot open " + path);
  return load_observations(in);
}

inline nlohmann::json fit_to_json(const FitResult& res, const ManifoldTag& tag) {
  nlohmann::json j;
  j["schema_version"] = kSchemaVersion;
  j["manifold"] = manifold_kind_name(tag.kind);
  j["dim"] = tag.param;
  j["converged"] = res.converged;
  j["iterations"] = res.iterations;
  j["final_loss"] = res.final_loss;
  j["x_mean"] = std::vector<double>(res.x_mean.data(),
                                    res.x_mean.data() + res.x_mean.size());
  if (res.sigma_hat) j["sigma_hat"] = *res.sigma_hat;
  if (res.cutoff) j["cutoff"] = *res.cutoff;
  j["p"] = std::vector<double>(res.model.p.coords.data(),
                               res.model.p.coords.data() + res.model.p.coords.size());
  for (const auto& v : res.model.V)
    j["v"].push_back(std::vector<double>(v.vec.data(), v.vec.data() + v.vec.size()));
  if (j.find("v") == j.end()) j["v"] = nlohmann::json::array();
  j["loss_trace"] = res.loss_trace;
  j["residual_norms"] = res.residual_norms;
  return j;
}

}  // namespace rgr
