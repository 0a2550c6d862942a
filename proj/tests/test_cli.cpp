#include <catch2/catch_amalgamated.hpp>

#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "rgr/io.hpp"
#include "rgr/regression.hpp"
#include "rgr/rng.hpp"
#include "test_support.hpp"

using namespace rgr;
using Catch::Approx;
using nlohmann::json;

#ifndef RGR_CLI_PATH
#define RGR_CLI_PATH "rgr"
#endif

namespace {

namespace fs = std::filesystem;

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("rgr_cli_test_" + std::to_string(std::rand()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

int run_cli(const std::string& args) {
  return std::system((std::string(RGR_CLI_PATH) + " " + args + " > /dev/null 2>&1")
                         .c_str());
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_sphere_dataset(const fs::path& p, int n, std::uint64_t seed) {
  RandomStream rng(seed, 0);
  const auto tag = ManifoldTag::sphere(2);
  Eigen::VectorXd pc(3), vc(3);
  pc << 1, 0, 0;
  vc << 0, 0.7, 0;
  const auto base = make_point(tag, pc);
  std::ofstream out(p);
  out << "# schema_version=1 manifold=sphere dim=2 k=1\n";
  out << "x1,c1,c2,c3\n";
  out.precision(17);
  for (int i = 0; i < n; ++i) {
    const double x = rng.uniform(-0.5, 0.5);
    auto y = exp_map(base, (x * vc).eval());
    y = exp_map(y, testsup::random_tangent(y, 0.05, rng).vec);
    out << x << ',' << y.coords[0] << ',' << y.coords[1] << ',' << y.coords[2] << "\n";
  }
}

}  // namespace

TEST_CASE("observation file round trip") {
  TempDir tmp;
  const auto file = tmp.path / "data.csv";
  write_sphere_dataset(file, 12, 3);
  const auto data = load_observations(file.string());
  CHECK(data.size() == 12);
  CHECK(data.front().y.tag == ManifoldTag::sphere(2));
  CHECK(data.front().x.size() == 1);

  std::stringstream bad("# schema_version=1 manifold=sphere dim=2 k=1\n1,2,3\n");
  CHECK_THROWS_AS(load_observations(bad), std::runtime_error);
  std::stringstream no_header("0.1,0.9,0.28,0.0\n");
  CHECK_THROWS_AS(load_observations(no_header), std::runtime_error);
}

TEST_CASE("cli tune") {
  TempDir tmp;
  const auto out = tmp.path / "tune.json";
  REQUIRE(run_cli("tune --dim 2 --out " + out.string()) == 0);
  const auto j = json::parse(slurp(out));
  CHECK(j.at("schema_version").get<int>() == 1);
  CHECK(j.at("xi").get<double>() == Approx(1.17741).margin(1e-5));
  CHECK(j.at("c_huber").get<double>() == Approx(1.50114).margin(1e-4));
  CHECK(j.at("c_tukey").get<double>() == Approx(5.12299).margin(1e-4));
  CHECK(run_cli("tune") != 0);  // --dim required
}

TEST_CASE("cli sample is seeded and on-manifold") {
  TempDir tmp;
  const auto a = tmp.path / "a.csv";
  const auto b = tmp.path / "b.csv";
  REQUIRE(run_cli("--seed 7 sample --manifold sphere --dim 2 --sigma 0.4 "
                  "--n-samples 50 --out " + a.string()) == 0);
  REQUIRE(run_cli("--seed 7 sample --manifold sphere --dim 2 --sigma 0.4 "
                  "--n-samples 50 --out " + b.string()) == 0);
  CHECK(slurp(a) == slurp(b));

  std::ifstream in(a);
  std::string line;
  std::getline(in, line);  // metadata line
  CHECK(line.find("schema_version=1") != std::string::npos);
  int rows = 0;
  while (std::getline(in, line)) {
    std::stringstream ss(line);
    std::string tok;
    Eigen::Vector3d y;
    for (int i = 0; i < 3; ++i) {
      std::getline(ss, tok, ',');
      y[i] = std::stod(tok);
    }
    CHECK(std::abs(y.norm() - 1.0) < 1e-10);
    ++rows;
  }
  CHECK(rows == 50);
}

TEST_CASE("cli fit reproduces the library fit") {
  TempDir tmp;
  const auto file = tmp.path / "data.csv";
  const auto out = tmp.path / "fit.json";
  write_sphere_dataset(file, 24, 9);
  REQUIRE(run_cli("fit --data " + file.string() + " --loss huber --out " +
                  out.string()) == 0);
  const auto j = json::parse(slurp(out));
  CHECK(j.at("manifold").get<std::string>() == "sphere");
  CHECK(j.at("converged").get<bool>());
  CHECK(j.contains("sigma_hat"));
  CHECK(j.contains("cutoff"));

  SolverConfig cfg;
  cfg.loss = LossKind::Huber;
  const auto res = fit(load_observations(file.string()), cfg);
  const auto p_json = j.at("p").get<std::vector<double>>();
  for (int i = 0; i < 3; ++i)
    CHECK(p_json[i] == Approx(res.model.p.coords[i]).margin(1e-12));
  CHECK(j.at("x_mean")[0].get<double>() == Approx(res.x_mean[0]).margin(1e-15));

  // declared manifold is validated
  CHECK(run_cli("fit --data " + file.string() + " --manifold hyperbolic --out " +
                (tmp.path / "x.json").string()) != 0);
  CHECK(run_cli("fit --data " + file.string() + " --manifold sphere --out " +
                (tmp.path / "y.json").string()) == 0);
}

TEST_CASE("cli simulate mse with config file") {
  TempDir tmp;
  const auto config = tmp.path / "config.json";
  const auto out = tmp.path / "mse.csv";
  {
    json c;
    c["manifold"] = "sphere";
    c["dim"] = 2;
    c["truth"]["p"] = {1.0, 0.0, 0.0};
    c["truth"]["v"] = {{0.0, 0.785398, 0.0}};
    c["noise"] = {{"type", "N"}, {"sigma", 0.3927}};
    c["sample_sizes"] = {8, 16};
    c["trials"] = 4;
    c["losses"] = {"l2", "tukey"};
    std::ofstream(config) << c.dump();
  }
  REQUIRE(run_cli("--seed 5 simulate mse --config " + config.string() + " --out " +
                  out.string()) == 0);
  const auto text = slurp(out);
  CHECK(text.find("schema_version,manifold,noise,loss,n,") == 0);
  CHECK(text.find("1,sphere(2),N,l2,8,") != std::string::npos);
  CHECK(text.find("tukey,16,") != std::string::npos);
}

TEST_CASE("cli simulate efficiency") {
  TempDir tmp;
  const auto out = tmp.path / "eff.csv";
  REQUIRE(run_cli("--seed 5 simulate efficiency --manifold sphere --dim 3 "
                  "--sigmas 0.39 --n 32 --trials 8 --out " + out.string()) == 0);
  const auto text = slurp(out);
  CHECK(text.find("ratio_l1,ratio_huber,ratio_tukey") != std::string::npos);
  CHECK(text.find("1,sphere(3),0.39") != std::string::npos);
}

TEST_CASE("cli shapes fit") {
  TempDir tmp;
  const auto file = tmp.path / "shapes.csv";
  {
    RandomStream rng(13, 0);
    Eigen::VectorXcd base(5);
    for (int m = 0; m < 5; ++m) {
      const double th = 2 * specfun::kPi * m / 5;
      base[m] = {std::cos(th), 0.5 * std::sin(th)};
    }
    const auto p = preshape(base);
    const auto v = testsup::random_tangent(p, 0.003, rng);
    std::ofstream out(file);
    out << "age,x1,y1,x2,y2,x3,y3,x4,y4,x5,y5\n";
    out.precision(17);
    for (int i = 0; i < 20; ++i) {
      const double age = rng.uniform(55, 90);
      const auto y = exp_map(p, ((age - 72.0) * v.vec).eval());
      out << age;
      const auto z = detail::as_complex(y.coords);
      for (int m = 0; m < 5; ++m) out << ',' << z[m].real() << ',' << z[m].imag();
      out << "\n";
    }
  }
  const auto out = tmp.path / "report.json";
  REQUIRE(run_cli("shapes fit --data " + file.string() +
                  " --tamper-indices 2,5,11 --losses l2 tukey --out " +
                  out.string()) == 0);
  const auto j = json::parse(slurp(out));
  CHECK(j.at("schema_version").get<int>() == 1);
  CHECK(j.at("num_landmarks").get<int>() == 5);
  CHECK(j.at("xi").get<double>() == Approx(tuning::xi(6)).margin(1e-9));
  CHECK(j.at("fits").size() == 4);  // l2/tukey clean + l2/tukey tampered
  CHECK(j.at("comparisons").size() == 3);
}
