#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "rgr/losses.hpp"

using namespace rgr;
using Catch::Approx;

TEST_CASE("rho piecewise values") {
  CHECK(rho(LossSpec::l2(), 2.0) == Approx(2.0));
  CHECK(rho(LossSpec::l1(), 3.5) == Approx(3.5));

  const auto hub = LossSpec::huber(1.345);
  // continuity at the cutoff: both branches agree
  CHECK(rho(hub, 1.345) == Approx(0.5 * 1.345 * 1.345).epsilon(1e-14));
  CHECK(rho(hub, 1.345 + 1e-12) == Approx(0.5 * 1.345 * 1.345).margin(1e-11));

  const auto tuk = LossSpec::tukey(4.685);
  CHECK(rho(tuk, 4.685) == Approx(4.685 * 4.685 / 6.0));
  CHECK(rho(tuk, 100.0) == Approx(4.685 * 4.685 / 6.0));
  CHECK(rho(tuk, 4.685 - 1e-12) == Approx(4.685 * 4.685 / 6.0).margin(1e-11));
}

TEST_CASE("weight values and limits") {
  CHECK(weight(LossSpec::l2(), 0.0) == 1.0);
  CHECK(weight(LossSpec::l2(), 17.0) == 1.0);
  CHECK(weight(LossSpec::huber(2.0), 4.0) == Approx(0.5));
  CHECK(weight(LossSpec::huber(2.0), 0.0) == 1.0);
  CHECK(weight(LossSpec::tukey(2.0), 1.0) == Approx(9.0 / 16.0));
  CHECK(weight(LossSpec::tukey(2.0), 0.0) == 1.0);
  CHECK(weight(LossSpec::tukey(2.0), 2.0) == 0.0);
  CHECK(weight(LossSpec::tukey(2.0), 5.0) == 0.0);
  // L1 cap at tiny residuals
  CHECK(weight(LossSpec::l1(), 0.0) == Approx(1e10));
  CHECK(weight(LossSpec::l1(), 1e-12) == Approx(1e10));
  CHECK(weight(LossSpec::l1(), 0.5) == Approx(2.0));
}

TEST_CASE("weight(r) * r = rho'(r) on a log-spaced grid") {
  const LossSpec specs[] = {LossSpec::l2(), LossSpec::l1(), LossSpec::huber(1.5),
                            LossSpec::tukey(4.0)};
  for (const auto& s : specs) {
    for (double e = -8; e <= 2; e += 0.5) {
      const double r = std::pow(10.0, e);
      CHECK(weight(s, r) * r == Approx(rho_prime(s, r)).margin(1e-14));
    }
  }
}

TEST_CASE("huber weight * r saturates at c") {
  const auto s = LossSpec::huber(2.5);
  for (double r : {2.5, 3.0, 10.0, 1e6}) CHECK(weight(s, r) * r == Approx(2.5));
}

TEST_CASE("rho nondecreasing") {
  const LossSpec specs[] = {LossSpec::l2(), LossSpec::l1(), LossSpec::huber(1.345),
                            LossSpec::tukey(4.685)};
  for (const auto& s : specs) {
    double prev = 0.0;
    for (double t = 0.0; t <= 12.0; t += 0.01) {
      const double cur = rho(s, t);
      CHECK(cur >= prev - 1e-15);
      prev = cur;
    }
  }
}

TEST_CASE("cutoff validation") {
  CHECK_THROWS_AS(LossSpec::huber(0.0), std::invalid_argument);
  CHECK_THROWS_AS(LossSpec::tukey(-1.0), std::invalid_argument);
  CHECK_THROWS_AS(rho(LossSpec::l2(), -0.1), std::domain_error);
}
