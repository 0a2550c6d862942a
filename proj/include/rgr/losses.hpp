#pragma once

// M-type loss functions rho, their derivatives, and the residual weight
// rho'(r)/r used by the regression gradients. Arguments are geodesic
// distances, so all functions take t >= 0.

#include <cmath>
#include <stdexcept>
#include <string>

namespace rgr {

enum class LossKind { L2, L1, Huber, Tukey };

inline bool loss_needs_cutoff(LossKind k) {
  return k == LossKind::Huber || k == LossKind::Tukey;
}

inline const char* loss_name(LossKind k) {
  switch (k) {
    case LossKind::L2: return "l2";
    case LossKind::L1: return "l1";
    case LossKind::Huber: return "huber";
    case LossKind::Tukey: return "tukey";
  }
  return "?";
}

inline LossKind loss_from_name(const std::string& s) {
  if (s == "l2") return LossKind::L2;
  if (s == "l1") return LossKind::L1;
  if (s == "huber") return LossKind::Huber;
  if (s == "tukey") return LossKind::Tukey;
  throw std::invalid_argument("unknown loss kind: " + s);
}

struct LossSpec {
  LossKind kind = LossKind::L2;
  double cutoff = 0.0;  // required positive for Huber/Tukey, ignored otherwise

  static LossSpec l2() { return {LossKind::L2, 0.0}; }
  static LossSpec l1() { return {LossKind::L1, 0.0}; }
  static LossSpec huber(double c) { return make(LossKind::Huber, c); }
  static LossSpec tukey(double c) { return make(LossKind::Tukey, c); }

  static LossSpec make(LossKind kind, double c) {
    if (loss_needs_cutoff(kind) && !(c > 0.0))
      throw std::invalid_argument("LossSpec: cutoff must be positive");
    return {kind, loss_needs_cutoff(kind) ? c : 0.0};
  }
};

// Residual weight below which the L1 weight 1/r is capped. Keeps descent
// directions bounded when a datum is fitted exactly.
inline constexpr double kL1WeightFloor = 1e-10;

inline double rho(const LossSpec& spec, double t) {
  if (t < 0.0) throw std::domain_error("rho: negative argument");
  const double c = spec.cutoff;
  switch (spec.kind) {
    case LossKind::L2:
      return 0.5 * t * t;
    case LossKind::L1:
      return t;
    case LossKind::Huber:
      return t < c ? 0.5 * t * t : c * (t - 0.5 * c);
    case LossKind::Tukey: {
      if (t >= c) return c * c / 6.0;
      const double u = 1.0 - (t / c) * (t / c);
      return c * c / 6.0 * (1.0 - u * u * u);
    }
  }
  return 0.0;
}

inline double rho_prime(const LossSpec& spec, double t) {
  if (t < 0.0) throw std::domain_error("rho_prime: negative argument");
  const double c = spec.cutoff;
  switch (spec.kind) {
    case LossKind::L2:
      return t;
    case LossKind::L1:
      return 1.0;
    case LossKind::Huber:
      return t < c ? t : c;
    case LossKind::Tukey: {
      if (t >= c) return 0.0;
      const double u = 1.0 - (t / c) * (t / c);
      return t * u * u;
    }
  }
  return 0.0;
}

// weight(r) = rho'(r)/r with the r -> 0 limits taken analytically.
inline double weight(const LossSpec& spec, double r) {
  if (r < 0.0) throw std::domain_error("weight: negative argument");
  const double c = spec.cutoff;
  switch (spec.kind) {
    case LossKind::L2:
      return 1.0;
    case LossKind::L1:
      return 1.0 / std::max(r, kL1WeightFloor);
    case LossKind::Huber:
      return r < c ? 1.0 : c / r;
    case LossKind::Tukey: {
      if (r >= c) return 0.0;
      const double u = 1.0 - (r / c) * (r / c);
      return u * u;
    }
  }
  return 0.0;
}

}  // namespace rgr
