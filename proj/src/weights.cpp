#include "tylab/weights.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace tylab {

namespace {

constexpr double kPi = std::numbers::pi;

void require_unit_interval(double t, const char* op) {
  if (!(t >= 0.0 && t <= 1.0)) {
    throw std::domain_error(std::string(op) + ": t outside [0,1]");
  }
}

}  // namespace

Weights::Weights(double a1_, double a2_) : a1(a1_), a2(a2_) {
  if (!(std::isfinite(a1) && std::isfinite(a2) && a1 > 0.0 && a2 > 0.0)) {
    throw std::invalid_argument("Weights: a1 and a2 must be finite and positive");
  }
}

double sigma(const Weights& w, double t) {
  require_unit_interval(t, "sigma");
  return w.a1 * t + w.a2 * (1.0 - t);
}

double lambda_base(const Weights& w, double t) {
  require_unit_interval(t, "lambda_base");
  const double s = sigma(w, t);
  return t * (1.0 - t) / (s * s * s);
}

double transverse_scalar_closed(const Weights& w, double t) {
  require_unit_interval(t, "transverse_scalar_closed");
  const double d = w.slope();
  const double s = sigma(w, t);
  return -24.0 * d * d * t * (1.0 - t) / s - 16.0 * d * (2.0 * t - 1.0) + 8.0 * s;
}

double z2_scalar_closed(const Weights& w, double t) {
  require_unit_interval(t, "z2_scalar_closed");
  const double s = sigma(w, t);
  return -48.0 * w.slope() * w.a1 * w.a2 * t * (1.0 - t) / (s * s * s);
}

double conformal_factor_closed(const Weights& w, double t) {
  require_unit_interval(t, "conformal_factor_closed");
  const double s = sigma(w, t);
  return (1.0 - 2.0 * t) / s - 3.0 * w.slope() * t * (1.0 - t) / (s * s);
}

double invariant_closed(const Weights& w) {
  const double a1s = w.a1 * w.a1;
  const double a2s = w.a2 * w.a2;
  // Adding +0.0 turns the equal-weight value -0.0 into plain 0.0.
  return -8.0 * kPi * kPi * (a1s - a2s) / (a1s * a2s) + 0.0;
}

double total_curvature_closed(const Weights& w) {
  return 8.0 * kPi * kPi * (w.a1 + w.a2) / (w.a1 * w.a2);
}

double volume_closed(const Weights& w) {
  return 2.0 * kPi * kPi / (w.a1 * w.a2);
}

}  // namespace tylab
