#include "tylab/basic_calculus.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace tylab {

namespace {

constexpr double kPi = std::numbers::pi;

Eigen::VectorXd sigma_profile(const Weights& w, const CollocationGrid& g) {
  Eigen::VectorXd s(g.size());
  for (int i = 0; i < g.size(); ++i) s[i] = sigma(w, g.nodes()[i]);
  return s;
}

// Uniform double in [0,1) from the top 53 bits of the engine output.
// Avoids std::uniform_real_distribution, whose mapping is not pinned by
// the standard; this keeps test vectors stable across toolchains.
double uniform53(std::mt19937_64& eng) {
  return static_cast<double>(eng() >> 11) * 0x1.0p-53;
}

}  // namespace

BasicFunction z2_apply(const Weights& w, const BasicFunction& f) {
  require_interval(f, Interval::Unit, "z2_apply");
  const CollocationGrid& g = *f.grid;
  Eigen::VectorXd df = g.derivative(f.values);
  Eigen::VectorXd out(g.size());
  for (int i = 0; i < g.size(); ++i) {
    const double t = g.nodes()[i];
    out[i] = 2.0 * t * (1.0 - t) / sigma(w, t) * df[i];
  }
  return BasicFunction(f.grid, std::move(out));
}

BasicFunction basic_laplacian(const Weights& w, const BasicFunction& f) {
  require_interval(f, Interval::Unit, "basic_laplacian");
  const CollocationGrid& g = *f.grid;
  Eigen::VectorXd df = g.derivative(f.values);
  Eigen::VectorXd ddf = g.derivative(df);
  const double d = w.slope();
  Eigen::VectorXd out(g.size());
  for (int i = 0; i < g.size(); ++i) {
    const double t = g.nodes()[i];
    const double s = sigma(w, t);
    out[i] = 4.0 * s * t * (1.0 - t) * ddf[i] +
             (4.0 * s * (1.0 - 2.0 * t) - 4.0 * d * t * (1.0 - t)) * df[i];
  }
  return BasicFunction(f.grid, std::move(out));
}

double integrate(const Weights& w, const BasicFunction& f) {
  require_interval(f, Interval::Unit, "integrate");
  const CollocationGrid& g = *f.grid;
  Eigen::VectorXd s = sigma_profile(w, g);
  double acc = 0.0;
  for (int i = 0; i < g.size(); ++i) {
    acc += g.quad()[i] * 2.0 * kPi * kPi / (s[i] * s[i]) * f.values[i];
  }
  return acc;
}

double integrate(const Weights& w, const BasicFunction& u, const BasicFunction& f) {
  require_interval(f, Interval::Unit, "integrate");
  require_compatible(u, f, "integrate");
  const CollocationGrid& g = *f.grid;
  Eigen::VectorXd s = sigma_profile(w, g);
  double acc = 0.0;
  for (int i = 0; i < g.size(); ++i) {
    acc += g.quad()[i] * 2.0 * kPi * kPi * std::exp(u.values[i]) / (s[i] * s[i]) *
           f.values[i];
  }
  return acc;
}

std::uint64_t trial_seed(std::uint64_t seed, int trial) {
  return seed + 0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(trial);
}

std::vector<double> random_coefficients(std::uint64_t seed, int degree, double amplitude) {
  if (degree < 0 || degree > 10) {
    throw std::invalid_argument("random_coefficients: degree must be in [0,10]");
  }
  if (!(amplitude >= 0.0 && amplitude <= 1.0)) {
    throw std::invalid_argument("random_coefficients: amplitude must be in [0,1]");
  }
  std::mt19937_64 eng(seed);
  std::vector<double> c(static_cast<std::size_t>(degree) + 1);
  for (double& ck : c) ck = amplitude * (2.0 * uniform53(eng) - 1.0);
  return c;
}

BasicFunction random_basic(const GridPtr& g, std::uint64_t seed, int degree,
                           double amplitude) {
  return polynomial_basic(g, random_coefficients(seed, degree, amplitude));
}

BasicFunction polynomial_basic(const GridPtr& g, const std::vector<double>& coefficients) {
  if (coefficients.empty()) {
    throw std::invalid_argument("polynomial_basic: empty coefficient list");
  }
  return BasicFunction::sample(g, [&coefficients](double t) {
    double acc = 0.0;
    for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) {
      acc = acc * t + *it;
    }
    return acc;
  });
}

}  // namespace tylab
