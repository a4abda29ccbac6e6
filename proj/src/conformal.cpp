#include "tylab/conformal.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

namespace tylab {

namespace {

constexpr double kPi = std::numbers::pi;

}  // namespace

BasicFunction conformal_scalar(int q, const BasicFunction& r0, const BasicFunction& u,
                               const ProfileOp& lap, const ProfileOp& gradsq) {
  if (q < 2) throw std::invalid_argument("conformal_scalar: codimension q must be >= 2");
  require_compatible(r0, u, "conformal_scalar");
  const double c_lap = static_cast<double>(q - 1);
  const double c_grad = static_cast<double>((q - 1) * (q - 2)) / 4.0;

  Eigen::VectorXd acc = r0.values - c_lap * lap(u).values;
  if (c_grad != 0.0) acc -= c_grad * gradsq(u).values;
  acc.array() *= (-u.values.array()).exp();
  return BasicFunction(r0.grid, std::move(acc));
}

TransverseGeometry::TransverseGeometry(const Weights& w, BasicFunction u)
    : w_(w), u_(std::move(u)) {
  require_interval(u_, Interval::Unit, "TransverseGeometry");
  const CollocationGrid& g = *u_.grid;
  const int n = g.size();

  sigma_.resize(n);
  base_scalar_.resize(n);
  for (int i = 0; i < n; ++i) {
    const double t = g.nodes()[i];
    sigma_[i] = sigma(w_, t);
    base_scalar_[i] = transverse_scalar_closed(w_, t);
  }

  const Weights wc = w_;
  ProfileOp lap = [wc](const BasicFunction& f) { return basic_laplacian(wc, f); };
  ProfileOp gradsq = [wc](const BasicFunction& f) {
    const CollocationGrid& gg = *f.grid;
    Eigen::VectorXd df = gg.derivative(f.values);
    Eigen::VectorXd out(gg.size());
    for (int i = 0; i < gg.size(); ++i) {
      const double t = gg.nodes()[i];
      out[i] = 4.0 * sigma(wc, t) * t * (1.0 - t) * df[i] * df[i];
    }
    return BasicFunction(f.grid, std::move(out));
  };
  scalar_ = conformal_scalar(2, BasicFunction(u_.grid, base_scalar_), u_, lap, gradsq)
                .values;

  measure_.resize(n);
  for (int i = 0; i < n; ++i) {
    measure_[i] = 2.0 * kPi * kPi * std::exp(u_.values[i]) / (sigma_[i] * sigma_[i]);
  }
}

double TransverseGeometry::integrate(const Eigen::VectorXd& f) const {
  const CollocationGrid& g = *u_.grid;
  if (f.size() != g.size()) throw std::invalid_argument("integrate: size mismatch");
  return g.quad().dot(measure_.cwiseProduct(f));
}

double TransverseGeometry::integrate(const BasicFunction& f) const {
  require_compatible(u_, f, "integrate");
  return integrate(f.values);
}

double TransverseGeometry::volume() const {
  return u_.grid->quad().dot(measure_);
}

BasicFunction scalar_curvature(const TransverseGeometry& geom) {
  return BasicFunction(geom.grid(), geom.scalar_profile());
}

BasicFunction divergence_z2(const TransverseGeometry& geom) {
  const CollocationGrid& g = *geom.grid();
  Eigen::VectorXd out = z2_apply(geom.weights(), geom.u()).values;
  for (int i = 0; i < g.size(); ++i) {
    out[i] += 2.0 * conformal_factor_closed(geom.weights(), g.nodes()[i]);
  }
  return BasicFunction(geom.grid(), std::move(out));
}

BasicFunction conformal_laplacian(const TransverseGeometry& geom, const BasicFunction& f) {
  require_compatible(geom.u(), f, "conformal_laplacian");
  BasicFunction lap = basic_laplacian(geom.weights(), f);
  lap.values.array() *= (-geom.u().values.array()).exp();
  return lap;
}

}  // namespace tylab
