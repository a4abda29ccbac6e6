#include "tylab/round_sphere.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

namespace tylab {

namespace {

constexpr double kPi = std::numbers::pi;

void require_dim(int dim, const char* op) {
  if (dim < 2) throw std::invalid_argument(std::string(op) + ": dimension must be >= 2");
}

}  // namespace

BasicFunction sphere_laplacian(int dim, const BasicFunction& f) {
  require_dim(dim, "sphere_laplacian");
  require_interval(f, Interval::Symmetric, "sphere_laplacian");
  const CollocationGrid& g = *f.grid;
  Eigen::VectorXd df = g.derivative(f.values);
  Eigen::VectorXd ddf = g.derivative(df);
  Eigen::VectorXd out(g.size());
  for (int i = 0; i < g.size(); ++i) {
    const double x = g.nodes()[i];
    out[i] = (1.0 - x * x) * ddf[i] - dim * x * df[i];
  }
  return BasicFunction(f.grid, std::move(out));
}

BasicFunction sphere_scalar(int dim, const BasicFunction& u) {
  require_dim(dim, "sphere_scalar");
  require_interval(u, Interval::Symmetric, "sphere_scalar");
  BasicFunction r0 = BasicFunction::constant(u.grid, static_cast<double>(dim * (dim - 1)));
  ProfileOp lap = [dim](const BasicFunction& f) { return sphere_laplacian(dim, f); };
  ProfileOp gradsq = [](const BasicFunction& f) {
    const CollocationGrid& gg = *f.grid;
    Eigen::VectorXd df = gg.derivative(f.values);
    Eigen::VectorXd out(gg.size());
    for (int i = 0; i < gg.size(); ++i) {
      const double x = gg.nodes()[i];
      out[i] = (1.0 - x * x) * df[i] * df[i];
    }
    return BasicFunction(f.grid, std::move(out));
  };
  return conformal_scalar(dim, r0, u, lap, gradsq);
}

SphereGeometry::SphereGeometry(int dim, BasicFunction u) : dim_(dim), u_(std::move(u)) {
  if (dim_ != 2 && dim_ != 3) {
    throw std::invalid_argument("SphereGeometry: dimension must be 2 or 3");
  }
  require_interval(u_, Interval::Symmetric, "SphereGeometry");
  const CollocationGrid& g = *u_.grid;

  scalar_ = sphere_scalar(dim_, u_).values;

  if (dim_ == 2) {
    // Area density 2 pi e^u dx with flat node weights.
    measure_ = (2.0 * kPi) * g.quad().cwiseProduct(u_.values.array().exp().matrix());
  } else {
    // Density 4 pi e^{3u/2} sqrt(1-x^2) dx; the square root lives in the
    // half-circle quadrature weights.
    Eigen::VectorXd uq = chebyshev_u_weights(g.size());
    measure_ =
        (4.0 * kPi) * uq.cwiseProduct((1.5 * u_.values.array()).exp().matrix());
  }
}

double SphereGeometry::integrate(const Eigen::VectorXd& f) const {
  if (f.size() != u_.grid->size()) {
    throw std::invalid_argument("integrate: size mismatch");
  }
  return measure_.dot(f);
}

double SphereGeometry::integrate(const BasicFunction& f) const {
  require_compatible(u_, f, "integrate");
  return integrate(f.values);
}

double SphereGeometry::volume() const { return measure_.sum(); }

double bourguignon_ezin_integral(int dim, const BasicFunction& u) {
  SphereGeometry geom(dim, u);
  const CollocationGrid& g = *u.grid;
  Eigen::VectorXd dr = g.derivative(geom.scalar_profile());
  Eigen::VectorXd yr(g.size());
  for (int i = 0; i < g.size(); ++i) {
    const double x = g.nodes()[i];
    yr[i] = (1.0 - x * x) * dr[i];
  }
  return geom.integrate(yr);
}

double kazdan_warner_integral(const BasicFunction& phi) {
  require_interval(phi, Interval::Symmetric, "kazdan_warner_integral");
  const CollocationGrid& g = *phi.grid;
  BasicFunction minus_phi(phi.grid, (-phi.values).eval());
  Eigen::VectorXd h = sphere_scalar(2, minus_phi).values;
  Eigen::VectorXd dh = g.derivative(h);
  Eigen::VectorXd integrand(g.size());
  for (int i = 0; i < g.size(); ++i) {
    const double x = g.nodes()[i];
    integrand[i] = (1.0 - x * x) * dh[i] * std::exp(-phi.values[i]);
  }
  return 2.0 * kPi * g.integrate(integrand);
}

double yamabe_quotient(int dim, const BasicFunction& u) {
  if (dim < 3) {
    throw std::invalid_argument(
        "yamabe_quotient: defined for dimension >= 3 (the two-dimensional functional is "
        "logarithmic)");
  }
  SphereGeometry geom(dim, u);
  const double total = geom.integrate(geom.scalar_profile());
  const double vol = geom.volume();
  const double exponent = static_cast<double>(dim - 2) / dim;
  return total / std::pow(vol, exponent);
}

}  // namespace tylab
