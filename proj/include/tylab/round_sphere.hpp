#pragma once

// Axisymmetric conformal metrics e^u g_round on S^2 and S^3, reduced to
// the height coordinate x in [-1,1].  Reuses the generic conformal
// curvature law at codimension q = n (the trivial foliation by points),
// and evaluates the classical integral identities: the conformal-field
// vanishing integral, the first-harmonic obstruction integral on S^2,
// the Gauss-Bonnet total, and the scale-invariant curvature quotient.

#include "tylab/conformal.hpp"
#include "tylab/grid.hpp"

namespace tylab {

// Round Laplacian of an axisymmetric profile: (1-x^2) f'' - n x f'.
// x itself is an eigenfunction with eigenvalue -n.
BasicFunction sphere_laplacian(int dim, const BasicFunction& f);

// Scalar curvature of e^u g_round in dimension dim (2 or 3), via the
// generic conformal law with |grad u|^2 = (1-x^2) (u')^2.
BasicFunction sphere_scalar(int dim, const BasicFunction& u);

class SphereGeometry {
 public:
  // u on a [-1,1] grid; dim must be 2 or 3.
  SphereGeometry(int dim, BasicFunction u);

  int dim() const { return dim_; }
  const GridPtr& grid() const { return u_.grid; }
  const BasicFunction& u() const { return u_; }
  const Eigen::VectorXd& scalar_profile() const { return scalar_; }

  // Per-node quadrature weights of the conformal measure, the area
  // density A_{n-1} e^{n u / 2} (1-x^2)^{(n-2)/2} folded with node
  // weights; for dim 3 the endpoint square root is absorbed into
  // half-circle quadrature weights so the rule stays spectrally exact.
  const Eigen::VectorXd& measure_weight() const { return measure_; }

  double integrate(const Eigen::VectorXd& f) const;
  double integrate(const BasicFunction& f) const;
  double volume() const;

 private:
  int dim_;
  BasicFunction u_;
  Eigen::VectorXd scalar_;
  Eigen::VectorXd measure_;
};

// Integral of Y(R) dmu for the conformal field Y = grad(x) of the round
// metric, Y(f) = (1-x^2) f'.  Vanishes for every conformal exponent.
double bourguignon_ezin_integral(int dim, const BasicFunction& u);

// First-harmonic obstruction integral on S^2 for the curvature function
// h of e^-phi g_round:  2 pi integral of (1-x^2) h' e^-phi dx.
// Vanishes for every axisymmetric phi.
double kazdan_warner_integral(const BasicFunction& phi);

// Scale-invariant curvature quotient integral of R dmu / vol^{(n-2)/n}.
// Defined for dim >= 3 only.
double yamabe_quotient(int dim, const BasicFunction& u);

}  // namespace tylab
