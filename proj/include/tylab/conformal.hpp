#pragma once

// Conformal-change engine for transverse metrics e^u g0 with basic u.
// The curvature transformation law is implemented once, parametric in the
// codimension q, with model-supplied Laplacian and gradient-square
// operators; the weighted sphere uses it at q = 2 and the round-sphere
// module reuses it at q = n.  Mean curvature is hard-set to zero: every
// identity computed here lives on a minimal foliation.

#include "tylab/basic_calculus.hpp"
#include "tylab/grid.hpp"
#include "tylab/weights.hpp"

#include <functional>

namespace tylab {

using ProfileOp = std::function<BasicFunction(const BasicFunction&)>;

// Scalar curvature of e^u g0 in codimension q >= 2:
//   e^-u [ -(q-1) lap(u) - (q-1)(q-2)/4 gradsq(u) + R0 ].
// At q = 2 the gradient-square coefficient vanishes identically.
BasicFunction conformal_scalar(int q, const BasicFunction& r0, const BasicFunction& u,
                               const ProfileOp& lap, const ProfileOp& gradsq);

// Weighted sphere with conformal exponent u.  All derived profiles are
// computed on construction and never mutated, so a geometry is safely
// shareable across threads.
class TransverseGeometry {
 public:
  TransverseGeometry(const Weights& w, BasicFunction u);

  const Weights& weights() const { return w_; }
  const BasicFunction& u() const { return u_; }
  const GridPtr& grid() const { return u_.grid; }

  const Eigen::VectorXd& sigma_profile() const { return sigma_; }
  const Eigen::VectorXd& base_scalar() const { return base_scalar_; }
  const Eigen::VectorXd& scalar_profile() const { return scalar_; }

  // Density of the conformal measure against dt: 2 pi^2 e^u sigma^-2.
  const Eigen::VectorXd& measure_weight() const { return measure_; }

  double integrate(const Eigen::VectorXd& f) const;
  double integrate(const BasicFunction& f) const;
  double volume() const;

 private:
  Weights w_;
  BasicFunction u_;
  Eigen::VectorXd sigma_;
  Eigen::VectorXd base_scalar_;
  Eigen::VectorXd scalar_;
  Eigen::VectorXd measure_;
};

// Transverse scalar curvature profile of the geometry (the cached q = 2
// conformal transformation of the closed-form base profile).
BasicFunction scalar_curvature(const TransverseGeometry& geom);

// Transverse divergence of the conjugate field of Z2 in the conformal
// metric: 2 f0 + Z2 u, where f0 is the closed-form conformal factor of
// the base metric.  Shifting u by a constant leaves it unchanged.
BasicFunction divergence_z2(const TransverseGeometry& geom);

// Basic Laplacian of the conformal metric: e^-u times the base operator
// (the two-dimensional transverse conformal rescaling law).
BasicFunction conformal_laplacian(const TransverseGeometry& geom, const BasicFunction& f);

}  // namespace tylab
