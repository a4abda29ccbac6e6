#pragma once

// Closed-form scalar data of the weighted Sasakian 3-sphere S^3_a.
//
// Everything is expressed in the single coordinate t = |z1|^2 in [0,1];
// the ambient sphere is never discretized.  sigma(t) = a1*t + a2*(1-t) is
// the weight function, lambda(t) = sigma^-3 t(1-t) the transverse frame
// density, and the remaining functions are the transverse scalar curvature
// of the base metric, its derivative along the conformal field Z2, the
// conformal factor of Z2, and three integrated constants (the invariant,
// the total transverse curvature, and the volume).

namespace tylab {

struct Weights {
  double a1;
  double a2;

  // Requires a1 > 0 and a2 > 0 (finite); throws std::invalid_argument.
  Weights(double a1_, double a2_);

  double slope() const { return a1 - a2; }  // d(sigma)/dt
};

// sigma(t) = a1*t + a2*(1-t); affine, bounded by min/max of the weights.
double sigma(const Weights& w, double t);

// lambda(t) = sigma(t)^-3 * t(1-t); vanishes exactly at t in {0,1}.
double lambda_base(const Weights& w, double t);

// Transverse scalar curvature of the base metric:
//   R(t) = -24 (a1-a2)^2 sigma^-1 t(1-t) - 16 (a1-a2)(2t-1) + 8 sigma.
// Constant 8*a for equal weights (a,a).
double transverse_scalar_closed(const Weights& w, double t);

// Z2 applied to the curvature profile:
//   Z2(R)(t) = -48 (a1-a2) a1 a2 sigma^-3 t(1-t).
// Identically zero iff a1 == a2.
double z2_scalar_closed(const Weights& w, double t);

// Conformal factor of Z2, the endpoint-regular expansion of
// (1/2) Z2 log lambda:
//   f(t) = sigma^-1 (1-2t) - 3 (a1-a2) t(1-t) sigma^-2.
double conformal_factor_closed(const Weights& w, double t);

// Integral invariant of the conformal field Z2 on the base metric:
//   I = -8 pi^2 (a1^2 - a2^2) / (a1^2 a2^2).
// Antisymmetric under weight swap, zero iff a1 == a2, scales as 1/s^2
// under (a1,a2) -> (s a1, s a2).
double invariant_closed(const Weights& w);

// Total transverse curvature of every metric in the basic conformal class:
//   integral of R dmu = 8 pi^2 (a1 + a2) / (a1 a2).
double total_curvature_closed(const Weights& w);

// Volume of the base metric: 2 pi^2 / (a1 a2).
double volume_closed(const Weights& w);

}  // namespace tylab
