#pragma once

// Normalized transverse curvature flow du/ds = r - R_u, the gradient
// descent of the log-volume functional J2.  The flow preserves the total
// curvature and the conformal invariant analytically; the trace records
// both so the preservation can be checked rather than assumed.

#include "tylab/conformal.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace tylab {

struct FlowConfig {
  explicit FlowConfig(Weights weights) : w(weights) {}

  Weights w;
  int nodes = 128;
  double dt = 2e-4;
  int max_steps = 60000;
  double residual_target = 1e-6;
  std::uint64_t seed = 42;
  double init_amplitude = 0.2;
  int init_degree = 6;
  // When nonempty, overrides the seeded random initial exponent.
  std::vector<double> init_coefficients;
};

enum class FlowTermination { converged, step_limit, diverged };

const char* to_string(FlowTermination t);

struct FlowRecord {
  int step;
  double j2;
  double sup_residual;  // sup |R_u - r|
  double r;             // average curvature of the current metric
  double invariant;     // conformal invariant of the current metric
};

struct FlowTrace {
  std::vector<FlowRecord> steps;
  FlowTermination termination = FlowTermination::step_limit;
  std::vector<double> final_u;  // node values of the final exponent
  double dt_final = 0.0;
  int forced_steps = 0;  // accepted without descent after halving was exhausted
};

// J2(u) = integral of (-1/2 u lap0 u + u R0) dmu0
//         - (integral of R0 dmu0) * log integral of e^u dmu0.
// Invariant under u -> u + constant.
double functional_j2(const Weights& w, const BasicFunction& u);

// Residual profile of the constant-curvature equation at level c:
//   -lap0 u + R0 - c e^u.
BasicFunction yamabe_residual(const TransverseGeometry& geom, double c);

// Explicit descent with per-step volume renormalization and step halving
// on J2 increase.  Terminates converged when sup |R_u - r| falls to the
// residual target, diverged when sup |u| exceeds 50, or at the step
// limit.  One trace record per accepted step (plus the initial state).
FlowTrace run_flow(const FlowConfig& cfg);

}  // namespace tylab
