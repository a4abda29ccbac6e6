#include "tylab/yamabe_flow.hpp"

#include "tylab/invariants.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace tylab {

namespace {

// Estimate of the spectral radius of the base Laplacian on the grid, by
// power iteration from a deterministic start vector rich in the highest
// frequency.  The stiffest flow mode at exponent u is this times the
// largest e^-u factor.
double laplacian_spectral_bound(const Weights& w, const GridPtr& grid) {
  const int n = grid->size();
  Eigen::VectorXd v(n);
  for (int i = 0; i < n; ++i) v[i] = (i % 2 == 0) ? 1.0 : -1.0;
  v /= v.norm();
  double norm = 1.0;
  for (int it = 0; it < 128; ++it) {
    v = basic_laplacian(w, BasicFunction(grid, v)).values;
    norm = v.norm();
    if (!(norm > 0.0) || !std::isfinite(norm)) break;
    v /= norm;
  }
  return 1.02 * norm;
}

struct FlowState {
  Eigen::VectorXd scalar;
  double r = 0.0;
  double sup_residual = 0.0;
  double invariant = 0.0;
};

FlowState eval_state(const Weights& w, const GridPtr& grid, const Eigen::VectorXd& u) {
  TransverseGeometry geom(w, BasicFunction(grid, u));
  FlowState st;
  st.scalar = geom.scalar_profile();
  st.r = geom.integrate(st.scalar) / geom.volume();
  st.sup_residual = (st.scalar.array() - st.r).abs().maxCoeff();
  st.invariant = compute_invariant(geom);
  return st;
}

}  // namespace

const char* to_string(FlowTermination t) {
  switch (t) {
    case FlowTermination::converged: return "converged";
    case FlowTermination::step_limit: return "step-limit";
    case FlowTermination::diverged: return "diverged";
  }
  return "unknown";
}

double functional_j2(const Weights& w, const BasicFunction& u) {
  require_interval(u, Interval::Unit, "functional_j2");
  const GridPtr& grid = u.grid;
  BasicFunction r0 = BasicFunction::sample(
      grid, [&w](double t) { return transverse_scalar_closed(w, t); });
  Eigen::VectorXd lap0u = basic_laplacian(w, u).values;
  Eigen::VectorXd integrand =
      -0.5 * u.values.cwiseProduct(lap0u) + u.values.cwiseProduct(r0.values);
  const double bulk = integrate(w, BasicFunction(grid, std::move(integrand)));
  const double total = integrate(w, r0);
  const double vol = integrate(w, u, BasicFunction::constant(grid, 1.0));
  return bulk - total * std::log(vol);
}

BasicFunction yamabe_residual(const TransverseGeometry& geom, double c) {
  Eigen::VectorXd res = -basic_laplacian(geom.weights(), geom.u()).values +
                        geom.base_scalar() -
                        c * geom.u().values.array().exp().matrix();
  return BasicFunction(geom.grid(), std::move(res));
}

FlowTrace run_flow(const FlowConfig& cfg) {
  if (!(cfg.dt > 0.0)) throw std::invalid_argument("run_flow: dt must be positive");
  if (cfg.max_steps < 1) throw std::invalid_argument("run_flow: max_steps must be >= 1");
  if (!(cfg.residual_target > 0.0)) {
    throw std::invalid_argument("run_flow: residual_target must be positive");
  }

  const Weights& w = cfg.w;
  GridPtr grid = make_grid(cfg.nodes, Interval::Unit);
  const BasicFunction ones = BasicFunction::constant(grid, 1.0);
  const double base_volume = integrate(w, ones);

  Eigen::VectorXd u =
      cfg.init_coefficients.empty()
          ? random_basic(grid, cfg.seed, cfg.init_degree, cfg.init_amplitude).values
          : polynomial_basic(grid, cfg.init_coefficients).values;

  // Volume gauge: renormalize so the conformal volume equals the base
  // volume.  J2 is shift-invariant, so this only fixes the additive
  // constant of u; it pins the average curvature r at its closed value.
  auto renormalize = [&](Eigen::VectorXd& v) {
    const double vol = integrate(w, BasicFunction(grid, v), ones);
    const double shift = std::log(vol / base_volume);
    if (std::isfinite(shift)) v.array() -= shift;
  };
  renormalize(u);

  // Explicit stepping is stable only below roughly 2 / (spectral radius
  // of e^-u lap0).  The step is capped there (with a safety margin)
  // unless the configured dt is so far above the ceiling that the caller
  // is deliberately probing the unstable regime, in which case the raw
  // step is honored and divergence is reported rather than prevented.
  const double spectral = laplacian_spectral_bound(w, grid);
  auto step_cap = [&](const Eigen::VectorXd& v) {
    return 1.8 / (spectral * std::exp((-v).maxCoeff()));
  };
  const double cap0 = step_cap(u);
  const bool capped_regime = cfg.dt <= 64.0 * cap0;
  double dt = capped_regime ? std::min(cfg.dt, cap0) : cfg.dt;
  const double dt_floor = cfg.dt / 4096.0;

  FlowTrace trace;
  double j2 = functional_j2(w, BasicFunction(grid, u));
  FlowState st = eval_state(w, grid, u);
  trace.steps.push_back({0, j2, st.sup_residual, st.r, st.invariant});

  if (st.sup_residual <= cfg.residual_target) {
    trace.termination = FlowTermination::converged;
  } else {
    trace.termination = FlowTermination::step_limit;
    for (int step = 1; step <= cfg.max_steps; ++step) {
      if (capped_regime) dt = std::min(dt, step_cap(u));
      const Eigen::VectorXd direction = (st.r - st.scalar.array()).matrix();

      // Descent control: accept a trial unless it raises J2 beyond
      // rounding slack; otherwise halve, down to a fixed floor, and
      // accept the last trial regardless so the flow cannot stall.
      Eigen::VectorXd u_trial;
      double j2_trial = 0.0;
      bool accepted = false;
      for (int halving = 0; halving <= 12; ++halving) {
        u_trial = u + dt * direction;
        renormalize(u_trial);
        j2_trial = functional_j2(w, BasicFunction(grid, u_trial));
        if (j2_trial <= j2 + 1e-12 * (1.0 + std::abs(j2))) {
          accepted = true;
          break;
        }
        if (dt <= dt_floor) break;
        dt = std::max(dt_floor, 0.5 * dt);
      }
      if (!accepted) ++trace.forced_steps;

      u = std::move(u_trial);
      j2 = j2_trial;
      st = eval_state(w, grid, u);
      trace.steps.push_back({step, j2, st.sup_residual, st.r, st.invariant});

      if (u.cwiseAbs().maxCoeff() > 50.0) {
        trace.termination = FlowTermination::diverged;
        break;
      }
      if (st.sup_residual <= cfg.residual_target) {
        trace.termination = FlowTermination::converged;
        break;
      }
    }
  }

  trace.final_u.assign(u.data(), u.data() + u.size());
  trace.dt_final = dt;
  return trace;
}

}  // namespace tylab
