#include "tylab/invariants.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace tylab {

double compute_invariant(const TransverseGeometry& geom) {
  BasicFunction zr = z2_apply(geom.weights(), scalar_curvature(geom));
  return geom.integrate(zr);
}

BasicFunction lichnerowicz_residual(const TransverseGeometry& geom) {
  BasicFunction div = divergence_z2(geom);
  BasicFunction zr = z2_apply(geom.weights(), scalar_curvature(geom));
  Eigen::VectorXd res = zr.values + conformal_laplacian(geom, div).values +
                        geom.scalar_profile().cwiseProduct(div.values);
  return BasicFunction(geom.grid(), std::move(res));
}

double q3_vanishing_check(const TransverseGeometry& geom) {
  BasicFunction div = divergence_z2(geom);
  Eigen::VectorXd terms = conformal_laplacian(geom, div).values +
                          geom.scalar_profile().cwiseProduct(div.values);
  return geom.integrate(terms) + compute_invariant(geom);
}

InvariantReport invariance_sweep(const Weights& w, int trials, std::uint64_t seed, int n,
                                 int degree, double amplitude) {
  if (trials < 1) throw std::invalid_argument("invariance_sweep: need at least one trial");

  GridPtr grid = make_grid(n, Interval::Unit);
  InvariantReport report;
  report.a1 = w.a1;
  report.a2 = w.a2;
  report.trials = trials;
  report.seed = seed;
  report.nodes = n;
  report.closed_form = invariant_closed(w);
  report.max_abs_deviation = 0.0;
  report.max_rel_deviation = 0.0;

  // Relative deviations are measured against the closed form when it is
  // nonzero; for vanishing invariants (equal weights) they coincide with
  // the absolute ones.
  const double scale = std::abs(report.closed_form) > 0.0 ? std::abs(report.closed_form) : 1.0;
  for (int trial = 0; trial < trials; ++trial) {
    InvariantSample sample;
    sample.trial = trial;
    if (trial > 0) {
      sample.coefficients = random_coefficients(trial_seed(seed, trial), degree, amplitude);
    }
    BasicFunction u = sample.coefficients.empty()
                          ? BasicFunction::zero(grid)
                          : polynomial_basic(grid, sample.coefficients);
    TransverseGeometry geom(w, std::move(u));
    sample.value = compute_invariant(geom);

    const double dev = std::abs(sample.value - report.closed_form);
    report.max_abs_deviation = std::max(report.max_abs_deviation, dev);
    report.max_rel_deviation = std::max(report.max_rel_deviation, dev / scale);
    report.samples.push_back(std::move(sample));
  }
  return report;
}

}  // namespace tylab
