#pragma once

// The basic calculus of the weighted sphere in the coordinate t:
// the conformal vector field Z2 acting on basic functions, the basic
// Laplacian in its endpoint-regular expanded form, and quadrature
// against the foliation measure 2 pi^2 e^u sigma^-2 dt.

#include "tylab/grid.hpp"
#include "tylab/weights.hpp"

#include <cstdint>
#include <vector>

namespace tylab {

// Z2 f = 2 sigma^-1 t(1-t) f'.  Vanishes at the interval endpoints.
BasicFunction z2_apply(const Weights& w, const BasicFunction& f);

// Basic Laplacian, the expanded form of lambda^-1 Z2(Z2 f):
//   4 sigma t(1-t) f'' + [4 sigma (1-2t) - 4 (a1-a2) t(1-t)] f'.
// Regular at the endpoints even though lambda vanishes there.
BasicFunction basic_laplacian(const Weights& w, const BasicFunction& f);

// Integral of f against the base measure 2 pi^2 sigma^-2 dt.
double integrate(const Weights& w, const BasicFunction& f);

// Integral of f against the conformal measure 2 pi^2 e^u sigma^-2 dt.
double integrate(const Weights& w, const BasicFunction& u, const BasicFunction& f);

// Derives the seed for one trial of a multi-trial suite from the user
// seed and the trial counter.
std::uint64_t trial_seed(std::uint64_t seed, int trial);

// Polynomial coefficients (degree+1 of them, constant term first),
// drawn uniformly from [-amplitude, amplitude] by a seeded generator.
// Requires 0 <= degree <= 10 and 0 <= amplitude <= 1.
std::vector<double> random_coefficients(std::uint64_t seed, int degree, double amplitude);

// The polynomial with random_coefficients(...) sampled on the grid.
BasicFunction random_basic(const GridPtr& g, std::uint64_t seed, int degree,
                           double amplitude);

// Horner evaluation of the coefficient list on the grid nodes.
BasicFunction polynomial_basic(const GridPtr& g, const std::vector<double>& coefficients);

}  // namespace tylab
