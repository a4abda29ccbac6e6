#include "tylab/grid.hpp"

#include "doctest.h"
#include "oracles.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

using namespace tylab;

namespace {

constexpr double kPi = std::numbers::pi;

}  // namespace

TEST_CASE("grid construction contract") {
  CHECK_THROWS_AS(CollocationGrid(7, Interval::Unit), std::invalid_argument);
  CHECK_NOTHROW(CollocationGrid(8, Interval::Unit));

  GridPtr g = make_grid(8, Interval::Unit);
  CHECK(g->size() == 8);
  CHECK(g->nodes()[0] == 0.0);
  CHECK(g->nodes()[7] == 1.0);
  for (int i = 1; i < 8; ++i) CHECK(g->nodes()[i] > g->nodes()[i - 1]);

  GridPtr s = make_grid(9, Interval::Symmetric);
  CHECK(s->nodes()[0] == -1.0);
  CHECK(s->nodes()[8] == 1.0);
  CHECK(s->nodes()[4] == 0.0);
}

TEST_CASE("differentiation annihilates constants") {
  for (int n : {8, 32, 129}) {
    for (Interval iv : {Interval::Unit, Interval::Symmetric}) {
      GridPtr g = make_grid(n, iv);
      Eigen::VectorXd ones = Eigen::VectorXd::Ones(n);
      CHECK(g->derivative(ones).cwiseAbs().maxCoeff() <= 1e-12);
    }
  }
}

TEST_CASE("differentiation is exact on polynomials") {
  for (int n : {8, 32, 64}) {
    GridPtr g = make_grid(n, Interval::Unit);
    const int kmax = std::min(n - 1, 12);
    for (int k = 1; k <= kmax; ++k) {
      Eigen::VectorXd f(n), df_exact(n);
      for (int i = 0; i < n; ++i) {
        const double t = g->nodes()[i];
        f[i] = std::pow(t, k);
        df_exact[i] = k * std::pow(t, k - 1);
      }
      CHECK((g->derivative(f) - df_exact).cwiseAbs().maxCoeff() <= 1e-9);
    }
  }
  GridPtr g32 = make_grid(32, Interval::Unit);
  Eigen::VectorXd t2 = g32->nodes().array().square();
  CHECK((g32->derivative(t2) - 2.0 * g32->nodes()).cwiseAbs().maxCoeff() <= 1e-10);
}

TEST_CASE("quadrature is exact on polynomials") {
  for (int n : {8, 16, 64}) {
    for (Interval iv : {Interval::Unit, Interval::Symmetric}) {
      GridPtr g = make_grid(n, iv);
      const double len = (iv == Interval::Unit) ? 1.0 : 2.0;
      CHECK(g->integrate(Eigen::VectorXd::Ones(n)) == doctest::Approx(len).epsilon(1e-12));
      const int kmax = std::min(n - 1, 12);
      for (int k = 1; k <= kmax; ++k) {
        Eigen::VectorXd f(n);
        for (int i = 0; i < n; ++i) f[i] = std::pow(g->nodes()[i], k);
        const double exact = (iv == Interval::Unit)
                                 ? 1.0 / (k + 1)
                                 : (k % 2 == 0 ? 2.0 / (k + 1) : 0.0);
        if (exact == 0.0) {
          CHECK(std::abs(g->integrate(f)) <= 1e-14);
        } else {
          CHECK(g->integrate(f) == doctest::Approx(exact).epsilon(1e-12));
        }
      }
    }
  }
}

TEST_CASE("quadrature reaches rounding level on analytic functions by n=32") {
  GridPtr g = make_grid(32, Interval::Unit);
  Eigen::VectorXd f = g->nodes().array().exp();
  CHECK(std::abs(g->integrate(f) - (std::exp(1.0) - 1.0)) <= 1e-13);

  GridPtr s = make_grid(32, Interval::Symmetric);
  Eigen::VectorXd fs = s->nodes().array().exp();
  CHECK(std::abs(s->integrate(fs) - (std::exp(1.0) - std::exp(-1.0))) <= 1e-13);
}

TEST_CASE("grids are deterministic") {
  GridPtr a = make_grid(48, Interval::Unit);
  GridPtr b = make_grid(48, Interval::Unit);
  CHECK(a->nodes() == b->nodes());
  CHECK(a->quad() == b->quad());
  CHECK(a->diff() == b->diff());
}

TEST_CASE("half-circle quadrature weights are exact for the weighted measure") {
  // Even monomial moments of sqrt(1-x^2) dx are pi/2 * catalan(k) / 4^k.
  const int n = 64;
  GridPtr g = make_grid(n, Interval::Symmetric);
  Eigen::VectorXd uw = chebyshev_u_weights(n);

  const double catalan[6] = {1, 1, 2, 5, 14, 42};
  for (int k = 0; k <= 5; ++k) {
    Eigen::VectorXd f(n);
    for (int i = 0; i < n; ++i) f[i] = std::pow(g->nodes()[i], 2 * k);
    const double exact = kPi / 2.0 * catalan[k] / std::pow(4.0, k);
    CHECK(uw.dot(f) == doctest::Approx(exact).epsilon(1e-14));
    Eigen::VectorXd fodd(n);
    for (int i = 0; i < n; ++i) fodd[i] = std::pow(g->nodes()[i], 2 * k + 1);
    CHECK(std::abs(uw.dot(fodd)) <= 1e-14);
  }

  // Cross-check a non-polynomial integrand against the reference rule,
  // with the substitution x = sin(theta) so the reference integrand is
  // analytic.
  Eigen::VectorXd fe = g->nodes().array().exp();
  const long double half_pi = 1.57079632679489661923132169163975144L;
  const long double ref = oracle::integrate(
      [](long double th) {
        const long double c = std::cos(th);
        return std::exp(std::sin(th)) * c * c;
      },
      -half_pi, half_pi);
  CHECK(uw.dot(fe) == doctest::Approx(static_cast<double>(ref)).epsilon(1e-13));
}

TEST_CASE("moment weights reproduce the flat rule") {
  const int n = 24;
  Eigen::VectorXd m = Eigen::VectorXd::Zero(n);
  for (int k = 0; k < n; k += 2) m[k] = 2.0 / (1.0 - static_cast<double>(k) * k);
  GridPtr s = make_grid(n, Interval::Symmetric);
  CHECK((moment_quadrature_weights(n, m) - s->quad()).cwiseAbs().maxCoeff() <= 1e-15);
  CHECK_THROWS_AS(moment_quadrature_weights(n, Eigen::VectorXd::Zero(n - 1)),
                  std::invalid_argument);
}

TEST_CASE("basic function construction and compatibility") {
  GridPtr g = make_grid(16, Interval::Unit);
  CHECK_THROWS_AS(BasicFunction(g, Eigen::VectorXd::Zero(15)), std::invalid_argument);

  BasicFunction z = BasicFunction::zero(g);
  CHECK(z.values.cwiseAbs().maxCoeff() == 0.0);
  BasicFunction c = BasicFunction::constant(g, 2.5);
  CHECK(c.values.minCoeff() == 2.5);
  BasicFunction sq = BasicFunction::sample(g, [](double t) { return t * t; });
  CHECK(sq.values[g->size() - 1] == 1.0);

  GridPtr h = make_grid(17, Interval::Unit);
  CHECK_THROWS_AS(require_compatible(z, BasicFunction::zero(h), "test"),
                  std::invalid_argument);
  GridPtr sgrid = make_grid(16, Interval::Symmetric);
  CHECK_THROWS_AS(require_interval(BasicFunction::zero(sgrid), Interval::Unit, "test"),
                  std::invalid_argument);
}
