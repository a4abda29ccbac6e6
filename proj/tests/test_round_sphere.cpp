#include "tylab/round_sphere.hpp"

#include "tylab/basic_calculus.hpp"

#include "doctest.h"

#include <cmath>
#include <numbers>
#include <stdexcept>

using namespace tylab;

namespace {

constexpr double kPi = std::numbers::pi;

BasicFunction random_axisym(const GridPtr& g, std::uint64_t seed, int degree,
                            double amplitude) {
  std::vector<double> c = random_coefficients(seed, degree, amplitude);
  return BasicFunction::sample(g, [&c](double x) {
    double acc = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
  });
}

}  // namespace

TEST_CASE("round Laplacian eigenfunctions") {
  GridPtr g = make_grid(48, Interval::Symmetric);
  CHECK(sphere_laplacian(2, BasicFunction::constant(g, 1.0)).values.cwiseAbs().maxCoeff() <=
        1e-11);

  BasicFunction x = BasicFunction::sample(g, [](double v) { return v; });
  Eigen::VectorXd l2 = sphere_laplacian(2, x).values;
  Eigen::VectorXd l3 = sphere_laplacian(3, x).values;
  CHECK((l2 + 2.0 * x.values).cwiseAbs().maxCoeff() <= 1e-11);
  CHECK((l3 + 3.0 * x.values).cwiseAbs().maxCoeff() <= 1e-11);

  // Quadratic eigenfunction on the 3-sphere: x^2 - 1/4 has eigenvalue -8.
  BasicFunction q = BasicFunction::sample(g, [](double v) { return v * v - 0.25; });
  CHECK((sphere_laplacian(3, q).values + 8.0 * q.values).cwiseAbs().maxCoeff() <= 1e-10);

  CHECK_THROWS_AS(sphere_laplacian(1, x), std::invalid_argument);
  GridPtr unit = make_grid(16, Interval::Unit);
  CHECK_THROWS_AS(sphere_laplacian(2, BasicFunction::zero(unit)), std::invalid_argument);
}

TEST_CASE("conformal curvature of round metrics") {
  GridPtr g = make_grid(48, Interval::Symmetric);
  BasicFunction zero = BasicFunction::zero(g);
  CHECK(sphere_scalar(2, zero).values.minCoeff() == 2.0);
  CHECK(sphere_scalar(2, zero).values.maxCoeff() == 2.0);
  CHECK(sphere_scalar(3, zero).values.minCoeff() == 6.0);
  CHECK(sphere_scalar(3, zero).values.maxCoeff() == 6.0);

  BasicFunction c = BasicFunction::constant(g, 0.4);
  CHECK(sphere_scalar(2, c).values[0] == doctest::Approx(2.0 * std::exp(-0.4)).epsilon(1e-14));
}

TEST_CASE("sphere geometry measures the round volumes") {
  GridPtr g = make_grid(64, Interval::Symmetric);
  SphereGeometry s2(2, BasicFunction::zero(g));
  SphereGeometry s3(3, BasicFunction::zero(g));
  CHECK(s2.volume() == doctest::Approx(4.0 * kPi).epsilon(1e-13));
  CHECK(s3.volume() == doctest::Approx(2.0 * kPi * kPi).epsilon(1e-13));

  CHECK_THROWS_AS(SphereGeometry(4, BasicFunction::zero(g)), std::invalid_argument);
  GridPtr unit = make_grid(16, Interval::Unit);
  CHECK_THROWS_AS(SphereGeometry(2, BasicFunction::zero(unit)), std::invalid_argument);
}

TEST_CASE("prescribed-curvature consistency on the 2-sphere") {
  // The curvature of e^-phi g_round must equal e^phi (2 + lap phi).
  GridPtr g = make_grid(96, Interval::Symmetric);
  BasicFunction phi = random_axisym(g, 51, 8, 0.5);
  BasicFunction minus_phi(g, (-phi.values).eval());
  Eigen::VectorXd h = sphere_scalar(2, minus_phi).values;
  Eigen::VectorXd expected =
      phi.values.array().exp() *
      (2.0 + sphere_laplacian(2, phi).values.array());
  CHECK((h - expected.matrix()).cwiseAbs().maxCoeff() <=
        1e-9 * expected.cwiseAbs().maxCoeff());
}

TEST_CASE("conformal-field integral vanishes in every dimension") {
  GridPtr g = make_grid(128, Interval::Symmetric);

  CHECK(std::abs(bourguignon_ezin_integral(2, BasicFunction::zero(g))) <= 1e-9);

  BasicFunction quad = BasicFunction::sample(
      g, [](double x) { return 0.4 * x * x - 0.1 * x; });
  SphereGeometry ref2(2, quad);
  double scale2 =
      ref2.scalar_profile().cwiseAbs().maxCoeff() * ref2.volume();
  CHECK(std::abs(bourguignon_ezin_integral(2, quad)) <= 1e-8 * scale2);

  for (int dim : {2, 3}) {
    for (int trial = 0; trial < 10; ++trial) {
      BasicFunction u = random_axisym(g, trial_seed(300 + dim, trial), 8, 0.5);
      SphereGeometry geom(dim, u);
      const double scale =
          geom.scalar_profile().cwiseAbs().maxCoeff() * geom.volume();
      CHECK(std::abs(bourguignon_ezin_integral(dim, u)) <= 1e-8 * scale);
    }
  }
}

TEST_CASE("first-harmonic obstruction integral vanishes") {
  GridPtr g = make_grid(128, Interval::Symmetric);
  CHECK(std::abs(kazdan_warner_integral(BasicFunction::zero(g))) <= 1e-10);

  for (int trial = 0; trial < 10; ++trial) {
    BasicFunction phi = trial == 0
                            ? BasicFunction::sample(g, [](double x) { return 0.5 * x; })
                            : (trial == 1 ? BasicFunction::sample(
                                                g, [](double x) { return 0.3 * x * x; })
                                          : random_axisym(g, trial_seed(400, trial), 8, 0.5));
    BasicFunction minus_phi(g, (-phi.values).eval());
    Eigen::VectorXd h = sphere_scalar(2, minus_phi).values;
    Eigen::VectorXd dens = (-phi.values.array()).exp().matrix();
    const double scale =
        h.cwiseAbs().maxCoeff() * 2.0 * kPi * g->integrate(dens);
    CHECK(std::abs(kazdan_warner_integral(phi)) <= 1e-8 * scale);
  }
}

TEST_CASE("total curvature of the 2-sphere is topological") {
  GridPtr g = make_grid(128, Interval::Symmetric);
  for (int trial = 0; trial < 10; ++trial) {
    BasicFunction u = random_axisym(g, trial_seed(500, trial), 8, 0.5);
    SphereGeometry geom(2, u);
    CHECK(geom.integrate(geom.scalar_profile()) ==
          doctest::Approx(8.0 * kPi).epsilon(1e-12));
  }
}

TEST_CASE("curvature quotient of the round 3-sphere") {
  GridPtr g = make_grid(96, Interval::Symmetric);
  BasicFunction zero = BasicFunction::zero(g);
  const double expected = 6.0 * std::pow(2.0 * kPi * kPi, 2.0 / 3.0);
  CHECK(yamabe_quotient(3, zero) == doctest::Approx(expected).epsilon(1e-13));

  BasicFunction u = BasicFunction::sample(g, [](double x) { return 0.2 * x; });
  const double q = yamabe_quotient(3, u);
  BasicFunction shifted(g, (u.values.array() + 1.0).matrix());
  CHECK(yamabe_quotient(3, shifted) == doctest::Approx(q).epsilon(1e-10));
  CHECK(std::isfinite(q));

  CHECK_THROWS_AS(yamabe_quotient(2, zero), std::invalid_argument);
}
