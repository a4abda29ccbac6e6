#include "tylab/grid.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace tylab {

namespace {

constexpr double kPi = std::numbers::pi;

// Ascending Chebyshev-Gauss-Lobatto nodes on [-1,1]: x_j = -cos(j pi / N).
Eigen::VectorXd cgl_nodes(int n) {
  const int N = n - 1;
  Eigen::VectorXd x(n);
  for (int j = 0; j <= N; ++j) x[j] = -std::cos(kPi * j / N);
  x[0] = -1.0;
  x[N] = 1.0;
  if (n % 2 == 1) x[N / 2] = 0.0;
  return x;
}

// Barycentric differentiation matrix on arbitrary nodes with weights wb.
// The diagonal uses the negative-sum trick, which also makes the matrix
// annihilate constants to machine precision.
Eigen::MatrixXd barycentric_diff(const Eigen::VectorXd& x, const Eigen::VectorXd& wb) {
  const int n = static_cast<int>(x.size());
  Eigen::MatrixXd d(n, n);
  for (int i = 0; i < n; ++i) {
    double row_sum = 0.0;
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const double v = (wb[j] / wb[i]) / (x[i] - x[j]);
      d(i, j) = v;
      row_sum += v;
    }
    d(i, i) = -row_sum;
  }
  return d;
}

}  // namespace

Eigen::VectorXd moment_quadrature_weights(int n, const Eigen::VectorXd& moments) {
  if (n < 2 || moments.size() != n) {
    throw std::invalid_argument("moment_quadrature_weights: need n >= 2 moments");
  }
  const int N = n - 1;
  // Nodes are x_j = -cos(theta_j), theta_j = j pi / N, so
  // T_k(x_j) = (-1)^k cos(k theta_j).  Exactness on T_0..T_{N} gives a
  // DCT-I system for the weights; c is the endpoint halving factor.
  Eigen::VectorXd w(n);
  auto c = [N](int k) { return (k == 0 || k == N) ? 2.0 : 1.0; };
  for (int j = 0; j <= N; ++j) {
    double acc = 0.0;
    for (int k = 0; k <= N; ++k) {
      const double mk = (k % 2 == 0) ? moments[k] : -moments[k];
      acc += mk / c(k) * std::cos(kPi * k * j / N);
    }
    w[j] = 2.0 / (N * c(j)) * acc;
  }
  return w;
}

Eigen::VectorXd chebyshev_u_weights(int n) {
  Eigen::VectorXd m = Eigen::VectorXd::Zero(n);
  // Moments of sqrt(1-x^2) dx against T_k: pi/2 for k=0, -pi/4 for k=2,
  // zero otherwise (the density is a degree-2 cosine polynomial in theta).
  m[0] = kPi / 2.0;
  if (n > 2) m[2] = -kPi / 4.0;
  return moment_quadrature_weights(n, m);
}

CollocationGrid::CollocationGrid(int n, Interval interval) : n_(n), interval_(interval) {
  if (n < 8) throw std::invalid_argument("CollocationGrid: need at least 8 nodes");

  const int N = n - 1;
  Eigen::VectorXd x = cgl_nodes(n);

  Eigen::VectorXd wb(n);
  for (int j = 0; j < n; ++j) {
    wb[j] = (j % 2 == 0) ? 1.0 : -1.0;
    if (j == 0 || j == N) wb[j] *= 0.5;
  }
  Eigen::MatrixXd d = barycentric_diff(x, wb);

  // Flat Chebyshev moments of dx on [-1,1]: integral of T_k is
  // 2/(1-k^2) for even k, 0 for odd k.
  Eigen::VectorXd m = Eigen::VectorXd::Zero(n);
  for (int k = 0; k < n; k += 2) m[k] = 2.0 / (1.0 - static_cast<double>(k) * k);
  Eigen::VectorXd q = moment_quadrature_weights(n, m);

  if (interval == Interval::Unit) {
    nodes_ = (x.array() + 1.0) / 2.0;
    nodes_[0] = 0.0;
    nodes_[N] = 1.0;
    diff_ = 2.0 * d;
    quad_ = q / 2.0;
  } else {
    nodes_ = x;
    diff_ = std::move(d);
    quad_ = std::move(q);
  }
}

Eigen::VectorXd CollocationGrid::derivative(const Eigen::VectorXd& f) const {
  if (f.size() != n_) throw std::invalid_argument("derivative: size mismatch");
  // Shifting by a sampled value leaves the derivative unchanged but maps
  // constant inputs to the exact zero vector and reduces cancellation in
  // the near-diagonal entries.
  const double shift = f[n_ / 2];
  return diff_ * (f.array() - shift).matrix();
}

double CollocationGrid::integrate(const Eigen::VectorXd& f) const {
  if (f.size() != n_) throw std::invalid_argument("integrate: size mismatch");
  return quad_.dot(f);
}

GridPtr make_grid(int n, Interval interval) {
  return std::make_shared<const CollocationGrid>(n, interval);
}

BasicFunction::BasicFunction(GridPtr g, Eigen::VectorXd v)
    : grid(std::move(g)), values(std::move(v)) {
  if (!grid) throw std::invalid_argument("BasicFunction: null grid");
  if (values.size() != grid->size()) {
    throw std::invalid_argument("BasicFunction: value count differs from node count");
  }
}

BasicFunction BasicFunction::zero(const GridPtr& g) {
  return BasicFunction(g, Eigen::VectorXd::Zero(g->size()));
}

BasicFunction BasicFunction::constant(const GridPtr& g, double c) {
  return BasicFunction(g, Eigen::VectorXd::Constant(g->size(), c));
}

void require_compatible(const BasicFunction& a, const BasicFunction& b, const char* op) {
  if (!a.grid->compatible(*b.grid)) {
    throw std::invalid_argument(std::string(op) + ": operands on incompatible grids");
  }
}

void require_interval(const BasicFunction& f, Interval interval, const char* op) {
  if (f.grid->interval() != interval) {
    throw std::invalid_argument(std::string(op) + ": wrong grid interval");
  }
}

}  // namespace tylab
