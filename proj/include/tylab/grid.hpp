#pragma once

// 1-D spectral collocation: Chebyshev-Gauss-Lobatto nodes with a dense
// barycentric differentiation matrix and Clenshaw-Curtis quadrature
// weights, on either [0,1] or [-1,1].  Grids are immutable after
// construction and shared by const pointer.

#include <Eigen/Dense>

#include <cstdint>
#include <memory>
#include <utility>

namespace tylab {

enum class Interval { Unit, Symmetric };  // [0,1] or [-1,1]

class CollocationGrid {
 public:
  // Requires n >= 8; throws std::invalid_argument otherwise.
  CollocationGrid(int n, Interval interval);

  int size() const { return n_; }
  Interval interval() const { return interval_; }

  // Nodes in ascending order; the interval endpoints are nodes.
  const Eigen::VectorXd& nodes() const { return nodes_; }

  // Dense first-derivative operator, exact on polynomials of degree < n.
  const Eigen::MatrixXd& diff() const { return diff_; }

  // Quadrature weights for the flat measure (dt or dx), exact on
  // polynomials of degree < n.
  const Eigen::VectorXd& quad() const { return quad_; }

  Eigen::VectorXd derivative(const Eigen::VectorXd& f) const;
  double integrate(const Eigen::VectorXd& f) const;

  bool compatible(const CollocationGrid& other) const {
    return n_ == other.n_ && interval_ == other.interval_;
  }

 private:
  int n_;
  Interval interval_;
  Eigen::VectorXd nodes_;
  Eigen::MatrixXd diff_;
  Eigen::VectorXd quad_;
};

using GridPtr = std::shared_ptr<const CollocationGrid>;

GridPtr make_grid(int n, Interval interval);

// Quadrature weights on the ascending Chebyshev-Gauss-Lobatto nodes of
// [-1,1] for a measure dnu given through its Chebyshev moments
// m[k] = integral of T_k(x) dnu(x), k = 0..n-1.  The weights integrate
// every polynomial of degree < n exactly against dnu.
Eigen::VectorXd moment_quadrature_weights(int n, const Eigen::VectorXd& moments);

// Weights on the same nodes for the half-circle measure sqrt(1-x^2) dx.
// Exact for polynomials of degree < n; used where a metric density
// carries an endpoint square root that plain flat-measure weights would
// resolve only algebraically.
Eigen::VectorXd chebyshev_u_weights(int n);

// A smooth basic (axisymmetric) function sampled at the nodes of a grid.
struct BasicFunction {
  GridPtr grid;
  Eigen::VectorXd values;

  BasicFunction(GridPtr g, Eigen::VectorXd v);

  static BasicFunction zero(const GridPtr& g);
  static BasicFunction constant(const GridPtr& g, double c);

  template <typename F>
  static BasicFunction sample(const GridPtr& g, F&& fn) {
    Eigen::VectorXd v(g->size());
    for (int i = 0; i < g->size(); ++i) v[i] = fn(g->nodes()[i]);
    return BasicFunction(g, std::move(v));
  }
};

// Throws std::invalid_argument unless both functions live on grids of
// equal size and interval.
void require_compatible(const BasicFunction& a, const BasicFunction& b, const char* op);
void require_interval(const BasicFunction& f, Interval interval, const char* op);

}  // namespace tylab
