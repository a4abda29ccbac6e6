#pragma once

// Independent reference integrator for freezing expected values in tests:
// composite Gauss-Legendre quadrature in long double, with nodes found by
// Newton iteration on the Legendre polynomial.  Deliberately shares no
// code with the library's Clenshaw-Curtis path.

#include <cmath>
#include <utility>
#include <vector>

namespace oracle {

struct GaussRule {
  std::vector<long double> x;
  std::vector<long double> w;
};

// m-point Gauss-Legendre rule on [-1,1].
inline GaussRule gauss_legendre(int m) {
  GaussRule rule;
  rule.x.resize(m);
  rule.w.resize(m);
  const long double pi = 3.14159265358979323846264338327950288L;
  for (int k = 0; k < m; ++k) {
    long double x = std::cos(pi * (k + 0.75L) / (m + 0.5L));
    long double dp = 0.0L;
    for (int it = 0; it < 64; ++it) {
      long double p0 = 1.0L, p1 = x;
      for (int j = 2; j <= m; ++j) {
        long double p2 = ((2 * j - 1) * x * p1 - (j - 1) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      dp = m * (x * p1 - p0) / (x * x - 1.0L);
      long double dx = p1 / dp;
      x -= dx;
      if (std::fabs(dx) < 1e-19L) break;
    }
    rule.x[k] = x;
    rule.w[k] = 2.0L / ((1.0L - x * x) * dp * dp);
  }
  return rule;
}

// Composite integration of f over [a,b] with `panels` panels of a
// 24-point rule; far below 1e-18 relative error for analytic integrands.
template <typename F>
long double integrate(F&& f, long double a, long double b, int panels = 64) {
  static const GaussRule rule = gauss_legendre(24);
  const long double h = (b - a) / panels;
  long double acc = 0.0L;
  for (int p = 0; p < panels; ++p) {
    const long double mid = a + h * (p + 0.5L);
    long double local = 0.0L;
    for (std::size_t k = 0; k < rule.x.size(); ++k) {
      local += rule.w[k] * f(mid + 0.5L * h * rule.x[k]);
    }
    acc += 0.5L * h * local;
  }
  return acc;
}

}  // namespace oracle
