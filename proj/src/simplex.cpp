#include "tempora/simplex.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "tempora/errors.hpp"

namespace tempora {

FeasibilityResult phase_one_feasible(const std::vector<double>& a, const std::vector<double>& b, std::size_t cols,
                                     double tol, std::size_t max_iterations) {
  const std::size_t m = b.size();
  const std::size_t n = cols;
  if (a.size() != m * n) throw DimensionError("constraint matrix size does not match rows x cols");

  // Tableau columns: n structural, m artificial, 1 right-hand side.
  const std::size_t w = n + m + 1;
  std::vector<double> t(m * w, 0.0);
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    const double sign = b[i] < 0 ? -1.0 : 1.0;
    for (std::size_t j = 0; j < n; ++j) t[i * w + j] = sign * a[i * n + j];
    t[i * w + n + i] = 1.0;
    t[i * w + n + m] = sign * b[i];
    basis[i] = n + i;
  }
  // Reduced costs for min sum of artificials.
  std::vector<double> cost(w, 0.0);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < w; ++j)
      if (j < n || j == n + m) cost[j] -= t[i * w + j];

  constexpr double eps = 1e-12;
  FeasibilityResult res;
  for (;;) {
    std::size_t enter = w;
    for (std::size_t j = 0; j < n + m; ++j)
      if (cost[j] < -eps) {
        enter = j;
        break;
      }
    if (enter == w) break;
    if (++res.iterations > max_iterations) throw std::runtime_error("simplex iteration limit reached");

    std::size_t leave = m;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < m; ++i) {
      const double piv = t[i * w + enter];
      if (piv <= eps) continue;
      const double ratio = t[i * w + n + m] / piv;
      if (ratio < best - eps || (std::abs(ratio - best) <= eps && leave < m && basis[i] < basis[leave])) {
        best = ratio;
        leave = i;
      }
    }
    // Phase one is bounded below by zero, so a pivot row always exists.
    if (leave == m) break;

    const double piv = t[leave * w + enter];
    for (std::size_t j = 0; j < w; ++j) t[leave * w + j] /= piv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave) continue;
      const double f = t[i * w + enter];
      if (f == 0.0) continue;
      for (std::size_t j = 0; j < w; ++j) t[i * w + j] -= f * t[leave * w + j];
    }
    const double f = cost[enter];
    for (std::size_t j = 0; j < w; ++j) cost[j] -= f * t[leave * w + j];
    basis[leave] = enter;
  }

  res.x.assign(n, 0.0);
  double artificial = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    const double v = t[i * w + n + m];
    if (basis[i] < n) res.x[basis[i]] = v;
    else artificial += v;
  }
  res.infeasibility = std::max(0.0, artificial);
  res.feasible = res.infeasibility <= tol;
  return res;
}

}  // namespace tempora
