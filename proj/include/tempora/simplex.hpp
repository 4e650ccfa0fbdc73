#pragma once

// Phase-one simplex on a dense tableau: find x >= 0 with A x = b.
// Bland's rule for entering and leaving variables.

#include <cstddef>
#include <vector>

namespace tempora {

struct FeasibilityResult {
  bool feasible = false;
  double infeasibility = 0.0;  // optimal sum of artificial variables
  std::vector<double> x;
  std::size_t iterations = 0;
};

// `a` is row-major with rows = b.size(). Feasible iff the phase-one optimum is <= tol.
FeasibilityResult phase_one_feasible(const std::vector<double>& a, const std::vector<double>& b, std::size_t cols,
                                     double tol = 1e-8, std::size_t max_iterations = 100000);

}  // namespace tempora
