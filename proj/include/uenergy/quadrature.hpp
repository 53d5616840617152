#pragma once

#include <functional>

namespace uenergy {

struct QuadratureResult {
  double value = 0;
  double error = 0; // sum of per-panel |Kronrod - Gauss| estimates
  int panels = 0;
};

// Globally adaptive Gauss-Kronrod (7/15) on [a, b]: the panel with the largest
// error estimate (floored at the rounding level of each panel) is bisected
// until the total estimate drops below abs_tol.
// Throws convergence_error carrying the last estimate when max_panels is hit.
QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double a, double b, double abs_tol,
                                    int max_panels = 4000);

} // namespace uenergy
