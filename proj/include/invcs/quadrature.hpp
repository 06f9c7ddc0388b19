#pragma once

#include <functional>

namespace invcs::quadrature {

struct Result {
  double value = 0.0;
  double error = 0.0;
  int intervals = 0;
  bool converged = false;
};

/// Globally adaptive 15-point Gauss-Kronrod on [a, b]: the interval with the
/// largest error estimate is bisected until error <= max(abs_tol, rel_tol |I|)
/// or `max_intervals` is reached. Endpoints are never evaluated, so integrable
/// endpoint singularities are fine.
Result gauss_kronrod(const std::function<double(double)>& f, double a, double b, double rel_tol,
                     double abs_tol = 0.0, int max_intervals = 4000);

}  // namespace invcs::quadrature
