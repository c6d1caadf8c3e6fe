#pragma once

#include <functional>

namespace rmtlab {

/// Adaptive Simpson integration of f over [a, b] to absolute tolerance tol.
double adaptive_simpson(const std::function<double(double)>& f, double a,
                        double b, double tol, int max_depth = 40);

/// 5-point Gauss-Legendre rule on [a, b] (used for bin-averaged densities).
double gauss5(const std::function<double(double)>& f, double a, double b);

} // namespace rmtlab
