#pragma once

#include <array>
#include <functional>

#include "minsurf/rational.hpp"

namespace minsurf {

using Vec3c = std::array<Complex, 3>;
using Vec3 = std::array<double, 3>;

/// Adaptive Gauss-Kronrod (G7/K15) integration of a complex 3-vector
/// integrand over [a, b]. The tolerance is relative to the integral of the
/// pointwise norm. Throws numeric_error naming the subinterval when the
/// bisection depth is exhausted.
Vec3c integrate_gk(const std::function<Vec3c(double)>& f, double a, double b,
                   double rel_tol = 1e-10, int max_depth = 48);

/// Scalar convenience wrapper.
Complex integrate_gk_scalar(const std::function<Complex(double)>& f, double a, double b,
                            double rel_tol = 1e-10, int max_depth = 48);

/// Nodes and weights of the n-point Gauss-Legendre rule on [-1, 1], computed
/// once by Newton iteration on the Legendre recurrence.
const std::pair<std::vector<double>, std::vector<double>>& gauss_legendre(int n);

} // namespace minsurf
