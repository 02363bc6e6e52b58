#pragma once

#include <vector>

#include "fracsum/types.hpp"

namespace fracsum {

/// Derivatives f^(0..max_order)(center) of a function analytic on the closed disk of
/// the given radius, from the trapezoidal rule on the Cauchy integral. The aliasing
/// error decays like (radius / R)^nodes, R being the distance to the nearest singularity.
std::vector<Complex> cauchy_derivatives(const ComplexFn& f, Complex center, double radius,
                                        int max_order, int nodes = 64);

/// Central finite differences with step h = max(1, |center|) * 1e-5 per order,
/// refined once by Richardson extrapolation (h and h/2).
std::vector<Complex> finite_difference_derivatives(const ComplexFn& f, Complex center,
                                                   int max_order);

}  // namespace fracsum
