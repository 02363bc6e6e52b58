#include "fracsum/derivatives.hpp"

#include <algorithm>
#include <cmath>

#include "fracsum/errors.hpp"

namespace fracsum {

std::vector<Complex> cauchy_derivatives(const ComplexFn& f, Complex center, double radius,
                                        int max_order, int nodes) {
  if (max_order < 0) throw ParameterError("cauchy_derivatives: negative order");
  if (!(radius > 0.0)) throw ParameterError("cauchy_derivatives: radius must be positive");
  nodes = std::max(nodes, 2 * max_order + 8);

  std::vector<Complex> values(nodes);
  for (int j = 0; j < nodes; ++j) {
    const double theta = 2.0 * kPi * j / nodes;
    values[j] = f(center + std::polar(radius, theta));
  }

  std::vector<Complex> out(max_order + 1);
  out[0] = f(center);
  double factorial = 1.0;
  double rpow = 1.0;
  for (int k = 1; k <= max_order; ++k) {
    factorial *= k;
    rpow *= radius;
    Complex acc = 0.0;
    for (int j = 0; j < nodes; ++j) {
      const double theta = -2.0 * kPi * double(j) * k / nodes;
      acc += values[j] * std::polar(1.0, theta);
    }
    out[k] = acc * (factorial / (nodes * rpow));
  }
  return out;
}

namespace {

// k-th central difference quotient with spacing h.
Complex central_difference(const ComplexFn& f, Complex center, int k, double h) {
  Complex acc = 0.0;
  double binom = 1.0;
  for (int j = 0; j <= k; ++j) {
    const double sign = (j % 2 == 0) ? 1.0 : -1.0;
    acc += sign * binom * f(center + (0.5 * k - j) * h);
    binom = binom * (k - j) / (j + 1);
  }
  return acc / std::pow(h, k);
}

}  // namespace

std::vector<Complex> finite_difference_derivatives(const ComplexFn& f, Complex center,
                                                   int max_order) {
  if (max_order < 0) throw ParameterError("finite_difference_derivatives: negative order");
  std::vector<Complex> out(max_order + 1);
  out[0] = f(center);
  const double h = std::max(1.0, std::abs(center)) * 1e-5;
  for (int k = 1; k <= max_order; ++k) {
    const Complex coarse = central_difference(f, center, k, h);
    const Complex fine = central_difference(f, center, k, 0.5 * h);
    out[k] = fine + (fine - coarse) / 3.0;
  }
  return out;
}

}  // namespace fracsum
