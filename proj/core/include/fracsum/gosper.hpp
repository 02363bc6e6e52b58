#pragma once

#include <vector>

#include "fracsum/engine.hpp"
#include "fracsum/types.hpp"

/// The series sum_{n>=0} (-1)^n/(n+1/2) sinc-like terms and its three evaluation routes.
namespace fracsum::gosper {

/// pi sin b / (2b).
Complex closed_form(double b);

/// f(n) = sin(sqrt(b^2 + 4 pi^2 n^2)) / (2n sqrt(b^2 + 4 pi^2 n^2)).
Complex summand_value(double b, Complex n);
Summand summand(double b);

/// Partial sums of the series at N = 64 * 2^j, extrapolated.
SumResult direct_series(double b);

/// -(right fractional sum of f from 3/4 to -3/4).
SumResult engine_route(double b, const EngineConfig& cfg = {});

/// Odd power series coefficients c_j of f(n) = sum_j c_j n^{2j-1}, j = 0..(degree+1)/2.
std::vector<double> odd_coefficients(double b, int degree);

/// f(n) from the power series truncated at the given odd degree.
Complex truncated_series(double b, Complex n, int degree = 21);

/// The series summed term by term: c_0 times the fractional sum of 1/n, plus the
/// fractional sums of the odd powers n^{2j-1}, j >= 1, up to `degree`.
SumResult termwise(double b, const EngineConfig& cfg = {}, int degree = 21);

}  // namespace fracsum::gosper
