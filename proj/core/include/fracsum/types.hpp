#pragma once

#include <complex>
#include <functional>

namespace fracsum {

using Complex = std::complex<double>;
using ComplexFn = std::function<Complex(Complex)>;

inline constexpr double kPi = 3.14159265358979323846264338327950288;

}  // namespace fracsum
