#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "fracsum/polynomial.hpp"
#include "fracsum/types.hpp"

namespace fracsum {

/// Degree of the approximating polynomials p_n. minus_infinity() selects p_n = 0,
/// appropriate when f(n + z) -> 0.
class Degree {
 public:
  constexpr explicit Degree(int value) : value_(value) {}
  static constexpr Degree minus_infinity() { return Degree(); }

  constexpr bool is_minus_infinity() const noexcept { return !value_.has_value(); }
  constexpr int value() const { return value_.value(); }
  friend constexpr bool operator==(const Degree&, const Degree&) = default;

 private:
  constexpr Degree() = default;
  std::optional<int> value_;
};

/// Returns f^(0..max_order)(center).
using TaylorFn = std::function<std::vector<Complex>(Complex center, int max_order)>;
/// Returns true when f may be evaluated at the point.
using DomainGuard = std::function<bool(Complex)>;
/// Override for the local approximant: returns q with q(u) ~ f(center + u).
using ApproximantFn = std::function<Polynomial(Complex center)>;

/// A function to be summed, with the asymptotic metadata the engine needs.
///
/// `sigma` and `derivatives` describe f toward the infinity the sum is taken to
/// (+inf for right sums, -inf for left sums); a summand used in both directions
/// is two Summands. Without `derivatives` the engine falls back to finite differences.
/// `decay_rate` is the leading exponent p of the n^{-p} truncation error, used to seed
/// Richardson extrapolation when the engine config does not fix one.
/// Callbacks must be safe to call concurrently.
struct Summand {
  ComplexFn eval;
  Degree sigma = Degree::minus_infinity();
  TaylorFn derivatives;
  DomainGuard domain_guard;
  std::optional<double> decay_rate;
  ApproximantFn approximant;
  std::string name;
};

}  // namespace fracsum
