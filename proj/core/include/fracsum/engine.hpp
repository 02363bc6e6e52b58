#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fracsum/polynomial.hpp"
#include "fracsum/richardson.hpp"
#include "fracsum/summand.hpp"
#include "fracsum/types.hpp"

namespace fracsum {

/// Discretisation of the n -> inf limit: levels n_j = n_start * 2^j, j < n_levels,
/// extrapolated with Richardson depth extrap_order.
struct EngineConfig {
  long n_start = 64;
  int n_levels = 8;
  int extrap_order = 4;
  double tol = 1e-10;
  std::optional<double> rate_hint;

  /// Throws ParameterError unless n_start >= 1, n_levels >= 2, 0 <= extrap_order < n_levels
  /// and tol > 0.
  void validate() const;

  /// Parses "n_start,levels,order,tol".
  static EngineConfig parse(const std::string& text);
};

/// Name of the environment variable that may override the default EngineConfig.
inline constexpr const char* kEngineEnvVar = "FRACSUM_ENGINE";

/// Default config, overridden by kEngineEnvVar when it is set and well formed.
/// Throws ParameterError when the variable is set but malformed.
EngineConfig engine_config_from_env();

struct SumResult {
  Complex value;
  double err_estimate = 0.0;
  long n_used = 0;
  bool converged = false;
  std::vector<Level> levels;
};

/// Local approximant q with q(u) = sum_{k<=sigma} f^(k)(center) u^k / k!, i.e. the
/// degree-sigma Taylor polynomial of f at `center` in the shifted variable u = nu - center.
Polynomial local_approximant(const Summand& f, Complex center);

/// p_n(nu) = q(nu - n) expressed in nu. Requires sigma >= 0.
Polynomial approx_poly(const Summand& f, long n);

/// Right fractional sum of f(nu) for nu from x to y (tail limit n -> +inf).
SumResult frac_sum_right(const Summand& f, Complex x, Complex y, const EngineConfig& cfg = {});

/// Left fractional sum (tail limit n -> -inf); f's metadata describe f toward -inf.
SumResult frac_sum_left(const Summand& f, Complex x, Complex y, const EngineConfig& cfg = {});

/// exp of the right fractional sum of log_factor, which must be a summand of ln f.
SumResult frac_product(const Summand& log_factor, Complex x, Complex y,
                       const EngineConfig& cfg = {});

/// Summand nu -> principal log f(nu), throwing BranchError whenever f(nu) lies on the
/// closed negative real axis. `log_derivatives`, when given, are derivatives of ln f.
Summand principal_log(ComplexFn factor, Degree sigma, TaylorFn log_derivatives = {},
                      DomainGuard guard = {}, std::string name = {});

/// The summand nu -> f(-nu): same sigma, derivatives with alternating signs.
Summand mirrored(const Summand& f);

struct MirrorCheck {
  SumResult right;  ///< right sum of f from a to b
  SumResult left;   ///< left sum of f(-nu) from -b to -a
  Complex difference;
};

MirrorCheck mirror_check(const Summand& f, Complex a, Complex b, const EngineConfig& cfg = {});

/// Suggests sigma from the growth exponent log2(|f(2n)| / |f(n)|).
Degree suggest_sigma(const ComplexFn& f, double n = 1000.0);

}  // namespace fracsum
