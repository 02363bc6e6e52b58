#pragma once

#include "fracsum/types.hpp"

namespace fracsum {

/// Truncation parameters of the Euler-Maclaurin evaluation of the Hurwitz zeta
/// function: `direct_terms` explicit terms, then Bernoulli corrections B_2..B_{2K}.
struct EulerMaclaurinParams {
  int direct_terms = 32;
  int correction_order = 10;

  /// Throws ParameterError unless direct_terms >= 8 and 1 <= correction_order <= 15.
  void validate() const;
};

/// Principal branch of log Gamma(z). Branch cut along the negative real axis.
/// Throws PoleError at z = 0, -1, -2, ...
Complex log_gamma(Complex z);

Complex gamma(Complex z);

/// 1/Gamma(z), entire; exactly zero at the poles of Gamma.
Complex rgamma(Complex z);

/// psi(z) = Gamma'(z)/Gamma(z). Throws PoleError at z = 0, -1, -2, ...
Complex digamma(Complex z);

/// sin(pi z) with exact zeros at the integers.
Complex sin_pi(Complex z);
Complex cos_pi(Complex z);

/// Hurwitz zeta(s, x) = sum_{nu>=0} (nu + x)^{-s}, analytically continued in s.
/// Requires s != 1 (PoleError) and Re x > 0 (DomainError).
Complex hurwitz_zeta(Complex s, Complex x, const EulerMaclaurinParams& params = {});

/// d^order/ds^order zeta(s, x) for order in {1, 2}, by term-wise differentiation of
/// the Euler-Maclaurin formula.
Complex hurwitz_zeta_sderiv(int order, Complex s, Complex x,
                            const EulerMaclaurinParams& params = {});

Complex riemann_zeta(Complex s, const EulerMaclaurinParams& params = {});
Complex riemann_zeta_sderiv(int order, Complex s, const EulerMaclaurinParams& params = {});

}  // namespace fracsum
