#pragma once

#include <optional>
#include <string>

#include "fracsum/polynomial.hpp"
#include "fracsum/summand.hpp"
#include "fracsum/types.hpp"

/// Builtin summand families with their asymptotic metadata.
namespace fracsum::families {

/// Derivative oracle from the Cauchy integral on a disk of radius
/// max(min_radius, radius_fraction * |center|).
TaylorFn cauchy_taylor(ComplexFn f, double radius_fraction = 0.25, double min_radius = 0.25);

/// f with Cauchy-integral derivatives. f must be analytic on the disks used.
Summand analytic(std::string name, ComplexFn f, Degree sigma, std::optional<double> decay_rate,
                 DomainGuard guard = {});

/// 1/nu.
Summand reciprocal();

/// nu^a, principal branch. Nonnegative integer a gives an exact polynomial summand;
/// otherwise the Taylor degree is max(0, floor(Re a)) + 4.
Summand power(Complex a);

/// ln nu with a degree-sigma Taylor approximant.
Summand logarithm(int sigma = 0);

/// q^nu, q != 0.
Summand geometric(Complex q);

/// C(c, nu) x^nu with the binomial coefficient taken through 1/Gamma.
Summand binomial_term(Complex c, Complex x);

/// nu ln nu.
Summand nu_log_nu(int sigma = 1);

/// ln Gamma(nu + 1) = ln nu!.
Summand log_factorial(int sigma = 4);

/// ln Gamma(nu).
Summand log_gamma_summand(int sigma = 5);

/// An arbitrary polynomial; Taylor approximants are exact.
Summand polynomial(Polynomial p);

/// Complex log(1 + w), accurate for small |w|.
Complex log1p(Complex w);

}  // namespace fracsum::families
