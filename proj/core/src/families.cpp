#include "fracsum/families.hpp"

#include <cmath>

#include "fracsum/derivatives.hpp"
#include "fracsum/errors.hpp"
#include "fracsum/special_functions.hpp"

namespace fracsum::families {

namespace {

bool is_small_nonneg_integer(Complex a) {
  return a.imag() == 0.0 && a.real() >= 0.0 && a.real() <= kMaxPolynomialDegree &&
         a.real() == std::floor(a.real());
}

Complex int_pow(Complex z, int k) {
  Complex r = 1.0;
  for (int i = 0; i < k; ++i) r *= z;
  return r;
}

bool not_zero(Complex z) { return z != Complex(0.0); }

}  // namespace

Complex log1p(Complex w) {
  const Complex u = 1.0 + w;
  if (u == Complex(1.0)) return w;
  return std::log(u) * w / (u - 1.0);
}

TaylorFn cauchy_taylor(ComplexFn f, double radius_fraction, double min_radius) {
  return [f = std::move(f), radius_fraction, min_radius](Complex c, int order) {
    const double r = std::max(min_radius, radius_fraction * std::abs(c));
    return cauchy_derivatives(f, c, r, order);
  };
}

Summand analytic(std::string name, ComplexFn f, Degree sigma, std::optional<double> decay_rate,
                 DomainGuard guard) {
  Summand s;
  s.name = std::move(name);
  s.derivatives = cauchy_taylor(f);
  s.eval = std::move(f);
  s.sigma = sigma;
  s.decay_rate = decay_rate;
  s.domain_guard = std::move(guard);
  return s;
}

Summand reciprocal() {
  Summand s;
  s.name = "recip";
  s.eval = [](Complex z) { return 1.0 / z; };
  s.derivatives = [](Complex c, int order) {
    std::vector<Complex> d(order + 1);
    Complex inv = 1.0 / c, p = inv;
    double fact = 1.0;
    for (int k = 0; k <= order; ++k) {
      if (k > 0) fact *= -k;
      d[k] = fact * p;
      p *= inv;
    }
    return d;
  };
  s.domain_guard = not_zero;
  s.decay_rate = 1.0;
  return s;
}

Summand power(Complex a) {
  Summand s;
  s.name = "pow";
  if (is_small_nonneg_integer(a)) {
    const int k = static_cast<int>(a.real());
    Summand p = polynomial(Polynomial::monomial(k));
    p.name = "pow";
    p.eval = [k](Complex z) { return int_pow(z, k); };
    return p;
  }
  s.eval = [a](Complex z) {
    if (z == Complex(0.0)) return Complex(0.0);
    return std::exp(a * std::log(z));
  };
  s.derivatives = [a](Complex c, int order) {
    std::vector<Complex> d(order + 1);
    const Complex log_c = std::log(c);
    Complex falling = 1.0;
    for (int k = 0; k <= order; ++k) {
      if (k > 0) falling *= a - double(k - 1);
      d[k] = falling * std::exp((a - double(k)) * log_c);
    }
    return d;
  };
  if (a.real() <= 0.0) s.domain_guard = not_zero;
  const int sigma = std::max(0, static_cast<int>(std::floor(a.real()))) + 4;
  s.sigma = Degree(sigma);
  s.decay_rate = sigma + 1.0 - a.real();
  return s;
}

Summand logarithm(int sigma) {
  if (sigma < 0) throw ParameterError("logarithm: sigma must be >= 0");
  Summand s;
  s.name = "log";
  s.eval = [](Complex z) { return std::log(z); };
  s.derivatives = [](Complex c, int order) {
    std::vector<Complex> d(order + 1);
    d[0] = std::log(c);
    const Complex inv = 1.0 / c;
    Complex p = inv;
    double coef = 1.0;  // (-1)^{k-1} (k-1)!
    for (int k = 1; k <= order; ++k) {
      if (k > 1) coef *= -(k - 1.0);
      d[k] = coef * p;
      p *= inv;
    }
    return d;
  };
  s.domain_guard = not_zero;
  s.sigma = Degree(sigma);
  s.decay_rate = sigma + 1.0;
  return s;
}

Summand geometric(Complex q) {
  if (q == Complex(0.0)) throw ParameterError("geometric: q must be nonzero");
  const Complex log_q = std::log(q);
  Summand s;
  s.name = "geom";
  s.eval = [log_q](Complex z) { return std::exp(z * log_q); };
  s.derivatives = [log_q](Complex c, int order) {
    std::vector<Complex> d(order + 1);
    Complex v = std::exp(c * log_q);
    for (int k = 0; k <= order; ++k) {
      d[k] = v;
      v *= log_q;
    }
    return d;
  };
  s.decay_rate = 1.0;
  return s;
}

Summand binomial_term(Complex c, Complex x) {
  if (c.imag() == 0.0 && c.real() < 0.0 && c.real() == std::floor(c.real())) {
    throw ParameterError("binomial_term: c must not be a negative integer");
  }
  if (x == Complex(0.0)) throw ParameterError("binomial_term: x must be nonzero");
  const Complex gamma_c1 = gamma(c + 1.0);
  const Complex log_x = std::log(x);
  Summand s;
  s.name = "binom";
  s.eval = [=](Complex nu) {
    const Complex w = nu - c;
    if (w.real() < 0.5) {
      return gamma_c1 * rgamma(nu + 1.0) * rgamma(1.0 - w) * std::exp(nu * log_x);
    }
    // 1/Gamma(1 - w) = Gamma(w) sin(pi w) / pi keeps large nu finite.
    return gamma_c1 * sin_pi(w) / kPi *
           std::exp(log_gamma(w) - log_gamma(nu + 1.0) + nu * log_x);
  };
  s.decay_rate = 1.0;
  return s;
}

Summand nu_log_nu(int sigma) {
  if (sigma < 0) throw ParameterError("nu_log_nu: sigma must be >= 0");
  Summand s;
  s.name = "vlnv";
  s.eval = [](Complex z) { return z * std::log(z); };
  s.derivatives = [](Complex c, int order) {
    std::vector<Complex> d(order + 1);
    d[0] = c * std::log(c);
    if (order >= 1) d[1] = std::log(c) + 1.0;
    const Complex inv = 1.0 / c;
    Complex p = inv;
    double coef = 1.0;  // (-1)^k (k-2)!
    for (int k = 2; k <= order; ++k) {
      if (k > 2) coef *= -(k - 2.0);
      d[k] = coef * p;
      p *= inv;
    }
    return d;
  };
  s.domain_guard = not_zero;
  s.sigma = Degree(sigma);
  s.decay_rate = std::max(1.0, double(sigma));
  return s;
}

Summand log_factorial(int sigma) {
  auto s = analytic(
      "lnfact", [](Complex z) { return log_gamma(z + 1.0); }, Degree(sigma),
      std::max(1.0, double(sigma)), [](Complex z) {
        const Complex w = z + 1.0;
        return !(w.imag() == 0.0 && w.real() <= 0.0 && w.real() == std::floor(w.real()));
      });
  return s;
}

Summand log_gamma_summand(int sigma) {
  return analytic(
      "lngamma", [](Complex z) { return log_gamma(z); }, Degree(sigma),
      std::max(1.0, double(sigma)), [](Complex z) {
        return !(z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real()));
      });
}

Summand polynomial(Polynomial p) {
  Summand s;
  s.name = "poly";
  s.sigma = p.is_zero() ? Degree::minus_infinity() : Degree(p.degree());
  s.approximant = [p](Complex c) { return p.shifted(c); };
  s.derivatives = [p](Complex c, int order) {
    const Polynomial q = p.shifted(c);
    std::vector<Complex> d(order + 1);
    double fact = 1.0;
    for (int k = 0; k <= order; ++k) {
      if (k > 0) fact *= k;
      d[k] = q.coeff(k) * fact;
    }
    return d;
  };
  s.eval = [p = std::move(p)](Complex z) { return p(z); };
  s.decay_rate = 1.0;
  return s;
}

}  // namespace fracsum::families
