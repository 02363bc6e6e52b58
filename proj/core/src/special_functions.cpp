#include "fracsum/special_functions.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <string>

#include "fracsum/bernoulli.hpp"
#include "fracsum/errors.hpp"

namespace fracsum {

namespace {

// Lanczos approximation, g = 7, nine terms.
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

const double kHalfLog2Pi = 0.5 * std::log(2.0 * kPi);

bool is_nonpositive_integer(Complex z) {
  return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real());
}

// sin(pi a) for real a with exact zeros at the integers.
double sinpi_real(double a) {
  double r = std::fmod(a, 2.0);
  if (r > 1.0) r -= 2.0;
  if (r <= -1.0) r += 2.0;
  if (r > 0.5) r = 1.0 - r;
  if (r < -0.5) r = -1.0 - r;
  return std::sin(kPi * r);
}

double cospi_real(double a) { return sinpi_real(a + 0.5); }

Complex lanczos_log_gamma(Complex z) {
  z -= 1.0;
  Complex sum = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) sum += kLanczos[i] / (z + double(i));
  const Complex t = z + kLanczosG + 0.5;
  return kHalfLog2Pi + (z + 0.5) * std::log(t) - t + std::log(sum);
}

// B_{2k}/(2k)! for k = 1..15.
const std::array<double, 16>& bernoulli_over_factorial() {
  static const auto table = [] {
    std::array<double, 16> t{};
    const auto& b = bernoulli_table();
    double fact = 1.0;
    for (int m = 1; m <= 30; ++m) {
      fact *= m;
      if (m % 2 == 0) t[m / 2] = b.as_double(m) / fact;
    }
    return t;
  }();
  return table;
}

void check_zeta_args(Complex s, Complex x) {
  if (s == Complex(1.0)) throw PoleError("hurwitz_zeta: pole at s = 1", s);
  if (!(x.real() > 0.0)) throw DomainError("hurwitz_zeta: requires Re x > 0", x);
}

// For Re s < 0 the direct terms grow and cancel against the integral term, so fewer
// of them can be more accurate. Picks M <= direct_terms minimising truncation
// (first omitted Bernoulli term) plus rounding (eps times the largest term).
int direct_term_count(Complex s, Complex x, const EulerMaclaurinParams& p) {
  if (s.real() >= 0.0) return p.direct_terms;
  const int K = p.correction_order;
  const auto& b = bernoulli_table();
  double coef = std::abs(b.as_double(2 * K + 2));
  for (int m = 1; m <= 2 * K + 2; ++m) coef /= m;
  // Floored at 1 so exact zeros at negative integers do not hide the s-derivatives.
  for (int j = 0; j <= 2 * K; ++j) coef *= std::max(1.0, std::abs(s + double(j)));
  const double eps = std::numeric_limits<double>::epsilon();
  int best_m = p.direct_terms;
  double best = std::numeric_limits<double>::infinity();
  for (int m = 0; m <= p.direct_terms; ++m) {
    const double a = std::abs(double(m) + x);
    const double trunc = coef * std::pow(a, -s.real() - 2.0 * K - 1.0);
    const double round = eps * std::pow(a, 1.0 - s.real()) * (1.0 + 1.0 / std::abs(s - 1.0));
    if (trunc + round < best) {
      best = trunc + round;
      best_m = m;
    }
  }
  return best_m;
}

// order-th s-derivative (order 0..2) of the Euler-Maclaurin representation.
Complex zeta_euler_maclaurin(int order, Complex s, Complex x, const EulerMaclaurinParams& p) {
  p.validate();
  check_zeta_args(s, x);

  auto neg_log_pow = [](Complex log_v, int k) {
    Complex r = 1.0;
    for (int i = 0; i < k; ++i) r *= -log_v;
    return r;
  };

  const int M = direct_term_count(s, x, p);
  Complex direct = 0.0;
  for (int nu = 0; nu < M; ++nu) {
    const Complex log_v = std::log(double(nu) + x);
    direct += std::exp(-s * log_v) * neg_log_pow(log_v, order);
  }

  const Complex a = double(M) + x;
  const Complex log_a = std::log(a);
  const Complex a_pow = std::exp(-s * log_a);  // a^{-s}
  const Complex sm1 = s - 1.0;

  // d^b/ds^b [a^{1-s}/(s-1)] = a^{1-s} sum_j C(b,j) (-L)^{b-j} (-1)^j j! / (s-1)^{j+1}
  Complex integral = 0.0;
  {
    constexpr std::array<std::array<double, 3>, 3> binom = {{{1, 0, 0}, {1, 1, 0}, {1, 2, 1}}};
    double fact = 1.0;
    Complex denom = sm1;
    for (int j = 0; j <= order; ++j) {
      if (j > 0) {
        fact *= j;
        denom *= sm1;
      }
      const double sign = (j % 2 == 0) ? 1.0 : -1.0;
      integral += binom[order][j] * neg_log_pow(log_a, order - j) * sign * fact / denom;
    }
    integral *= a * a_pow;
  }

  const Complex half = 0.5 * a_pow * neg_log_pow(log_a, order);

  // Bernoulli corrections: B_{2k}/(2k)! * (s)_{2k-1} * a^{-s-2k+1}, with the rising
  // factorial (s)_{2k-1} carried together with its first two s-derivatives.
  const auto& bf = bernoulli_over_factorial();
  Complex poly = s, dpoly = 1.0, d2poly = 0.0;
  Complex a_pow_k = a_pow / a;  // a^{-s-1}
  const Complex inv_a2 = 1.0 / (a * a);
  Complex corrections = 0.0;
  for (int k = 1; k <= p.correction_order; ++k) {
    if (k > 1) {
      for (int j = 2 * k - 3; j <= 2 * k - 2; ++j) {
        const Complex f = s + double(j);
        d2poly = d2poly * f + 2.0 * dpoly;
        dpoly = dpoly * f + poly;
        poly = poly * f;
      }
      a_pow_k *= inv_a2;
    }
    Complex term;
    switch (order) {
      case 0: term = poly; break;
      case 1: term = dpoly - log_a * poly; break;
      default: term = d2poly - 2.0 * log_a * dpoly + log_a * log_a * poly; break;
    }
    corrections += bf[k] * term * a_pow_k;
  }

  return direct + integral + half + corrections;
}

}  // namespace

void EulerMaclaurinParams::validate() const {
  if (direct_terms < 8) {
    throw ParameterError("EulerMaclaurinParams: direct_terms must be >= 8, got " +
                         std::to_string(direct_terms));
  }
  if (correction_order < 1 || correction_order > 15) {
    throw ParameterError("EulerMaclaurinParams: correction_order must be in [1, 15], got " +
                         std::to_string(correction_order));
  }
}

Complex sin_pi(Complex z) {
  const double a = z.real(), b = z.imag();
  return {sinpi_real(a) * std::cosh(kPi * b), cospi_real(a) * std::sinh(kPi * b)};
}

Complex cos_pi(Complex z) {
  const double a = z.real(), b = z.imag();
  return {cospi_real(a) * std::cosh(kPi * b), -sinpi_real(a) * std::sinh(kPi * b)};
}

Complex log_gamma(Complex z) {
  if (is_nonpositive_integer(z)) throw PoleError("log_gamma: pole", z);
  if (z.real() >= 0.5) return lanczos_log_gamma(z);
  // Upward recurrence keeps the principal branch: log Gamma(z) = log Gamma(z+m) - sum log(z+k).
  const int m = static_cast<int>(std::ceil(0.5 - z.real()));
  Complex shift = 0.0;
  for (int k = 0; k < m; ++k) shift += std::log(z + double(k));
  return lanczos_log_gamma(z + double(m)) - shift;
}

Complex gamma(Complex z) {
  if (is_nonpositive_integer(z)) throw PoleError("gamma: pole", z);
  if (z.real() < 0.5) return kPi / (sin_pi(z) * std::exp(lanczos_log_gamma(1.0 - z)));
  return std::exp(lanczos_log_gamma(z));
}

Complex rgamma(Complex z) {
  if (is_nonpositive_integer(z)) return 0.0;
  if (z.real() < 0.5) return sin_pi(z) * std::exp(lanczos_log_gamma(1.0 - z)) / kPi;
  return std::exp(-lanczos_log_gamma(z));
}

Complex digamma(Complex z) {
  if (is_nonpositive_integer(z)) throw PoleError("digamma: pole", z);
  if (z.real() < 0.5) {
    // psi(z) = psi(1 - z) - pi cot(pi z)
    return digamma(1.0 - z) - kPi * cos_pi(z) / sin_pi(z);
  }
  Complex acc = 0.0;
  while (std::abs(z) < 10.0) {
    acc -= 1.0 / z;
    z += 1.0;
  }
  const auto& b = bernoulli_table();
  const Complex inv2 = 1.0 / (z * z);
  Complex series = 0.0, zpow = inv2;
  for (int k = 1; k <= 8; ++k) {
    series += b.as_double(2 * k) / (2.0 * k) * zpow;
    zpow *= inv2;
  }
  return acc + std::log(z) - 0.5 / z - series;
}

Complex hurwitz_zeta(Complex s, Complex x, const EulerMaclaurinParams& params) {
  return zeta_euler_maclaurin(0, s, x, params);
}

Complex hurwitz_zeta_sderiv(int order, Complex s, Complex x, const EulerMaclaurinParams& params) {
  if (order != 1 && order != 2) {
    throw ParameterError("hurwitz_zeta_sderiv: order must be 1 or 2, got " + std::to_string(order));
  }
  return zeta_euler_maclaurin(order, s, x, params);
}

Complex riemann_zeta(Complex s, const EulerMaclaurinParams& params) {
  return hurwitz_zeta(s, 1.0, params);
}

Complex riemann_zeta_sderiv(int order, Complex s, const EulerMaclaurinParams& params) {
  return hurwitz_zeta_sderiv(order, s, 1.0, params);
}

}  // namespace fracsum
