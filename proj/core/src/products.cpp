#include "fracsum/products.hpp"

#include <cmath>

#include "fracsum/families.hpp"
#include "fracsum/special_functions.hpp"

namespace fracsum::products {

namespace {

Complex zeta_prime_m1(Complex x) { return hurwitz_zeta_sderiv(1, -1.0, x); }

SumResult exp_result(SumResult r) {
  const double log_err = r.err_estimate;
  r.value = std::exp(r.value);
  r.err_estimate = std::abs(r.value) * log_err;
  for (auto& level : r.levels) level.value = std::exp(level.value);
  return r;
}

// Kahan-Babuska summation of complex terms.
class Accumulator {
 public:
  void add(Complex v) {
    const Complex t = sum_ + v;
    comp_ += Complex(fix(sum_.real(), v.real(), t.real()), fix(sum_.imag(), v.imag(), t.imag()));
    sum_ = t;
  }
  Complex value() const { return sum_ + comp_; }

 private:
  static double fix(double s, double v, double t) {
    return std::abs(s) >= std::abs(v) ? (s - t) + v : (v - t) + s;
  }
  Complex sum_ = 0.0;
  Complex comp_ = 0.0;
};

}  // namespace

Complex alt_power_closed_form(Complex x) {
  const double zp = riemann_zeta_sderiv(1, -1.0).real();
  const Complex log_value = -std::log(2.0) / 12.0 +
                            2.0 * x * (log_gamma(x + 0.5) - log_gamma(x + 1.0)) - x -
                            2.0 * zeta_prime_m1(x + 0.5) + 2.0 * zeta_prime_m1(x + 1.0) - 3.0 * zp;
  return std::exp(log_value);
}

Complex alt_power_truncated(Complex x, long n) {
  Accumulator acc;
  for (long k = 1; k <= 2 * n; ++k) {
    const double kd = static_cast<double>(k);
    const double sign = (k % 2 == 0) ? -1.0 : 1.0;  // -(-1)^k
    acc.add(sign * kd * families::log1p(2.0 * x / kd));
  }
  return std::exp(acc.value());
}

SumResult alt_power_engine(Complex x, const EngineConfig& cfg) {
  const Summand f = families::analytic(
      "2nu*ln(1+x/nu)", [x](Complex nu) { return 2.0 * nu * families::log1p(x / nu); },
      Degree(6), 6.0, [](Complex nu) { return nu != Complex(0.0); });
  SumResult r = frac_sum_right(f, 1.0, -0.5, cfg);
  r.value = -x - r.value;
  for (auto& level : r.levels) level.value = -x - level.value;
  return exp_result(std::move(r));
}

Complex log_square_closed_form(Complex x) {
  const double ln2 = std::log(2.0);
  const Complex A = (x + 1.0) / 2.0;
  const Complex B = x / 2.0 + 1.0;
  const auto d1 = [](double s, Complex v) { return hurwitz_zeta_sderiv(1, s, v); };
  const auto d2 = [](double s, Complex v) { return hurwitz_zeta_sderiv(2, s, v); };
  const Complex log_value = ln2 * (-ln2 / 4.0 + 4.0 * d1(-1.0, A) - 4.0 * d1(-1.0, B)) -
                            2.0 * x * ln2 * (log_gamma(A) - log_gamma(B)) + 2.0 * d2(-1.0, B) -
                            2.0 * d2(-1.0, A) + x * (d2(0.0, A) - d2(0.0, B));
  return std::exp(log_value);
}

Complex log_square_truncated(Complex x, long n) {
  const double L = std::log(2.0 * static_cast<double>(n));
  Accumulator acc;
  acc.add(-(0.5 + x + (static_cast<double>(n) + 0.25) * L) * L);
  for (long k = 1; k <= 2 * n; ++k) {
    const double kd = static_cast<double>(k);
    const Complex l = std::log(kd + x);
    acc.add(((k % 2 == 0) ? kd : -kd) * l * l);
  }
  return std::exp(acc.value());
}

SumResult log_square_engine(Complex x, const EngineConfig& cfg) {
  const Summand f = families::analytic(
      "2nu*ln^2(2nu+x)",
      [x](Complex nu) {
        const Complex l = std::log(2.0 * nu + x);
        return 2.0 * nu * l * l;
      },
      Degree(6), 5.0,
      [x](Complex nu) {
        const Complex w = 2.0 * nu + x;
        return !(w.imag() == 0.0 && w.real() <= 0.0);
      });
  return exp_result(frac_sum_right(f, 1.0, -0.5, cfg));
}

}  // namespace fracsum::products
