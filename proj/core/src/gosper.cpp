#include "fracsum/gosper.hpp"

#include <cmath>

#include "fracsum/errors.hpp"
#include "fracsum/families.hpp"
#include "fracsum/polynomial.hpp"
#include "fracsum/richardson.hpp"

namespace fracsum::gosper {

namespace {

constexpr Complex kLower = 0.75;
constexpr Complex kUpper = -0.75;

// j-th derivative of h(w) = sin(sqrt w)/sqrt w = sum_m (-1)^m w^m / (2m+1)!.
double h_derivative(int j, double w) {
  double sum = 0.0;
  // term for m = j: (-1)^j j! / (2j+1)!
  double coef = (j % 2 == 0) ? 1.0 : -1.0;
  for (int k = 1; k <= j; ++k) coef *= k;
  for (int k = 1; k <= 2 * j + 1; ++k) coef /= k;
  double wp = 1.0;
  for (int m = j; m < j + 200; ++m) {
    const double term = coef * wp;
    sum += term;
    if (m > j + 10 && std::abs(term) < 1e-18 * std::abs(sum)) break;
    // coef_{m+1} / coef_m = -(m+1) / ((m+1-j) (2m+2) (2m+3))
    coef *= -(m + 1.0) / ((m + 1.0 - j) * (2.0 * m + 2.0) * (2.0 * m + 3.0));
    wp *= w;
  }
  return sum;
}

}  // namespace

Complex closed_form(double b) { return kPi * std::sin(b) / (2.0 * b); }

Complex summand_value(double b, Complex n) {
  const Complex r = std::sqrt(b * b + 4.0 * kPi * kPi * n * n);
  return std::sin(r) / (2.0 * n * r);
}

Summand summand(double b) {
  Summand s;
  s.name = "gosper";
  s.eval = [b](Complex n) { return summand_value(b, n); };
  s.domain_guard = [](Complex n) { return n != Complex(0.0); };
  s.decay_rate = 1.0;
  return s;
}

SumResult direct_series(double b) {
  constexpr long kStart = 64;
  constexpr int kLevels = 10;
  std::vector<Level> levels;
  double sum = 0.0, comp = 0.0;
  long done = 0;
  for (int j = 0; j < kLevels; ++j) {
    const long N = kStart << j;
    for (long n = done; n < N; ++n) {
      const double h = n + 0.5;
      const double r = std::sqrt(b * b + kPi * kPi * h * h);
      const double term = ((n % 2 == 0) ? 1.0 : -1.0) / h * std::sin(r) / r;
      const double t = sum + term;
      comp += std::abs(sum) >= std::abs(term) ? (sum - t) + term : (term - t) + sum;
      sum = t;
    }
    done = N;
    levels.push_back({N, sum + comp});
  }
  const RichardsonTable table(levels, 5, 1.0);
  const auto best = table.best_estimate();
  SumResult out;
  out.value = best.value;
  out.err_estimate = best.error;
  out.n_used = levels[best.row].n;
  out.converged = true;
  out.levels = std::move(levels);
  return out;
}

SumResult engine_route(double b, const EngineConfig& cfg) {
  SumResult r = frac_sum_right(summand(b), kLower, kUpper, cfg);
  r.value = -r.value;
  for (auto& level : r.levels) level.value = -level.value;
  return r;
}

std::vector<double> odd_coefficients(double b, int degree) {
  if (degree < 1 || degree % 2 == 0) throw ParameterError("gosper: degree must be odd and >= 1");
  const int jmax = (degree + 1) / 2;
  const double t = 4.0 * kPi * kPi;
  std::vector<double> c(jmax + 1);
  double scale = 0.5;  // t^j / (2 j!)
  for (int j = 0; j <= jmax; ++j) {
    if (j > 0) scale *= t / j;
    c[j] = h_derivative(j, b * b) * scale;
  }
  return c;
}

Complex truncated_series(double b, Complex n, int degree) {
  const auto c = odd_coefficients(b, degree);
  Complex sum = 0.0;
  const Complex n2 = n * n;
  Complex p = 1.0 / n;
  for (double cj : c) {
    sum += cj * p;
    p *= n2;
  }
  return sum;
}

SumResult termwise(double b, const EngineConfig& cfg, int degree) {
  const auto c = odd_coefficients(b, degree);
  SumResult r = frac_sum_right(families::reciprocal(), kLower, kUpper, cfg);
  Complex total = c[0] * r.value;
  for (std::size_t j = 1; j < c.size(); ++j) {
    total += c[j] * poly_sum(Polynomial::monomial(static_cast<int>(2 * j - 1)), kLower, kUpper);
  }
  r.err_estimate *= std::abs(c[0]);
  r.value = -total;
  r.levels.clear();
  return r;
}

}  // namespace fracsum::gosper
