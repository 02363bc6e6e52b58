#include "fracsum/polynomial.hpp"

#include <algorithm>
#include <string>

#include "fracsum/bernoulli.hpp"
#include "fracsum/errors.hpp"

namespace fracsum {

namespace {

// faulhaber()[d][m]: coefficient of z^m in sum_{nu=1}^{z} nu^d, i.e.
// C(d+1, j) B_j / (d+1) with m = d + 1 - j. Built once from exact rationals.
const std::vector<std::vector<double>>& faulhaber() {
  static const auto table = [] {
    const auto& bern = bernoulli_table();
    std::vector<std::vector<double>> t(kMaxPolynomialDegree + 1);
    for (int d = 0; d <= kMaxPolynomialDegree; ++d) {
      t[d].assign(d + 2, 0.0);
      for (int j = 0; j <= d; ++j) {
        Rational c = Rational(binomial_coefficient(d + 1, j)) * bern[j] / (d + 1);
        t[d][d + 1 - j] = c.convert_to<double>();
      }
    }
    return t;
  }();
  return table;
}

}  // namespace

Polynomial::Polynomial(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

Polynomial Polynomial::constant(Complex c) { return Polynomial({c}); }

Polynomial Polynomial::monomial(int degree, Complex c) {
  if (degree < 0) throw ParameterError("monomial: negative degree");
  std::vector<Complex> v(degree + 1, 0.0);
  v[degree] = c;
  return Polynomial(std::move(v));
}

void Polynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == Complex(0.0)) coeffs_.pop_back();
}

int Polynomial::degree() const noexcept {
  return coeffs_.empty() ? kZeroDegree : static_cast<int>(coeffs_.size()) - 1;
}

Complex Polynomial::coeff(int k) const noexcept {
  return (k >= 0 && k < static_cast<int>(coeffs_.size())) ? coeffs_[k] : Complex(0.0);
}

Complex Polynomial::operator()(Complex z) const noexcept {
  Complex acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

Polynomial Polynomial::shifted(Complex s) const {
  // p(z + s) = sum_k c_k sum_j C(k, j) s^(k-j) z^j
  const int n = static_cast<int>(coeffs_.size());
  std::vector<Complex> out(n, 0.0);
  std::vector<double> row(n + 1, 0.0);  // Pascal row C(k, .)
  for (int k = 0; k < n; ++k) {
    row[k] = 1.0;
    for (int j = k - 1; j > 0; --j) row[j] += row[j - 1];
    row[0] = 1.0;
    Complex spow = 1.0;
    for (int j = k; j >= 0; --j) {
      out[j] += coeffs_[k] * row[j] * spow;
      spow *= s;
    }
  }
  return Polynomial(std::move(out));
}

Polynomial Polynomial::reflected() const {
  auto out = coeffs_;
  for (std::size_t k = 1; k < out.size(); k += 2) out[k] = -out[k];
  return Polynomial(std::move(out));
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0.0);
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
  normalize();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0.0);
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] -= other.coeffs_[k];
  normalize();
  return *this;
}

Polynomial& Polynomial::operator*=(Complex c) {
  for (auto& v : coeffs_) v *= c;
  normalize();
  return *this;
}

Polynomial antidifference(const Polynomial& p) {
  if (p.is_zero()) return {};
  if (p.degree() > kMaxPolynomialDegree) {
    throw ParameterError("antidifference: degree " + std::to_string(p.degree()) +
                         " exceeds cap " + std::to_string(kMaxPolynomialDegree));
  }
  const auto& table = faulhaber();
  std::vector<Complex> out(p.degree() + 2, 0.0);
  for (int d = 0; d <= p.degree(); ++d) {
    const Complex c = p.coeff(d);
    if (c == Complex(0.0)) continue;
    for (int m = 1; m <= d + 1; ++m) out[m] += c * table[d][m];
  }
  return Polynomial(std::move(out));
}

Complex poly_sum(const Polynomial& p, Complex x, Complex y) {
  const Polynomial big_p = antidifference(p);
  return big_p(y) - big_p(x - 1.0);
}

}  // namespace fracsum
