#pragma once

#include <span>
#include <vector>

#include "fracsum/types.hpp"

namespace fracsum {

/// Dense complex polynomial; coefficient k multiplies z^k.
///
/// Trailing exact zeros are stripped on construction, so the zero polynomial
/// has an empty coefficient list and degree() == kZeroDegree.
class Polynomial {
 public:
  static constexpr int kZeroDegree = -1'000'000;

  Polynomial() = default;
  explicit Polynomial(std::vector<Complex> coeffs);

  static Polynomial constant(Complex c);
  static Polynomial monomial(int degree, Complex c = 1.0);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  int degree() const noexcept;
  std::span<const Complex> coeffs() const noexcept { return coeffs_; }
  Complex coeff(int k) const noexcept;

  /// Horner evaluation.
  Complex operator()(Complex z) const noexcept;

  /// The polynomial z -> p(z + s), re-expanded with binomial coefficients.
  Polynomial shifted(Complex s) const;

  /// The polynomial z -> p(-z).
  Polynomial reflected() const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(Complex c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, Complex c) { return a *= c; }
  friend Polynomial operator*(Complex c, Polynomial a) { return a *= c; }
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void normalize();
  std::vector<Complex> coeffs_;
};

/// Largest polynomial degree accepted by antidifference().
inline constexpr int kMaxPolynomialDegree = 64;

/// The unique P with P(0) = 0 and P(z) - P(z-1) = p(z); deg P = deg p + 1.
/// Throws ParameterError above kMaxPolynomialDegree.
Polynomial antidifference(const Polynomial& p);

/// Sum of p(nu) for nu from x to y, i.e. P(y) - P(x-1). Exact for any complex bounds.
Complex poly_sum(const Polynomial& p, Complex x, Complex y);

}  // namespace fracsum
