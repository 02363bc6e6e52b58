#include <cmath>
#include <random>

#include "doctest.h"
#include "fracsum/constants.hpp"
#include "fracsum/errors.hpp"
#include "fracsum/special_functions.hpp"

using namespace fracsum;

namespace {

const double kGamma = 0.57721566490153286061;
const double kLn2 = std::log(2.0);

double rel(Complex a, Complex b) { return std::abs(a - b) / std::abs(b); }

// sum_{nu<N} (nu+1)^{-2} plus the Euler-Maclaurin tail 1/N - 1/(2N^2) + 1/(6N^3).
double zeta2_direct(long N) {
  double s = 0.0;
  for (long nu = N; nu >= 1; --nu) s += 1.0 / (double(nu) * double(nu));
  const double n = double(N);
  return s + 1.0 / n - 1.0 / (2 * n * n) + 1.0 / (6 * n * n * n);
}

// Five-point central difference in s, refined once by Richardson (h, h/2).
Complex sderiv_fd(const std::function<Complex(Complex)>& g, Complex s, double h) {
  auto d = [&](double k) {
    return (-g(s + 2 * k) + 8.0 * g(s + k) - 8.0 * g(s - k) + g(s - 2 * k)) / (12.0 * k);
  };
  return (16.0 * d(h / 2) - d(h)) / 15.0;
}

}  // namespace

TEST_SUITE("log_gamma") {
  TEST_CASE("real values") {
    CHECK(std::abs(log_gamma(0.5) - 0.5 * std::log(kPi)) < 1e-14);
    CHECK(std::abs(log_gamma(5.0) - std::log(24.0)) < 1e-13);
    CHECK(std::abs(log_gamma(1.0)) < 1e-15);
  }

  TEST_CASE("1+i against the truncated product") {
    // ln Gamma(z) = lim z ln n - ln z - sum ln(1 + z/nu); z(z+1)/(2n) is the leading
    // correction at finite n.
    const Complex z(1.0, 1.0);
    const long n = 1000000;
    Complex s = z * std::log(double(n)) - std::log(z);
    for (long nu = n; nu >= 1; --nu) s -= std::log(1.0 + z / double(nu));
    s += z * (z + 1.0) / (2.0 * double(n));
    CHECK(std::abs(log_gamma(z) - s) < 1e-9);
  }

  TEST_CASE("recurrence and principal branch") {
    std::mt19937_64 rng(21);
    std::uniform_real_distribution<double> re(-6.0, 8.0), im(-5.0, 5.0);
    for (int i = 0; i < 100; ++i) {
      const Complex z(re(rng), im(rng));
      if (std::abs(z.imag()) < 1e-3 && z.real() < 0.5) continue;
      const Complex lhs = log_gamma(z + 1.0);
      const Complex rhs = log_gamma(z) + std::log(z);
      CHECK(std::abs(std::exp(lhs - rhs) - 1.0) < 1e-11);
      CHECK(std::abs(std::exp(log_gamma(z)) - gamma(z)) <= 1e-11 * std::abs(gamma(z)));
    }
  }

  TEST_CASE("poles") {
    CHECK_THROWS_AS(log_gamma(0.0), PoleError);
    CHECK_THROWS_AS(log_gamma(-3.0), PoleError);
    CHECK_THROWS_AS(gamma(Complex(-1.0)), PoleError);
    CHECK(rgamma(Complex(-2.0)) == Complex(0.0));
    try {
      log_gamma(-2.0);
      FAIL("expected a pole");
    } catch (const PoleError& e) {
      CHECK(e.point() == Complex(-2.0));
    }
  }
}

TEST_SUITE("digamma") {
  TEST_CASE("values") {
    CHECK(std::abs(digamma(1.0) + kGamma) < 1e-14);
    CHECK(std::abs(digamma(2.0) - (1.0 - kGamma)) < 1e-14);
    CHECK(std::abs(digamma(0.5) - (-kGamma - 2 * kLn2)) < 1e-14);
    CHECK_THROWS_AS(digamma(0.0), PoleError);
  }

  TEST_CASE("partial sums confirm psi(1)") {
    // psi(1) = -gamma = lim (ln n - H_n)... use H_n - ln n - 1/(2n) + 1/(12 n^2) = gamma.
    const long n = 100000;
    double h = 0.0;
    for (long nu = n; nu >= 1; --nu) h += 1.0 / double(nu);
    const double g = h - std::log(double(n)) - 0.5 / n + 1.0 / (12.0 * n * n);
    CHECK(std::abs(digamma(1.0).real() + g) < 1e-13);
  }

  TEST_CASE("reflection") {
    std::mt19937_64 rng(22);
    std::uniform_real_distribution<double> u(0.01, 0.99);
    for (int i = 0; i < 100; ++i) {
      const double x = u(rng);
      const Complex lhs = digamma(1.0 - x) - digamma(x);
      CHECK(std::abs(lhs - kPi / std::tan(kPi * x)) < 1e-9);
    }
  }

  TEST_CASE("centered difference of log_gamma") {
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> re(1.0, 10.0), im(-3.0, 3.0);
    const double h = 1e-5;
    for (int i = 0; i < 100; ++i) {
      const Complex z(re(rng), im(rng));
      const Complex fd = (log_gamma(z + h) - log_gamma(z - h)) / (2 * h);
      CHECK(std::abs(fd - digamma(z)) < 1e-6);
    }
  }
}

TEST_SUITE("hurwitz_zeta") {
  TEST_CASE("values") {
    const double pi2_6 = kPi * kPi / 6.0;
    CHECK(std::abs(zeta2_direct(1000000) - pi2_6) < 1e-14);
    CHECK(rel(hurwitz_zeta(2.0, 1.0), zeta2_direct(1000000)) < 1e-13);
    CHECK(std::abs(hurwitz_zeta(-1.0, 1.0) + 1.0 / 12.0) < 1e-13);
    CHECK(std::abs(riemann_zeta(-1.0) + 1.0 / 12.0) < 1e-13);
    CHECK(rel(riemann_zeta(2.0), pi2_6) < 1e-13);
    for (const Complex q : {Complex(1.0), Complex(0.3), Complex(2.5, 1.0)}) {
      CHECK(std::abs(hurwitz_zeta(0.0, q) - (0.5 - q)) < 1e-13);
    }
  }

  TEST_CASE("s-derivatives") {
    const double half_ln_2pi = 0.5 * std::log(2 * kPi);
    CHECK(std::abs(hurwitz_zeta_sderiv(1, 0.0, 1.0) + half_ln_2pi) < 1e-13);
    CHECK(std::abs(riemann_zeta_sderiv(1, 0.0) + half_ln_2pi) < 1e-13);

    const auto zeta = [](Complex s) { return hurwitz_zeta(s, 1.0); };
    const Complex d1 = hurwitz_zeta_sderiv(1, -1.0, 1.0);
    CHECK(std::abs(d1 - sderiv_fd(zeta, -1.0, 1e-2)) < 1e-8);
    CHECK(std::abs(d1.real() - constants().zeta_prime_minus1) < 1e-12);

    const auto dzeta = [](Complex s) { return hurwitz_zeta_sderiv(1, s, 1.0); };
    CHECK(std::abs(hurwitz_zeta_sderiv(2, -1.0, 1.0) - sderiv_fd(dzeta, -1.0, 1e-2)) < 1e-8);

    const auto dzeta_x = [](Complex s) { return hurwitz_zeta_sderiv(1, s, Complex(0.7, 0.4)); };
    CHECK(std::abs(hurwitz_zeta_sderiv(2, -2.5, Complex(0.7, 0.4)) -
                   sderiv_fd(dzeta_x, -2.5, 1e-2)) < 1e-7);
  }

  TEST_CASE("recurrence in x, for the function and both derivatives") {
    std::mt19937_64 rng(24);
    std::uniform_real_distribution<double> sre(-6.0, 6.0), sim(-3.0, 3.0), xre(0.2, 10.0),
        xim(-3.0, 3.0);
    for (int i = 0; i < 100; ++i) {
      const Complex s(sre(rng), sim(rng)), x(xre(rng), xim(rng));
      if (std::abs(s - 1.0) < 0.1) continue;
      const Complex lx = std::log(x);
      const Complex term = std::exp(-s * lx);
      CHECK(rel(hurwitz_zeta(s, x) - hurwitz_zeta(s, x + 1.0), term) < 1e-10);
      CHECK(rel(hurwitz_zeta_sderiv(1, s, x) - hurwitz_zeta_sderiv(1, s, x + 1.0), -lx * term) <
            1e-10);
      CHECK(rel(hurwitz_zeta_sderiv(2, s, x) - hurwitz_zeta_sderiv(2, s, x + 1.0),
                lx * lx * term) < 1e-10);
    }
  }

  TEST_CASE("truncation parameters") {
    // zeta(-2, 1/2) and zeta(-2, 1) vanish; values below 1e-3 are compared absolutely.
    const auto rel = [](Complex a, Complex b) { return std::abs(a - b) / std::max(1e-3, std::abs(b)); };
    const EulerMaclaurinParams small{32, 8}, large{64, 12};
    for (const double s : {-3.0, -2.0, -1.0, -0.5, 0.5, 2.0, 3.5}) {
      for (const Complex x : {Complex(0.5), Complex(1.0), Complex(1.5), Complex(2.7), Complex(1.0, 1.0)}) {
        CHECK(rel(hurwitz_zeta(s, x, small), hurwitz_zeta(s, x, large)) < 1e-9);
      }
    }
    for (const Complex x : {Complex(0.25), Complex(0.75), Complex(1.0), Complex(1.5), Complex(3.0)}) {
      for (int b = 1; b <= 2; ++b) {
        for (const double s : {-2.0, -1.0, 0.0}) {
          CHECK(rel(hurwitz_zeta_sderiv(b, s, x, small), hurwitz_zeta_sderiv(b, s, x, large)) <
                1e-9);
        }
      }
    }
  }

  TEST_CASE("errors") {
    CHECK_THROWS_AS(hurwitz_zeta(1.0, 1.0), PoleError);
    CHECK_THROWS_AS(hurwitz_zeta(2.0, 0.0), DomainError);
    CHECK_THROWS_AS(hurwitz_zeta(2.0, Complex(-0.5, 1.0)), DomainError);
    CHECK_THROWS_AS(hurwitz_zeta_sderiv(3, 0.0, 1.0), ParameterError);
    CHECK_THROWS_AS(hurwitz_zeta(2.0, 1.0, {4, 10}), ParameterError);
    CHECK_THROWS_AS(hurwitz_zeta(2.0, 1.0, {32, 16}), ParameterError);
  }
}

TEST_CASE("constants") {
  const auto& c = constants();
  CHECK(c.euler_gamma == doctest::Approx(kGamma).epsilon(1e-15));
  CHECK(c.stieltjes_gamma1 < 0.0);
  CHECK(c.stieltjes_gamma1 == doctest::Approx(-0.0728158454836767).epsilon(1e-14));
  CHECK(c.catalan_G == doctest::Approx(0.915965594177219).epsilon(1e-14));
  CHECK(c.zeta_prime_minus1 == doctest::Approx(-0.165421143700451).epsilon(1e-14));
}

TEST_CASE("sin_pi and cos_pi") {
  CHECK(sin_pi(3.0) == Complex(0.0));
  CHECK(std::abs(sin_pi(0.5) - 1.0) == 0.0);
  CHECK(std::abs(cos_pi(Complex(0.3, 0.2)) - std::cos(kPi * Complex(0.3, 0.2))) < 1e-14);
}
