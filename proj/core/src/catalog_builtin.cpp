#include <cmath>
#include <cstdio>
#include <limits>

#include "fracsum/constants.hpp"
#include "fracsum/errors.hpp"
#include "fracsum/families.hpp"
#include "fracsum/gosper.hpp"
#include "fracsum/identities.hpp"
#include "fracsum/polynomial.hpp"
#include "fracsum/products.hpp"
#include "fracsum/special_functions.hpp"

namespace fracsum {

namespace {

namespace F = families;

GridPoint point(std::vector<std::pair<std::string, Complex>> params, std::string tag = {}) {
  return GridPoint{std::move(tag), std::move(params)};
}

SumResult exact(Complex v) {
  SumResult r;
  r.value = v;
  r.converged = true;
  return r;
}

// Principal power b^e.
Complex cpow(Complex base, Complex e) { return std::exp(e * std::log(base)); }

std::string fmt(const char* pattern, double v) {
  char buf[160];
  std::snprintf(buf, sizeof buf, pattern, v);
  return buf;
}

const PointRecord* find_record(const IdentityReport& r, std::string_view label) {
  for (const auto& rec : r.records) {
    if (rec.point.label() == label) return &rec;
  }
  return nullptr;
}

// ln f with f(nu) = nu, derivatives of ln.
Summand log_identity() {
  return principal_log([](Complex v) { return v; }, Degree(3), F::logarithm(3).derivatives,
                       [](Complex v) { return v != Complex(0.0); }, "ln(nu)");
}

Identity geo() {
  Identity id;
  id.id = "GEO";
  id.formula = "sum_{nu=0}^{x} q^nu = (1 - q^{x+1}) / (1 - q)";
  id.tol = 1e-10;
  for (double q : {0.1, 0.5, 0.9}) {
    for (Complex x : {Complex(-0.5), Complex(0.5), Complex(1.7), Complex(0.0, 1.0)}) {
      id.grid.push_back(point({{"q", q}, {"x", x}}));
    }
  }
  id.lhs = [](const GridPoint& p, const EngineConfig& cfg) {
    return frac_sum_right(F::geometric(p.get("q")), 0.0, p.get("x"), cfg);
  };
  id.rhs = [](const GridPoint& p) {
    const Complex q = p.get("q");
    return (1.0 - cpow(q, p.get("x") + 1.0)) / (1.0 - q);
  };
  return id;
}

Identity binom() {
  Identity id;
  id.id = "BINOM";
  id.formula = "sum_{nu=0}^{c} C(c, nu) x^nu = (1 + x)^c";
  id.tol = 1e-10;
  for (Complex c : {Complex(0.5), Complex(2.5), Complex(1.0, 1.0)}) {
    for (Complex x : {Complex(0.3), Complex(-0.3), Complex(0.0, 0.5)}) {
      id.grid.push_back(point({{"c", c}, {"x", x}}));
    }
  }
  id.lhs = [](const GridPoint& p, const EngineConfig& cfg) {
    const Complex c = p.get("c");
    return frac_sum_right(F::binomial_term(c, p.get("x")), 0.0, c, cfg);
  };
  id.rhs = [](const GridPoint& p) { return cpow(1.0 + p.get("x"), p.get("c")); };
  return id;
}

Identity sermul() {
  Identity id;
  id.id = "SERMUL";
  id.formula =
      "sum_{nu=1}^{x} [f(nu) g(nu) + f(nu) sum_{k=1}^{nu-1} g(k) + g(nu) sum_{k=1}^{nu-1} f(k)]"
      " = (sum_{nu=1}^{x} f)(sum_{nu=1}^{x} g), f = q1^nu, g = q2^nu";
  id.tol = 1e-10;
  for (double x : {0.5, -0.25, 2.0}) id.grid.push_back(point({{"q1", 0.5}, {"q2", 0.3}, {"x", x}}));
  id.notes.push_back("inner sums use the closed geometric form q(1 - q^m)/(1 - q)");
  const auto partial = [](Complex q, Complex m) { return q * (1.0 - cpow(q, m)) / (1.0 - q); };
  id.lhs = [partial](const GridPoint& p, const EngineConfig& cfg) {
    const Complex q1 = p.get("q1"), q2 = p.get("q2");
    Summand h;
    h.name = "sermul";
    h.eval = [=](Complex nu) {
      const Complex f = cpow(q1, nu), g = cpow(q2, nu);
      return f * g + f * partial(q2, nu - 1.0) + g * partial(q1, nu - 1.0);
    };
    h.decay_rate = 1.0;
    return frac_sum_right(h, 1.0, p.get("x"), cfg);
  };
  id.rhs = [partial](const GridPoint& p) {
    const Complex x = p.get("x");
    return partial(p.get("q1"), x) * partial(p.get("q2"), x);
  };
  return id;
}

Identity gamma_identity() {
  Identity id;
  id.id = "GAMMA";
  id.formula = "prod_{nu=1}^{z} nu = Gamma(z + 1)";
  id.tol = 1e-8;
  for (Complex z : {Complex(0.5), Complex(-0.5), Complex(2.5), Complex(1.0, 1.0)}) {
    id.grid.push_back(point({{"z", z}}));
  }
  id.lhs = [](const GridPoint& p, const EngineConfig& cfg) {
    return frac_product(log_identity(), 1.0, p.get("z"), cfg);
  };
  id.rhs = [](const GridPoint& p) { return std::exp(log_gamma(p.get("z") + 1.0)); };
  return id;
}

Identity tanh_identity() {
  Identity id;
  id.id = "TANH";
  id.formula = "prod_{nu=1}^{-1/2} (nu^2 + 1) = tanh(pi)";
  id.tol = 1e-8;
  id.grid.push_back(point({}, "single"));
  id.lhs = [](const GridPoint&, const EngineConfig& cfg) {
    const ComplexFn factor = [](Complex v) { return v * v + 1.0; };
    const Summand s = principal_log(factor, Degree(4), F::cauchy_taylor([](Complex v) {
                                      return std::log(v * v + 1.0);
                                    }),
                                    {}, "ln(nu^2+1)");
    Summand with_rate = s;
    with_rate.decay_rate = 5.0;
    return frac_product(with_rate, 1.0, -0.5, cfg);
  };
  id.rhs = [](const GridPoint&) { return Complex(std::tanh(kPi)); };
  return id;
}

Identity harm() {
  Identity id;
  id.id = "HARM";
  id.formula = "sum_{nu=1}^{x} 1/nu = gamma + psi(x + 1)";
  id.tol = 1e-8;
  for (Complex x : {Complex(-0.5), Complex(0.25), Complex(1.5), Complex(0.0, 1.0)}) {
    id.grid.push_back(point({{"x", x}}));
  }
  id.notes.push_back("x=-0.5 is the value -2 ln 2");
  id.lhs = [](const GridPoint& p, const EngineConfig& cfg) {
    return frac_sum_right(F::reciprocal(), 1.0, p.get("x"), cfg);
  };
  id.rhs = [](const GridPoint& p) { return constants().euler_gamma + digamma(p.get("x") + 1.0); };
  return id;
}

Identity refl() {
  Identity id;
  id.id = "REFL";
  id.formula = "sum_{nu=x}^{-x} 1/nu = pi cot(pi x)";
  id.tol = 1e-8;
  for (double x : {0.25, 0.3, 0.75}) id.grid.push_back(point({{"x", x}}));
  id.lhs = [](const GridPoint& p, const EngineConfig& cfg) {
    const Complex x = p.get("x");
    return frac_sum_right(F::reciprocal(), x, -x, cfg);
  };
  id.rhs = [](const GridPoint& p) {
    const Complex x = p.get("x");
    return kPi * cos_pi(x) / sin_pi(x);
  };
  return id;
}

Identity hurw() {
  Identity id;
  id.id = "HURW";
  id.formula = "sum_{nu=1}^{x} nu^a = zeta(-a) - zeta(-a, x + 1)";
  id.tol = 1e-7;
  for (Complex a : {Complex(-0.5), Complex(0.5), Complex(2.0), Complex(1.0, 1.0)}) {
    for (double x : {0.5, 1.7}) id.grid.push_back(point({{"a", a}, {"x", x}}));
  }
  id.lhs = [](const GridPoint& p, const EngineConfig& cfg) {
    return frac_sum_right(F::power(p.get("a")), 1.0, p.get("x"), cfg);
  };
  id.rhs = [](const GridPoint& p) {
    const Complex a = p.get("a");
    return riemann_zeta(-a) - hurwitz_zeta(-a, p.get("x") + 1.0);
  };
  return id;
}

Identity zhalf() {
  Identity id;
  id.id = "ZHALF";
  id.formula = "sum_{nu=1}^{-1/2} nu^a = (2 - 2^{-a}) zeta(-a)";
  id.tol = 1e-9;
  for (double a : {1.0, 2.0, 0.5}) id.grid.push_back(point({{"a", a}}));
  id.lhs = [](const GridPoint& p, const EngineConfig& cfg) {
    return frac_sum_right(F::power(p.get("a")), 1.0, -0.5, cfg);
  };
  id.rhs = [](const GridPoint& p) {
    const Complex a = p.get("a");
    return (2.0 - cpow(2.0, -a)) * riemann_zeta(-a);
  };
  id.annotate = [](const IdentityReport& r) {
    std::vector<std::string> notes;
    if (const auto* rec = find_record(r, "a=1"); rec != nullptr && rec->error.empty()) {
      notes.push_back(fmt("a=1: lhs = %.17g, so zeta(-1) = lhs / (3/2) = ", rec->lhs.real()) +
                      fmt("%.17g", rec->lhs.real() / 1.5));
    }
    return notes;
  };
  return id;
}

Identity vlnv() {
  Identity id;
  id.id = "VLNV";
  id.formula = "sum_{nu=1}^{-1/2} nu ln nu = -ln 2 / 24 - (3/2) zeta'(-1)";
  id.tol = 1e-7;
  id.grid.push_back(point({}, "single"));
  id.lhs = [](const GridPoint&, const EngineConfig& cfg) {
    return frac_sum_right(F::nu_log_nu(1), 1.0, -0.5, cfg);
  };
  id.rhs = [](const GridPoint&) {
    return -std::log(2.0) / 24.0 - 1.5 * riemann_zeta_sderiv(1, -1.0);
  };
  return id;
}

Identity lngam() {
  Identity id;
  id.id = "LNGAM";
  id.formula =
      "sum_{nu=1}^{-1/2} ln nu = ln Gamma(1/2) = ln sqrt(pi); also = zeta'(0, 1/2) - zeta'(0)";
  id.tol = 1e-8;
  id.grid.push_back(point({}, "gamma"));
  id.grid.push_back(point({}, "hurwitz"));
  id.lhs = [](const GridPoint&, const EngineConfig& cfg) {
    return frac_sum_right(F::logarithm(0), 1.0, -0.5, cfg);
  };
  id.rhs = [](const GridPoint& p) -> Complex {
    if (p.tag == "gamma") return 0.5 * std::log(kPi);
    return hurwitz_zeta_sderiv(1, 0.0, 0.5) - riemann_zeta_sderiv(1, 0.0);
  };
  id.annotate = [](const IdentityReport& r) {
    std::vector<std::string> notes;
    if (const auto* rec = find_record(r, "gamma"); rec != nullptr && rec->error.empty()) {
      const double zp0 = -0.5 * std::log(2.0) - rec->lhs.real();
      notes.push_back(fmt("zeta'(0) = -ln(2)/2 - lhs = %.17g", zp0) +
                      fmt("; -ln(2 pi)/2 = %.17g", -0.5 * std::log(2.0 * kPi)));
    }
    return notes;
  };
  return id;
}

Identity leftp() {
  Identity id;
  id.id = "LEFTP";
  id.formula = "left sum_{nu=1}^{-1/2} nu^z = (-1)^{z+1} (2 - 2^{-z}) zeta(-z)";
  id.tol = 1e-10;
  for (double z : {1.0, 2.0, 3.0}) id.grid.push_back(point({{"z", z}}));
  id.notes.push_back("(-1)^{z+1} taken as exp(i pi (z + 1)) (principal); only real integer z tested");
  id.lhs = [](const GridPoint& p, const EngineConfig& cfg) {
    return frac_sum_left(F::power(p.get("z")), 1.0, -0.5, cfg);
  };
  id.rhs = [](const GridPoint& p) {
    const Complex z = p.get("z");
    return std::exp(Complex(0.0, kPi) * (z + 1.0)) * (2.0 - cpow(2.0, -z)) * riemann_zeta(-z);
  };
  id.annotate = [](const IdentityReport&) {
    const Complex z = 0.5;
    const Complex right = (2.0 - cpow(2.0, -z)) * riemann_zeta(-z);
    const Complex left = std::exp(Complex(0.0, kPi) * (z + 1.0)) * right;
    return std::vector<std::string>{
        "z=1/2 closed forms: right = " + format_complex(right) + ", left = " +
        format_complex(left) + (std::abs(right - left) > 1e-6 ? " (they differ)" : " (equal)")};
  };
  return id;
}

Summand mirror_case(const std::string& tag) {
  if (tag == "recip") return F::reciprocal();
  if (tag == "cube") return F::polynomial(Polynomial::monomial(3));
  return F::polynomial(Polynomial({1.0, 1.0, 1.0}));
}

Identity mirror() {
  Identity id;
  id.id = "MIRROR";
  id.formula = "right sum_{nu=a}^{b} f(nu) = left sum_{nu=-b}^{-a} f(-nu)";
  id.tol = 1e-9;
  id.grid = {
      point({{"a", 1.0}, {"b", -0.5}}, "recip"),
      point({{"a", 0.75}, {"b", -0.75}}, "recip"),
      point({{"a", 1.0}, {"b", Complex(1.5, 0.5)}}, "recip"),
      point({{"a", 1.0}, {"b", -0.5}}, "cube"),
      point({{"a", 0.5}, {"b", 2.25}}, "quadratic"),
  };
  id.lhs = [](const GridPoint& p, const EngineConfig& cfg) {
    return frac_sum_right(mirror_case(p.tag), p.get("a"), p.get("b"), cfg);
  };
  id.rhs = [](const GridPoint& p) {
    return frac_sum_left(mirrored(mirror_case(p.tag)), -p.get("b"), -p.get("a"),
                         engine_config_from_env())
        .value;
  };
  return id;
}

Identity oddp() {
  Identity id;
  id.id = "ODDP";
  id.formula = "sum_{nu=-x}^{x} nu^{2n+1} = 0, evaluated as sum_{nu=x}^{-x}";
  id.tol = 1e-10;
  for (Complex x : {Complex(0.3), Complex(1.0, 2.0)}) {
    for (double n : {0.0, 1.0, 2.0}) id.grid.push_back(point({{"x", x}, {"n", n}}));
  }
  id.lhs = [](const GridPoint& p, const EngineConfig&) {
    const int n = static_cast<int>(p.get("n").real());
    const Complex x = p.get("x");
    return exact(poly_sum(Polynomial::monomial(2 * n + 1), x, -x));
  };
  id.rhs = [](const GridPoint&) { return Complex(0.0); };
  return id;
}

// Whether the route values (increasing n) get closer to rhs at every grid point.
std::vector<std::string> ordering_notes(const IdentityReport& r, const std::string& what) {
  std::string out_of_order;
  for (const auto& rec : r.records) {
    double prev = std::numeric_limits<double>::infinity();
    bool monotone = true;
    for (const auto& route : rec.routes) {
      const double d = std::abs(route.value - rec.rhs);
      monotone = monotone && d < prev;
      prev = d;
    }
    if (!monotone) out_of_order += (out_of_order.empty() ? "" : " ") + rec.point.label();
  }
  if (out_of_order.empty()) return {what + " approach the closed form monotonically in n"};
  return {"finding: " + what + " do not approach the closed form monotonically in n at " +
          out_of_order};
}

Identity bd() {
  Identity id;
  id.id = "BD";
  id.formula =
      "lim prod_{k=1}^{2n} (1 + 2x/k)^{-k(-1)^k} = 2^{-1/12} (Gamma(x+1/2)/Gamma(x+1))^{2x}"
      " exp(-x - 2 zeta'(-1, x+1/2) + 2 zeta'(-1, x+1) - 3 zeta'(-1))";
  id.tol = 1e-6;
  for (double x : {0.25, 0.5, 1.0, 1.5, 2.0}) id.grid.push_back(point({{"x", x}}));
  id.notes.push_back("lhs: exp(-x - sum_{nu=1}^{-1/2} 2 nu ln(1 + x/nu)); routes: finite products");
  id.lhs = [](const GridPoint& p, const EngineConfig& cfg) {
    return products::alt_power_engine(p.get("x"), cfg);
  };
  id.rhs = [](const GridPoint& p) { return products::alt_power_closed_form(p.get("x")); };
  id.routes = [](const GridPoint& p, const EngineConfig&) {
    std::vector<RouteValue> out;
    for (long n : {1L, 10L, 50L, 500L}) {
      out.push_back({"product_n" + std::to_string(n), products::alt_power_truncated(p.get("x"), n)});
    }
    return out;
  };
  id.annotate = [](const IdentityReport& r) { return ordering_notes(r, "finite products"); };
  return id;
}

Identity zpp() {
  Identity id;
  id.id = "ZPP";
  id.formula =
      "lim (2n)^{-1/2 - x - (n + 1/4) ln(2n)} prod_{k=1}^{2n} (k+x)^{(-1)^k k ln(k+x)}"
      " = exp(sum_{k=1}^{-1/2} 2k ln^2(2k + x)), closed form in zeta'(-1, .), zeta''(-1, .),"
      " zeta''(0, .) and ln Gamma";
  id.tol = 1e-6;
  for (double x : {0.5, 1.0}) id.grid.push_back(point({{"x", x}}));
  id.notes.push_back(
      "reading: the whole -1/2 - x - (n + 1/4) ln(2n) is the exponent of (2n); this reading "
      "makes the truncations converge to the closed form");
  id.notes.push_back(
      "the closed form has zeta'(-1, x/2 + 1), not zeta'(1, x/2 + 1), which is a pole of zeta; "
      "the -1 argument follows from the derivation and matches the engine sum");
  id.lhs = [](const GridPoint& p, const EngineConfig& cfg) {
    return products::log_square_engine(p.get("x"), cfg);
  };
  id.rhs = [](const GridPoint& p) { return products::log_square_closed_form(p.get("x")); };
  id.routes = [](const GridPoint& p, const EngineConfig&) {
    std::vector<RouteValue> out;
    for (long n : {10L, 100L, 1000L}) {
      out.push_back({"limit_n" + std::to_string(n), products::log_square_truncated(p.get("x"), n)});
    }
    return out;
  };
  id.annotate = [](const IdentityReport& r) { return ordering_notes(r, "truncations"); };
  return id;
}

Identity g2() {
  Identity id;
  id.id = "G2";
  id.formula =
      "ln G(z) = sum_{nu=1}^{z-1} sum_{k=1}^{nu-1} ln k = (z-1) ln Gamma(z) + zeta'(-1) - "
      "zeta'(-1, z); G(1/2) = pi^{-1/4} 2^{1/24} e^{(3/2) zeta'(-1)}";
  id.tol = 1e-7;
  for (double z : {0.5, 1.5, 3.0}) id.grid.push_back(point({{"z", z}}, "lnG"));
  id.grid.push_back(point({{"z", 0.5}}, "G"));
  id.notes.push_back("inner sum sum_{k=1}^{nu-1} ln k taken as ln Gamma(nu)");
  id.lhs = [](const GridPoint& p, const EngineConfig& cfg) {
    SumResult r = frac_sum_right(F::log_gamma_summand(), 1.0, p.get("z") - 1.0, cfg);
    if (p.tag == "G") {
      r.value = std::exp(r.value);
      r.err_estimate *= std::abs(r.value);
      for (auto& level : r.levels) level.value = std::exp(level.value);
    }
    return r;
  };
  id.rhs = [](const GridPoint& p) -> Complex {
    const double zp = constants().zeta_prime_minus1;
    if (p.tag == "G") {
      return std::pow(kPi, -0.25) * std::pow(2.0, 1.0 / 24.0) * std::exp(1.5 * zp);
    }
    const Complex z = p.get("z");
    return (z - 1.0) * log_gamma(z) + zp - hurwitz_zeta_sderiv(1, -1.0, z);
  };
  return id;
}

Identity xprod() {
  Identity id;
  id.id = "XPROD";
  id.formula =
      "prod_{n=1}^{-1/2} (2n)! = (pi/2)^{1/4}; prod_{n=1}^{-1/2} (n!)^{ln n} = exp(gamma^2/4 + "
      "gamma_1/2 - pi^2/48 + ln^2 2/2 - ln^2 pi/8); prod_{n=1/4}^{-1/4} (n!)^n = "
      "(Gamma(1/4)/Gamma(3/4))^{3/32} exp(zeta'(-2, 1/4) - 3 zeta(3)/(128 pi^2) - G/(4 pi))";
  id.tol = 1e-6;
  id.grid = {point({}, "(2n)!"), point({}, "(n!)^ln(n)"), point({}, "(n!)^n")};
  id.notes.push_back(fmt("gamma_1 = %.17g (negative sign); the value is reproduced only with this sign",
                         constants().stieltjes_gamma1));
  id.lhs = [](const GridPoint& p, const EngineConfig& cfg) {
    const DomainGuard guard = [](Complex v) { return v.real() > -1.0 || v.imag() != 0.0; };
    if (p.tag == "(2n)!") {
      return frac_product(F::analytic(
                              "ln (2n)!", [](Complex v) { return log_gamma(2.0 * v + 1.0); },
                              Degree(6), 6.0, guard),
                          1.0, -0.5, cfg);
    }
    if (p.tag == "(n!)^ln(n)") {
      return frac_product(F::analytic(
                              "ln n ln n!",
                              [](Complex v) { return std::log(v) * log_gamma(v + 1.0); },
                              Degree(8), 8.0, [](Complex v) { return v != Complex(0.0); }),
                          1.0, -0.5, cfg);
    }
    return frac_product(F::analytic(
                            "n ln n!", [](Complex v) { return v * log_gamma(v + 1.0); }, Degree(8),
                            8.0, guard),
                        0.25, -0.25, cfg);
  };
  id.rhs = [](const GridPoint& p) -> Complex {
    const auto& c = constants();
    if (p.tag == "(2n)!") return std::pow(kPi / 2.0, 0.25);
    if (p.tag == "(n!)^ln(n)") {
      const double g = c.euler_gamma, l2 = std::log(2.0), lp = std::log(kPi);
      return std::exp(g * g / 4.0 + c.stieltjes_gamma1 / 2.0 - kPi * kPi / 48.0 + l2 * l2 / 2.0 -
                      lp * lp / 8.0);
    }
    const Complex ratio = std::exp(log_gamma(0.25) - log_gamma(0.75));
    return cpow(ratio, 3.0 / 32.0) *
           std::exp(hurwitz_zeta_sderiv(1, -2.0, 0.25) - 3.0 * riemann_zeta(3.0) / (128.0 * kPi * kPi) -
                    c.catalan_G / (4.0 * kPi));
  };
  id.annotate = [](const IdentityReport& r) {
    std::vector<std::string> notes;
    if (const auto* rec = find_record(r, "(n!)^ln(n)"); rec != nullptr && rec->error.empty()) {
      const double flipped = std::abs(rec->rhs) * std::exp(-constants().stieltjes_gamma1);
      notes.push_back(fmt("with gamma_1 = +0.0728... the rhs would be %.17g", flipped) +
                      fmt(", relative error %.3g", std::abs(rec->lhs - flipped) / flipped));
    }
    return notes;
  };
  return id;
}

Identity gosper_identity() {
  Identity id;
  id.id = "GOSPER";
  id.formula =
      "sum_{n>=0} (-1)^n/(n+1/2) sin(sqrt(b^2 + pi^2 (n+1/2)^2))/sqrt(b^2 + pi^2 (n+1/2)^2) = "
      "pi sin(b)/(2b) = -sum_{n=3/4}^{-3/4} sin(sqrt(b^2 + 4 pi^2 n^2))/(2n sqrt(b^2 + 4 pi^2 n^2))";
  id.kind = IdentityKind::kExperiment;
  id.tol = 1e-6;
  for (double b : {0.5, 1.0, 2.0, 5.0}) id.grid.push_back(point({{"b", b}}));
  id.notes.push_back(
      "lhs: fractional-sum representation; routes: direct series (extrapolated partial sums) and "
      "the odd power series summed term by term, truncated at degree 21");
  id.lhs = [](const GridPoint& p, const EngineConfig& cfg) {
    return gosper::engine_route(p.get("b").real(), cfg);
  };
  id.rhs = [](const GridPoint& p) { return gosper::closed_form(p.get("b").real()); };
  id.routes = [](const GridPoint& p, const EngineConfig& cfg) {
    const double b = p.get("b").real();
    return std::vector<RouteValue>{{"direct_series", gosper::direct_series(b).value},
                                   {"termwise", gosper::termwise(b, cfg).value}};
  };
  id.annotate = [](const IdentityReport& r) {
    std::vector<std::string> notes;
    std::vector<std::string> disagree;
    for (const auto& rec : r.records) {
      if (!rec.error.empty()) {
        disagree.push_back(rec.point.label());
        continue;
      }
      std::vector<Complex> values{rec.lhs};
      for (const auto& route : rec.routes) values.push_back(route.value);
      double worst = 0.0;
      for (std::size_t i = 0; i < values.size(); ++i) {
        for (std::size_t j = i + 1; j < values.size(); ++j) {
          worst = std::max(worst, std::abs(values[i] - values[j]));
        }
      }
      if (worst > 1e-6) disagree.push_back(rec.point.label());
    }
    if (disagree.empty()) {
      notes.push_back(
          "the three routes agree pairwise within 1e-6 at every b: numerical support for the "
          "term-by-term step");
    } else {
      std::string list;
      for (const auto& d : disagree) list += (list.empty() ? "" : " ") + d;
      notes.push_back("finding: routes disagree beyond 1e-6 at " + list);
    }
    return notes;
  };
  return id;
}

}  // namespace

std::vector<Identity> register_builtin() {
  return {geo(),  binom(), sermul(), gamma_identity(), tanh_identity(), harm(), refl(),
          hurw(), zhalf(), vlnv(),   lngam(),          leftp(),         mirror(), oddp(),
          bd(),   zpp(),   g2(),     xprod(),          gosper_identity()};
}

}  // namespace fracsum
