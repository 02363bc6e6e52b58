// Acceptance checks, one PASS/FAIL line per criterion.
//
//   acceptance [--expect-fail N[,N...]]
//
// Exit status is 0 when exactly the expected criteria fail (none by default).

#include <cmath>
#include <cstdio>
#include <cstdarg>
#include <cstring>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "fracsum/engine.hpp"
#include "fracsum/errors.hpp"
#include "fracsum/families.hpp"
#include "fracsum/figures.hpp"
#include "fracsum/gosper.hpp"
#include "fracsum/identities.hpp"
#include "fracsum/polynomial.hpp"
#include "fracsum/products.hpp"
#include "fracsum/special_functions.hpp"
#include "properties.hpp"

using namespace fracsum;
namespace F = fracsum::families;

namespace {

const double kLn2 = std::log(2.0);

struct Verdict {
  bool pass = true;
  std::string detail;

  void require(bool ok, const char* fmt, ...) __attribute__((format(printf, 3, 4)));
};

void Verdict::require(bool ok, const char* fmt, ...) {
  char buf[256];
  va_list args;
  va_start(args, fmt);
  std::vsnprintf(buf, sizeof buf, fmt, args);
  va_end(args);
  if (!detail.empty()) detail += "; ";
  if (!ok) detail += "FAILED ";
  detail += buf;
  pass = pass && ok;
}

double rel(Complex a, Complex b) { return std::abs(a - b) / std::abs(b); }

Summand factorial_factor() {
  Summand s = principal_log([](Complex z) { return z; }, Degree(3), F::logarithm(3).derivatives);
  s.decay_rate = 4.0;
  return s;
}

const PointRecord& record(const IdentityReport& r, const std::string& label) {
  for (const auto& rec : r.records) {
    if (rec.point.label() == label) return rec;
  }
  throw LookupError(r.id + ": no point " + label);
}

Verdict euler_value() {
  Verdict v;
  const double err = std::abs(frac_sum_right(F::reciprocal(), 1.0, -0.5).value + 2 * kLn2);
  v.require(err <= 1e-9, "|sum 1/nu - (-2 ln 2)| = %.2e <= 1e-9", err);
  return v;
}

Verdict zeta_minus_one() {
  Verdict v;
  const Complex s = poly_sum(Polynomial::monomial(1), 1.0, -0.5);
  const double e1 = std::abs(s + 0.125);
  v.require(e1 <= 1e-14, "|poly_sum - (-1/8)| = %.2e <= 1e-14", e1);
  const double e2 = std::abs(s / 1.5 - riemann_zeta(-1.0));
  v.require(e2 <= 1e-10, "|(-1/8)/(3/2) - zeta(-1)| = %.2e <= 1e-10", e2);
  return v;
}

Verdict factorial_interpolation() {
  Verdict v;
  double worst = 0.0;
  for (const Complex z : {Complex(0.5), Complex(-0.5), Complex(2.5), Complex(1.0, 1.0)}) {
    worst = std::max(worst, rel(frac_product(factorial_factor(), 1.0, z).value, gamma(z + 1.0)));
  }
  v.require(worst <= 1e-8, "max rel err vs Gamma(z+1) = %.2e <= 1e-8", worst);
  return v;
}

Verdict tanh_product() {
  Verdict v;
  const auto r = run_identity("TANH");
  const auto& rec = r.records.front();
  const double err = rel(rec.lhs, std::tanh(kPi));
  v.require(err <= 1e-8, "rel err vs tanh(pi) = %.2e <= 1e-8", err);
  return v;
}

Verdict reflection() {
  Verdict v;
  const double err = std::abs(frac_sum_right(F::reciprocal(), 0.75, -0.75).value + kPi);
  v.require(err <= 1e-8, "|sum_{3/4}^{-3/4} 1/nu + pi| = %.2e <= 1e-8", err);
  return v;
}

Verdict hurwitz_power_sums() {
  Verdict v;
  const auto r = run_identity("HURW");
  v.require(r.max_rel_err <= 1e-7, "HURW max rel err = %.2e <= 1e-7 over %zu points",
            r.max_rel_err, r.records.size());
  return v;
}

Verdict nu_log_nu() {
  Verdict v;
  const Complex lhs = frac_sum_right(F::nu_log_nu(), 1.0, -0.5).value;
  const Complex rhs = -kLn2 / 24.0 - 1.5 * riemann_zeta_sderiv(1, -1.0);
  v.require(std::abs(lhs - rhs) <= 1e-7, "|sum nu ln nu - closed form| = %.2e <= 1e-7",
            std::abs(lhs - rhs));
  // sum_{1}^{-1/2} ln nu = zeta'(0, 1/2) - zeta'(0) = -ln(2)/2 - zeta'(0).
  const Complex zp0 = -0.5 * kLn2 - frac_sum_right(F::logarithm(3), 1.0, -0.5).value;
  const double e = std::abs(zp0 + 0.5 * std::log(2 * kPi));
  v.require(e <= 1e-8, "|zeta'(0) from sum ln nu + ln(2 pi)/2| = %.2e <= 1e-8", e);
  return v;
}

Verdict figure_alt_power() {
  Verdict v;
  const auto t = figure_table(Figure::kAltPower);
  double worst = 0.0;
  int monotone = 0;
  for (const auto& row : t.rows) {
    const double x = row[0], c = row[1];
    worst = std::max(worst, rel(products::alt_power_engine(x).value, c));
    const double e1 = std::abs(row[2] - c), e10 = std::abs(row[3] - c), e50 = std::abs(row[4] - c);
    if (e1 > e10 && e10 > e50) ++monotone;
  }
  v.require(worst <= 1e-6, "engine vs closed form max rel err = %.2e <= 1e-6 at %zu x", worst,
            t.rows.size());
  v.require(monotone == int(t.rows.size()), "n=1,10,50 monotone at %d/%zu x", monotone,
            t.rows.size());
  v.require(run_identity("BD").all_pass.value_or(false), "BD identity grid passes");
  return v;
}

Verdict figure_log_square() {
  Verdict v;
  const auto t = figure_table(Figure::kLogSquare);
  double worst_engine = 0.0, worst_trunc = 0.0;
  std::string out_of_order;
  int closer = 0;
  for (const auto& row : t.rows) {
    const double x = row[0], c = row[1];
    worst_engine = std::max(worst_engine, rel(products::log_square_engine(x).value, c));
    const double e10 = std::abs(row[2] - c), e1000 = std::abs(row[4] - c);
    worst_trunc = std::max(worst_trunc, e1000 / std::abs(c));
    if (e1000 < e10) {
      ++closer;
    } else {
      char buf[96];
      std::snprintf(buf, sizeof buf, "%sx=%.4g (n=10 err %.2e, n=1000 err %.2e)",
                    out_of_order.empty() ? "" : ", ", x, e10, e1000);
      out_of_order += buf;
    }
  }
  v.require(closer == int(t.rows.size()), "n=1000 closer than n=10 at %d/%zu x%s%s", closer,
            t.rows.size(), out_of_order.empty() ? "" : ", not at ", out_of_order.c_str());
  v.require(worst_trunc <= 1e-2, "n=1000 max rel err = %.2e <= 1e-2", worst_trunc);
  v.require(worst_engine <= 1e-6, "engine vs closed form max rel err = %.2e <= 1e-6",
            worst_engine);
  return v;
}

Verdict barnes_g() {
  Verdict v;
  const auto r = run_identity("G2");
  double worst = 0.0;
  for (const char* label : {"lnG;z=0.5", "lnG;z=1.5", "lnG;z=3"}) {
    worst = std::max(worst, record(r, label).abs_err);
  }
  v.require(worst <= 1e-7, "ln G(z) max abs err = %.2e <= 1e-7 at z = 0.5, 1.5, 3", worst);
  const double g = record(r, "G;z=0.5").rel_err;
  v.require(g <= 1e-8, "G(1/2) rel err = %.2e <= 1e-8", g);
  return v;
}

Verdict exotic_products() {
  Verdict v;
  const auto r = run_identity("XPROD");
  const double e1 = record(r, "(2n)!").rel_err;
  const double e2 = record(r, "(n!)^ln(n)").rel_err;
  const double e3 = record(r, "(n!)^n").rel_err;
  v.require(std::abs(record(r, "(2n)!").rhs - std::pow(kPi / 2, 0.25)) < 1e-15 && e1 <= 1e-7,
            "(2n)! rel err = %.2e <= 1e-7", e1);
  v.require(e2 <= 1e-6, "(n!)^ln(n) rel err = %.2e <= 1e-6", e2);
  v.require(e3 <= 1e-6, "(n!)^n rel err = %.2e <= 1e-6", e3);
  bool sign_noted = false;
  for (const auto& n : r.notes) sign_noted = sign_noted || n.find("gamma_1") != std::string::npos;
  v.require(sign_noted, "gamma_1 sign recorded in notes");
  return v;
}

Verdict property_suites() {
  Verdict v;
  using namespace fracsum::testing;
  for (const auto& o : {axiom_s1(200, 0x51), axiom_s2(200, 0x52), axiom_s3(200, 0x53), axiom_s4(),
                        classical_consistency(), polynomial_agreement(200, 0x54)}) {
    v.require(o.ok(), "%s %d/%d (worst %.2g of tol)", o.name.c_str(), o.cases - o.failures, o.cases,
              o.worst_ratio);
  }
  return v;
}

Verdict gosper_experiment() {
  Verdict v;
  double worst = 0.0;
  for (const double b : {0.5, 1.0, 2.0}) {
    const Complex c = gosper::closed_form(b);
    worst = std::max({worst, std::abs(gosper::direct_series(b).value - c),
                      std::abs(gosper::engine_route(b).value - c),
                      std::abs(gosper::termwise(b).value - c)});
  }
  v.require(worst <= 1e-6, "three routes vs pi sin b/(2b) max err = %.2e <= 1e-6 (experimental)",
            worst);
  return v;
}

std::set<int> parse_expected(int argc, char** argv) {
  std::set<int> out;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--expect-fail") == 0 && i + 1 < argc) {
      std::stringstream ss(argv[++i]);
      for (std::string item; std::getline(ss, item, ',');) out.insert(std::stoi(item));
    } else {
      std::fprintf(stderr, "usage: acceptance [--expect-fail N[,N...]]\n");
      std::exit(2);
    }
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  const std::set<int> expected = parse_expected(argc, argv);
  const std::vector<std::pair<const char*, std::function<Verdict()>>> criteria = {
      {"Euler value", euler_value},
      {"zeta(-1) chain", zeta_minus_one},
      {"factorial interpolation", factorial_interpolation},
      {"tanh pi product", tanh_product},
      {"reflection", reflection},
      {"Hurwitz power sums", hurwitz_power_sums},
      {"nu ln nu and zeta'(0)", nu_log_nu},
      {"bd figure", figure_alt_power},
      {"zeta2 figure", figure_log_square},
      {"Barnes G", barnes_g},
      {"exotic products", exotic_products},
      {"property suites", property_suites},
      {"Gosper experiment", gosper_experiment},
  };
  std::set<int> failed;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int number = int(i) + 1;
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v.pass = false;
      v.detail = std::string("exception: ") + e.what();
    }
    if (!v.pass) failed.insert(number);
    std::printf("%s %2d %s: %s\n", v.pass ? "PASS" : "FAIL", number, criteria[i].first,
                v.detail.c_str());
  }
  std::printf("%zu/%zu criteria pass\n", criteria.size() - failed.size(), criteria.size());
  if (!expected.empty()) {
    std::string list;
    for (int n : expected) list += (list.empty() ? "" : ",") + std::to_string(n);
    std::printf("expected failures: %s (%s)\n", list.c_str(),
                failed == expected ? "matched" : "NOT matched");
  }
  return failed == expected ? 0 : 1;
}
