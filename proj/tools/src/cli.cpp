#include "fracsum_cli/cli.hpp"

#include <CLI11.hpp>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <map>
#include <optional>
#include <regex>
#include <sstream>

#include "fracsum/engine.hpp"
#include "fracsum/errors.hpp"
#include "fracsum/families.hpp"
#include "fracsum/figures.hpp"
#include "fracsum/identities.hpp"
#include "fracsum/polynomial.hpp"
#include "fracsum/report.hpp"

namespace fracsum::cli {

namespace {

using nlohmann::json;

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t");
  return std::string(s.substr(b, e - b + 1));
}

// Shortest representation that parses back to the same double.
std::string shortest(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string complex_text(Complex z) {
  if (z.imag() == 0.0) return shortest(z.real());
  std::string im = shortest(z.imag());
  if (im.front() != '-') im.insert(im.begin(), '+');
  return shortest(z.real()) + im + "i";
}

// "name:k=v,k=v" or "name:v,v".
struct Spec {
  std::string family;
  std::vector<std::string> args;
};

Spec split_spec(std::string_view text) {
  Spec spec;
  const auto colon = text.find(':');
  spec.family = trim(text.substr(0, colon));
  if (colon == std::string_view::npos) return spec;
  std::string rest(text.substr(colon + 1));
  std::stringstream ss(rest);
  std::string item;
  while (std::getline(ss, item, ',')) spec.args.push_back(trim(item));
  return spec;
}

std::map<std::string, Complex> keyed(const Spec& spec, std::initializer_list<const char*> keys) {
  std::map<std::string, Complex> out;
  for (const auto& arg : spec.args) {
    const auto eq = arg.find('=');
    if (eq == std::string::npos) {
      throw ParameterError(spec.family + ": expected key=value, got '" + arg + "'");
    }
    const std::string key = trim(std::string_view(arg).substr(0, eq));
    bool known = false;
    for (const char* k : keys) known = known || key == k;
    if (!known) throw ParameterError(spec.family + ": unknown parameter '" + key + "'");
    out[key] = parse_complex(std::string_view(arg).substr(eq + 1));
  }
  for (const char* k : keys) {
    if (!out.count(k)) throw ParameterError(spec.family + ": missing parameter '" + k + "'");
  }
  return out;
}

void no_args(const Spec& spec) {
  if (!spec.args.empty()) throw ParameterError(spec.family + " takes no parameters");
}

Polynomial coefficient_list(const Spec& spec) {
  if (spec.args.empty()) throw ParameterError("poly: expected coefficients c0,c1,...");
  std::vector<Complex> c;
  for (const auto& a : spec.args) c.push_back(parse_complex(a));
  if (c.size() > static_cast<std::size_t>(kMaxPolynomialDegree) + 1) {
    throw ParameterError("poly: degree above " + std::to_string(kMaxPolynomialDegree));
  }
  return Polynomial(std::move(c));
}

bool is_integer(Complex a) {
  return a.imag() == 0.0 && a.real() >= 0.0 && a.real() == std::floor(a.real());
}

json complex_json(Complex z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

json result_json(const SumResult& r) {
  json levels = json::array();
  for (const auto& l : r.levels) {
    levels.push_back(json{{"n", l.n}, {"re", l.value.real()}, {"im", l.value.imag()}});
  }
  return json{{"value", complex_json(r.value)},
              {"err_estimate", r.err_estimate},
              {"n_used", r.n_used},
              {"converged", r.converged},
              {"levels", levels}};
}

json report_json(const IdentityReport& rep) {
  json records = json::array();
  for (const auto& rec : rep.records) {
    json j{{"point", rec.point.label()}, {"pass", rec.pass}};
    if (!rec.error.empty()) {
      j["error"] = rec.error;
    } else {
      j["lhs"] = complex_json(rec.lhs);
      j["rhs"] = complex_json(rec.rhs);
      j["abs_err"] = rec.abs_err;
      j["rel_err"] = rec.rel_err;
      j["diagnostics"] = result_json(rec.diagnostics);
      json routes = json::object();
      for (const auto& route : rec.routes) routes[route.label] = complex_json(route.value);
      if (!rec.routes.empty()) j["routes"] = routes;
    }
    records.push_back(std::move(j));
  }
  json out{{"id", rep.id},
           {"formula", rep.formula},
           {"kind", std::string(to_string(rep.kind))},
           {"tol", rep.tol},
           {"records", records},
           {"max_rel_err", rep.max_rel_err},
           {"notes", rep.notes}};
  out["all_pass"] = rep.all_pass ? json(*rep.all_pass) : json(nullptr);
  return out;
}

enum class Output { kPlain, kJson, kCsv };

Output parse_output(const std::string& s) {
  if (s == "plain") return Output::kPlain;
  if (s == "json") return Output::kJson;
  if (s == "csv") return Output::kCsv;
  throw ParameterError("unknown output format '" + s + "' (plain, json, csv)");
}

// Writes to `path` when given, else to `out`.
template <typename Fn>
void emit(const std::string& path, std::ostream& out, Fn&& write) {
  if (path.empty()) {
    write(out);
    return;
  }
  std::ofstream file(path);
  if (!file) throw IoError("cannot open '" + path + "' for writing");
  write(file);
  file.flush();
  if (!file) throw IoError("failed writing '" + path + "'");
}

void print_sum(std::ostream& out, const SumResult& r, Output format) {
  switch (format) {
    case Output::kPlain:
      out << "value: " << complex_text(r.value) << '\n'
          << "err_estimate: " << shortest(r.err_estimate) << '\n'
          << "converged: " << (r.converged ? "true" : "false") << '\n';
      break;
    case Output::kJson:
      out << result_json(r).dump(2) << '\n';
      break;
    case Output::kCsv:
      out << "value_re,value_im,err_estimate,n_used,converged\n"
          << shortest(r.value.real()) << ',' << shortest(r.value.imag()) << ','
          << shortest(r.err_estimate) << ',' << r.n_used << ',' << (r.converged ? "true" : "false")
          << '\n';
      break;
  }
}

void print_reports(std::ostream& out, const std::vector<IdentityReport>& reports, Output format) {
  switch (format) {
    case Output::kPlain:
      write_reports(out, reports);
      break;
    case Output::kJson: {
      json all = json::array();
      for (const auto& r : reports) all.push_back(report_json(r));
      out << all.dump(2) << '\n';
      break;
    }
    case Output::kCsv:
      out << "id,point,lhs_re,lhs_im,rhs_re,rhs_im,abs_err,rel_err,pass\n";
      for (const auto& r : reports) {
        for (const auto& rec : r.records) {
          out << r.id << ",\"" << rec.point.label() << "\"," << shortest(rec.lhs.real()) << ','
              << shortest(rec.lhs.imag()) << ',' << shortest(rec.rhs.real()) << ','
              << shortest(rec.rhs.imag()) << ',' << shortest(rec.abs_err) << ','
              << shortest(rec.rel_err) << ',' << (rec.pass ? "true" : "false") << '\n';
        }
      }
      break;
  }
}

struct EngineFlags {
  std::optional<long> n_start;
  std::optional<int> levels;
  std::optional<int> order;
  std::optional<double> tol;

  void attach(CLI::App* app) {
    app->add_option("--n-start", n_start, "first tail offset n0");
    app->add_option("--levels", levels, "number of doubling levels");
    app->add_option("--order", order, "Richardson extrapolation depth");
    app->add_option("--tol", tol, "target error");
  }

  EngineConfig resolve() const {
    EngineConfig cfg = engine_config_from_env();
    if (n_start) cfg.n_start = *n_start;
    if (levels) cfg.n_levels = *levels;
    if (order) cfg.extrap_order = *order;
    if (tol) cfg.tol = *tol;
    cfg.validate();
    return cfg;
  }
};

}  // namespace

Complex parse_complex(std::string_view text) {
  // A, Bi, A+Bi or A-Bi with plain decimal A and B.
  static const std::regex grammar(
      R"(([+-]?(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?)(?:([+-](?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?)?(i))?)");
  const std::string s = trim(text);
  std::smatch m;
  if (!std::regex_match(s, m, grammar)) {
    throw ParameterError("invalid complex literal '" + std::string(text) + "'");
  }
  const double first = std::strtod(m[1].str().c_str(), nullptr);
  const double second = m[2].matched ? std::strtod(m[2].str().c_str(), nullptr) : 0.0;
  if (!std::isfinite(first) || !std::isfinite(second)) {
    throw ParameterError("complex literal '" + std::string(text) + "' out of range");
  }
  if (!m[3].matched) return {first, 0.0};
  if (!m[2].matched) return {0.0, first};
  return {first, second};
}

Summand parse_summand(std::string_view text, Direction dir) {
  const Spec spec = split_spec(text);
  const bool left = dir == Direction::kLeft;
  const auto right_only = [&] {
    if (left) throw ParameterError(spec.family + ": left sums are not supported for this family");
  };
  if (spec.family == "recip") {
    no_args(spec);
    return families::reciprocal();
  }
  if (spec.family == "pow") {
    const Complex a = keyed(spec, {"a"}).at("a");
    if (left && !is_integer(a)) {
      throw ParameterError("pow: left sums need a nonnegative integer exponent");
    }
    return families::power(a);
  }
  if (spec.family == "log") {
    no_args(spec);
    right_only();
    return families::logarithm(3);
  }
  if (spec.family == "geom") {
    return families::geometric(keyed(spec, {"q"}).at("q"));
  }
  if (spec.family == "binom") {
    right_only();
    const auto kv = keyed(spec, {"c", "x"});
    return families::binomial_term(kv.at("c"), kv.at("x"));
  }
  if (spec.family == "vlnv") {
    no_args(spec);
    right_only();
    return families::nu_log_nu(4);
  }
  if (spec.family == "lnfact") {
    no_args(spec);
    right_only();
    return families::log_factorial();
  }
  if (spec.family == "poly") {
    return families::polynomial(coefficient_list(spec));
  }
  throw ParameterError("unknown summand family '" + spec.family +
                       "' (recip, pow, log, geom, binom, vlnv, lnfact, poly)");
}

Summand parse_factor(std::string_view text) {
  const Spec spec = split_spec(text);
  const DomainGuard nonzero = [](Complex v) { return v != Complex(0.0); };
  if (spec.family == "id") {
    no_args(spec);
    Summand s = principal_log([](Complex v) { return v; }, Degree(3),
                              families::logarithm(3).derivatives, nonzero, "ln(nu)");
    s.decay_rate = 4.0;
    return s;
  }
  if (spec.family == "recip") {
    no_args(spec);
    return families::analytic(
        "-ln(nu)", [](Complex v) { return -std::log(v); }, Degree(3), 4.0, nonzero);
  }
  if (spec.family == "pow") {
    const Complex a = keyed(spec, {"a"}).at("a");
    return families::analytic(
        "a ln(nu)", [a](Complex v) { return a * std::log(v); }, Degree(3), 4.0, nonzero);
  }
  if (spec.family == "geom") {
    const Complex q = keyed(spec, {"q"}).at("q");
    if (q == Complex(0.0)) throw ParameterError("geom: q must be nonzero");
    return families::polynomial(Polynomial({0.0, std::log(q)}));
  }
  if (spec.family == "poly") {
    const Polynomial p = coefficient_list(spec);
    if (p.is_zero()) throw ParameterError("poly: the zero factor has no logarithm");
    const ComplexFn factor = [p](Complex v) { return p(v); };
    Summand s = principal_log(factor, Degree(3),
                              families::cauchy_taylor([p](Complex v) { return std::log(p(v)); }),
                              {}, "ln(poly)");
    s.decay_rate = 4.0;
    return s;
  }
  throw ParameterError("unknown factor family '" + spec.family + "' (id, recip, pow, geom, poly)");
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fractional sums and products with complex bounds"};
  app.require_subcommand(1);

  std::string f_spec, from_text, to_text, direction = "right", output = "plain", path;
  EngineFlags sum_flags, prod_flags, id_flags;

  auto* sum = app.add_subcommand("sum", "fractional sum of a builtin summand");
  sum->add_option("--f", f_spec, "summand family, e.g. recip, pow:a=0.5, poly:1,0,2")->required();
  sum->add_option("--from", from_text, "lower bound")->required();
  sum->add_option("--to", to_text, "upper bound")->required();
  sum->add_option("--direction", direction, "right or left");
  sum->add_option("--output", output, "plain, json or csv");
  sum->add_option("--path", path, "write to file instead of stdout");
  sum_flags.attach(sum);

  auto* prod = app.add_subcommand("prod", "fractional product of a builtin factor");
  prod->add_option("--f", f_spec, "factor family: id, recip, pow:a=A, geom:q=Q, poly:...")
      ->required();
  prod->add_option("--from", from_text, "lower bound")->required();
  prod->add_option("--to", to_text, "upper bound")->required();
  prod->add_option("--output", output, "plain, json or csv");
  prod->add_option("--path", path, "write to file instead of stdout");
  prod_flags.attach(prod);

  std::vector<std::string> ids;
  auto* id_run = app.add_subcommand("identity-run", "run identity checks");
  id_run->add_option("--id", ids, "identity id (repeatable; default all)");
  id_run->add_option("--output", output, "plain, json or csv");
  id_run->add_option("--path", path, "write to file instead of stdout");
  id_flags.attach(id_run);

  auto* id_list = app.add_subcommand("identity-list", "list registered identities");

  std::string which;
  auto* figure = app.add_subcommand("figure", "emit figure data as CSV");
  figure->add_option("--which", which, "bd or zeta2")->required();
  figure->add_option("--path", path, "output file (default stdout)");

  std::vector<std::string> argv_store{"fracsum"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }

  try {
    const Output format = parse_output(output);
    if (sum->parsed()) {
      const EngineConfig cfg = sum_flags.resolve();
      if (direction != "right" && direction != "left") {
        throw ParameterError("direction must be right or left");
      }
      const Direction dir = direction == "left" ? Direction::kLeft : Direction::kRight;
      const Summand f = parse_summand(f_spec, dir);
      const Complex x = parse_complex(from_text);
      const Complex y = parse_complex(to_text);
      const SumResult r = dir == Direction::kLeft ? frac_sum_left(f, x, y, cfg)
                                                  : frac_sum_right(f, x, y, cfg);
      emit(path, out, [&](std::ostream& o) { print_sum(o, r, format); });
      return kExitOk;
    }
    if (prod->parsed()) {
      const EngineConfig cfg = prod_flags.resolve();
      const Summand f = parse_factor(f_spec);
      const SumResult r = frac_product(f, parse_complex(from_text), parse_complex(to_text), cfg);
      emit(path, out, [&](std::ostream& o) { print_sum(o, r, format); });
      return kExitOk;
    }
    if (id_run->parsed()) {
      const EngineConfig cfg = id_flags.resolve();
      const auto reports = run_catalog(cfg, ids);
      emit(path, out, [&](std::ostream& o) { print_reports(o, reports, format); });
      return suite_passed(reports) ? kExitOk : kExitIdentityFailure;
    }
    if (id_list->parsed()) {
      for (const auto& identity : builtin_catalog()) {
        out << identity.id << ' ' << to_string(identity.kind) << " tol=" << shortest(identity.tol)
            << " points=" << identity.grid.size() << ' ' << identity.formula << '\n';
      }
      return kExitOk;
    }
    if (figure->parsed()) {
      const Figure fig = parse_figure(which);
      if (path.empty()) {
        write_csv(out, figure_table(fig));
      } else {
        emit_figure(fig, path);
      }
      return kExitOk;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}

}  // namespace fracsum::cli
