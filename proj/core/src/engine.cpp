#include "fracsum/engine.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>
#include <sstream>

#include "fracsum/derivatives.hpp"
#include "fracsum/errors.hpp"

namespace fracsum {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// Neumaier's variant of compensated summation.
class CompensatedSum {
 public:
  void add(double v) {
    const double t = sum_ + v;
    if (std::abs(sum_) >= std::abs(v)) {
      comp_ += (sum_ - t) + v;
    } else {
      comp_ += (v - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

class ComplexCompensatedSum {
 public:
  void add(Complex z) {
    re_.add(z.real());
    im_.add(z.imag());
  }
  Complex value() const { return {re_.value(), im_.value()}; }

 private:
  CompensatedSum re_, im_;
};

std::string summand_label(const Summand& f) { return f.name.empty() ? "summand" : f.name; }

Complex checked_eval(const Summand& f, Complex z) {
  if (f.domain_guard && !f.domain_guard(z)) {
    throw DomainError(summand_label(f) + ": point outside domain", z);
  }
  const Complex v = f.eval(z);
  if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
    throw DomainError(summand_label(f) + ": non-finite value", z);
  }
  return v;
}

void check_domain(const Summand& f, Complex z) {
  if (f.domain_guard && !f.domain_guard(z)) {
    throw DomainError(summand_label(f) + ": point outside domain", z);
  }
}

enum class Direction { kRight, kLeft };

SumResult run_engine(const Summand& f, Complex x, Complex y, const EngineConfig& cfg,
                     Direction dir) {
  cfg.validate();
  if (!f.eval) throw ParameterError("summand has no evaluator");
  const bool right = dir == Direction::kRight;
  // First orbit points: x and y + 1 going right, x - 1 and y going left.
  check_domain(f, right ? x : x - 1.0);
  check_domain(f, right ? y + 1.0 : y);

  const double rate = cfg.rate_hint.value_or(f.decay_rate.value_or(1.0));

  ComplexCompensatedSum tail;
  double square_magnitude = 0.0;
  long done = 0;

  std::vector<Level> levels;
  std::vector<double> noise;  // rounding-level estimate per level
  levels.reserve(cfg.n_levels);
  noise.reserve(cfg.n_levels);

  for (int j = 0; j < cfg.n_levels; ++j) {
    const long n = cfg.n_start << j;
    for (long nu = done + 1; nu <= n; ++nu) {
      const double v = static_cast<double>(nu);
      const Complex a = right ? x - 1.0 + v : y + 1.0 - v;
      const Complex b = right ? y + v : x - v;
      const Complex fa = checked_eval(f, a);
      const Complex fb = checked_eval(f, b);
      tail.add(fa - fb);
      square_magnitude += std::norm(fa) + std::norm(fb);
    }
    done = n;

    const Complex center = right ? double(n) : -double(n);
    const Polynomial q = local_approximant(f, center);
    const Complex poly = q.is_zero() ? Complex(0.0) : poly_sum(q, x, y);
    const Complex t = tail.value();
    levels.push_back({n, t + poly});
    noise.push_back(4.0 * kEps * (std::sqrt(square_magnitude) + std::abs(t) + std::abs(poly)));
  }

  const RichardsonTable table(levels, cfg.extrap_order, rate);
  const auto best = table.best_estimate(noise);

  SumResult out;
  out.value = best.value;
  out.err_estimate = best.error;
  out.n_used = levels[best.row].n;
  out.converged = out.err_estimate <= cfg.tol * std::max(1.0, std::abs(out.value));
  out.levels = std::move(levels);
  return out;
}

}  // namespace

void EngineConfig::validate() const {
  if (n_start < 1) throw ParameterError("EngineConfig: n_start must be >= 1");
  if (n_levels < 2) throw ParameterError("EngineConfig: n_levels must be >= 2");
  if (n_levels > 40) throw ParameterError("EngineConfig: n_levels must be <= 40");
  if (extrap_order < 0 || extrap_order >= n_levels) {
    throw ParameterError("EngineConfig: extrap_order must satisfy 0 <= order < n_levels");
  }
  if ((n_start << (n_levels - 1)) > (1L << 40)) {
    throw ParameterError("EngineConfig: n_start * 2^(levels-1) too large");
  }
  if (!(tol > 0.0)) throw ParameterError("EngineConfig: tol must be positive");
  if (rate_hint && !(*rate_hint > 0.0)) throw ParameterError("EngineConfig: rate_hint must be positive");
}

EngineConfig EngineConfig::parse(const std::string& text) {
  std::vector<std::string> fields;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) fields.push_back(item);
  if (fields.size() != 4) {
    throw ParameterError("engine config '" + text + "': expected n_start,levels,order,tol");
  }
  EngineConfig cfg;
  try {
    std::size_t pos = 0;
    cfg.n_start = std::stol(fields[0], &pos);
    if (pos != fields[0].size()) throw std::invalid_argument("n_start");
    cfg.n_levels = std::stoi(fields[1], &pos);
    if (pos != fields[1].size()) throw std::invalid_argument("levels");
    cfg.extrap_order = std::stoi(fields[2], &pos);
    if (pos != fields[2].size()) throw std::invalid_argument("order");
    cfg.tol = std::stod(fields[3], &pos);
    if (pos != fields[3].size()) throw std::invalid_argument("tol");
  } catch (const std::logic_error&) {
    throw ParameterError("engine config '" + text + "': malformed field");
  }
  cfg.validate();
  return cfg;
}

EngineConfig engine_config_from_env() {
  const char* env = std::getenv(kEngineEnvVar);
  if (env == nullptr || *env == '\0') return {};
  return EngineConfig::parse(env);
}

Polynomial local_approximant(const Summand& f, Complex center) {
  if (f.sigma.is_minus_infinity()) return {};
  if (f.approximant) return f.approximant(center);
  const int sigma = f.sigma.value();
  if (sigma < 0) throw ParameterError("summand sigma must be >= 0 or minus infinity");
  std::vector<Complex> d;
  if (f.derivatives) {
    check_domain(f, center);
    d = f.derivatives(center, sigma);
  } else {
    d = finite_difference_derivatives([&f](Complex z) { return checked_eval(f, z); }, center,
                                      sigma);
  }
  if (static_cast<int>(d.size()) < sigma + 1) {
    throw ParameterError(summand_label(f) + ": derivative oracle returned too few orders");
  }
  std::vector<Complex> coeffs(sigma + 1);
  double factorial = 1.0;
  for (int k = 0; k <= sigma; ++k) {
    if (k > 0) factorial *= k;
    coeffs[k] = d[k] / factorial;
  }
  return Polynomial(std::move(coeffs));
}

Polynomial approx_poly(const Summand& f, long n) {
  if (f.sigma.is_minus_infinity()) {
    throw ParameterError("approx_poly: sigma is minus infinity, p_n is the zero polynomial");
  }
  return local_approximant(f, double(n)).shifted(-double(n));
}

SumResult frac_sum_right(const Summand& f, Complex x, Complex y, const EngineConfig& cfg) {
  return run_engine(f, x, y, cfg, Direction::kRight);
}

SumResult frac_sum_left(const Summand& f, Complex x, Complex y, const EngineConfig& cfg) {
  return run_engine(f, x, y, cfg, Direction::kLeft);
}

SumResult frac_product(const Summand& log_factor, Complex x, Complex y, const EngineConfig& cfg) {
  SumResult r = frac_sum_right(log_factor, x, y, cfg);
  const double log_err = r.err_estimate;
  r.value = std::exp(r.value);
  r.err_estimate = std::abs(r.value) * log_err;
  for (auto& level : r.levels) level.value = std::exp(level.value);
  return r;
}

Summand principal_log(ComplexFn factor, Degree sigma, TaylorFn log_derivatives, DomainGuard guard,
                      std::string name) {
  Summand s;
  s.name = name.empty() ? "log(factor)" : std::move(name);
  s.eval = [factor = std::move(factor), label = s.name](Complex z) {
    const Complex v = factor(z);
    if (v.imag() == 0.0 && v.real() <= 0.0) {
      throw BranchError(label + ": factor on the closed negative real axis", z);
    }
    return std::log(v);
  };
  s.sigma = sigma;
  s.derivatives = std::move(log_derivatives);
  s.domain_guard = std::move(guard);
  return s;
}

Summand mirrored(const Summand& f) {
  Summand g;
  g.name = "mirror(" + summand_label(f) + ")";
  g.eval = [e = f.eval](Complex z) { return e(-z); };
  g.sigma = f.sigma;
  if (f.derivatives) {
    g.derivatives = [d = f.derivatives](Complex c, int order) {
      auto v = d(-c, order);
      for (std::size_t k = 1; k < v.size(); k += 2) v[k] = -v[k];
      return v;
    };
  }
  if (f.domain_guard) {
    g.domain_guard = [guard = f.domain_guard](Complex z) { return guard(-z); };
  }
  if (f.approximant) {
    g.approximant = [a = f.approximant](Complex c) { return a(-c).reflected(); };
  }
  g.decay_rate = f.decay_rate;
  return g;
}

MirrorCheck mirror_check(const Summand& f, Complex a, Complex b, const EngineConfig& cfg) {
  MirrorCheck out;
  out.right = frac_sum_right(f, a, b, cfg);
  out.left = frac_sum_left(mirrored(f), -b, -a, cfg);
  out.difference = out.right.value - out.left.value;
  return out;
}

Degree suggest_sigma(const ComplexFn& f, double n) {
  const double lo = std::abs(f(n));
  const double hi = std::abs(f(2.0 * n));
  if (lo == 0.0 || hi == 0.0) return Degree::minus_infinity();
  const double growth = std::log2(hi / lo);
  if (growth < -0.25) return Degree::minus_infinity();
  return Degree(std::max(0, static_cast<int>(std::floor(growth + 0.05))));
}

}  // namespace fracsum
