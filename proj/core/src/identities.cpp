#include "fracsum/identities.hpp"

#include <cmath>
#include <cstdio>
#include <future>
#include <limits>

#include "fracsum/errors.hpp"

namespace fracsum {

namespace {

std::string short_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

std::string short_complex(Complex z) {
  if (z.imag() == 0.0) return short_number(z.real());
  if (z.real() == 0.0) return short_number(z.imag()) + "i";
  std::string im = short_number(z.imag());
  if (im.front() != '-') im = "+" + im;
  return short_number(z.real()) + im + "i";
}

}  // namespace

std::string_view to_string(IdentityKind kind) {
  return kind == IdentityKind::kTheorem ? "theorem" : "experiment";
}

Complex GridPoint::get(std::string_view name) const {
  for (const auto& [key, value] : params) {
    if (key == name) return value;
  }
  throw LookupError("grid point has no parameter '" + std::string(name) + "'");
}

std::string GridPoint::label() const {
  std::string out = tag;
  if (!tag.empty() && !params.empty()) out += ';';
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (i > 0) out += ',';
    out += params[i].first + "=" + short_complex(params[i].second);
  }
  return out;
}

IdentityReport run_identity(const Identity& identity, const EngineConfig& cfg) {
  if (identity.grid.empty()) throw ParameterError(identity.id + ": empty grid");
  IdentityReport report;
  report.id = identity.id;
  report.formula = identity.formula;
  report.kind = identity.kind;
  report.tol = identity.tol;
  report.notes = identity.notes;

  bool all_pass = true;
  for (const auto& point : identity.grid) {
    PointRecord rec;
    rec.point = point;
    try {
      rec.diagnostics = identity.lhs(point, cfg);
      rec.lhs = rec.diagnostics.value;
      rec.rhs = identity.rhs(point);
      if (identity.routes) rec.routes = identity.routes(point, cfg);
      rec.abs_err = std::abs(rec.lhs - rec.rhs);
      const double scale = std::abs(rec.rhs);
      rec.rel_err = scale > 0.0 ? rec.abs_err / scale
                                : (rec.abs_err == 0.0 ? 0.0
                                                      : std::numeric_limits<double>::infinity());
      rec.pass = rec.abs_err <= identity.tol || rec.rel_err <= identity.tol;
      if (!std::isfinite(rec.abs_err)) rec.pass = false;
    } catch (const Error& e) {
      rec.error = e.what();
      rec.abs_err = rec.rel_err = std::numeric_limits<double>::infinity();
      rec.pass = false;
    }
    // Against a right-hand side below tol the relative error carries no information.
    const bool tiny_rhs = rec.error.empty() && std::abs(rec.rhs) < identity.tol;
    report.max_rel_err = std::max(report.max_rel_err, tiny_rhs ? rec.abs_err : rec.rel_err);
    all_pass = all_pass && rec.pass;
    report.records.push_back(std::move(rec));
  }
  if (identity.kind == IdentityKind::kTheorem) report.all_pass = all_pass;
  if (identity.annotate) {
    for (auto& note : identity.annotate(report)) report.notes.push_back(std::move(note));
  }
  return report;
}

const std::vector<Identity>& builtin_catalog() {
  static const std::vector<Identity> catalog = register_builtin();
  return catalog;
}

const Identity& find_identity(std::string_view id) {
  for (const auto& identity : builtin_catalog()) {
    if (identity.id == id) return identity;
  }
  throw LookupError("unknown identity '" + std::string(id) + "'");
}

IdentityReport run_identity(std::string_view id, const EngineConfig& cfg) {
  return run_identity(find_identity(id), cfg);
}

std::vector<IdentityReport> run_catalog(const EngineConfig& cfg,
                                        const std::vector<std::string>& ids, bool parallel) {
  std::vector<const Identity*> selected;
  if (ids.empty()) {
    for (const auto& identity : builtin_catalog()) selected.push_back(&identity);
  } else {
    for (const auto& identity : builtin_catalog()) {
      for (const auto& id : ids) {
        if (identity.id == id) {
          selected.push_back(&identity);
          break;
        }
      }
    }
    for (const auto& id : ids) find_identity(id);  // reject unknown ids
  }

  std::vector<IdentityReport> reports;
  reports.reserve(selected.size());
  if (!parallel) {
    for (const auto* identity : selected) reports.push_back(run_identity(*identity, cfg));
    return reports;
  }
  std::vector<std::future<IdentityReport>> jobs;
  jobs.reserve(selected.size());
  for (const auto* identity : selected) {
    jobs.push_back(std::async(std::launch::async,
                              [identity, &cfg] { return run_identity(*identity, cfg); }));
  }
  for (auto& job : jobs) reports.push_back(job.get());
  return reports;
}

bool suite_passed(const std::vector<IdentityReport>& reports) {
  for (const auto& r : reports) {
    if (r.all_pass.has_value() && !*r.all_pass) return false;
  }
  return true;
}

}  // namespace fracsum
