#include "fracsum/report.hpp"

#include <charconv>
#include <cstdio>
#include <ostream>
#include <sstream>

namespace fracsum {

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    if (c == '\n') {
      out += "\\n";
      continue;
    }
    out += c;
  }
  return out + "\"";
}

const char* boolean(bool b) { return b ? "true" : "false"; }

}  // namespace

std::string format_double(double v) {
  char buf[40];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

void write_report(std::ostream& out, const IdentityReport& report) {
  out << "identity id=" << report.id << " kind=" << to_string(report.kind)
      << " tol=" << format_double(report.tol) << " formula=" << quoted(report.formula) << '\n';
  for (const auto& rec : report.records) {
    const std::string where = " id=" + report.id + " point=" + quoted(rec.point.label());
    out << "point" << where;
    if (!rec.error.empty()) {
      out << " pass=false error=" << quoted(rec.error) << '\n';
      continue;
    }
    out << " lhs_re=" << format_double(rec.lhs.real()) << " lhs_im=" << format_double(rec.lhs.imag())
        << " rhs_re=" << format_double(rec.rhs.real()) << " rhs_im=" << format_double(rec.rhs.imag())
        << " abs_err=" << format_double(rec.abs_err) << " rel_err=" << format_double(rec.rel_err)
        << " pass=" << boolean(rec.pass)
        << " err_estimate=" << format_double(rec.diagnostics.err_estimate)
        << " n_used=" << rec.diagnostics.n_used
        << " converged=" << boolean(rec.diagnostics.converged) << '\n';
    for (const auto& route : rec.routes) {
      out << "route" << where << " label=" << route.label
          << " re=" << format_double(route.value.real())
          << " im=" << format_double(route.value.imag()) << '\n';
    }
  }
  for (const auto& note : report.notes) {
    out << "note id=" << report.id << " text=" << quoted(note) << '\n';
  }
  out << "summary id=" << report.id << " points=" << report.records.size()
      << " max_rel_err=" << format_double(report.max_rel_err) << " all_pass="
      << (report.all_pass ? boolean(*report.all_pass) : "none") << '\n';
}

void write_reports(std::ostream& out, const std::vector<IdentityReport>& reports) {
  for (const auto& r : reports) write_report(out, r);
}

std::string format_report(const IdentityReport& report) {
  std::ostringstream ss;
  write_report(ss, report);
  return ss.str();
}

}  // namespace fracsum
