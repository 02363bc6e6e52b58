#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "fracsum/identities.hpp"

namespace fracsum {

/// Line-oriented report format. Each line is a record type followed by
/// key=value fields; string values are double-quoted with \" and \\ escapes,
/// numbers use the shortest representation that round-trips.
///
///   identity id=GEO kind=theorem tol=1e-10 formula="..."
///   point id=GEO point="q=0.5,x=0.5" lhs_re=... lhs_im=... rhs_re=... rhs_im=...
///         abs_err=... rel_err=... pass=true err_estimate=... n_used=... converged=true
///   route id=BD point="x=1" label=product_n10 re=... im=...
///   note id=ZPP text="..."
///   summary id=GEO points=12 max_rel_err=... all_pass=true
///
/// `point` records carry error="..." instead of values when an evaluator threw;
/// experiments carry all_pass=none.
void write_report(std::ostream& out, const IdentityReport& report);
void write_reports(std::ostream& out, const std::vector<IdentityReport>& reports);
std::string format_report(const IdentityReport& report);

/// Shortest round-trip rendering used by the report.
std::string format_double(double v);

}  // namespace fracsum
