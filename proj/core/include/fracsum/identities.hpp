#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fracsum/engine.hpp"
#include "fracsum/types.hpp"

namespace fracsum {

enum class IdentityKind { kTheorem, kExperiment };

std::string_view to_string(IdentityKind kind);

/// One parameter point of an identity's grid. `tag` names a case when the
/// parameters alone do not (e.g. which summand a mirror check uses).
struct GridPoint {
  std::string tag;
  std::vector<std::pair<std::string, Complex>> params;

  /// Throws LookupError for an unknown parameter name.
  Complex get(std::string_view name) const;
  /// "tag;a=0.5,x=1.7" style label, stable across runs.
  std::string label() const;
};

/// A named value computed by an additional evaluation route at a grid point.
struct RouteValue {
  std::string label;
  Complex value;
};

struct PointRecord {
  GridPoint point;
  Complex lhs;
  Complex rhs;
  double abs_err = 0.0;
  double rel_err = 0.0;
  SumResult diagnostics;
  std::vector<RouteValue> routes;
  bool pass = false;
  std::string error;  ///< non-empty when an evaluator threw at this point
};

struct IdentityReport {
  std::string id;
  std::string formula;
  IdentityKind kind = IdentityKind::kTheorem;
  double tol = 0.0;
  std::vector<PointRecord> records;
  /// Largest relative error; points whose |rhs| is below tol contribute their
  /// absolute error instead.
  double max_rel_err = 0.0;
  /// Absent for experiments, which never fail.
  std::optional<bool> all_pass;
  std::vector<std::string> notes;
};

struct Identity {
  std::string id;
  std::string formula;
  IdentityKind kind = IdentityKind::kTheorem;
  double tol = 1e-8;
  std::vector<GridPoint> grid;
  std::function<SumResult(const GridPoint&, const EngineConfig&)> lhs;
  std::function<Complex(const GridPoint&)> rhs;
  /// Optional extra evaluations recorded next to lhs/rhs.
  std::function<std::vector<RouteValue>(const GridPoint&, const EngineConfig&)> routes;
  /// Fixed notes (readings, branch assumptions).
  std::vector<std::string> notes;
  /// Optional notes derived from the finished report.
  std::function<std::vector<std::string>(const IdentityReport&)> annotate;
};

/// The builtin catalog, in registration order.
std::vector<Identity> register_builtin();

/// Process-wide copy of register_builtin(), built once.
const std::vector<Identity>& builtin_catalog();

/// Throws LookupError for an unknown id.
const Identity& find_identity(std::string_view id);

/// Sweeps the grid. Evaluator errors are recorded per point.
IdentityReport run_identity(const Identity& identity, const EngineConfig& cfg = {});
IdentityReport run_identity(std::string_view id, const EngineConfig& cfg = {});

/// Runs the given identities (all builtins when empty), concurrently when
/// `parallel`; the result follows catalog order.
std::vector<IdentityReport> run_catalog(const EngineConfig& cfg = {},
                                        const std::vector<std::string>& ids = {},
                                        bool parallel = true);

/// true unless some theorem-kind report has all_pass == false.
bool suite_passed(const std::vector<IdentityReport>& reports);

}  // namespace fracsum
