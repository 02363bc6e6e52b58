#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "fracsum/summand.hpp"
#include "fracsum/types.hpp"

namespace fracsum::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitIdentityFailure = 2;

/// Parses "A", "Bi", "A+Bi" or "A-Bi" with decimal A and B. Throws ParameterError.
Complex parse_complex(std::string_view text);

enum class Direction { kRight, kLeft };

/// Builds a summand from "family[:params]": recip, pow:a=A, log, geom:q=Q,
/// binom:c=C,x=X, vlnv, lnfact, poly:c0,c1,... Throws ParameterError for unknown
/// families or for families without left-sum support when `dir` is kLeft.
Summand parse_summand(std::string_view spec, Direction dir = Direction::kRight);

/// Builds the log-summand of a product factor: id, recip, pow:a=A, geom:q=Q, poly:c0,c1,...
Summand parse_factor(std::string_view spec);

/// Entry point; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fracsum::cli
