#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace fracsum {

enum class Figure {
  kAltPower,   ///< "bd": the (1 + 2x/k)^{-k(-1)^k} product
  kLogSquare,  ///< "zeta2": the ln^2 limit identity
};

/// Accepts "bd" and "zeta2"; throws ParameterError otherwise.
Figure parse_figure(std::string_view name);
std::string_view figure_name(Figure which);

struct FigureTable {
  std::vector<std::string> columns;  ///< x, closed_form, n=...
  std::vector<long> truncations;
  std::vector<std::vector<double>> rows;
};

/// x on 41 uniform points of [0.1, 2]; closed form and truncations at
/// n = 1, 10, 50 (bd) or n = 10, 100, 1000 (zeta2).
FigureTable figure_table(Figure which);

void write_csv(std::ostream& out, const FigureTable& table);

/// Writes the CSV to `path`; throws IoError when the file cannot be written.
void emit_figure(Figure which, const std::string& path);

}  // namespace fracsum
