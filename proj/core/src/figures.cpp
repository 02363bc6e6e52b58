#include "fracsum/figures.hpp"

#include <fstream>
#include <ostream>

#include "fracsum/errors.hpp"
#include "fracsum/products.hpp"
#include "fracsum/report.hpp"

namespace fracsum {

namespace {

constexpr int kPoints = 41;
constexpr double kFrom = 0.1;
constexpr double kTo = 2.0;

}  // namespace

Figure parse_figure(std::string_view name) {
  if (name == "bd") return Figure::kAltPower;
  if (name == "zeta2") return Figure::kLogSquare;
  throw ParameterError("unknown figure '" + std::string(name) + "' (expected bd or zeta2)");
}

std::string_view figure_name(Figure which) {
  return which == Figure::kAltPower ? "bd" : "zeta2";
}

FigureTable figure_table(Figure which) {
  FigureTable t;
  const bool bd = which == Figure::kAltPower;
  t.truncations = bd ? std::vector<long>{1, 10, 50} : std::vector<long>{10, 100, 1000};
  t.columns = {"x", "closed_form"};
  for (long n : t.truncations) t.columns.push_back("n=" + std::to_string(n));
  for (int i = 0; i < kPoints; ++i) {
    const double x = kFrom + (kTo - kFrom) * i / (kPoints - 1);
    std::vector<double> row{x};
    row.push_back(bd ? products::alt_power_closed_form(x).real()
                     : products::log_square_closed_form(x).real());
    for (long n : t.truncations) {
      row.push_back(bd ? products::alt_power_truncated(x, n).real()
                       : products::log_square_truncated(x, n).real());
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

void write_csv(std::ostream& out, const FigureTable& table) {
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    out << (i ? "," : "") << table.columns[i];
  }
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << format_double(row[i]);
    out << '\n';
  }
}

void emit_figure(Figure which, const std::string& path) {
  std::ofstream file(path);
  if (!file) throw IoError("cannot open '" + path + "' for writing");
  write_csv(file, figure_table(which));
  file.flush();
  if (!file) throw IoError("failed writing '" + path + "'");
}

}  // namespace fracsum
