#pragma once

#include <span>
#include <vector>

#include "fracsum/types.hpp"

namespace fracsum {

/// One partial value S(n) of a sequence whose limit n -> inf is wanted.
struct Level {
  long n;
  Complex value;
};

struct Extrapolation {
  Complex value;
  double error;
};

/// Richardson tableau over levels with n doubling. Column k removes the n^{-(p+k-1)}
/// error term, p being the base rate.
class RichardsonTable {
 public:
  /// Throws ParameterError when fewer than order + 1 levels are given or n does not double.
  RichardsonTable(std::span<const Level> levels, int order, double rate = 1.0);

  int rows() const noexcept { return static_cast<int>(table_.size()); }
  int order() const noexcept { return order_; }
  /// Entry T[row][col]; defined for col <= min(row, order).
  Complex at(int row, int col) const { return table_.at(row).at(col); }

  /// Last entry of the highest column, with |T[last][k] - T[last-1][k]| as error
  /// (or |T[last][k] - T[last][k-1]| when the column has a single entry).
  Extrapolation final_estimate() const;

  /// Entry minimising |T[j][k] - T[j-1][k]| over the whole tableau, picking the
  /// point where truncation and rounding error balance. When `noise` is given,
  /// noise[j] is a lower bound on the error of every entry in row j.
  struct Best {
    Complex value;
    double error;
    int row;
    int col;
  };
  Best best_estimate(std::span<const double> noise = {}) const;

 private:
  int order_;
  std::vector<std::vector<Complex>> table_;
};

/// Extrapolates to n -> inf and returns the final tableau entry plus error estimate.
Extrapolation richardson_extrapolate(std::span<const Level> levels, int order, double rate = 1.0);

}  // namespace fracsum
