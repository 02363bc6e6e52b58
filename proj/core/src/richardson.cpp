#include "fracsum/richardson.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "fracsum/errors.hpp"

namespace fracsum {

RichardsonTable::RichardsonTable(std::span<const Level> levels, int order, double rate)
    : order_(order) {
  if (order < 0) throw ParameterError("richardson: negative order");
  if (static_cast<int>(levels.size()) < order + 1) {
    throw ParameterError("richardson: need at least " + std::to_string(order + 1) +
                         " levels, got " + std::to_string(levels.size()));
  }
  if (!(rate > 0.0)) throw ParameterError("richardson: rate must be positive");
  for (std::size_t j = 1; j < levels.size(); ++j) {
    if (levels[j].n != 2 * levels[j - 1].n) {
      throw ParameterError("richardson: levels must double in n");
    }
  }

  table_.resize(levels.size());
  for (std::size_t j = 0; j < levels.size(); ++j) {
    const int cols = std::min<int>(static_cast<int>(j), order);
    auto& row = table_[j];
    row.resize(cols + 1);
    row[0] = levels[j].value;
    for (int k = 1; k <= cols; ++k) {
      const double factor = std::pow(2.0, rate + k - 1) - 1.0;
      row[k] = row[k - 1] + (row[k - 1] - table_[j - 1][k - 1]) / factor;
    }
  }
}

Extrapolation RichardsonTable::final_estimate() const {
  const int last = rows() - 1;
  const int k = std::min(last, order_);
  const Complex value = table_[last][k];
  double error;
  if (last - 1 >= k) {
    error = std::abs(value - table_[last - 1][k]);
  } else if (k > 0) {
    error = std::abs(value - table_[last][k - 1]);
  } else {
    error = 0.0;
  }
  return {value, error};
}

RichardsonTable::Best RichardsonTable::best_estimate(std::span<const double> noise) const {
  Best best{table_.back()[0], std::numeric_limits<double>::infinity(), rows() - 1, 0};
  for (int k = 0; k <= order_; ++k) {
    for (int j = k + 1; j < rows(); ++j) {
      double e = std::abs(table_[j][k] - table_[j - 1][k]);
      if (static_cast<std::size_t>(j) < noise.size()) e = std::max(e, noise[j]);
      // Ties go to the deeper, later entry.
      if (e <= best.error) best = {table_[j][k], e, j, k};
    }
  }
  if (!std::isfinite(best.error)) {
    const auto f = final_estimate();
    best = {f.value, f.error, rows() - 1, std::min(rows() - 1, order_)};
  }
  return best;
}

Extrapolation richardson_extrapolate(std::span<const Level> levels, int order, double rate) {
  return RichardsonTable(levels, order, rate).final_estimate();
}

}  // namespace fracsum
