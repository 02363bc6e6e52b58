#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <vector>

namespace fracsum {

using Rational = boost::multiprecision::cpp_rational;

inline constexpr int kMaxBernoulliIndex = 64;

/// Exact Bernoulli numbers B_0..B_K with the B_1 = +1/2 convention, so that
/// sum_{j=0}^{m} C(m+1, j) B_j = m + 1 for every m.
class BernoulliTable {
 public:
  explicit BernoulliTable(std::vector<Rational> values);

  std::size_t size() const noexcept { return values_.size(); }
  int max_index() const noexcept { return static_cast<int>(values_.size()) - 1; }
  const Rational& operator[](std::size_t k) const { return values_.at(k); }
  double as_double(std::size_t k) const { return doubles_.at(k); }

 private:
  std::vector<Rational> values_;
  std::vector<double> doubles_;
};

/// Builds B_0..B_K in rational arithmetic. Throws ParameterError unless 0 <= K <= 64.
BernoulliTable bernoulli(int max_index);

/// Shared immutable table of B_0..B_64.
const BernoulliTable& bernoulli_table();

/// Binomial coefficient C(n, k) as an exact integer.
boost::multiprecision::cpp_int binomial_coefficient(int n, int k);

}  // namespace fracsum
