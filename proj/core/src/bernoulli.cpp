#include "fracsum/bernoulli.hpp"

#include <string>

#include "fracsum/errors.hpp"

namespace fracsum {

using boost::multiprecision::cpp_int;

BernoulliTable::BernoulliTable(std::vector<Rational> values) : values_(std::move(values)) {
  doubles_.reserve(values_.size());
  for (const auto& v : values_) doubles_.push_back(v.convert_to<double>());
}

cpp_int binomial_coefficient(int n, int k) {
  if (k < 0 || k > n) return 0;
  cpp_int c = 1;
  for (int i = 1; i <= k; ++i) {
    c *= n - k + i;
    c /= i;
  }
  return c;
}

BernoulliTable bernoulli(int max_index) {
  if (max_index < 0 || max_index > kMaxBernoulliIndex) {
    throw ParameterError("bernoulli: index " + std::to_string(max_index) + " outside [0, " +
                         std::to_string(kMaxBernoulliIndex) + "]");
  }
  std::vector<Rational> b;
  b.reserve(max_index + 1);
  // B_m = (m + 1 - sum_{j<m} C(m+1, j) B_j) / (m + 1)
  for (int m = 0; m <= max_index; ++m) {
    Rational acc = m + 1;
    for (int j = 0; j < m; ++j) acc -= Rational(binomial_coefficient(m + 1, j)) * b[j];
    b.push_back(acc / (m + 1));
  }
  return BernoulliTable(std::move(b));
}

const BernoulliTable& bernoulli_table() {
  static const BernoulliTable table = bernoulli(kMaxBernoulliIndex);
  return table;
}

}  // namespace fracsum
