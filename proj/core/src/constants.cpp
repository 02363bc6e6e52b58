#include "fracsum/constants.hpp"

#include <cstdlib>

namespace fracsum {

namespace {

constexpr const char* kEulerGamma = "0.57721566490153286060651209008240243104215933593992";
constexpr const char* kStieltjes1 = "-0.07281584548367672486058637587490131913773633833434";
constexpr const char* kCatalan = "0.91596559417721901505460351493238411077414937428167";
constexpr const char* kZetaPrimeMinus1 = "-0.16542114370045092921391966024278064276403638033520";

double parse(const char* s) { return std::strtod(s, nullptr); }

}  // namespace

const Constants& constants() {
  static const Constants c{parse(kEulerGamma), parse(kStieltjes1), parse(kCatalan),
                           parse(kZetaPrimeMinus1)};
  return c;
}

}  // namespace fracsum
