#include "doctest.h"
#include "properties.hpp"

using namespace fracsum::testing;

namespace {

void require_clean(const PropertyOutcome& o) {
  INFO(o.name, ": ", o.failures, " of ", o.cases, " failed; first: ", o.first_failure);
  CHECK(o.cases > 0);
  CHECK(o.ok());
}

}  // namespace

TEST_CASE("continued summation") { require_clean(axiom_s1(200, 0x51)); }
TEST_CASE("translation invariance") { require_clean(axiom_s2(200, 0x52)); }
TEST_CASE("linearity") { require_clean(axiom_s3(200, 0x53)); }
TEST_CASE("single classical term") { require_clean(axiom_s4()); }
TEST_CASE("integer bounds reproduce loop sums") { require_clean(classical_consistency()); }
TEST_CASE("polynomial summands agree with poly_sum") { require_clean(polynomial_agreement(200, 0x54)); }
