#include <doctest.h>

#include "lbi/verify.hpp"

using namespace lbi;

namespace {

void check_suite(const SuiteResult& r) {
  INFO(r.name);
  for (const std::string& m : r.mismatches) INFO(m);
  CHECK(r.cases > 0);
  CHECK(r.failures == 0);
  CHECK(r.passed());
}

}  // namespace

TEST_CASE("small sweeps") {
  check_suite(verify_2x2(3));
  check_suite(verify_bands(4, 4));
  check_suite(verify_andean(4));
}

TEST_CASE("dilation boundary levels") { check_suite(verify_dilation_boundary(5)); }

TEST_CASE("left turns") { check_suite(verify_left_turns(9)); }

TEST_CASE("slice maps") { check_suite(verify_slices(6)); }

TEST_CASE("random gradings") {
  check_suite(verify_gradings(200, 20, 11));
  std::mt19937_64 rng(5);
  for (int k = 0; k < 20; ++k) {
    const BMatrix b = random_rank2(rng, 5, 9);
    const AMatrix a = random_grading(b, rng);
    CHECK(is_valid_grading(a.matrix(), b));
  }
  check_suite(verify_a_independence(50, 4));
}

TEST_CASE("empty case space") {
  CHECK_THROWS_AS(verify_2x2(0), Error);
  CHECK_THROWS_AS(verify_dilation_boundary(-1), Error);
}
