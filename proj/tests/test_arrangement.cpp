#include <doctest.h>

#include "lbi/arrangement.hpp"

using namespace lbi;

namespace {

const BMatrix kFinal(IntMatrix::from_rows({{2, 4}, {-2, -4}, {1, 1}}));
const BMatrix kAppell(IntMatrix::from_rows({{1, 1}, {-1, -1}, {1, 0}, {0, 1}, {-1, 0}, {0, -1}}));
const IntMatrix kAppellA =
    IntMatrix::from_rows({{1, 1, 0, 0, 0, 0}, {0, 0, 1, 0, 1, 0}, {0, 0, 0, 1, 0, 1}, {1, 0, 0, 0, 1, 1}});

std::set<std::int64_t> range(std::int64_t first, std::int64_t last) {
  std::set<std::int64_t> out;
  for (std::int64_t k = first; k <= last; ++k) out.insert(k);
  return out;
}

// kappa = (gamma - 1, -alpha, 0, 0, -beta, -beta')
std::vector<Rat> appell_kappa(const Rat& gamma, const Rat& alpha) {
  return {gamma - 1, -alpha, 0, 0, make_rat(-1, 3), make_rat(2, 7)};
}

}  // namespace

TEST_CASE("appell stratum") {
  const AMatrix a(kAppellA, kAppell);
  const Stratum s = stratum_for_pair(kAppell, a, 0, 1);
  CHECK(s.h == std::vector<Rat>{1, 0, 0, 0});
  CHECK(s.p == 1);
  CHECK(s.q == 1);
  CHECK(s.allowed == std::set<std::int64_t>{0});
  CHECK(quasidegrees(kAppell, a, 0, 1).allowed == s.allowed);
  const auto strata = andean_arrangement(kAppell, cokernel(kAppell));
  REQUIRE(strata.size() == 1);
  CHECK(strata[0].allowed == std::set<std::int64_t>{0});
}

TEST_CASE("quasidegrees are exact") {
  const AMatrix a(IntMatrix::from_rows({{1, 1, 0}}), kFinal);
  const Stratum s = stratum_for_pair(kFinal, a, 0, 1);
  CHECK(s.h == std::vector<Rat>{1});
  CHECK(s.d == 2);
  // Outside <x2^4, x1^2 x2^2, x1^4>: u1 + u2 ranges over 0..4.
  CHECK(s.allowed == range(0, 4));
  CHECK(closed_form_value_envelope(kFinal, 0, 1) == range(0, 5));

  const BMatrix third = parse_matrix("3 3\n-1 -1\n1 0");
  const Stratum t = stratum_for_pair(third, cokernel(third), 0, 1);
  CHECK(t.p == 1);
  CHECK(t.q == 3);
  CHECK(t.d == 3);
  CHECK(t.allowed == range(0, 2));
  CHECK(closed_form_value_envelope(third, 0, 1) == range(0, 4));
}

TEST_CASE("exact h against the grading") {
  const BMatrix b = parse_matrix("2 -1\n-6 3\n1 1\n0 2");
  const AMatrix a = cokernel(b);
  const Stratum s = stratum_for_pair(b, a, 0, 1);
  for (std::size_t col = 0; col < b.n(); ++col) {
    Rat v = 0;
    for (std::size_t r = 0; r < a.rows(); ++r) v += s.h[r] * Rat(a.matrix()(r, col));
    CHECK(v == (col == 0 ? Rat(s.p) : col == 1 ? Rat(s.q) : Rat(0)));
  }
  CHECK_THROWS_AS(stratum_for_pair(b, a, 0, 2), Error);
}

TEST_CASE("no andean pairs") {
  const BMatrix b = parse_matrix("1 3\n-2 -4\n1 1");
  CHECK(andean_arrangement(b, cokernel(b)).empty());
  const HolonomicityVerdict v = is_holonomic(b, cokernel(b), {0, 0, 0});
  CHECK(v.hypothesis_ok);
  CHECK(v.holonomic);
}

TEST_CASE("holonomicity") {
  const AMatrix a(IntMatrix::from_rows({{1, 1, 0}}), kFinal);
  const HolonomicityVerdict v = is_holonomic(kFinal, a, {1, 3, 0});
  CHECK(v.hypothesis_ok);
  CHECK_FALSE(v.holonomic);
  CHECK(*v.violated_stratum == IndexPair{0, 1});
  CHECK(*v.violating_value == 4);
  CHECK(is_holonomic(kFinal, a, {make_rat(1, 2), 0, 0}).holonomic);
  CHECK(is_holonomic(kFinal, a, {3, 3, 0}).holonomic);
  CHECK_THROWS_AS(is_holonomic(kFinal, a, {1, 3}), Error);
}

TEST_CASE("appell verdict flips at gamma - 1 - alpha = 0") {
  const AMatrix given(kAppellA, kAppell);
  const AMatrix other = cokernel(kAppell);
  for (const AMatrix* a : {&given, &other}) {
    CHECK_FALSE(is_holonomic(kAppell, *a, appell_kappa(make_rat(5, 2), make_rat(3, 2))).holonomic);
    CHECK(is_holonomic(kAppell, *a, appell_kappa(make_rat(3, 1), make_rat(3, 2))).holonomic);
    CHECK(is_holonomic(kAppell, *a, appell_kappa(2, 0)).holonomic);
    CHECK_FALSE(is_holonomic(kAppell, *a, appell_kappa(1, 0)).holonomic);
  }
}

TEST_CASE("theorems inapplicable") {
  const BMatrix b = parse_matrix("1 0\n1 0\n0 1");
  const HolonomicityVerdict v = is_holonomic(b, cokernel(b), {0, 0, 0});
  CHECK_FALSE(v.hypothesis_ok);
  CHECK_FALSE(v.holonomic);
}

TEST_CASE("rational vectors") {
  CHECK(parse_rational_vector("1,3,0") == std::vector<Rat>{1, 3, 0});
  CHECK(parse_rational_vector(" 1/2, -2/4 ") == std::vector<Rat>{make_rat(1, 2), make_rat(-1, 2)});
  CHECK_THROWS_AS(parse_rational_vector("1,,2"), Error);
}
