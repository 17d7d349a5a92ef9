#include <doctest.h>

#include <algorithm>
#include <cstdlib>

#include "lbi/oracle.hpp"

using namespace lbi;

TEST_CASE("window components of a 2x2 graph") {
  const IntMatrix m = IntMatrix::from_rows({{1, 3}, {-2, -4}});
  const auto components = window_components(m, Window::natural_box({20, 20}));
  const auto closed = std::count_if(components.begin(), components.end(),
                                    [](const ComponentReport& c) { return c.certificate == Certificate::ClosedFinite; });
  CHECK(closed == 4);
}

TEST_CASE("band window below the threshold has no infinite certificate") {
  const IntMatrix m = IntMatrix::from_rows({{7, 4}, {1, 1}});
  for (std::int64_t level : {4, 7}) {
    Window w{{0, 0}, {level, 60}, {CoordKind::Capped, CoordKind::Natural}, std::nullopt};
    for (const ComponentReport& c : window_components(m, w))
      CHECK(c.certificate != Certificate::InfiniteByDifference);
  }
}

TEST_CASE("single column chains") {
  const IntMatrix m = IntMatrix::from_rows({{1}, {1}});
  const auto components = window_components(m, Window::natural_box({5, 5}));
  // One chain per diagonal u1 - u2 = c, c = -5..5; the two corner singletons
  // have an edge leaving the window and stay undetermined.
  CHECK(components.size() == 11);
  int infinite = 0;
  for (const ComponentReport& c : components) {
    if (c.certificate != Certificate::InfiniteByDifference) {
      CHECK(c.vertices.size() == 1);
      continue;
    }
    ++infinite;
    REQUIRE(c.witness);
    const auto& [u, v] = *c.witness;
    CHECK(u[0] - v[0] == u[1] - v[1]);
    CHECK(u[0] > v[0]);
  }
  CHECK(infinite == 9);
}

TEST_CASE("certified infinite vertices") {
  SUBCASE("even columns of the d = 2 band") {
    const IntMatrix m = IntMatrix::from_rows({{2, 6}, {1, 2}});
    Window w{{0, 0}, {6, 40}, {CoordKind::Capped, CoordKind::Natural}, std::nullopt};
    const auto infinite = certified_infinite_vertices(m, w, 5);
    CHECK_FALSE(infinite.empty());
    for (const Point& p : infinite) CHECK(p[0] % 2 == 0);
  }
  SUBCASE("toral complement") {
    const IntMatrix m = IntMatrix::from_rows({{2, 4}, {-4, -6}});
    const auto infinite = certified_infinite_vertices(m, Window::natural_box({30, 30}), 5);
    // The core agrees with the closed-form monomial ideal.
    const MonomialIdeal ideal = toral_infinite_generators({2, 4, -4, -6});
    for (std::int64_t x = 0; x <= 10; ++x)
      for (std::int64_t y = 0; y <= 10; ++y) {
        const bool finite = !ideal.contains({x, y});
        CHECK(std::binary_search(infinite.begin(), infinite.end(), Point{x, y}) == !finite);
      }
  }
  SUBCASE("empty window") {
    Window w{{3, 0}, {2, 5}, {CoordKind::Integer, CoordKind::Integer}, std::nullopt};
    CHECK(w.empty());
    CHECK(certified_infinite_vertices(IntMatrix::from_rows({{1}, {1}}), w, 0).empty());
  }
}

TEST_CASE("toral oracle") {
  const ToralOracleResult r = oracle_toral({2, 4, -4, -6});
  CHECK(r.finite_components == 12);
  CHECK(r.generators.generators() == std::vector<Exponent>{{0, 6}, {2, 2}, {4, 0}});
  CHECK(oracle_toral_generators({1, 1, -1, -2}).generators() == std::vector<Exponent>{{0, 1}, {1, 0}});
  const ToralOracleResult fig = oracle_toral({1, 3, -2, -4});
  CHECK(fig.finite_components == 4);
  const auto finite = finite_vertex_set_2x2({1, 3, -2, -4});
  CHECK(fig.finite_vertices == static_cast<std::int64_t>(finite.size()));
}

TEST_CASE("band oracle") {
  CHECK(oracle_band_columns({2, 6, 1, 2}, 6) == std::vector<std::int64_t>{0, 2, 4, 6});
  CHECK(oracle_band_columns({7, 4, 1, 1}, 9).empty());
  CHECK(oracle_band_min_level({7, 4, 1, 1}, 20) == 10);
  CHECK(oracle_band_min_level({7, 4, 1, 1}, 9) == std::nullopt);
  CHECK(oracle_band_vertex_infinite({2, 6, 1, 2}, 6, {4, 10}));
  CHECK_FALSE(oracle_band_vertex_infinite({2, 6, 1, 2}, 6, {3, 10}));
}

TEST_CASE("andean oracle") {
  CHECK(oracle_andean_monomials(IntMatrix::from_rows({{2, 4}, {-2, -4}, {1, 1}})).generators() ==
        std::vector<Exponent>{{0, 4}, {2, 2}, {4, 0}});
  std::vector<Exponent> degree10;
  for (std::int64_t k = 0; k <= 10; ++k) degree10.push_back({k, 10 - k});
  CHECK(oracle_andean_monomials(IntMatrix::from_rows({{7, 4}, {-7, -4}, {1, 1}})).generators() == degree10);
  const MonomialIdeal d2 = oracle_andean_monomials(IntMatrix::from_rows({{2, 6}, {-2, -6}, {1, 2}}));
  CHECK_FALSE(d2.empty());
  for (const Exponent& g : d2.generators()) CHECK(g[0] % 2 == 0);
}

TEST_CASE("budget exhaustion") {
  OracleConfig tiny;
  tiny.vertex_budget = 50;
  try {
    oracle_toral({7, 8, -5, -6}, tiny);
    FAIL("expected the budget to run out");
  } catch (const Error& e) {
    CHECK(e.is_budget_exhaustion());
  }
  CHECK_THROWS_AS(build_window_graph(IntMatrix::from_rows({{1}, {1}}), Window::natural_box({100, 100}), tiny), Error);
}

TEST_CASE("budget from the environment") {
  setenv("LATTICE_ANDEAN_BUDGET", "1234", 1);
  CHECK(OracleConfig::from_env().vertex_budget == 1234);
  unsetenv("LATTICE_ANDEAN_BUDGET");
  CHECK(OracleConfig::from_env().vertex_budget == OracleConfig{}.vertex_budget);
}
