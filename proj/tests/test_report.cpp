#include <doctest.h>

#include "lbi/report.hpp"
#include "lbi/svg.hpp"

using namespace lbi;

TEST_CASE("monomial strings") {
  CHECK(monomial_string({2, 0, 1}, false) == "x1^2*x3");
  CHECK(monomial_string({2, 0, 1}, true) == "x₁²x₃");
  CHECK(monomial_string({0, 0}, false) == "1");
  CHECK(monomial_string({0, 12}, true) == "x₂¹²");
}

TEST_CASE("decomposition text") {
  const BMatrix b = parse_matrix("2 4\n-2 -4\n1 1");
  const std::string text = decomposition_text(b, decomposition_report(b));
  CHECK(text.find("I(B) = ⟨x₁²x₃ − x₂², x₁⁴x₃ − x₂⁴⟩") == 0);
  CHECK(text.find("andean ⟨x₁, x₂⟩: (I(B) : (x₃)^∞) + ⟨x₂⁴, x₁²x₂², x₁⁴⟩") != std::string::npos);
}

TEST_CASE("verdict text") {
  HolonomicityVerdict v;
  CHECK(verdict_text(v) == "THEOREMS INAPPLICABLE");
  v.hypothesis_ok = true;
  v.holonomic = true;
  CHECK(verdict_text(v) == "HOLONOMIC");
  v.holonomic = false;
  v.violated_stratum = IndexPair{0, 1};
  v.violating_value = Rat(4);
  CHECK(verdict_text(v) == "NOT HOLONOMIC (stratum {1,2}, value 4)");
}

TEST_CASE("svg glyphs") {
  const std::string svg =
      render_svg({{{0, 0}, false}, {{1, 1}, true}}, {{{0, 0}, {1, 1}}}, "a < b & c");
  CHECK(svg.find("a &lt; b &amp; c") != std::string::npos);
  CHECK(svg.find("<polygon class=\"finite\"") != std::string::npos);
  CHECK(svg.find("<circle class=\"infinite\"") != std::string::npos);
  CHECK(svg.find("</svg>") != std::string::npos);
}
