#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "lbi/lattice_graphs.hpp"

using namespace lbi;

namespace {

std::vector<std::int64_t> iota_to(std::int64_t last) {
  std::vector<std::int64_t> out(last + 1);
  std::iota(out.begin(), out.end(), 0);
  return out;
}

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error");
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("finite census of 2x2 graphs") {
  CHECK(finite_census_2x2({1, 3, -2, -4}).count == 4);
  const Census2x2 c = finite_census_2x2({2, 4, -4, -6});
  CHECK(c.count == 12);
  CHECK(c.rectangle.size() == 12);
  for (const Vertex2& v : c.rectangle) {
    CHECK(v.w < 2);
    CHECK(v.z < 6);
  }
  // Some of these components reach outside the rectangle.
  CHECK(finite_vertex_set_2x2({2, 4, -4, -6}).size() == 16);
  const Census2x2 one = finite_census_2x2({1, 1, -1, -2});
  CHECK(one.count == 1);
  REQUIRE(one.rectangle.size() == 1);
  CHECK(one.rectangle[0] == Vertex2{0, 0});
  CHECK(code_of([] { finite_census_2x2({1, 3, 2, -4}); }) == ErrorCode::OrientationError);
  CHECK(code_of([] { finite_census_2x2({1, 2, -2, -4}); }) == ErrorCode::RankDeficient);
}

TEST_CASE("finite vertex sets and their complements") {
  const auto finite = finite_vertex_set_2x2({1, 3, -2, -4});
  CHECK(finite.size() == 6);  // two singletons and two edges
  CHECK(std::is_sorted(finite.begin(), finite.end(),
                       [](Vertex2 a, Vertex2 b) { return std::tie(a.w, a.z) < std::tie(b.w, b.z); }));
  CHECK(toral_infinite_generators({2, 4, -4, -6}).generators() == std::vector<Exponent>{{0, 6}, {2, 2}, {4, 0}});
  CHECK(toral_infinite_generators({1, 1, -1, -2}).generators() == std::vector<Exponent>{{0, 1}, {1, 0}});
  CHECK(complement_generators({}) == std::vector<Exponent>{{0, 0}});
  CHECK(code_of([] { finite_vertex_set_2x2({2, 4, -4, -6}, 1); }) == ErrorCode::CapExceeded);
}

TEST_CASE("band thresholds") {
  const BandSpec b74 = BandSpec::normalize({7, 4, 1, 1});
  CHECK(band_min_infinite_level(b74) == 10);
  CHECK(band_infinite_columns(b74, 4).empty());
  CHECK(band_infinite_columns(b74, 7).empty());
  CHECK(band_infinite_columns(b74, 9).empty());
  CHECK(band_infinite_columns(b74, 12) == iota_to(12));

  const BandSpec b62 = BandSpec::normalize({2, 6, 1, 2});
  CHECK(b62.r == 6);
  CHECK(b62.s == 2);
  CHECK(b62.a == 2);  // columns exchanged along with the top row
  CHECK(b62.b == 1);
  CHECK(b62.swapped);
  CHECK(band_min_infinite_level(b62) == 6);
  CHECK(band_infinite_columns(b62, 6) == std::vector<std::int64_t>{0, 2, 4, 6});
  CHECK(band_infinite_columns(b62, 7) == std::vector<std::int64_t>{0, 1, 2, 3, 4, 5, 6, 7});

  CHECK(band_min_infinite_level(BandSpec::normalize({4, 4, 1, 2})) == 4);
  CHECK(code_of([] { BandSpec::normalize({4, 4, 1, 1}); }) == ErrorCode::RankDeficient);
  CHECK(code_of([] { BandSpec::normalize({4, -4, 1, 1}); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("band columns for gcd > 1 below r + s - 1") {
  // e = r + s - d = 4; level 5 leaves residues 0 and 1 mod 4.
  const BandSpec spec = BandSpec::normalize({4, 4, 1, 2});
  CHECK(band_infinite_columns(spec, 5) == std::vector<std::int64_t>{0, 1, 4, 5});
  CHECK(band_infinite_columns(spec, 8) == iota_to(8));
}

TEST_CASE("left turn chase") {
  const BandSpec b74 = BandSpec::normalize({7, 4, 1, 1});
  auto first_left_turn = [](const BandSpec& spec, std::int64_t level) {
    for (std::int64_t z = 0; z < 40; ++z)
      for (std::int64_t w = 0; w <= level; ++w)
        if (classify_turn(spec, level, {w, z}) == TurnKind::Left) return Vertex2{w, z};
    FAIL("no left turn");
    return Vertex2{};
  };
  CHECK(left_turn_chase(b74, 10, first_left_turn(b74, 10)).infinite);
  CHECK_FALSE(left_turn_chase(b74, 7, first_left_turn(b74, 7)).infinite);

  const BandSpec b32 = BandSpec::normalize({3, 2, 1, 1});
  REQUIRE(classify_turn(b32, 4, {3, 20}) == TurnKind::Left);
  const ChaseResult chase = left_turn_chase(b32, 4, {3, 20});
  CHECK(chase.infinite);
  CHECK(chase.turns.front() == Vertex2{3, 20});

  CHECK(code_of([&] { left_turn_chase(b74, 11, {0, 5}); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([&] { left_turn_chase(BandSpec::normalize({6, 2, 1, 2}), 6, {6, 5}); }) ==
        ErrorCode::InvalidArgument);
}

TEST_CASE("dilation reduction") {
  const DilationReduction r = dilate_reduce(BandSpec::normalize({6, 2, 2, 1}), 6);
  CHECK(r.d == 2);
  CHECK(r.reduced.r == 3);
  CHECK(r.reduced.s == 1);
  REQUIRE(r.residues.size() == 2);
  CHECK(r.residues[0].level == 3);
  CHECK(r.residues[1].level == 2);

  const DilationReduction coprime = dilate_reduce(BandSpec::normalize({7, 4, 1, 1}), 9);
  CHECK(coprime.d == 1);
  CHECK(coprime.reduced.matrix() == Mat2{7, 4, 1, 1});
  CHECK(coprime.residues.size() == 1);

  // floor((7 - t0) / 4) is 1 for every residue t0 = 0..3.
  const DilationReduction square = dilate_reduce(BandSpec::normalize({4, 4, 1, 2}), 7);
  CHECK(square.reduced.r == 1);
  CHECK(square.reduced.s == 1);
  REQUIRE(square.residues.size() == 4);
  for (const ResidueLevel& piece : square.residues) CHECK(piece.level == 1);
}

TEST_CASE("slice straightening") {
  const SliceSpec s74 = SliceSpec::make(7, 4, 1, 1, 1);
  const Straightening st = slice_to_band(s74, 4);
  CHECK(st.band.matrix() == Mat2{7, 4, 1, 1});
  CHECK(st.level == 4);
  CHECK(slice_to_band(s74, 0).level == 0);

  const SliceSpec s22 = SliceSpec::make(2, 2, 1, 2, make_rat(3, 2));
  const Straightening half = slice_to_band(s22, 4);
  CHECK(half.band.r == 1);
  CHECK(half.band.s == 1);
  CHECK(half.level == 2);
  CHECK(half.map({1, 5}) == Vertex3{2, 3, 5});
  CHECK(half.map({0, 0}) == Vertex3{0, 6, 0});
  CHECK(code_of([&] { slice_to_band(s22, 3); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { SliceSpec::make(3, 3, 1, 2, make_rat(1, 2)); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("slice translation") {
  const SliceSpec unit = SliceSpec::make(7, 4, 1, 1, 1);
  for (int l = 0; l < 6; ++l) {
    const SliceTranslation t = slice_translation_reduce(unit, l);
    CHECK(t.i == 0);
    CHECK(t.j == 0);
    CHECK(t.level == l);
  }
  // Through (1, 0, 0) with lambda = 3/2: 3 x + 2 y = 3.
  const SliceTranslation t = slice_translation_reduce(SliceSpec::make(2, 2, 1, 2, make_rat(3, 2)), 1);
  CHECK(t.i == 1);
  CHECK(t.j == 0);
  CHECK(t.level == 0);
  // Through (0, 1, 0) with lambda = 2: 2 x + y = 1.
  const SliceTranslation u = slice_translation_reduce(SliceSpec::make(2, 2, 1, 2, 2), make_rat(1, 2));
  CHECK(u.i == 0);
  CHECK(u.j == 1);
  CHECK(u.level == 0);
  CHECK(code_of([] { slice_translation_reduce(SliceSpec::make(2, 2, 1, 2, 2), make_rat(1, 3)); }) ==
        ErrorCode::EmptySlice);
  // 3 x + 2 y = 1 has no natural solution.
  CHECK(code_of([] { slice_translation_reduce(SliceSpec::make(2, 2, 1, 2, make_rat(3, 2)), make_rat(1, 3)); }) ==
        ErrorCode::EmptySlice);
}
