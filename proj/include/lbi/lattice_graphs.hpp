#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "lbi/integer.hpp"
#include "lbi/matrix.hpp"
#include "lbi/monomial_ideal.hpp"

namespace lbi {

struct Vertex2 {
  std::int64_t w = 0;
  std::int64_t z = 0;
  friend auto operator<=>(const Vertex2&, const Vertex2&) = default;
};

/// A 2x2 integer matrix [[m11, m12], [m21, m22]]. Its columns (m11, m21) and
/// (m12, m22) are the edge directions of G(M).
struct Mat2 {
  std::int64_t m11 = 0, m12 = 0, m21 = 0, m22 = 0;

  /// Narrows a 2x2 IntMatrix; throws Overflow or InvalidArgument.
  static Mat2 from(const IntMatrix& m);
  std::int64_t det() const { return m11 * m22 - m12 * m21; }
  Vertex2 column(int k) const { return k == 0 ? Vertex2{m11, m21} : Vertex2{m12, m22}; }
  friend bool operator==(const Mat2&, const Mat2&) = default;
};

// ---- 2x2 graphs with one row in each of the open quadrants -------------

struct Census2x2 {
  std::int64_t count = 0;
  /// One representative per finite component, lexicographically sorted.
  std::vector<Vertex2> rectangle;
};

/// Finite components of G(M) on N^2 for m11, m12 > 0 > m21, m22.
/// Throws OrientationError on any other sign pattern, RankDeficient on a
/// singular M.
Census2x2 finite_census_2x2(const Mat2& m);

/// Default exploration cap for one finite component: 16 (|m11|+|m12|)(|m21|+|m22|).
std::int64_t default_component_cap(const Mat2& m);

/// Union of the finite components of G(M), sorted. Throws CapExceeded when a
/// component grows past the cap (0 selects the default).
std::vector<Vertex2> finite_vertex_set_2x2(const Mat2& m, std::int64_t cap = 0);

/// Minimal generators (exponents of x_1, x_2) of the monomial ideal spanned by
/// the infinite vertices of G(M).
MonomialIdeal toral_infinite_generators(const Mat2& m, std::int64_t cap = 0);

/// Minimal elements of N^2 minus a finite set.
std::vector<Exponent> complement_generators(const std::vector<Vertex2>& finite);

// ---- band graphs G_l(M), M = [[r, s], [a, b]] on {(w, z) : w <= l} -------

struct BandSpec {
  std::int64_t r = 0, s = 0, a = 0, b = 0;
  /// True when the columns of the input matrix were exchanged to reach r >= s.
  bool swapped = false;

  /// Accepts any rank 2 matrix with positive entries and swaps the columns
  /// when r < s (or r = s and a > b). Throws InvalidArgument otherwise.
  static BandSpec normalize(const Mat2& m);
  std::int64_t d() const;
  Mat2 matrix() const { return {r, s, a, b}; }
};

/// Smallest level with an infinite component: r + s - gcd(r, s).
std::int64_t band_min_infinite_level(const BandSpec& spec);

/// Columns w0 in {0..level} holding an infinite vertex of G_level(M). With
/// e = r + s - d this is empty below e, and for level >= e it consists of the
/// w0 with (w0 mod d) <= level - e; in particular every column from level
/// r + s - 1 on.
std::vector<std::int64_t> band_infinite_columns(const BandSpec& spec, std::int64_t level);

enum class TurnKind { Left, Right };

/// Left or Right for a turn of G_level(M), nullopt for other vertices.
std::optional<TurnKind> classify_turn(const BandSpec& spec, std::int64_t level, Vertex2 v);

struct ChaseResult {
  bool infinite = false;
  /// Successive left turns visited, starting with the input vertex.
  std::vector<Vertex2> turns;
};

/// Follows the successive left turns of the component of start in
/// G_level(M) for gcd(r, s) = 1, a <= b and level = r + t with 0 <= t < s.
/// Throws InvalidArgument when the spec is outside that range and
/// NotALeftTurn when start is not a left turn.
ChaseResult left_turn_chase(const BandSpec& spec, std::int64_t level, Vertex2 start);

struct ResidueLevel {
  std::int64_t residue = 0;  // t0: the vertices with w = d*w' + t0
  std::int64_t level = 0;    // level of the isomorphic band graph of M-hat
};

struct DilationReduction {
  BandSpec reduced;  // top row divided by d
  std::int64_t d = 1;
  /// Residues t0 <= level; (w, z) -> (d*w + t0, z) maps G_{level}(M-hat)
  /// onto the residue-t0 part, level = floor((l - t0) / d).
  std::vector<ResidueLevel> residues;
};

DilationReduction dilate_reduce(const BandSpec& spec, std::int64_t level);

// ---- slice graphs ---------------------------------------------------------

/// The 3x2 matrix with rows (r, s), (-lambda r, -lambda s), (a, b) in the
/// variables x, y, z, with lambda = p/q in lowest terms. Slice S(l) is the set
/// of u in N^3 with p u_x + q u_y = p l; key() refers to p l.
struct SliceSpec {
  std::int64_t r = 0, s = 0, a = 0, b = 0;
  std::int64_t p = 1, q = 1;

  /// Throws InvalidArgument unless r >= s > 0, a, b > 0, the matrix has
  /// rank 2, and q divides r and s.
  static SliceSpec make(std::int64_t r, std::int64_t s, std::int64_t a, std::int64_t b, const Rat& lambda);
  Rat lambda() const { return make_rat(p, q); }
  /// Rows of the 3x2 matrix.
  IntMatrix matrix() const;
};

struct Vertex3 {
  std::int64_t x = 0, y = 0, z = 0;
  friend auto operator<=>(const Vertex3&, const Vertex3&) = default;
};

struct Straightening {
  BandSpec band;       // [[r/q, s/q], [a, b]], normalized
  std::int64_t level;  // l / q
  std::int64_t p, q;

  /// phi(w, k) = (q w, p (level - w), k).
  Vertex3 map(Vertex2 v) const { return {q * v.w, p * (level - v.w), v.z}; }
};

/// Requires l to be a natural multiple of q; throws InvalidArgument otherwise.
Straightening slice_to_band(const SliceSpec& spec, const Rat& level);

struct SliceTranslation {
  std::int64_t i = 0;  // 0 <= i < q
  std::int64_t j = 0;  // 0 <= j < p
  Rat level;           // l' = l - i - j q / p, a natural multiple of q
};

/// Translation (u_x, u_y, u_z) -> (u_x - i, u_y - j, u_z) taking S(l) onto
/// S(l'). Throws EmptySlice when S(l) has no lattice points.
SliceTranslation slice_translation_reduce(const SliceSpec& spec, const Rat& level);

}  // namespace lbi
