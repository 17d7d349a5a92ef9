#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "lbi/matrix.hpp"
#include "lbi/primary_decomp.hpp"

namespace lbi {

/// One Andean component's contribution to the arrangement: the parameters
/// beta with h . beta in allowed.
struct Stratum {
  IndexPair sigma;            // 0-based, i < j
  std::vector<Rat> h;         // h . A = p e_i + q e_j
  std::int64_t p = 1, q = 1;  // lambda = -b_j1 / b_i1 = p / q
  std::int64_t d = 1;         // gcd of the positively oriented row
  /// Exact quasidegrees { p u_i + q u_j : x_i^u_i x_j^u_j outside the monomial part }.
  std::set<std::int64_t> allowed;
};

/// Solves h . A = p e_i + q e_j exactly. Throws NotAndean for a pair that is
/// not dependent in opposite open quadrants, NoSolution when A has the wrong
/// row space.
Stratum stratum_for_pair(const BMatrix& b, const AMatrix& a, std::size_t i, std::size_t j);

/// Same as stratum_for_pair; the name follows the quasidegree computation it
/// performs.
Stratum quasidegrees(const BMatrix& b, const AMatrix& a, std::size_t i, std::size_t j);

/// The closed-form value set {0, .., P - 1}, minus P - p' when d = q', with
/// P = p' (|b_1| + |b_2|) read off the positively oriented row and
/// lambda' = p'/q' its ratio to the other row. allowed is always a subset.
std::set<std::int64_t> closed_form_value_envelope(const BMatrix& b, std::size_t i, std::size_t j);

/// One stratum per pair of rows dependent in opposite open quadrants.
std::vector<Stratum> andean_arrangement(const BMatrix& b, const AMatrix& a);

struct HolonomicityVerdict {
  /// Whether the cone over the columns of A is pointed, the hypothesis under
  /// which the verdict below is meaningful.
  bool hypothesis_ok = false;
  /// Whether some nonzero nonnegative vector lies in the column span of B.
  bool nonneg_column_span = false;
  bool holonomic = false;
  std::optional<IndexPair> violated_stratum;
  std::optional<Rat> violating_value;
  /// h . (A kappa) for every stratum, in arrangement order.
  std::vector<Rat> stratum_values;
};

/// Decides holonomicity of Horn(B, kappa). Throws InvalidA when A is not a
/// valid grading for B and InvalidArgument when kappa has the wrong length.
HolonomicityVerdict is_holonomic(const BMatrix& b, const AMatrix& a, const std::vector<Rat>& kappa);

/// Parses "1,3,0" or "1/2,0,0"; throws MalformedInput.
std::vector<Rat> parse_rational_vector(const std::string& text);

}  // namespace lbi
