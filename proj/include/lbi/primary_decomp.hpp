#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lbi/lattice_graphs.hpp"
#include "lbi/matrix.hpp"
#include "lbi/monomial_ideal.hpp"

namespace lbi {

using IndexPair = std::pair<std::size_t, std::size_t>;  // 0-based, first < second

struct AssociatedPrimes {
  /// Number of rescaling-isomorphic toric primes: the product of the
  /// elementary divisors of B.
  Int toric_multiplicity;
  /// Pairs {i, j} whose rows lie in opposite open quadrants, lexicographic.
  std::vector<IndexPair> monomial_primes;
};

AssociatedPrimes associated_primes(const BMatrix& b);

enum class ComponentKind { Toric, Toral, Andean };

std::string_view to_string(ComponentKind kind);

struct ComponentDescription {
  ComponentKind kind = ComponentKind::Toric;
  std::optional<IndexPair> sigma;     // monomial primes only
  std::optional<Int> multiplicity;    // toric family only
  std::string saturation;             // unevaluated "(I(B) : (x3 x4)^inf)" style token
  MonomialIdeal monomials;            // exponents of (x_i, x_j); empty for the toric family
};

/// "(I(B) : (x_k ...)^inf)" over the variables outside sigma (all variables
/// when sigma is empty). 1-based names.
std::string saturation_token(std::size_t n, const std::optional<IndexPair>& sigma);

/// The 2x2 submatrix of rows i, j, oriented so its first row lies in the
/// open positive quadrant. Sets swapped when row j had to come first.
/// Throws NotMonomialPrime when the rows are not in opposite open quadrants.
Mat2 oriented_pair_matrix(const BMatrix& b, std::size_t i, std::size_t j, bool& swapped);

/// Throws NotMonomialPrime when the rows are not in opposite open quadrants,
/// NotToral when they are dependent.
ComponentDescription toral_component(const BMatrix& b, std::size_t i, std::size_t j, std::int64_t cap = 0);

/// Closed-form monomial part of the Andean component <x_i, x_j>, exponents
/// in the order (x_i, x_j). Throws NotAndean unless the rows are dependent
/// and in opposite open quadrants.
MonomialIdeal andean_monomial_part(const BMatrix& b, std::size_t i, std::size_t j);

ComponentDescription andean_component(const BMatrix& b, std::size_t i, std::size_t j);

/// The <x, y> component for rows (r, s), (-lambda r, -lambda s), (a, b).
ComponentDescription three_variable_component(const SliceSpec& spec);

/// Rank 2 third row used to lift the pair {i, j} to a 3x2 matrix: (1, 1), or
/// (1, 2) when the positive row has equal entries.
IntMatrix andean_lift(const BMatrix& b, std::size_t i, std::size_t j);

/// The toric family followed by one component per monomial prime.
std::vector<ComponentDescription> decomposition_report(const BMatrix& b, std::int64_t cap = 0);

/// x^{B_k+} - x^{B_k-} for the two columns of B, as exponent vector pairs.
std::vector<std::pair<Exponent, Exponent>> binomial_generators(const BMatrix& b);

}  // namespace lbi
