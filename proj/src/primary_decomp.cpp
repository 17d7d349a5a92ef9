#include "lbi/primary_decomp.hpp"

#include <numeric>

namespace lbi {

std::string_view to_string(ComponentKind kind) {
  switch (kind) {
    case ComponentKind::Toric: return "toric";
    case ComponentKind::Toral: return "toral";
    case ComponentKind::Andean: return "andean";
  }
  return "unknown";
}

AssociatedPrimes associated_primes(const BMatrix& b) {
  AssociatedPrimes out;
  out.toric_multiplicity = 1;
  for (const Int& divisor : smith_normal_form(b.matrix()).elementary_divisors()) out.toric_multiplicity *= divisor;
  for (const PairAnalysis& pair : analyze_pairs(b))
    if (pair.opposite_open_quadrants) out.monomial_primes.emplace_back(pair.i, pair.j);
  return out;
}

std::string saturation_token(std::size_t n, const std::optional<IndexPair>& sigma) {
  std::string vars;
  for (std::size_t k = 0; k < n; ++k) {
    if (sigma && (k == sigma->first || k == sigma->second)) continue;
    if (!vars.empty()) vars += ' ';
    vars += "x" + std::to_string(k + 1);
  }
  if (vars.empty()) return "I(B)";
  return "(I(B) : (" + vars + ")^inf)";
}

namespace {

PairAnalysis pair_of(const BMatrix& b, std::size_t i, std::size_t j) {
  if (i >= b.n() || j >= b.n() || i == j) {
    throw Error(ErrorCode::InvalidArgument, "row indices out of range");
  }
  if (i > j) std::swap(i, j);
  for (const PairAnalysis& pair : analyze_pairs(b))
    if (pair.i == i && pair.j == j) return pair;
  throw Error(ErrorCode::InvalidArgument, "pair not found");
}

std::string pair_name(std::size_t i, std::size_t j) {
  return "{" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "}";
}

}  // namespace

Mat2 oriented_pair_matrix(const BMatrix& b, std::size_t i, std::size_t j, bool& swapped) {
  if (!pair_of(b, i, j).opposite_open_quadrants) {
    throw Error(ErrorCode::NotMonomialPrime, "rows " + pair_name(i, j) + " are not in opposite open quadrants");
  }
  // Negating a column of B changes neither I(B) nor its graphs, so rows in
  // quadrants II and IV become rows in quadrants I and III.
  const bool flip = b(i, 0) * b(i, 1) < 0;
  auto entry = [&](std::size_t row, std::size_t col) {
    const std::int64_t v = to_i64(b(row, col));
    return flip && col == 1 ? -v : v;
  };
  swapped = entry(i, 0) < 0;
  const std::size_t top = swapped ? j : i, bottom = swapped ? i : j;
  return {entry(top, 0), entry(top, 1), entry(bottom, 0), entry(bottom, 1)};
}

ComponentDescription toral_component(const BMatrix& b, std::size_t i, std::size_t j, std::int64_t cap) {
  if (i > j) std::swap(i, j);
  bool swapped = false;
  const Mat2 m = oriented_pair_matrix(b, i, j, swapped);
  if (pair_of(b, i, j).dependent) throw Error(ErrorCode::NotToral, "rows " + pair_name(i, j) + " are dependent");
  std::vector<Exponent> generators = toral_infinite_generators(m, cap).generators();
  if (swapped)
    for (auto& g : generators) std::swap(g[0], g[1]);
  ComponentDescription out;
  out.kind = ComponentKind::Toral;
  out.sigma = IndexPair{i, j};
  out.saturation = saturation_token(b.n(), out.sigma);
  out.monomials = MonomialIdeal({i, j}, std::move(generators));
  return out;
}

MonomialIdeal andean_monomial_part(const BMatrix& b, std::size_t i, std::size_t j) {
  if (i > j) std::swap(i, j);
  const PairAnalysis pair = pair_of(b, i, j);
  if (!pair.opposite_open_quadrants || !pair.dependent) {
    throw Error(ErrorCode::NotAndean, "rows " + pair_name(i, j) + " are not dependent in opposite open quadrants");
  }
  bool swapped = false;
  const Mat2 m = oriented_pair_matrix(b, i, j, swapped);
  // m = [[b1, b2], [-lambda b1, -lambda b2]] with b1, b2 > 0.
  const Int d = gcd_int(m.m11, m.m12);
  const Rat lambda = make_rat(-m.m21, m.m11);
  const Int total = Int(m.m11) + m.m12;
  std::vector<Exponent> generators;
  for (Int k = 0; k < total / d; ++k) {
    const Rat second = lambda * Rat(total - (k + 1) * d);
    if (!is_integer(second)) {
      throw Error(ErrorCode::NotAndean, "non-integral exponent; q does not divide d");
    }
    Exponent g{to_i64(k * d), to_i64(second.get_num())};
    if (swapped) std::swap(g[0], g[1]);
    generators.push_back(std::move(g));
  }
  return MonomialIdeal({i, j}, std::move(generators));
}

ComponentDescription andean_component(const BMatrix& b, std::size_t i, std::size_t j) {
  if (i > j) std::swap(i, j);
  ComponentDescription out;
  out.kind = ComponentKind::Andean;
  out.sigma = IndexPair{i, j};
  out.saturation = saturation_token(b.n(), out.sigma);
  out.monomials = andean_monomial_part(b, i, j);
  return out;
}

ComponentDescription three_variable_component(const SliceSpec& spec) {
  const std::int64_t d = std::gcd(spec.r, spec.s);
  const std::int64_t top = spec.r + spec.s;
  std::vector<Exponent> generators;
  for (std::int64_t k = 0; k < top / d; ++k) generators.push_back({k * d, spec.p * (top - (k + 1) * d) / spec.q});
  ComponentDescription out;
  out.kind = ComponentKind::Andean;
  out.sigma = IndexPair{0, 1};
  out.saturation = saturation_token(3, out.sigma);
  out.monomials = MonomialIdeal({0, 1}, std::move(generators));
  return out;
}

IntMatrix andean_lift(const BMatrix& b, std::size_t i, std::size_t j) {
  if (i > j) std::swap(i, j);
  bool swapped = false;
  const Mat2 m = oriented_pair_matrix(b, i, j, swapped);
  IntMatrix lift(3, 2);
  lift(0, 0) = m.m11;
  lift(0, 1) = m.m12;
  lift(1, 0) = m.m21;
  lift(1, 1) = m.m22;
  lift(2, 0) = 1;
  lift(2, 1) = m.m11 == m.m12 ? 2 : 1;
  return lift;
}

std::vector<ComponentDescription> decomposition_report(const BMatrix& b, std::int64_t cap) {
  const AssociatedPrimes primes = associated_primes(b);
  std::vector<ComponentDescription> out;
  ComponentDescription toric;
  toric.kind = ComponentKind::Toric;
  toric.multiplicity = primes.toric_multiplicity;
  toric.saturation = saturation_token(b.n(), std::nullopt);
  out.push_back(std::move(toric));
  for (const auto& [i, j] : primes.monomial_primes) {
    if (pair_of(b, i, j).dependent) out.push_back(andean_component(b, i, j));
    else out.push_back(toral_component(b, i, j, cap));
  }
  return out;
}

std::vector<std::pair<Exponent, Exponent>> binomial_generators(const BMatrix& b) {
  std::vector<std::pair<Exponent, Exponent>> out;
  for (std::size_t col = 0; col < 2; ++col) {
    Exponent plus(b.n(), 0), minus(b.n(), 0);
    for (std::size_t k = 0; k < b.n(); ++k) {
      const std::int64_t v = to_i64(b(k, col));
      (v >= 0 ? plus[k] : minus[k]) = v >= 0 ? v : -v;
    }
    out.emplace_back(std::move(plus), std::move(minus));
  }
  return out;
}

}  // namespace lbi
