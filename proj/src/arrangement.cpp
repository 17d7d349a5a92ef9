#include "lbi/arrangement.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace lbi {

namespace {

// Solves M^T h = target for the (rows x cols) matrix M by exact elimination;
// nullopt when inconsistent.
std::optional<std::vector<Rat>> solve_left(const IntMatrix& m, const std::vector<Rat>& target) {
  const std::size_t unknowns = m.rows(), equations = m.cols();
  std::vector<std::vector<Rat>> aug(equations, std::vector<Rat>(unknowns + 1));
  for (std::size_t e = 0; e < equations; ++e) {
    for (std::size_t u = 0; u < unknowns; ++u) aug[e][u] = Rat(m(u, e));
    aug[e][unknowns] = target[e];
  }
  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t col = 0; col < unknowns && row < equations; ++col) {
    std::size_t pivot = row;
    while (pivot < equations && aug[pivot][col] == 0) ++pivot;
    if (pivot == equations) continue;
    std::swap(aug[pivot], aug[row]);
    const Rat inv = 1 / aug[row][col];
    for (auto& x : aug[row]) x *= inv;
    for (std::size_t e = 0; e < equations; ++e) {
      if (e == row || aug[e][col] == 0) continue;
      const Rat factor = aug[e][col];
      for (std::size_t k = col; k <= unknowns; ++k) aug[e][k] -= factor * aug[row][k];
    }
    pivot_col.push_back(col);
    ++row;
  }
  for (std::size_t e = row; e < equations; ++e)
    if (aug[e][unknowns] != 0) return std::nullopt;
  std::vector<Rat> h(unknowns, Rat(0));
  for (std::size_t r = 0; r < pivot_col.size(); ++r) h[pivot_col[r]] = aug[r][unknowns];
  return h;
}

PairAnalysis andean_pair(const BMatrix& b, std::size_t i, std::size_t j) {
  if (i > j) std::swap(i, j);
  for (const PairAnalysis& pair : analyze_pairs(b)) {
    if (pair.i != i || pair.j != j) continue;
    if (!pair.opposite_open_quadrants || !pair.dependent) {
      throw Error(ErrorCode::NotAndean, "rows {" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                            "} are not dependent in opposite open quadrants");
    }
    return pair;
  }
  throw Error(ErrorCode::InvalidArgument, "row indices out of range");
}

}  // namespace

Stratum stratum_for_pair(const BMatrix& b, const AMatrix& a, std::size_t i, std::size_t j) {
  if (i > j) std::swap(i, j);
  const PairAnalysis pair = andean_pair(b, i, j);
  if (a.cols() != b.n()) throw Error(ErrorCode::InvalidA, "A has the wrong number of columns");
  Stratum out;
  out.sigma = {i, j};
  out.p = to_i64(pair.lambda->get_num());
  out.q = to_i64(pair.lambda->get_den());

  std::vector<Rat> target(b.n(), Rat(0));
  target[i] = out.p;
  target[j] = out.q;
  const auto h = solve_left(a.matrix(), target);
  if (!h) throw Error(ErrorCode::NoSolution, "p e_i + q e_j is not in the row space of A");
  out.h = *h;
  for (std::size_t k = 0; k < b.n(); ++k) {
    Rat value = 0;
    for (std::size_t r = 0; r < a.rows(); ++r) value += out.h[r] * Rat(a.matrix()(r, k));
    if (value != target[k]) throw Error(ErrorCode::NoSolution, "h . A check failed");
  }

  bool swapped = false;
  const Mat2 oriented = oriented_pair_matrix(b, i, j, swapped);
  out.d = std::gcd(oriented.m11, oriented.m12);

  // Degrees p u_i + q u_j of the standard monomials of the monomial part.
  const MonomialIdeal monomials = andean_monomial_part(b, i, j);
  std::int64_t max_u = 0, max_v = 0;
  for (const Exponent& g : monomials.generators()) {
    max_u = std::max(max_u, g[0]);
    max_v = std::max(max_v, g[1]);
  }
  for (std::int64_t u = 0; u <= max_u; ++u)
    for (std::int64_t v = 0; v <= max_v; ++v)
      if (!monomials.contains({u, v})) out.allowed.insert(out.p * u + out.q * v);
  return out;
}

Stratum quasidegrees(const BMatrix& b, const AMatrix& a, std::size_t i, std::size_t j) {
  return stratum_for_pair(b, a, i, j);
}

std::set<std::int64_t> closed_form_value_envelope(const BMatrix& b, std::size_t i, std::size_t j) {
  andean_pair(b, i, j);
  bool swapped = false;
  const Mat2 m = oriented_pair_matrix(b, std::min(i, j), std::max(i, j), swapped);
  const Rat lambda = make_rat(-m.m21, m.m11);
  const std::int64_t p = to_i64(lambda.get_num()), q = to_i64(lambda.get_den());
  const std::int64_t d = std::gcd(m.m11, m.m12);
  const std::int64_t top = p * (m.m11 + m.m12);
  std::set<std::int64_t> out;
  for (std::int64_t v = 0; v < top; ++v) out.insert(v);
  if (d == q) out.erase(top - p);
  return out;
}

std::vector<Stratum> andean_arrangement(const BMatrix& b, const AMatrix& a) {
  std::vector<Stratum> out;
  for (const PairAnalysis& pair : analyze_pairs(b))
    if (pair.opposite_open_quadrants && pair.dependent) out.push_back(stratum_for_pair(b, a, pair.i, pair.j));
  return out;
}

HolonomicityVerdict is_holonomic(const BMatrix& b, const AMatrix& a, const std::vector<Rat>& kappa) {
  if (!is_valid_grading(a.matrix(), b)) throw Error(ErrorCode::InvalidA, "A is not a valid grading for B");
  if (kappa.size() != b.n()) {
    throw Error(ErrorCode::InvalidArgument,
                "kappa has " + std::to_string(kappa.size()) + " entries, expected " + std::to_string(b.n()));
  }
  HolonomicityVerdict verdict;
  verdict.nonneg_column_span = has_nonneg_column_span_direction(b);
  verdict.hypothesis_ok = grading_cone_is_pointed(b);
  if (!verdict.hypothesis_ok) return verdict;

  std::vector<Rat> beta(a.rows(), Rat(0));
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t k = 0; k < b.n(); ++k) beta[r] += Rat(a.matrix()(r, k)) * kappa[k];

  verdict.holonomic = true;
  for (const Stratum& stratum : andean_arrangement(b, a)) {
    Rat value = 0;
    for (std::size_t r = 0; r < beta.size(); ++r) value += stratum.h[r] * beta[r];
    // h . (A kappa) = (h . A) . kappa = p kappa_i + q kappa_j, whatever A is.
    const Rat direct = Rat(stratum.p) * kappa[stratum.sigma.first] + Rat(stratum.q) * kappa[stratum.sigma.second];
    if (value != direct) throw Error(ErrorCode::InvalidA, "stratum value depends on the choice of A");
    verdict.stratum_values.push_back(value);
    if (verdict.holonomic && is_integer(value) && value.get_num().fits_slong_p() &&
        stratum.allowed.count(value.get_num().get_si())) {
      verdict.holonomic = false;
      verdict.violated_stratum = stratum.sigma;
      verdict.violating_value = value;
    }
  }
  return verdict;
}

std::vector<Rat> parse_rational_vector(const std::string& text) {
  std::vector<Rat> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto first = item.find_first_not_of(" \t");
    const auto last = item.find_last_not_of(" \t");
    if (first == std::string::npos) throw Error(ErrorCode::MalformedInput, "empty entry in '" + text + "'");
    out.push_back(parse_rational(item.substr(first, last - first + 1)));
  }
  if (out.empty()) throw Error(ErrorCode::MalformedInput, "empty vector");
  return out;
}

}  // namespace lbi
