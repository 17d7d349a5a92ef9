#include "lbi/monomial_ideal.hpp"

#include <algorithm>

#include "lbi/error.hpp"

namespace lbi {

namespace {

bool divides(const Exponent& a, const Exponent& b) {
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] > b[k]) return false;
  return true;
}

}  // namespace

std::vector<Exponent> minimal_elements(std::vector<Exponent> points) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  // In lex order a divisor always precedes its multiples.
  std::vector<Exponent> out;
  for (const auto& p : points) {
    const bool covered = std::any_of(out.begin(), out.end(), [&](const Exponent& g) { return divides(g, p); });
    if (!covered) out.push_back(p);
  }
  return out;
}

MonomialIdeal::MonomialIdeal(std::vector<std::size_t> variables, std::vector<Exponent> generators)
    : variables_(std::move(variables)) {
  for (const auto& g : generators) {
    if (g.size() != variables_.size()) {
      throw Error(ErrorCode::InvalidArgument, "exponent length does not match the variable list");
    }
    for (auto e : g)
      if (e < 0) throw Error(ErrorCode::InvalidArgument, "negative exponent");
  }
  generators_ = minimal_elements(std::move(generators));
}

bool MonomialIdeal::contains(const Exponent& e) const {
  if (e.size() != variables_.size()) throw Error(ErrorCode::InvalidArgument, "exponent length mismatch");
  return std::any_of(generators_.begin(), generators_.end(), [&](const Exponent& g) { return divides(g, e); });
}

}  // namespace lbi
