#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace lbi {

using Exponent = std::vector<std::int64_t>;

/// Minimal elements of a finite set of exponent vectors under the
/// componentwise order, sorted lexicographically and deduplicated.
std::vector<Exponent> minimal_elements(std::vector<Exponent> points);

/// Monomial ideal in a subset of the variables x_1..x_n, stored by its
/// minimal generators. Exponent vectors are indexed like variables().
class MonomialIdeal {
 public:
  MonomialIdeal() = default;
  /// variables are 0-based indices; generators are minimalized.
  MonomialIdeal(std::vector<std::size_t> variables, std::vector<Exponent> generators);

  const std::vector<std::size_t>& variables() const noexcept { return variables_; }
  const std::vector<Exponent>& generators() const noexcept { return generators_; }
  std::size_t size() const noexcept { return generators_.size(); }
  bool empty() const noexcept { return generators_.empty(); }

  /// Whether x^e lies in the ideal.
  bool contains(const Exponent& e) const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  std::vector<std::size_t> variables_;
  std::vector<Exponent> generators_;
};

}  // namespace lbi
