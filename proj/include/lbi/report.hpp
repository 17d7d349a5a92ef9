#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "lbi/arrangement.hpp"
#include "lbi/primary_decomp.hpp"

namespace lbi {

/// "x1^2*x3" (ascii) or "x₁²x₃" (unicode); "1" for the empty monomial.
/// vars maps exponent positions to 0-based variable indices.
std::string monomial_string(const Exponent& e, const std::vector<std::size_t>& vars, bool unicode);

/// Same, with the exponent vector covering x_1..x_n.
std::string monomial_string(const Exponent& e, bool unicode);

std::string binomial_string(const std::pair<Exponent, Exponent>& binomial, bool unicode);

nlohmann::json decomposition_json(const BMatrix& b, const std::vector<ComponentDescription>& components);
std::string decomposition_text(const BMatrix& b, const std::vector<ComponentDescription>& components);

nlohmann::json arrangement_json(const std::vector<Stratum>& strata, bool hypothesis_ok);
std::string arrangement_text(const std::vector<Stratum>& strata, bool hypothesis_ok);

/// "HOLONOMIC", "NOT HOLONOMIC (stratum {1,2}, value 4)" or
/// "THEOREMS INAPPLICABLE".
std::string verdict_text(const HolonomicityVerdict& verdict);
nlohmann::json verdict_json(const HolonomicityVerdict& verdict);

}  // namespace lbi
