#include "lbi/report.hpp"

#include <sstream>

namespace lbi {

namespace {

const char* const kSubscripts[] = {"₀", "₁", "₂", "₃", "₄", "₅", "₆", "₇", "₈", "₉"};
const char* const kSuperscripts[] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};

std::string digits(std::int64_t value, const char* const* table) {
  std::string out;
  for (char c : std::to_string(value)) out += table[c - '0'];
  return out;
}

std::string variable(std::size_t index, bool unicode) {
  return unicode ? "x" + digits(static_cast<std::int64_t>(index + 1), kSubscripts) : "x" + std::to_string(index + 1);
}

std::string pair_string(const IndexPair& sigma) {
  return "{" + std::to_string(sigma.first + 1) + "," + std::to_string(sigma.second + 1) + "}";
}

nlohmann::json int_json(const Int& value) {
  if (value.fits_slong_p()) return static_cast<std::int64_t>(value.get_si());
  return value.get_str();
}

std::string saturation_text(const ComponentDescription& c, std::size_t n) {
  std::string vars;
  for (std::size_t k = 0; k < n; ++k) {
    if (c.sigma && (k == c.sigma->first || k == c.sigma->second)) continue;
    vars += variable(k, true);
  }
  return vars.empty() ? "I(B)" : "(I(B) : (" + vars + ")^∞)";
}

}  // namespace

std::string monomial_string(const Exponent& e, const std::vector<std::size_t>& vars, bool unicode) {
  std::string out;
  for (std::size_t k = 0; k < e.size(); ++k) {
    if (e[k] == 0) continue;
    if (!out.empty() && !unicode) out += '*';
    out += variable(vars[k], unicode);
    if (e[k] != 1) out += unicode ? digits(e[k], kSuperscripts) : "^" + std::to_string(e[k]);
  }
  return out.empty() ? "1" : out;
}

std::string monomial_string(const Exponent& e, bool unicode) {
  std::vector<std::size_t> vars(e.size());
  for (std::size_t k = 0; k < vars.size(); ++k) vars[k] = k;
  return monomial_string(e, vars, unicode);
}

std::string binomial_string(const std::pair<Exponent, Exponent>& binomial, bool unicode) {
  return monomial_string(binomial.first, unicode) + (unicode ? " − " : " - ") +
         monomial_string(binomial.second, unicode);
}

nlohmann::json decomposition_json(const BMatrix& b, const std::vector<ComponentDescription>& components) {
  nlohmann::json out;
  out["binomials"] = nlohmann::json::array();
  for (const auto& binomial : binomial_generators(b)) out["binomials"].push_back(binomial_string(binomial, false));
  out["components"] = nlohmann::json::array();
  for (const ComponentDescription& c : components) {
    nlohmann::json entry;
    entry["kind"] = std::string(to_string(c.kind));
    if (c.sigma) entry["sigma"] = {c.sigma->first + 1, c.sigma->second + 1};
    if (c.multiplicity) entry["multiplicity"] = int_json(*c.multiplicity);
    entry["saturation"] = c.saturation;
    entry["monomial_generators"] = nlohmann::json::array();
    for (const Exponent& g : c.monomials.generators()) entry["monomial_generators"].push_back(g);
    out["components"].push_back(std::move(entry));
  }
  return out;
}

std::string decomposition_text(const BMatrix& b, const std::vector<ComponentDescription>& components) {
  std::ostringstream out;
  out << "I(B) = ⟨";
  const auto binomials = binomial_generators(b);
  for (std::size_t k = 0; k < binomials.size(); ++k) out << (k ? ", " : "") << binomial_string(binomials[k], true);
  out << "⟩\n";
  for (const ComponentDescription& c : components) {
    if (c.kind == ComponentKind::Toric) {
      out << "toric: " << saturation_text(c, b.n()) << ", " << c.multiplicity->get_str()
          << (*c.multiplicity == 1 ? " prime" : " primes isomorphic by rescaling") << '\n';
      continue;
    }
    out << to_string(c.kind) << " ⟨" << variable(c.sigma->first, true) << ", " << variable(c.sigma->second, true)
        << "⟩: " << saturation_text(c, b.n()) << " + ⟨";
    const auto& gens = c.monomials.generators();
    for (std::size_t k = 0; k < gens.size(); ++k)
      out << (k ? ", " : "") << monomial_string(gens[k], c.monomials.variables(), true);
    out << "⟩\n";
  }
  return out.str();
}

nlohmann::json arrangement_json(const std::vector<Stratum>& strata, bool hypothesis_ok) {
  nlohmann::json out;
  out["hypothesis_ok"] = hypothesis_ok;
  out["strata"] = nlohmann::json::array();
  for (const Stratum& s : strata) {
    nlohmann::json entry;
    entry["sigma"] = {s.sigma.first + 1, s.sigma.second + 1};
    entry["h"] = nlohmann::json::array();
    for (const Rat& x : s.h) entry["h"].push_back(to_string(x));
    entry["allowed"] = std::vector<std::int64_t>(s.allowed.begin(), s.allowed.end());
    out["strata"].push_back(std::move(entry));
  }
  return out;
}

std::string arrangement_text(const std::vector<Stratum>& strata, bool hypothesis_ok) {
  std::ostringstream out;
  if (strata.empty()) out << "Andean arrangement: empty\n";
  for (const Stratum& s : strata) {
    out << "stratum " << pair_string(s.sigma) << ": h = (";
    for (std::size_t k = 0; k < s.h.size(); ++k) out << (k ? ", " : "") << to_string(s.h[k]);
    out << "), h·β ∈ {";
    bool first = true;
    for (auto v : s.allowed) {
      out << (first ? "" : ", ") << v;
      first = false;
    }
    out << "}\n";
  }
  if (!hypothesis_ok) out << "warning: the cone over the columns of A contains a line; theorems inapplicable\n";
  return out.str();
}

std::string verdict_text(const HolonomicityVerdict& verdict) {
  if (!verdict.hypothesis_ok) return "THEOREMS INAPPLICABLE";
  if (verdict.holonomic) return "HOLONOMIC";
  return "NOT HOLONOMIC (stratum " + pair_string(*verdict.violated_stratum) + ", value " +
         to_string(*verdict.violating_value) + ")";
}

nlohmann::json verdict_json(const HolonomicityVerdict& verdict) {
  nlohmann::json out;
  out["hypothesis_ok"] = verdict.hypothesis_ok;
  out["nonneg_column_span"] = verdict.nonneg_column_span;
  if (verdict.hypothesis_ok) out["holonomic"] = verdict.holonomic;
  else out["holonomic"] = nullptr;
  if (verdict.violated_stratum) {
    out["violated_stratum"] = {verdict.violated_stratum->first + 1, verdict.violated_stratum->second + 1};
    out["value"] = to_string(*verdict.violating_value);
  }
  out["stratum_values"] = nlohmann::json::array();
  for (const Rat& v : verdict.stratum_values) out["stratum_values"].push_back(to_string(v));
  return out;
}

}  // namespace lbi
