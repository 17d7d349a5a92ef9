#pragma once

#include <cstdint>
#include <limits>
#include <string>

#include <gmpxx.h>

#include "lbi/error.hpp"

namespace lbi {

using Int = mpz_class;
using Rat = mpq_class;

/// Narrows an arbitrary precision integer for the graph layer, which works on
/// machine words.
inline std::int64_t to_i64(const Int& value) {
  if (!value.fits_slong_p()) {
    throw Error(ErrorCode::Overflow, "integer " + value.get_str() + " does not fit in 64 bits");
  }
  return static_cast<std::int64_t>(value.get_si());
}

inline Int abs_int(const Int& value) { return value < 0 ? Int(-value) : value; }

inline Int gcd_int(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Rat make_rat(const Int& num, const Int& den) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

/// Canonical text form: "p" for integers, "p/q" with q > 1 otherwise.
inline std::string to_string(const Rat& value) {
  Rat canonical(value);
  canonical.canonicalize();
  return canonical.get_str();
}

/// Parses "p", "-p" or "p/q"; throws MalformedInput for anything else.
Rat parse_rational(const std::string& text);

/// Parses a decimal integer token; throws MalformedInput for anything else.
Int parse_integer(const std::string& text);

inline bool is_integer(const Rat& value) { return value.get_den() == 1; }

}  // namespace lbi
