#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "lbi/matrix.hpp"
#include "lbi/oracle.hpp"

namespace lbi {

/// Outcome of one formula-versus-oracle sweep.
struct SuiteResult {
  std::string name;
  std::int64_t cases = 0;
  std::int64_t failures = 0;
  std::vector<std::string> mismatches;  // the first few, human readable

  bool passed() const { return cases > 0 && failures == 0; }
  void fail(const std::string& message);
};

/// Every opposite-quadrant 2x2 matrix with entries in [-max_entry, max_entry]:
/// census count and infinite generators against the oracle.
SuiteResult verify_2x2(int max_entry, const OracleConfig& config = {});

/// Every band matrix with entries in [1, max_entry] (both column orders of a,
/// b) and every level up to r + s + extra_levels: infinite columns and the
/// minimal infinite level against the oracle.
SuiteResult verify_bands(int max_entry, int extra_levels, const OracleConfig& config = {});

/// Every pair of dependent rows in opposite open quadrants with entries in
/// [-max_entry, max_entry], lifted to 3x2: closed-form staircase against the
/// slice oracle, plus integrality of every exponent.
SuiteResult verify_andean(int max_entry, const OracleConfig& config = {});

/// Levels r + s - d .. r + s + 1 and the residue decomposition of the
/// dilation reduction, both against the oracle.
SuiteResult verify_dilation_boundary(int max_entry, const OracleConfig& config = {});

/// Coprime bands with r, s <= max_entry: the left turn chase against the
/// oracle's verdict on the start vertex.
SuiteResult verify_left_turns(int max_entry, const OracleConfig& config = {});

/// Straightening and translation maps of slice graphs: vertex and edge sets
/// on windows are carried onto each other exactly.
SuiteResult verify_slices(int max_entry, const OracleConfig& config = {});

/// Random rank 2 matrices: cokernel invariants, q | d on Andean pairs and
/// exact h . A on every stratum.
SuiteResult verify_gradings(int count, int max_entry, std::uint64_t seed);

/// Random (B, kappa) with two independently built gradings A, A': the
/// holonomicity verdicts must agree.
SuiteResult verify_a_independence(int count, std::uint64_t seed);

/// Uniformly random n x 2 matrix of rank 2 with entries in [-max_entry, max_entry].
BMatrix random_rank2(std::mt19937_64& rng, std::size_t n, int max_entry);

/// A valid grading for B built independently of cokernel(B): the cokernel of
/// a row permutation of B, permuted back and multiplied by a random
/// unimodular matrix.
AMatrix random_grading(const BMatrix& b, std::mt19937_64& rng);

}  // namespace lbi
