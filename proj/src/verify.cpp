#include "lbi/verify.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "lbi/arrangement.hpp"
#include "lbi/primary_decomp.hpp"

namespace lbi {

void SuiteResult::fail(const std::string& message) {
  ++failures;
  if (mismatches.size() < 10) mismatches.push_back(message);
}

namespace {

std::string show(const Mat2& m) {
  std::ostringstream out;
  out << "[[" << m.m11 << "," << m.m12 << "],[" << m.m21 << "," << m.m22 << "]]";
  return out.str();
}

template <class T>
std::string show_list(const std::vector<T>& values) {
  std::ostringstream out;
  out << '{';
  for (std::size_t k = 0; k < values.size(); ++k) out << (k ? "," : "") << values[k];
  out << '}';
  return out.str();
}

std::string show_ideal(const MonomialIdeal& ideal) {
  std::ostringstream out;
  for (const Exponent& g : ideal.generators()) out << '(' << g[0] << ',' << g[1] << ')';
  return out.str();
}

void require_range(int max_entry) {
  if (max_entry < 1) throw Error(ErrorCode::InvalidArgument, "empty case space: max entry must be at least 1");
}

}  // namespace

SuiteResult verify_2x2(int max_entry, const OracleConfig& config) {
  require_range(max_entry);
  SuiteResult result{"2x2", 0, 0, {}};
  for (int a = 1; a <= max_entry; ++a)
    for (int b = 1; b <= max_entry; ++b)
      for (int c = 1; c <= max_entry; ++c)
        for (int d = 1; d <= max_entry; ++d) {
          const Mat2 m{a, b, -c, -d};
          if (m.det() == 0) continue;
          ++result.cases;
          const Census2x2 census = finite_census_2x2(m);
          const MonomialIdeal formula = toral_infinite_generators(m);
          const ToralOracleResult oracle = oracle_toral(m, config);
          if (census.count != oracle.finite_components) {
            result.fail(show(m) + ": census " + std::to_string(census.count) + ", oracle " +
                        std::to_string(oracle.finite_components));
          } else if (!(formula == oracle.generators)) {
            result.fail(show(m) + ": generators " + show_ideal(formula) + ", oracle " + show_ideal(oracle.generators));
          }
        }
  return result;
}

SuiteResult verify_bands(int max_entry, int extra_levels, const OracleConfig& config) {
  require_range(max_entry);
  SuiteResult result{"band", 0, 0, {}};
  for (int r = 1; r <= max_entry; ++r)
    for (int s = 1; s <= r; ++s)
      for (int a = 1; a <= max_entry; ++a)
        for (int b = 1; b <= max_entry; ++b) {
          const Mat2 m{r, s, a, b};
          if (m.det() == 0) continue;
          const BandSpec spec = BandSpec::normalize(m);
          std::optional<std::int64_t> oracle_min;
          for (std::int64_t level = 0; level <= r + s + extra_levels; ++level) {
            ++result.cases;
            const auto formula = band_infinite_columns(spec, level);
            const auto oracle = oracle_band_columns(m, level, config);
            if (!oracle_min && !oracle.empty()) oracle_min = level;
            if (formula != oracle) {
              result.fail(show(m) + " level " + std::to_string(level) + ": columns " + show_list(formula) +
                          ", oracle " + show_list(oracle));
            }
          }
          if (oracle_min != band_min_infinite_level(spec)) {
            result.fail(show(m) + ": minimal infinite level " + std::to_string(band_min_infinite_level(spec)) +
                        ", oracle " + (oracle_min ? std::to_string(*oracle_min) : "none"));
          }
        }
  return result;
}

SuiteResult verify_andean(int max_entry, const OracleConfig& config) {
  require_range(max_entry);
  SuiteResult result{"andean", 0, 0, {}};
  for (int b1 = 1; b1 <= max_entry; ++b1)
    for (int b2 = 1; b2 <= max_entry; ++b2) {
      const int g = std::gcd(b1, b2);
      // Dependent partners -lambda (b1, b2) with integral entries: lambda = p/q, q | g.
      for (int q = 1; q <= g; ++q) {
        if (g % q != 0) continue;
        for (int p = 1; p * b1 / q <= max_entry && p * b2 / q <= max_entry; ++p) {
          if (std::gcd(p, q) != 1) continue;
          ++result.cases;
          const BMatrix b(IntMatrix::from_rows({{b1, b2}, {-p * b1 / q, -p * b2 / q}, {1, 0}}));
          const PairAnalysis pair = analyze_pairs(b).front();
          if (!pair.lambda || !pair.d || pair.d->get_si() % pair.lambda->get_den().get_si() != 0) {
            result.fail("q does not divide d for rows (" + std::to_string(b1) + "," + std::to_string(b2) + ")");
            continue;
          }
          const MonomialIdeal formula = andean_monomial_part(b, 0, 1);
          const MonomialIdeal oracle = oracle_andean_monomials(andean_lift(b, 0, 1), config);
          if (!(formula == oracle)) {
            result.fail("rows (" + std::to_string(b1) + "," + std::to_string(b2) + "), lambda " + std::to_string(p) +
                        "/" + std::to_string(q) + ": " + show_ideal(formula) + ", oracle " + show_ideal(oracle));
          }
        }
      }
    }
  return result;
}

SuiteResult verify_dilation_boundary(int max_entry, const OracleConfig& config) {
  require_range(max_entry);
  SuiteResult result{"dilation-boundary", 0, 0, {}};
  for (int r = 1; r <= max_entry; ++r)
    for (int s = 1; s <= r; ++s)
      for (int a = 1; a <= max_entry; ++a)
        for (int b = a; b <= max_entry; ++b) {
          const Mat2 m{r, s, a, b};
          if (m.det() == 0) continue;
          const BandSpec spec = BandSpec::normalize(m);
          for (std::int64_t level = band_min_infinite_level(spec); level <= r + s + 1; ++level) {
            ++result.cases;
            const auto oracle = oracle_band_columns(m, level, config);
            if (band_infinite_columns(spec, level) != oracle) {
              result.fail(show(m) + " level " + std::to_string(level) + ": columns " +
                          show_list(band_infinite_columns(spec, level)) + ", oracle " + show_list(oracle));
            }
            // Reassemble the columns from the reduced band graphs.
            const DilationReduction reduction = dilate_reduce(spec, level);
            std::vector<std::int64_t> assembled;
            for (const ResidueLevel& piece : reduction.residues)
              for (std::int64_t w : oracle_band_columns(reduction.reduced.matrix(), piece.level, config))
                assembled.push_back(reduction.d * w + piece.residue);
            std::sort(assembled.begin(), assembled.end());
            if (assembled != oracle) {
              result.fail(show(m) + " level " + std::to_string(level) + ": residue pieces give " +
                          show_list(assembled) + ", oracle " + show_list(oracle));
            }
          }
        }
  return result;
}

SuiteResult verify_left_turns(int max_entry, const OracleConfig& config) {
  require_range(max_entry);
  SuiteResult result{"left-turns", 0, 0, {}};
  for (int r = 1; r <= max_entry; ++r)
    for (int s = 1; s <= r; ++s) {
      if (std::gcd(r, s) != 1) continue;
      for (int a = 1; a <= 3; ++a)
        for (int b = a; b <= 3; ++b) {
          const Mat2 m{r, s, a, b};
          if (m.det() == 0) continue;
          const BandSpec spec = BandSpec::normalize(m);
          for (int t = 0; t < spec.s; ++t) {
            const std::int64_t level = spec.r + t;
            std::vector<Vertex2> starts;
            for (std::int64_t w = 0; w <= level; ++w)
              for (std::int64_t z = 0; z <= 3 * (a + b); ++z)
                if (classify_turn(spec, level, {w, z}) == TurnKind::Left) starts.push_back({w, z});
            if (starts.empty()) continue;
            const auto oracle = oracle_band_vertices_infinite(m, level, starts, config);
            for (std::size_t k = 0; k < starts.size(); ++k) {
              ++result.cases;
              const bool chase = left_turn_chase(spec, level, starts[k]).infinite;
              if (chase != oracle[k]) {
                result.fail(show(m) + " level " + std::to_string(level) + " start (" + std::to_string(starts[k].w) +
                            "," + std::to_string(starts[k].z) + "): chase " + (chase ? "infinite" : "finite") +
                            ", oracle " + (oracle[k] ? "infinite" : "finite"));
              }
            }
          }
        }
    }
  return result;
}

namespace {

using Edge3 = std::pair<Vertex3, Vertex3>;

Edge3 ordered(Vertex3 u, Vertex3 v) { return u < v ? Edge3{u, v} : Edge3{v, u}; }

// Vertices and edges of a slice window p x + q y = key, z <= height.
std::pair<std::set<Vertex3>, std::set<Edge3>> slice_window(const SliceSpec& spec, std::int64_t key,
                                                          std::int64_t height) {
  std::set<Vertex3> vertices;
  for (std::int64_t x = 0; spec.p * x <= key; ++x) {
    const std::int64_t rest = key - spec.p * x;
    if (rest % spec.q != 0) continue;
    for (std::int64_t z = 0; z <= height; ++z) vertices.insert({x, rest / spec.q, z});
  }
  const IntMatrix m = spec.matrix();
  std::set<Edge3> edges;
  for (const Vertex3& u : vertices)
    for (std::size_t c = 0; c < 2; ++c) {
      const Vertex3 v{u.x + to_i64(m(0, c)), u.y + to_i64(m(1, c)), u.z + to_i64(m(2, c))};
      if (vertices.count(v)) edges.insert(ordered(u, v));
    }
  return {vertices, edges};
}

}  // namespace

SuiteResult verify_slices(int max_entry, const OracleConfig&) {
  require_range(max_entry);
  SuiteResult result{"slices", 0, 0, {}};
  for (int r = 1; r <= max_entry; ++r)
    for (int s = 1; s <= r; ++s) {
      const int g = std::gcd(r, s);
      for (int q = 1; q <= g; ++q) {
        if (g % q != 0) continue;
        for (int p = 1; p <= 3; ++p) {
          if (std::gcd(p, q) != 1) continue;
          const std::int64_t a = 1, b = r == s ? 2 : 1;
          const SliceSpec spec = SliceSpec::make(r, s, a, b, make_rat(p, q));
          const std::int64_t height = 3 * (a + b);
          for (std::int64_t key = 0; key <= p * (r + s + 2); ++key) {
            ++result.cases;
            const auto [vertices, edges] = slice_window(spec, key, height);
            const std::string where = "slice spec r=" + std::to_string(r) + " s=" + std::to_string(s) +
                                      " lambda=" + std::to_string(p) + "/" + std::to_string(q) +
                                      " key=" + std::to_string(key);
            SliceTranslation t;
            try {
              t = slice_translation_reduce(spec, make_rat(key, p));
            } catch (const Error& e) {
              if (e.code() != ErrorCode::EmptySlice) throw;
              if (!vertices.empty()) result.fail(where + ": reported empty but has points");
              continue;
            }
            const std::int64_t reduced_key = to_i64(Rat(t.level * p).get_num());
            const auto [target_vertices, target_edges] = slice_window(spec, reduced_key, height);
            std::set<Vertex3> moved;
            for (const Vertex3& u : vertices) moved.insert({u.x - t.i, u.y - t.j, u.z});
            std::set<Edge3> moved_edges;
            for (const auto& [u, v] : edges) moved_edges.insert(ordered({u.x - t.i, u.y - t.j, u.z}, {v.x - t.i, v.y - t.j, v.z}));
            if (moved != target_vertices || moved_edges != target_edges) {
              result.fail(where + ": translation by (" + std::to_string(t.i) + "," + std::to_string(t.j) +
                          ") is not an isomorphism");
              continue;
            }
            if (reduced_key % (p * q) != 0) {
              result.fail(where + ": reduced slice is not a multiple of q");
              continue;
            }
            // Straighten the reduced slice and compare with the band window.
            const Straightening st = slice_to_band(spec, t.level);
            std::set<Vertex3> mapped;
            std::set<Edge3> mapped_edges;
            const Vertex2 cols[2] = {{st.band.r, st.band.a}, {st.band.s, st.band.b}};
            for (std::int64_t w = 0; w <= st.level; ++w)
              for (std::int64_t z = 0; z <= height; ++z) {
                mapped.insert(st.map({w, z}));
                for (const Vertex2& c : cols) {
                  const Vertex2 n{w + c.w, z + c.z};
                  if (n.w <= st.level && n.z <= height) mapped_edges.insert(ordered(st.map({w, z}), st.map(n)));
                }
              }
            if (mapped != target_vertices || mapped_edges != target_edges) {
              result.fail(where + ": straightening map disagrees with the slice graph");
            }
          }
        }
      }
    }
  return result;
}

BMatrix random_rank2(std::mt19937_64& rng, std::size_t n, int max_entry) {
  std::uniform_int_distribution<int> entry(-max_entry, max_entry);
  for (;;) {
    IntMatrix m(n, 2);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < 2; ++j) m(i, j) = entry(rng);
    if (rank(m) == 2) return BMatrix(m);
  }
}

AMatrix random_grading(const BMatrix& b, std::mt19937_64& rng) {
  const std::size_t n = b.n();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  IntMatrix permuted(n, 2);
  for (std::size_t k = 0; k < n; ++k) {
    permuted(k, 0) = b(perm[k], 0);
    permuted(k, 1) = b(perm[k], 1);
  }
  const IntMatrix base = cokernel(BMatrix(permuted)).matrix();
  // Column perm[k] of the result is column k of base.
  IntMatrix a(base.rows(), n);
  for (std::size_t r = 0; r < base.rows(); ++r)
    for (std::size_t k = 0; k < n; ++k) a(r, perm[k]) = base(r, k);
  // Random unimodular mixing of the rows.
  std::uniform_int_distribution<int> factor(-3, 3);
  const std::size_t rows = a.rows();
  for (int step = 0; rows > 1 && step < 6; ++step) {
    const std::size_t x = rng() % rows, y = rng() % rows;
    if (x != y) a.add_row_multiple(x, y, factor(rng));
    if (rng() % 3 == 0) a.negate_row(x);
    if (rng() % 3 == 0) a.swap_rows(x, y);
  }
  return AMatrix(a, b);
}

SuiteResult verify_gradings(int count, int max_entry, std::uint64_t seed) {
  require_range(max_entry);
  SuiteResult result{"gradings", 0, 0, {}};
  std::mt19937_64 rng(seed);
  for (int k = 0; k < count; ++k) {
    const std::size_t n = 2 + rng() % 6;
    const BMatrix b = random_rank2(rng, n, max_entry);
    ++result.cases;
    const AMatrix a = cokernel(b);
    const std::string where = "B = " + b.matrix().to_string();
    if (!(a.matrix() * b.matrix()).is_zero()) result.fail(where + ": A B != 0");
    for (const Int& divisor : smith_normal_form(a.matrix()).elementary_divisors())
      if (divisor != 1) result.fail(where + ": A has an elementary divisor " + divisor.get_str());
    if (a.rows() != n - 2) result.fail(where + ": A has the wrong shape");
    for (const PairAnalysis& pair : analyze_pairs(b)) {
      if (!pair.lambda) continue;
      if (*pair.d % pair.lambda->get_den() != 0) result.fail(where + ": q does not divide d");
      const MonomialIdeal part = andean_monomial_part(b, pair.i, pair.j);
      for (const Exponent& g : part.generators())
        if (g[0] < 0 || g[1] < 0) result.fail(where + ": negative exponent");
      const Stratum s = stratum_for_pair(b, a, pair.i, pair.j);
      for (std::size_t col = 0; col < n; ++col) {
        Rat value = 0;
        for (std::size_t r = 0; r < a.rows(); ++r) value += s.h[r] * Rat(a.matrix()(r, col));
        const Rat expected = col == pair.i ? Rat(s.p) : col == pair.j ? Rat(s.q) : Rat(0);
        if (value != expected) result.fail(where + ": h . A is not p e_i + q e_j");
      }
    }
  }
  return result;
}

namespace {

// Rank 2 matrix with a pointed grading cone, usually carrying a planted pair of
// dependent rows in opposite open quadrants.
BMatrix random_horn_matrix(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> small(1, 4);
  for (;;) {
    std::vector<std::vector<Int>> rows;
    if (rng() % 4 != 0) {
      const int x = small(rng), y = small(rng), g = std::gcd(x, y);
      std::vector<int> qs;
      for (int q = 1; q <= g; ++q)
        if (g % q == 0) qs.push_back(q);
      const int q = qs[rng() % qs.size()];
      int p = small(rng);
      while (std::gcd(p, q) != 1) ++p;
      const int sign = rng() % 2 ? 1 : -1;
      rows.push_back({x, sign * y});
      rows.push_back({-p * x / q, -sign * p * y / q});
    }
    // Axis rows keep the cone pointed; a few random rows add variety.
    rows.push_back({small(rng), 0});
    rows.push_back({0, small(rng)});
    if (rng() % 2) rows.push_back({-small(rng), 0});
    if (rng() % 2) rows.push_back({0, -small(rng)});
    const std::size_t extra = rng() % 2;
    std::uniform_int_distribution<int> entry(-4, 4);
    for (std::size_t k = 0; k < extra; ++k) rows.push_back({entry(rng), entry(rng)});
    std::shuffle(rows.begin(), rows.end(), rng);
    const IntMatrix m = IntMatrix::from_rows(rows);
    if (rank(m) != 2) continue;
    const BMatrix b(m);
    if (grading_cone_is_pointed(b)) return b;
  }
}

}  // namespace

SuiteResult verify_a_independence(int count, std::uint64_t seed) {
  SuiteResult result{"a-independence", 0, 0, {}};
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> entry(-6, 6);
  int holonomic = 0, blocked = 0;
  for (int k = 0; k < count; ++k) {
    const BMatrix b = random_horn_matrix(rng);
    const AMatrix first = cokernel(b);
    const AMatrix second = random_grading(b, rng);
    std::vector<Rat> kappa;
    for (std::size_t i = 0; i < b.n(); ++i) kappa.push_back(rng() % 4 == 0 ? make_rat(entry(rng), 2) : Rat(entry(rng)));
    ++result.cases;
    const HolonomicityVerdict x = is_holonomic(b, first, kappa);
    const HolonomicityVerdict y = is_holonomic(b, second, kappa);
    holonomic += x.holonomic;
    blocked += !x.holonomic;
    if (x.hypothesis_ok != y.hypothesis_ok || x.holonomic != y.holonomic ||
        x.violated_stratum != y.violated_stratum || x.violating_value != y.violating_value ||
        x.stratum_values != y.stratum_values) {
      result.fail("B = " + b.matrix().to_string() + ": verdicts differ between two gradings");
    }
  }
  // A sample where every verdict agrees trivially proves nothing.
  if (count >= 20 && (holonomic == 0 || blocked == 0)) {
    result.fail("degenerate sample: " + std::to_string(holonomic) + " holonomic, " + std::to_string(blocked) +
                " not holonomic");
  }
  return result;
}

}  // namespace lbi
