#include "lbi/lattice_graphs.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>
#include <numeric>
#include <set>
#include <unordered_set>

namespace lbi {

Mat2 Mat2::from(const IntMatrix& m) {
  if (m.rows() != 2 || m.cols() != 2) throw Error(ErrorCode::InvalidArgument, "expected a 2x2 matrix");
  return {to_i64(m(0, 0)), to_i64(m(0, 1)), to_i64(m(1, 0)), to_i64(m(1, 1))};
}

namespace {

void require_small(std::int64_t v) {
  // Keeps every product formed below comfortably inside 64 bits.
  if (v > (std::int64_t{1} << 30) || v < -(std::int64_t{1} << 30)) {
    throw Error(ErrorCode::Overflow, "entry " + std::to_string(v) + " too large for the graph layer");
  }
}

void require_opposite_quadrants(const Mat2& m) {
  for (auto v : {m.m11, m.m12, m.m21, m.m22}) require_small(v);
  if (!(m.m11 > 0 && m.m12 > 0 && m.m21 < 0 && m.m22 < 0)) {
    throw Error(ErrorCode::OrientationError,
                "row 1 must lie in the open positive quadrant and row 2 in the open negative quadrant");
  }
  if (m.det() == 0) throw Error(ErrorCode::RankDeficient, "2x2 matrix is singular");
}

std::uint64_t pack(Vertex2 v) {
  return (static_cast<std::uint64_t>(v.w) << 32) | static_cast<std::uint64_t>(v.z);
}

}  // namespace

Census2x2 finite_census_2x2(const Mat2& m) {
  require_opposite_quadrants(m);
  const std::int64_t p1 = std::abs(m.m11 * m.m22);
  const std::int64_t p2 = std::abs(m.m12 * m.m21);
  Census2x2 out;
  out.count = std::min(p1, p2);
  const std::int64_t wmax = p1 > p2 ? m.m12 : m.m11;
  const std::int64_t zmax = p1 > p2 ? -m.m21 : -m.m22;
  for (std::int64_t w = 0; w < wmax; ++w)
    for (std::int64_t z = 0; z < zmax; ++z) out.rectangle.push_back({w, z});
  return out;
}

std::int64_t default_component_cap(const Mat2& m) {
  return 16 * (std::abs(m.m11) + std::abs(m.m12)) * (std::abs(m.m21) + std::abs(m.m22));
}

std::vector<Vertex2> finite_vertex_set_2x2(const Mat2& m, std::int64_t cap) {
  const Census2x2 census = finite_census_2x2(m);
  if (cap <= 0) cap = default_component_cap(m);
  const Vertex2 cols[2] = {m.column(0), m.column(1)};
  std::unordered_set<std::uint64_t> seen;
  std::vector<Vertex2> out;
  for (const Vertex2& root : census.rectangle) {
    if (seen.count(pack(root))) continue;
    std::deque<Vertex2> queue{root};
    seen.insert(pack(root));
    std::int64_t size = 0;
    while (!queue.empty()) {
      const Vertex2 v = queue.front();
      queue.pop_front();
      out.push_back(v);
      if (++size > cap) {
        throw Error(ErrorCode::CapExceeded, "component of (" + std::to_string(root.w) + "," +
                                                std::to_string(root.z) + ") exceeded " + std::to_string(cap) +
                                                " vertices");
      }
      for (const Vertex2& c : cols) {
        for (int sign : {1, -1}) {
          const Vertex2 n{v.w + sign * c.w, v.z + sign * c.z};
          if (n.w < 0 || n.z < 0 || n.w >= (std::int64_t{1} << 31) || n.z >= (std::int64_t{1} << 31)) continue;
          if (seen.insert(pack(n)).second) queue.push_back(n);
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Exponent> complement_generators(const std::vector<Vertex2>& finite) {
  std::map<std::int64_t, std::set<std::int64_t>> by_column;
  for (const Vertex2& v : finite) by_column[v.w].insert(v.z);
  std::vector<Exponent> out;
  std::int64_t lowest = std::numeric_limits<std::int64_t>::max();
  for (std::int64_t w = 0;; ++w) {
    std::int64_t h = 0;
    if (auto it = by_column.find(w); it != by_column.end()) {
      while (it->second.count(h)) ++h;
    }
    if (h < lowest) {
      out.push_back({w, h});
      lowest = h;
    }
    if (h == 0) break;
  }
  return out;
}

MonomialIdeal toral_infinite_generators(const Mat2& m, std::int64_t cap) {
  return MonomialIdeal({0, 1}, complement_generators(finite_vertex_set_2x2(m, cap)));
}

BandSpec BandSpec::normalize(const Mat2& m) {
  for (auto v : {m.m11, m.m12, m.m21, m.m22}) {
    require_small(v);
    if (v <= 0) throw Error(ErrorCode::InvalidArgument, "band matrices need positive entries");
  }
  if (m.det() == 0) throw Error(ErrorCode::RankDeficient, "band matrix is singular");
  BandSpec spec{m.m11, m.m12, m.m21, m.m22, false};
  if (spec.r < spec.s || (spec.r == spec.s && spec.a > spec.b)) {
    spec = {m.m12, m.m11, m.m22, m.m21, true};
  }
  return spec;
}

std::int64_t BandSpec::d() const { return std::gcd(r, s); }

std::int64_t band_min_infinite_level(const BandSpec& spec) { return spec.r + spec.s - spec.d(); }

std::vector<std::int64_t> band_infinite_columns(const BandSpec& spec, std::int64_t level) {
  if (level < 0) throw Error(ErrorCode::InvalidArgument, "negative level");
  std::vector<std::int64_t> out;
  const std::int64_t slack = level - band_min_infinite_level(spec);
  if (slack < 0) return out;
  const std::int64_t d = spec.d();
  for (std::int64_t w = 0; w <= level; ++w)
    if (w % d <= slack) out.push_back(w);
  return out;
}

namespace {

bool in_band(std::int64_t level, Vertex2 v) { return v.w >= 0 && v.w <= level && v.z >= 0; }

}  // namespace

std::optional<TurnKind> classify_turn(const BandSpec& spec, std::int64_t level, Vertex2 v) {
  if (!in_band(level, v)) return std::nullopt;
  bool edge[2] = {false, false};
  bool lower = false;
  const Vertex2 cols[2] = {{spec.r, spec.a}, {spec.s, spec.b}};
  for (int k = 0; k < 2; ++k) {
    for (int sign : {1, -1}) {
      const Vertex2 n{v.w + sign * cols[k].w, v.z + sign * cols[k].z};
      if (!in_band(level, n)) continue;
      edge[k] = true;
      if (n.w < v.w) lower = true;
    }
  }
  if (!edge[0] || !edge[1]) return std::nullopt;
  return lower ? TurnKind::Left : TurnKind::Right;
}

ChaseResult left_turn_chase(const BandSpec& spec, std::int64_t level, Vertex2 start) {
  if (spec.d() != 1) throw Error(ErrorCode::InvalidArgument, "left turn chase needs gcd(r, s) = 1");
  if (spec.a > spec.b) throw Error(ErrorCode::InvalidArgument, "left turn chase needs a <= b");
  const std::int64_t t = level - spec.r;
  if (t < 0 || t >= spec.s) throw Error(ErrorCode::InvalidArgument, "level must be r + t with 0 <= t < s");
  if (classify_turn(spec, level, start) != TurnKind::Left) {
    throw Error(ErrorCode::NotALeftTurn,
                "(" + std::to_string(start.w) + "," + std::to_string(start.z) + ") is not a left turn");
  }
  ChaseResult out;
  std::map<std::int64_t, std::int64_t> height_at;
  Vertex2 current = start;
  for (;;) {
    out.turns.push_back(current);
    height_at[current.w] = current.z;
    const Vertex2 right{current.w - spec.r, current.z - spec.a};
    const std::int64_t q = (level - right.w) / spec.s;
    const Vertex2 top{right.w + q * spec.s, right.z + q * spec.b};
    if (top.w < spec.r || top.z < spec.a) return out;
    if (auto it = height_at.find(top.w); it != height_at.end()) {
      // The pattern between the two visits repeats, shifted up in z.
      out.infinite = top.z > it->second;
      if (out.infinite) return out;
    }
    current = top;
  }
}

DilationReduction dilate_reduce(const BandSpec& spec, std::int64_t level) {
  if (level < 0) throw Error(ErrorCode::InvalidArgument, "negative level");
  DilationReduction out;
  out.d = spec.d();
  out.reduced = spec;
  out.reduced.r /= out.d;
  out.reduced.s /= out.d;
  for (std::int64_t t0 = 0; t0 < out.d && t0 <= level; ++t0) out.residues.push_back({t0, (level - t0) / out.d});
  return out;
}

SliceSpec SliceSpec::make(std::int64_t r, std::int64_t s, std::int64_t a, std::int64_t b, const Rat& lambda) {
  for (auto v : {r, s, a, b}) {
    require_small(v);
    if (v <= 0) throw Error(ErrorCode::InvalidArgument, "slice matrices need r, s, a, b > 0");
  }
  if (r < s) throw Error(ErrorCode::InvalidArgument, "slice matrices need r >= s");
  if (r * b == s * a) throw Error(ErrorCode::RankDeficient, "slice matrix has rank < 2");
  if (lambda <= 0) throw Error(ErrorCode::InvalidArgument, "lambda must be positive");
  SliceSpec spec{r, s, a, b, to_i64(lambda.get_num()), to_i64(lambda.get_den())};
  if (r % spec.q != 0 || s % spec.q != 0) {
    throw Error(ErrorCode::InvalidArgument, "lambda * (r, s) must be integral");
  }
  require_small(spec.p * r);
  return spec;
}

IntMatrix SliceSpec::matrix() const {
  IntMatrix m(3, 2);
  m(0, 0) = r;
  m(0, 1) = s;
  m(1, 0) = -(p * r / q);
  m(1, 1) = -(p * s / q);
  m(2, 0) = a;
  m(2, 1) = b;
  return m;
}

Straightening slice_to_band(const SliceSpec& spec, const Rat& level) {
  if (level < 0 || !is_integer(level) || level.get_num() % spec.q != 0) {
    throw Error(ErrorCode::InvalidArgument, "slice level must be a natural multiple of q");
  }
  Straightening out{BandSpec::normalize({spec.r / spec.q, spec.s / spec.q, spec.a, spec.b}),
                    to_i64(level.get_num()) / spec.q, spec.p, spec.q};
  return out;
}

SliceTranslation slice_translation_reduce(const SliceSpec& spec, const Rat& level) {
  const Rat key_rat = level * spec.p;
  if (level < 0 || !is_integer(key_rat)) {
    throw Error(ErrorCode::EmptySlice, "S(" + to_string(level) + ") has no lattice points");
  }
  const std::int64_t key = to_i64(key_rat.get_num());
  const std::int64_t p = spec.p, q = spec.q;
  // p u_x = key (mod q) and q u_y = key (mod p) fix u_x mod q and u_y mod p.
  auto solve = [](std::int64_t coeff, std::int64_t rhs, std::int64_t mod) -> std::int64_t {
    if (mod == 1) return 0;
    Int inverse;
    Int c(coeff), m(mod);
    mpz_invert(inverse.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    Int x = (inverse * rhs) % m;
    if (x < 0) x += m;
    return to_i64(x);
  };
  SliceTranslation out;
  out.i = solve(p, key, q);
  out.j = solve(q, key, p);
  const std::int64_t reduced_key = key - p * out.i - q * out.j;
  if (reduced_key < 0) throw Error(ErrorCode::EmptySlice, "S(" + to_string(level) + ") has no lattice points");
  out.level = make_rat(reduced_key, p);
  return out;
}

}  // namespace lbi
