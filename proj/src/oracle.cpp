#include "lbi/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <set>
#include <string>

namespace lbi {

Window Window::natural_box(const Point& upper) {
  Window w;
  w.lower.assign(upper.size(), 0);
  w.upper = upper;
  w.kinds.assign(upper.size(), CoordKind::Natural);
  return w;
}

bool Window::empty() const {
  for (std::size_t k = 0; k < dim(); ++k)
    if (lower[k] > upper[k]) return true;
  return false;
}

namespace {

bool on_plane(const std::optional<Hyperplane>& plane, const Point& u) {
  if (!plane) return true;
  std::int64_t total = 0;
  for (std::size_t k = 0; k < u.size(); ++k) total += plane->normal[k] * u[k];
  return total == plane->value;
}

}  // namespace

bool Window::contains(const Point& u) const {
  for (std::size_t k = 0; k < dim(); ++k)
    if (u[k] < lower[k] || u[k] > upper[k]) return false;
  return on_plane(plane, u);
}

bool Window::in_monoid(const Point& u) const {
  for (std::size_t k = 0; k < dim(); ++k) {
    switch (kinds[k]) {
      case CoordKind::Natural:
        if (u[k] < 0) return false;
        break;
      case CoordKind::Capped:
        if (u[k] < lower[k] || u[k] > upper[k]) return false;
        break;
      case CoordKind::Integer:
        break;
    }
  }
  return on_plane(plane, u);
}

OracleConfig OracleConfig::from_env() {
  OracleConfig config;
  if (const char* text = std::getenv("LATTICE_ANDEAN_BUDGET")) {
    try {
      const long long value = std::stoll(text);
      if (value > 0) config.vertex_budget = value;
    } catch (const std::exception&) {
      throw Error(ErrorCode::MalformedInput, std::string("LATTICE_ANDEAN_BUDGET is not an integer: ") + text);
    }
  }
  return config;
}

Point WindowGraph::point(std::size_t vertex) const {
  return Point(coords.begin() + static_cast<std::ptrdiff_t>(vertex * dim),
               coords.begin() + static_cast<std::ptrdiff_t>((vertex + 1) * dim));
}

std::optional<std::uint64_t> WindowGraph::code(const Point& u) const {
  std::uint64_t c = 0;
  for (std::size_t k = 0; k < dim; ++k) {
    if (u[k] < window.lower[k] || u[k] > window.upper[k]) return std::nullopt;
    c = c * static_cast<std::uint64_t>(window.upper[k] - window.lower[k] + 1) +
        static_cast<std::uint64_t>(u[k] - window.lower[k]);
  }
  return c;
}

std::optional<std::size_t> WindowGraph::find(const Point& u) const {
  const auto c = code(u);
  if (!c) return std::nullopt;
  if (!window.plane) {
    const auto idx = index[*c];
    return idx < 0 ? std::nullopt : std::optional<std::size_t>(static_cast<std::size_t>(idx));
  }
  auto it = std::lower_bound(sparse_index.begin(), sparse_index.end(), std::make_pair(*c, std::int32_t{-1}));
  if (it == sparse_index.end() || it->first != *c) return std::nullopt;
  return static_cast<std::size_t>(it->second);
}

namespace {

struct UnionFind {
  std::vector<std::int32_t> parent;
  std::vector<std::int32_t> size;

  explicit UnionFind(std::size_t n) : parent(n), size(n, 1) { std::iota(parent.begin(), parent.end(), 0); }

  std::int32_t root(std::int32_t x) {
    std::int32_t r = x;
    while (parent[r] != r) r = parent[r];
    while (parent[x] != r) {
      const std::int32_t next = parent[x];
      parent[x] = r;
      x = next;
    }
    return r;
  }

  void unite(std::int32_t a, std::int32_t b) {
    a = root(a);
    b = root(b);
    if (a == b) return;
    if (size[a] < size[b]) std::swap(a, b);
    parent[b] = a;
    size[a] += size[b];
  }
};

constexpr std::size_t kPairwiseLimit = 2048;

// Looks for u != v in the component with u - v in the difference monoid:
// Capped coordinates equal, Natural ones nonnegative, Integer ones free.
std::pair<std::int32_t, std::int32_t> find_witness(const WindowGraph& g, std::vector<std::int32_t>& members) {
  const std::size_t dim = g.dim;
  std::vector<std::size_t> naturals, others;
  for (std::size_t k = 0; k < dim; ++k)
    (g.window.kinds[k] == CoordKind::Natural ? naturals : others).push_back(k);

  auto differs_in_monoid = [&](std::int32_t u, std::int32_t v) {
    if (u == v) return false;
    for (std::size_t k = 0; k < dim; ++k) {
      const std::int64_t diff = g.at(u, k) - g.at(v, k);
      switch (g.window.kinds[k]) {
        case CoordKind::Capped:
          if (diff != 0) return false;
          break;
        case CoordKind::Natural:
          if (diff < 0) return false;
          break;
        case CoordKind::Integer:
          break;
      }
    }
    return true;
  };

  if (!naturals.empty() && naturals.size() <= 2) {
    // Sort by the non-natural coordinates, then the naturals; a dominance
    // sweep inside each block of equal non-natural coordinates is exhaustive
    // for pairs agreeing there.
    std::vector<std::size_t> order = others;
    order.insert(order.end(), naturals.begin(), naturals.end());
    std::sort(members.begin(), members.end(), [&](std::int32_t x, std::int32_t y) {
      for (std::size_t k : order)
        if (g.at(x, k) != g.at(y, k)) return g.at(x, k) < g.at(y, k);
      return false;
    });
    const std::size_t last = naturals.back();
    std::size_t block = 0;
    std::int32_t lowest = -1;
    for (std::size_t m = 0; m < members.size(); ++m) {
      const std::int32_t v = members[m];
      bool same_block = m > 0;
      for (std::size_t k : others)
        if (same_block && g.at(v, k) != g.at(members[block], k)) same_block = false;
      if (!same_block) {
        block = m;
        lowest = v;
        continue;
      }
      if (g.at(v, last) >= g.at(lowest, last)) return {v, lowest};
      lowest = v;
    }
  }
  if (members.size() <= kPairwiseLimit) {
    for (std::int32_t u : members)
      for (std::int32_t v : members)
        if (differs_in_monoid(u, v)) return {u, v};
  }
  return {-1, -1};
}

}  // namespace

WindowGraph build_window_graph(const IntMatrix& m, const Window& window, const OracleConfig& config) {
  const std::size_t dim = window.dim();
  if (window.lower.size() != dim || window.upper.size() != dim) {
    throw Error(ErrorCode::InvalidArgument, "window bounds do not match the coordinate kinds");
  }
  if (m.rows() != dim || m.cols() < 1 || m.cols() > 2) {
    throw Error(ErrorCode::InvalidArgument, "edge matrix must be dim x 1 or dim x 2");
  }
  if (window.plane && window.plane->normal.size() != dim) {
    throw Error(ErrorCode::InvalidArgument, "hyperplane dimension mismatch");
  }
  for (std::size_t k = 0; k < dim; ++k) {
    if (window.kinds[k] == CoordKind::Natural && window.lower[k] != 0) {
      throw Error(ErrorCode::InvalidArgument, "natural coordinates start at 0");
    }
  }
  std::vector<Point> columns;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    Point col;
    for (std::size_t k = 0; k < dim; ++k) col.push_back(to_i64(m(k, c)));
    columns.push_back(std::move(col));
  }

  WindowGraph g;
  g.dim = dim;
  g.window = window;
  if (window.empty()) return g;

  // Box volume, guarded against overflow.
  const std::int64_t budget = config.vertex_budget;
  std::uint64_t volume = 1;
  for (std::size_t k = 0; k < dim; ++k) {
    const auto extent = static_cast<std::uint64_t>(window.upper[k] - window.lower[k] + 1);
    if (volume > (std::uint64_t{1} << 62) / extent) throw Error(ErrorCode::WindowTooLarge, "window volume overflows");
    volume *= extent;
  }

  // With a plane, solve for one coordinate that has a nonzero coefficient.
  std::optional<std::size_t> solved;
  if (window.plane) {
    for (std::size_t k = dim; k-- > 0;)
      if (window.plane->normal[k] != 0) {
        solved = k;
        break;
      }
  }
  std::uint64_t enumerated = volume;
  if (solved) enumerated /= static_cast<std::uint64_t>(window.upper[*solved] - window.lower[*solved] + 1);
  if (enumerated > static_cast<std::uint64_t>(budget)) {
    throw Error(ErrorCode::WindowTooLarge, "window has " + std::to_string(enumerated) +
                                               " candidate points, budget " + std::to_string(budget));
  }

  Point u(window.lower);
  const auto advance = [&]() {
    for (std::size_t k = dim; k-- > 0;) {
      if (solved && k == *solved) continue;
      if (++u[k] <= window.upper[k]) return true;
      u[k] = window.lower[k];
    }
    return false;
  };
  for (bool more = true; more; more = advance()) {
    if (solved) {
      std::int64_t rest = window.plane->value;
      for (std::size_t k = 0; k < dim; ++k)
        if (k != *solved) rest -= window.plane->normal[k] * u[k];
      const std::int64_t coeff = window.plane->normal[*solved];
      if (rest % coeff != 0) continue;
      u[*solved] = rest / coeff;
      if (u[*solved] < window.lower[*solved] || u[*solved] > window.upper[*solved]) continue;
    } else if (window.plane && !on_plane(window.plane, u)) {
      continue;
    }
    g.coords.insert(g.coords.end(), u.begin(), u.end());
  }
  const std::size_t n = g.coords.size() / dim;
  if (n > static_cast<std::size_t>(std::numeric_limits<std::int32_t>::max())) {
    throw Error(ErrorCode::WindowTooLarge, "too many vertices");
  }

  if (!window.plane) {
    g.index.assign(volume, -1);
    for (std::size_t v = 0; v < n; ++v) g.index[*g.code(g.point(v))] = static_cast<std::int32_t>(v);
  } else {
    g.sparse_index.reserve(n);
    for (std::size_t v = 0; v < n; ++v) g.sparse_index.emplace_back(*g.code(g.point(v)), static_cast<std::int32_t>(v));
    std::sort(g.sparse_index.begin(), g.sparse_index.end());
  }

  // Mixed-radix codes make every neighbor lookup an offset plus bounds test.
  std::vector<std::uint64_t> stride(dim, 1);
  for (std::size_t k = dim; k-- > 1;)
    stride[k - 1] = stride[k] * static_cast<std::uint64_t>(window.upper[k] - window.lower[k] + 1);
  std::vector<std::uint64_t> codes(n);
  for (std::size_t v = 0; v < n; ++v) {
    std::uint64_t c = 0;
    for (std::size_t k = 0; k < dim; ++k) c += static_cast<std::uint64_t>(g.at(v, k) - window.lower[k]) * stride[k];
    codes[v] = c;
  }
  auto lookup = [&](std::uint64_t c) -> std::int32_t {
    if (!window.plane) return g.index[c];
    auto it = std::lower_bound(g.sparse_index.begin(), g.sparse_index.end(), std::make_pair(c, std::int32_t{-1}));
    return it != g.sparse_index.end() && it->first == c ? it->second : -1;
  };

  UnionFind uf(n);
  std::vector<bool> open_vertex(n, false);
  for (std::size_t v = 0; v < n; ++v) {
    const std::int64_t* here = &g.coords[v * dim];
    for (const Point& col : columns) {
      for (int sign : {1, -1}) {
        bool inside = true, monoid = true;
        std::int64_t offset = 0;
        for (std::size_t k = 0; k < dim; ++k) {
          const std::int64_t x = here[k] + sign * col[k];
          if (x < window.lower[k] || x > window.upper[k]) {
            inside = false;
            if (window.kinds[k] == CoordKind::Capped || (window.kinds[k] == CoordKind::Natural && x < 0)) {
              monoid = false;
            }
          }
          offset += sign * col[k] * static_cast<std::int64_t>(stride[k]);
        }
        std::int32_t other = -1;
        if (inside) other = lookup(codes[v] + static_cast<std::uint64_t>(offset));
        if (other >= 0) {
          if (sign > 0) uf.unite(static_cast<std::int32_t>(v), other);
        } else if (!inside && monoid) {
          // Off-plane points are never vertices; columns in the plane keep
          // neighbors on it, so only the box test matters here.
          Point w(here, here + dim);
          for (std::size_t k = 0; k < dim; ++k) w[k] += sign * col[k];
          if (window.in_monoid(w)) open_vertex[v] = true;
        }
      }
    }
  }

  std::vector<std::int32_t> id_of_root(n, -1);
  g.component.resize(n);
  std::vector<std::vector<std::int32_t>> members;
  std::vector<bool> open_component;
  for (std::size_t v = 0; v < n; ++v) {
    const std::int32_t r = uf.root(static_cast<std::int32_t>(v));
    if (id_of_root[r] < 0) {
      id_of_root[r] = static_cast<std::int32_t>(members.size());
      members.emplace_back();
      open_component.push_back(false);
    }
    const std::int32_t c = id_of_root[r];
    g.component[v] = c;
    members[c].push_back(static_cast<std::int32_t>(v));
    if (open_vertex[v]) open_component[c] = true;
  }

  g.certificate.assign(members.size(), Certificate::Undetermined);
  g.witness.assign(members.size(), {-1, -1});
  for (std::size_t c = 0; c < members.size(); ++c) {
    if (!open_component[c]) {
      g.certificate[c] = Certificate::ClosedFinite;
      continue;
    }
    const auto witness = find_witness(g, members[c]);
    if (witness.first >= 0) {
      g.certificate[c] = Certificate::InfiniteByDifference;
      g.witness[c] = witness;
    }
  }
  return g;
}

std::vector<ComponentReport> window_components(const IntMatrix& m, const Window& window, const OracleConfig& config) {
  const WindowGraph g = build_window_graph(m, window, config);
  std::vector<ComponentReport> out(g.component_count());
  for (std::size_t v = 0; v < g.size(); ++v) out[g.component[v]].vertices.push_back(g.point(v));
  for (std::size_t c = 0; c < out.size(); ++c) {
    std::sort(out[c].vertices.begin(), out[c].vertices.end());
    out[c].certificate = g.certificate[c];
    if (g.witness[c].first >= 0) out[c].witness = {g.point(g.witness[c].first), g.point(g.witness[c].second)};
  }
  std::sort(out.begin(), out.end(),
            [](const ComponentReport& x, const ComponentReport& y) { return x.vertices.front() < y.vertices.front(); });
  return out;
}

std::vector<Point> certified_infinite_vertices(const IntMatrix& m, const Window& window, std::int64_t margin,
                                               const OracleConfig& config) {
  if (margin < 0) throw Error(ErrorCode::InvalidArgument, "negative margin");
  if (!window.empty()) {
    for (std::size_t k = 0; k < window.dim(); ++k) {
      if (window.kinds[k] != CoordKind::Capped && margin > window.upper[k] - window.lower[k]) {
        throw Error(ErrorCode::InvalidArgument, "margin exceeds the window extent");
      }
    }
  }
  const WindowGraph g = build_window_graph(m, window, config);
  std::vector<Point> out;
  for (std::size_t v = 0; v < g.size(); ++v)
    if (g.certificate[g.component[v]] == Certificate::InfiniteByDifference) out.push_back(g.point(v));
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

IntMatrix to_matrix(const Mat2& m) {
  IntMatrix out(2, 2);
  out(0, 0) = m.m11;
  out(0, 1) = m.m12;
  out(1, 0) = m.m21;
  out(1, 1) = m.m22;
  return out;
}

std::int64_t entry_sum(const IntMatrix& m) {
  std::int64_t total = 0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) total += to_i64(abs_int(m(i, j)));
  return std::max<std::int64_t>(total, 1);
}

// Runs a growth loop: build(size) returns the candidate answer or nullopt
// while the window is unsettled. Stops once two successive sizes agree.
template <class Answer, class Attempt>
Answer grow_until_stable(std::int64_t start, std::int64_t budget, const std::string& what, Attempt attempt) {
  std::optional<Answer> previous;
  for (std::int64_t size = start;; size *= 2) {
    std::optional<Answer> current;
    try {
      current = attempt(size);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::WindowTooLarge) throw;
      throw Error(ErrorCode::NoStabilization, what + " did not stabilize within the vertex budget " +
                                                  std::to_string(budget));
    }
    if (current && previous && *current == *previous) return *current;
    previous = current;
    if (size > (std::int64_t{1} << 40)) throw Error(ErrorCode::NoStabilization, what + " did not stabilize");
  }
}

}  // namespace

ToralOracleResult oracle_toral(const Mat2& m, const OracleConfig& config) {
  if (!(m.m11 > 0 && m.m12 > 0 && m.m21 < 0 && m.m22 < 0)) {
    throw Error(ErrorCode::OrientationError,
                "row 1 must lie in the open positive quadrant and row 2 in the open negative quadrant");
  }
  if (m.det() == 0) throw Error(ErrorCode::RankDeficient, "2x2 matrix is singular");
  const IntMatrix edges = to_matrix(m);
  using Answer = std::pair<std::int64_t, std::vector<Exponent>>;
  std::int64_t finite_vertices = 0;
  std::int64_t final_size = 0;
  const Answer answer = grow_until_stable<Answer>(
      4 * entry_sum(edges), config.vertex_budget, "toral oracle", [&](std::int64_t size) -> std::optional<Answer> {
        const WindowGraph g = build_window_graph(edges, Window::natural_box({size, size}), config);
        const std::int64_t core = size / 2;
        std::vector<Exponent> infinite;
        std::int64_t finite_count = 0, finite_total = 0;
        bool settled = true;
        for (std::size_t c = 0; c < g.component_count(); ++c)
          if (g.certificate[c] == Certificate::ClosedFinite) ++finite_count;
        for (std::size_t v = 0; v < g.size(); ++v) {
          const std::int64_t w = g.at(v, 0), z = g.at(v, 1);
          const Certificate cert = g.certificate[g.component[v]];
          if (cert == Certificate::ClosedFinite) {
            ++finite_total;
            if (w >= core || z >= core) settled = false;  // minimal generators could leave the core
          } else if (w <= core && z <= core) {
            if (cert == Certificate::Undetermined) settled = false;
            else infinite.push_back({w, z});
          }
        }
        if (!settled) return std::nullopt;
        finite_vertices = finite_total;
        final_size = size;
        return Answer{finite_count, minimal_elements(std::move(infinite))};
      });
  ToralOracleResult out;
  out.finite_components = answer.first;
  out.finite_vertices = finite_vertices;
  out.generators = MonomialIdeal({0, 1}, answer.second);
  out.window = final_size;
  return out;
}

MonomialIdeal oracle_toral_generators(const Mat2& m, const OracleConfig& config) {
  return oracle_toral(m, config).generators;
}

namespace {

void require_band(const Mat2& m) {
  if (m.m11 <= 0 || m.m12 <= 0 || m.m21 <= 0 || m.m22 <= 0) {
    throw Error(ErrorCode::InvalidArgument, "band matrices need positive entries");
  }
  if (m.det() == 0) throw Error(ErrorCode::RankDeficient, "band matrix is singular");
}

Window band_window(std::int64_t level, std::int64_t height) {
  Window w;
  w.lower = {0, 0};
  w.upper = {level, height};
  w.kinds = {CoordKind::Capped, CoordKind::Natural};
  return w;
}

}  // namespace

std::vector<std::int64_t> oracle_band_columns(const Mat2& m, std::int64_t level, const OracleConfig& config) {
  require_band(m);
  if (level < 0) throw Error(ErrorCode::InvalidArgument, "negative level");
  const IntMatrix edges = to_matrix(m);
  using Answer = std::vector<std::int64_t>;
  return grow_until_stable<Answer>(
      4 * entry_sum(edges), config.vertex_budget, "band oracle", [&](std::int64_t height) -> std::optional<Answer> {
        const WindowGraph g = build_window_graph(edges, band_window(level, height), config);
        std::set<std::int64_t> columns;
        for (std::size_t v = 0; v < g.size(); ++v) {
          const Certificate cert = g.certificate[g.component[v]];
          if (cert == Certificate::InfiniteByDifference) columns.insert(g.at(v, 0));
          else if (cert == Certificate::Undetermined && g.at(v, 1) <= height / 2) return std::nullopt;
        }
        return Answer(columns.begin(), columns.end());
      });
}

std::optional<std::int64_t> oracle_band_min_level(const Mat2& m, std::int64_t max_level, const OracleConfig& config) {
  for (std::int64_t level = 0; level <= max_level; ++level)
    if (!oracle_band_columns(m, level, config).empty()) return level;
  return std::nullopt;
}

bool oracle_band_vertex_infinite(const Mat2& m, std::int64_t level, Vertex2 v, const OracleConfig& config) {
  return oracle_band_vertices_infinite(m, level, {v}, config).front();
}

std::vector<bool> oracle_band_vertices_infinite(const Mat2& m, std::int64_t level, const std::vector<Vertex2>& vertices,
                                                const OracleConfig& config) {
  require_band(m);
  const IntMatrix edges = to_matrix(m);
  std::int64_t height = 4 * entry_sum(edges);
  for (const Vertex2& v : vertices) {
    if (v.w < 0 || v.w > level || v.z < 0) throw Error(ErrorCode::InvalidArgument, "vertex outside the band");
    height = std::max(height, 2 * v.z + 1);
  }
  for (;; height *= 2) {
    WindowGraph g;
    try {
      g = build_window_graph(edges, band_window(level, height), config);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::WindowTooLarge) throw;
      throw Error(ErrorCode::NoStabilization, "component of a vertex stayed undetermined");
    }
    std::vector<bool> out;
    bool settled = true;
    for (const Vertex2& v : vertices) {
      const Certificate cert = g.certificate[g.component[*g.find({v.w, v.z})]];
      if (cert == Certificate::Undetermined) {
        settled = false;
        break;
      }
      out.push_back(cert == Certificate::InfiniteByDifference);
    }
    if (settled) return out;
  }
}

MonomialIdeal oracle_andean_monomials(const IntMatrix& bhat, const OracleConfig& config) {
  if (bhat.rows() != 3 || bhat.cols() != 2) throw Error(ErrorCode::InvalidArgument, "expected a 3x2 matrix");
  const std::int64_t r = to_i64(bhat(0, 0)), s = to_i64(bhat(0, 1));
  const std::int64_t a = to_i64(bhat(2, 0)), b = to_i64(bhat(2, 1));
  if (r <= 0 || s <= 0 || a <= 0 || b <= 0) {
    throw Error(ErrorCode::InvalidArgument, "rows 1 and 3 must lie in the open positive quadrant");
  }
  if (bhat(1, 0) * s != bhat(1, 1) * r || bhat(1, 0) >= 0) {
    throw Error(ErrorCode::InvalidArgument, "row 2 must be a negative multiple of row 1");
  }
  if (r * b == s * a) throw Error(ErrorCode::RankDeficient, "matrix has rank < 2");
  const Rat lambda = make_rat(-bhat(1, 0), Int(r));
  const std::int64_t p = to_i64(lambda.get_num()), q = to_i64(lambda.get_den());

  // Infinite (u_x, u_y) found on slice p u_x + q u_y = key.
  std::map<std::int64_t, std::vector<Exponent>> per_key;
  auto slice = [&](std::int64_t key) -> const std::vector<Exponent>& {
    if (auto it = per_key.find(key); it != per_key.end()) return it->second;
    Window window;
    window.lower = {0, 0, 0};
    window.kinds = {CoordKind::Capped, CoordKind::Capped, CoordKind::Natural};
    window.plane = Hyperplane{{p, q, 0}, key};
    using Answer = std::vector<Exponent>;
    auto answer = grow_until_stable<Answer>(
        4 * entry_sum(bhat), config.vertex_budget, "slice oracle", [&](std::int64_t height) -> std::optional<Answer> {
          window.upper = {key / p, key / q, height};
          const WindowGraph g = build_window_graph(bhat, window, config);
          std::set<Exponent> found;
          for (std::size_t v = 0; v < g.size(); ++v) {
            const Certificate cert = g.certificate[g.component[v]];
            if (cert == Certificate::InfiniteByDifference) found.insert({g.at(v, 0), g.at(v, 1)});
            else if (cert == Certificate::Undetermined && g.at(v, 2) <= height / 2) return std::nullopt;
          }
          return Answer(found.begin(), found.end());
        });
    return per_key.emplace(key, std::move(answer)).first->second;
  };

  auto generators_up_to = [&](std::int64_t level) {
    std::vector<Exponent> points;
    for (std::int64_t key = 0; key <= p * level; ++key) {
      const auto& found = slice(key);
      points.insert(points.end(), found.begin(), found.end());
    }
    return minimal_elements(std::move(points));
  };

  std::int64_t level = r + s + 1;
  std::vector<Exponent> previous = generators_up_to(level);
  for (int round = 0; round < 4; ++round) {
    level = 2 * level - 1;
    std::vector<Exponent> current = generators_up_to(level);
    if (current == previous) return MonomialIdeal({0, 1}, current);
    previous = std::move(current);
  }
  throw Error(ErrorCode::NoStabilization, "Andean oracle generators kept changing with the slice bound");
}

}  // namespace lbi
