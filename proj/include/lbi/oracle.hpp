#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "lbi/lattice_graphs.hpp"
#include "lbi/matrix.hpp"
#include "lbi/monomial_ideal.hpp"

namespace lbi {

/// Natural: the monoid coordinate is >= 0 and the window's upper bound is an
/// artificial cut. Integer: both bounds are cuts. Capped: the window bounds are
/// genuine bounds of the vertex set (the w <= l of a band graph).
enum class CoordKind { Natural, Integer, Capped };

using Point = std::vector<std::int64_t>;

/// Restricts vertices to normal . u == value.
struct Hyperplane {
  Point normal;
  std::int64_t value = 0;
};

struct Window {
  Point lower;
  Point upper;
  std::vector<CoordKind> kinds;
  std::optional<Hyperplane> plane;

  /// [0, upper_k] in every coordinate, all Natural.
  static Window natural_box(const Point& upper);

  std::size_t dim() const noexcept { return kinds.size(); }
  bool empty() const;
  bool contains(const Point& u) const;
  /// Membership in the vertex set the window approximates.
  bool in_monoid(const Point& u) const;
};

enum class Certificate { ClosedFinite, InfiniteByDifference, Undetermined };

struct ComponentReport {
  std::vector<Point> vertices;  // sorted
  Certificate certificate = Certificate::Undetermined;
  /// For InfiniteByDifference: u - v lies in the monoid of differences.
  std::optional<std::pair<Point, Point>> witness;
};

struct OracleConfig {
  /// Largest window (in lattice points) a single sweep may enumerate.
  std::int64_t vertex_budget = 4'000'000;

  /// Default config with the budget taken from LATTICE_ANDEAN_BUDGET when set.
  static OracleConfig from_env();
};

/// Flat union-find result for one window: the form the growth loops use.
struct WindowGraph {
  std::size_t dim = 0;
  std::vector<std::int64_t> coords;           // vertex k occupies [k*dim, (k+1)*dim)
  std::vector<std::int32_t> component;        // per vertex
  std::vector<Certificate> certificate;       // per component
  std::vector<std::pair<std::int32_t, std::int32_t>> witness;  // per component, (-1, -1) if none

  std::size_t size() const noexcept { return component.size(); }
  std::int64_t at(std::size_t vertex, std::size_t k) const { return coords[vertex * dim + k]; }
  Point point(std::size_t vertex) const;
  std::size_t component_count() const noexcept { return certificate.size(); }
  /// Vertex index of u, if u is a window vertex.
  std::optional<std::size_t> find(const Point& u) const;

  Window window;
  std::vector<std::int64_t> index;  // dense lookup for windows without a plane
  std::vector<std::pair<std::uint64_t, std::int32_t>> sparse_index;  // sorted, with a plane
  std::optional<std::uint64_t> code(const Point& u) const;
};

/// Components of the graph on the window points whose edges are the columns
/// of m (dim x 1 or dim x 2). Throws WindowTooLarge over the vertex budget.
WindowGraph build_window_graph(const IntMatrix& m, const Window& window, const OracleConfig& config = {});

/// build_window_graph, one report per component, ordered by smallest vertex.
std::vector<ComponentReport> window_components(const IntMatrix& m, const Window& window,
                                               const OracleConfig& config = {});

/// Vertices of components certified infinite, sorted. Infinite certificates
/// are sound at any distance from the window faces; margin only has to be
/// smaller than every cut coordinate's extent (InvalidArgument otherwise).
std::vector<Point> certified_infinite_vertices(const IntMatrix& m, const Window& window, std::int64_t margin,
                                               const OracleConfig& config = {});

// ---- growth-loop oracles --------------------------------------------------

struct ToralOracleResult {
  std::int64_t finite_components = 0;
  std::int64_t finite_vertices = 0;
  MonomialIdeal generators;
  std::int64_t window = 0;  // side of the window the answer stabilized on
};

/// Counts the closed finite components of G(M) on N^2 and collects the minimal
/// certified-infinite vertices, doubling the window until two successive
/// windows agree. Throws NoStabilization when the budget runs out.
ToralOracleResult oracle_toral(const Mat2& m, const OracleConfig& config = {});
MonomialIdeal oracle_toral_generators(const Mat2& m, const OracleConfig& config = {});

/// Columns of G_level(M) carrying a certified infinite vertex, for a band
/// matrix M = [[r, s], [a, b]] with positive entries in either orientation.
std::vector<std::int64_t> oracle_band_columns(const Mat2& m, std::int64_t level, const OracleConfig& config = {});

/// Smallest level <= max_level whose band graph has a certified infinite
/// component.
std::optional<std::int64_t> oracle_band_min_level(const Mat2& m, std::int64_t max_level,
                                                  const OracleConfig& config = {});

/// Whether the component of v in G_level(M) is infinite.
bool oracle_band_vertex_infinite(const Mat2& m, std::int64_t level, Vertex2 v, const OracleConfig& config = {});

/// The same question for many vertices, sharing one growing window.
std::vector<bool> oracle_band_vertices_infinite(const Mat2& m, std::int64_t level, const std::vector<Vertex2>& vertices,
                                                const OracleConfig& config = {});

/// Monomial part for the prime <x, y> of the 3x2 matrix with rows (r, s),
/// (-lambda r, -lambda s), (a, b): minimal (u_x, u_y) such that some
/// (u_x, u_y, u_z) in N^3 is a certified infinite vertex. Every slice is
/// enumerated directly in N^3 up to a level bound that is doubled until the
/// generators agree.
MonomialIdeal oracle_andean_monomials(const IntMatrix& bhat, const OracleConfig& config = {});

}  // namespace lbi
