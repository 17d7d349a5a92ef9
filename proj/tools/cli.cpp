#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <set>
#include <sstream>

#include "lbi/arrangement.hpp"
#include "lbi/oracle.hpp"
#include "lbi/primary_decomp.hpp"
#include "lbi/report.hpp"
#include "lbi/svg.hpp"
#include "lbi/verify.hpp"

namespace lbi {

namespace {

struct RunConfig {
  std::string matrix;   // inline text, "-" for stdin
  std::string file;     // positional input path
  std::string grading;  // optional A, inline
  std::string format = "text";
  std::string kappa;
  std::string graph_kind;
  std::string level;
  std::string svg_path;
  std::int64_t cap = 0;
  int max_entry = 5;
  std::uint64_t seed = 1;
  std::vector<std::string> cases;
};

std::string unescape_rows(std::string text) {
  std::string out;
  for (std::size_t k = 0; k < text.size(); ++k) {
    if (text[k] == '\\' && k + 1 < text.size() && text[k + 1] == 'n') {
      out += '\n';
      ++k;
    } else if (text[k] == ';') {
      out += '\n';
    } else {
      out += text[k];
    }
  }
  return out;
}

std::string read_input(const RunConfig& config, std::istream& in) {
  if (!config.matrix.empty() && !config.file.empty()) {
    throw Error(ErrorCode::InvalidArgument, "give either --matrix or an input file, not both");
  }
  if (config.matrix == "-") return std::string(std::istreambuf_iterator<char>(in), {});
  if (!config.matrix.empty()) return unescape_rows(config.matrix);
  if (config.file.empty()) throw Error(ErrorCode::InvalidArgument, "no input matrix (use --matrix or a file)");
  std::ifstream file(config.file);
  if (!file) throw Error(ErrorCode::MalformedInput, "cannot read " + config.file);
  return std::string(std::istreambuf_iterator<char>(file), {});
}

AMatrix grading_for(const BMatrix& b, const RunConfig& config) {
  if (config.grading.empty()) return cokernel(b);
  return AMatrix(parse_int_matrix(unescape_rows(config.grading)), b);
}

std::string compact(const IntMatrix& m) {
  std::string out = "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out += i ? ",[" : "[";
    for (std::size_t j = 0; j < m.cols(); ++j) out += (j ? "," : "") + m(i, j).get_str();
    out += "]";
  }
  return out + "]";
}

bool json_output(const RunConfig& config) { return config.format == "json"; }

void write_file(const std::string& path, const std::string& text) {
  std::ofstream file(path);
  if (!file) throw Error(ErrorCode::InvalidArgument, "cannot write " + path);
  file << text;
}

// ---- subcommands ----------------------------------------------------------

int cmd_decompose(const RunConfig& config, std::istream& in, std::ostream& out) {
  const BMatrix b = parse_matrix(read_input(config, in));
  const auto components = decomposition_report(b, config.cap);
  if (json_output(config)) {
    out << decomposition_json(b, components).dump(2) << '\n';
  } else {
    out << decomposition_text(b, components);
  }
  return 0;
}

int cmd_arrangement(const RunConfig& config, std::istream& in, std::ostream& out) {
  const BMatrix b = parse_matrix(read_input(config, in));
  const AMatrix a = grading_for(b, config);
  const auto strata = andean_arrangement(b, a);
  const bool ok = grading_cone_is_pointed(b);
  if (json_output(config)) {
    out << arrangement_json(strata, ok).dump(2) << '\n';
  } else {
    out << arrangement_text(strata, ok);
  }
  return 0;
}

int cmd_holonomic(const RunConfig& config, std::istream& in, std::ostream& out) {
  const BMatrix b = parse_matrix(read_input(config, in));
  const AMatrix a = grading_for(b, config);
  const HolonomicityVerdict verdict = is_holonomic(b, a, parse_rational_vector(config.kappa));
  if (json_output(config)) {
    out << verdict_json(verdict).dump(2) << '\n';
  } else {
    out << verdict_text(verdict) << '\n';
  }
  return 0;
}

std::string join(const std::vector<std::int64_t>& values) {
  std::string out;
  for (std::size_t k = 0; k < values.size(); ++k) out += (k ? " " : "") + std::to_string(values[k]);
  return out;
}

// Window edges of G(M) between the listed vertices.
std::vector<FigureEdge> window_edges(const Mat2& m, const std::vector<FigureVertex>& vertices) {
  std::set<std::pair<std::int64_t, std::int64_t>> present;
  for (const FigureVertex& v : vertices) present.insert({v.at.w, v.at.z});
  std::vector<FigureEdge> edges;
  for (const FigureVertex& v : vertices)
    for (int k = 0; k < 2; ++k) {
      const Vertex2 c = m.column(k);
      const Vertex2 to{v.at.w + c.w, v.at.z + c.z};
      if (present.count({to.w, to.z})) edges.push_back({v.at, to});
    }
  return edges;
}

int graph_2x2(const RunConfig& config, const IntMatrix& matrix, std::ostream& out) {
  const Mat2 m = Mat2::from(matrix);
  const Census2x2 census = finite_census_2x2(m);
  const MonomialIdeal infinite = toral_infinite_generators(m, config.cap);
  if (!config.svg_path.empty() || config.format == "svg") {
    const auto finite = finite_vertex_set_2x2(m, config.cap);
    std::int64_t extent = std::max(m.m11, m.m12) + std::max(-m.m21, -m.m22);
    for (const Vertex2& v : finite) extent = std::max({extent, v.w + 1, v.z + 1});
    std::vector<FigureVertex> vertices;
    for (std::int64_t w = 0; w <= extent; ++w)
      for (std::int64_t z = 0; z <= extent; ++z) {
        const bool is_finite = std::binary_search(finite.begin(), finite.end(), Vertex2{w, z},
                                                  [](Vertex2 x, Vertex2 y) { return std::tie(x.w, x.z) < std::tie(y.w, y.z); });
        vertices.push_back({{w, z}, !is_finite});
      }
    const std::string svg = render_svg(vertices, window_edges(m, vertices), "G(M), " + compact(matrix), "x1", "x2");
    if (config.svg_path.empty()) {
      out << svg;
      return 0;
    }
    write_file(config.svg_path, svg);
  }
  if (json_output(config)) {
    nlohmann::json j;
    j["finite_components"] = census.count;
    j["representatives"] = nlohmann::json::array();
    for (const Vertex2& v : census.rectangle) j["representatives"].push_back({v.w, v.z});
    j["infinite_generators"] = infinite.generators();
    out << j.dump(2) << '\n';
  } else {
    out << "finite components: " << census.count << '\n';
    out << "infinite vertices generated by:";
    for (const Exponent& g : infinite.generators()) out << ' ' << monomial_string(g, true);
    out << '\n';
  }
  return 0;
}

std::int64_t integer_level(const RunConfig& config) {
  if (config.level.empty()) throw Error(ErrorCode::InvalidArgument, "--level is required");
  const Int level = parse_integer(config.level);
  if (level < 0) throw Error(ErrorCode::InvalidArgument, "--level must be nonnegative");
  return to_i64(level);
}

int graph_band(const RunConfig& config, const IntMatrix& matrix, std::ostream& out) {
  const Mat2 m = Mat2::from(matrix);
  const BandSpec spec = BandSpec::normalize(m);
  const std::int64_t level = integer_level(config);
  const auto columns = band_infinite_columns(spec, level);
  if (!config.svg_path.empty() || config.format == "svg") {
    const std::int64_t height = 2 * (spec.a + spec.b) + 2;
    std::vector<Vertex2> points;
    for (std::int64_t z = 0; z <= height; ++z)
      for (std::int64_t w = 0; w <= level; ++w) points.push_back({w, z});
    const auto infinite = oracle_band_vertices_infinite(m, level, points, OracleConfig::from_env());
    std::vector<FigureVertex> vertices;
    for (std::size_t k = 0; k < points.size(); ++k) vertices.push_back({points[k], infinite[k]});
    const std::string svg =
        render_svg(vertices, window_edges(m, vertices), "G_" + std::to_string(level) + "(M), " + compact(matrix));
    if (config.svg_path.empty()) {
      out << svg;
      return 0;
    }
    write_file(config.svg_path, svg);
  }
  if (json_output(config)) {
    nlohmann::json j;
    j["level"] = level;
    j["minimal_infinite_level"] = band_min_infinite_level(spec);
    j["infinite_columns"] = columns;
    out << j.dump(2) << '\n';
  } else {
    out << "minimal infinite level: " << band_min_infinite_level(spec) << '\n';
    if (columns.empty()) {
      out << "no infinite components\n";
    } else {
      out << "infinite columns: " << join(columns) << '\n';
    }
  }
  return 0;
}

// Rows (r, s), (-lambda r, -lambda s), (a, b).
SliceSpec slice_spec(const IntMatrix& matrix) {
  if (matrix.rows() != 3 || matrix.cols() != 2) throw Error(ErrorCode::MalformedInput, "slice graphs need a 3x2 matrix");
  if (matrix(0, 0) <= 0 || matrix(0, 1) <= 0) throw Error(ErrorCode::InvalidArgument, "first row must be positive");
  const Rat lambda = make_rat(-matrix(1, 0), matrix(0, 0));
  if (Rat(matrix(1, 1)) != -lambda * Rat(matrix(0, 1))) {
    throw Error(ErrorCode::InvalidArgument, "second row must be a multiple of the first");
  }
  return SliceSpec::make(to_i64(matrix(0, 0)), to_i64(matrix(0, 1)), to_i64(matrix(2, 0)), to_i64(matrix(2, 1)),
                         lambda);
}

int graph_slice(const RunConfig& config, const IntMatrix& matrix, std::ostream& out) {
  const SliceSpec spec = slice_spec(matrix);
  if (config.level.empty()) throw Error(ErrorCode::InvalidArgument, "--level is required");
  const Rat level = parse_rational(config.level);
  const SliceTranslation t = slice_translation_reduce(spec, level);
  const Straightening st = slice_to_band(spec, t.level);
  std::vector<std::int64_t> x_columns;
  for (std::int64_t w : band_infinite_columns(st.band, st.level)) x_columns.push_back(st.q * w + t.i);
  if (!config.svg_path.empty() || config.format == "svg") {
    // Drawn in the (u_x, u_z) plane; u_y is determined by the slice.
    const Mat2 band = st.band.matrix();
    const std::int64_t height = 2 * (st.band.a + st.band.b) + 2;
    std::vector<Vertex2> points;
    for (std::int64_t z = 0; z <= height; ++z)
      for (std::int64_t w = 0; w <= st.level; ++w) points.push_back({w, z});
    const auto infinite = oracle_band_vertices_infinite(band, st.level, points, OracleConfig::from_env());
    std::vector<FigureVertex> vertices;
    for (std::size_t k = 0; k < points.size(); ++k) vertices.push_back({points[k], infinite[k]});
    auto edges = window_edges(band, vertices);
    auto to_slice = [&](Vertex2 v) { return Vertex2{st.q * v.w + t.i, v.z}; };
    for (FigureVertex& v : vertices) v.at = to_slice(v.at);
    for (FigureEdge& e : edges) e = {to_slice(e.from), to_slice(e.to)};
    const std::string svg = render_svg(vertices, edges, "S(" + to_string(level) + "), " + compact(matrix), "x", "z");
    if (config.svg_path.empty()) {
      out << svg;
      return 0;
    }
    write_file(config.svg_path, svg);
  }
  if (json_output(config)) {
    nlohmann::json j;
    j["level"] = to_string(level);
    j["translation"] = {t.i, t.j};
    j["reduced_level"] = to_string(t.level);
    j["band"] = {{st.band.r, st.band.s}, {st.band.a, st.band.b}};
    j["band_level"] = st.level;
    j["infinite_x"] = x_columns;
    out << j.dump(2) << '\n';
  } else {
    out << "S(" << to_string(level) << ") translates by (" << t.i << ", " << t.j << ") onto S(" << to_string(t.level)
        << ")\n";
    out << "straightened band: [[" << st.band.r << ", " << st.band.s << "], [" << st.band.a << ", " << st.band.b
        << "]] at level " << st.level << '\n';
    if (x_columns.empty()) {
      out << "no infinite components\n";
    } else {
      out << "infinite at x = " << join(x_columns) << '\n';
    }
  }
  return 0;
}

int cmd_graph(const RunConfig& config, std::istream& in, std::ostream& out) {
  const IntMatrix matrix = parse_int_matrix(read_input(config, in));
  if (config.graph_kind == "2x2") return graph_2x2(config, matrix, out);
  if (config.graph_kind == "band") return graph_band(config, matrix, out);
  return graph_slice(config, matrix, out);
}

SuiteResult run_suite(const std::string& name, const RunConfig& config, const OracleConfig& oracle) {
  if (name == "2x2") return verify_2x2(config.max_entry, oracle);
  if (name == "band") return verify_bands(config.max_entry, 4, oracle);
  if (name == "andean") return verify_andean(config.max_entry, oracle);
  if (name == "dilation-boundary") return verify_dilation_boundary(config.max_entry, oracle);
  if (name == "left-turn") return verify_left_turns(std::max(config.max_entry, 9), oracle);
  if (name == "slice") return verify_slices(config.max_entry, oracle);
  if (name == "grading") return verify_gradings(200, 20, config.seed);
  return verify_a_independence(50, config.seed);
}

int cmd_verify(const RunConfig& config, std::ostream& out) {
  if (config.max_entry < 1) throw Error(ErrorCode::InvalidArgument, "empty case space: --max-entry must be at least 1");
  const std::vector<std::string> names =
      config.cases.empty() ? std::vector<std::string>{"2x2", "band", "andean"} : config.cases;
  const OracleConfig oracle = OracleConfig::from_env();
  std::vector<SuiteResult> results;
  for (const std::string& name : names) results.push_back(run_suite(name, config, oracle));
  std::int64_t cases = 0;
  bool ok = true;
  for (const SuiteResult& r : results) {
    cases += r.cases;
    ok = ok && r.passed();
  }
  std::string label;
  for (std::size_t k = 0; k < names.size(); ++k) label += (k ? "/" : "") + names[k];
  if (json_output(config)) {
    nlohmann::json j;
    j["passed"] = ok;
    j["cases"] = cases;
    j["suites"] = nlohmann::json::array();
    for (const SuiteResult& r : results) {
      j["suites"].push_back({{"name", r.name}, {"cases", r.cases}, {"failures", r.failures}, {"mismatches", r.mismatches}});
    }
    out << j.dump(2) << '\n';
  } else {
    for (const SuiteResult& r : results) {
      out << r.name << ": " << r.cases << " cases, " << r.failures << " failures\n";
      for (const std::string& m : r.mismatches) out << "  " << m << '\n';
    }
    if (ok) {
      out << "all " << label << " equivalences passed (" << cases << " cases)\n";
    } else {
      out << "verification FAILED\n";
    }
  }
  return ok ? 0 : 1;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Primary decomposition of codimension two lattice basis ideals and Horn system holonomicity", "lbi"};
  app.require_subcommand(1);
  RunConfig config;

  auto add_input = [&config](CLI::App* sub) {
    sub->add_option("--matrix", config.matrix, "rows separated by newlines, \\n or ';'; '-' reads stdin");
    sub->add_option("file", config.file, "file holding the matrix");
  };
  auto add_format = [&config](CLI::App* sub, std::vector<std::string> formats) {
    sub->add_option("--format", config.format, "output format")->check(CLI::IsMember(formats));
  };

  CLI::App* decompose = app.add_subcommand("decompose", "component report for I(B)");
  add_input(decompose);
  add_format(decompose, {"text", "json"});
  decompose->add_option("--cap", config.cap, "vertex cap for one finite component (0: default)");

  CLI::App* arrangement = app.add_subcommand("arrangement", "Andean arrangement of I(B)");
  add_input(arrangement);
  add_format(arrangement, {"text", "json"});
  arrangement->add_option("--grading", config.grading, "grading matrix A (default: cokernel of B)");

  CLI::App* holonomic = app.add_subcommand("holonomic", "holonomicity of Horn(B, kappa)");
  add_input(holonomic);
  add_format(holonomic, {"text", "json"});
  holonomic->add_option("--grading", config.grading, "grading matrix A (default: cokernel of B)");
  holonomic->add_option("--kappa", config.kappa, "comma separated rationals")->required();

  CLI::App* graph = app.add_subcommand("graph", "component census of a lattice graph");
  graph->add_option("kind", config.graph_kind, "2x2, band or slice")
      ->required()
      ->check(CLI::IsMember({"2x2", "band", "slice"}));
  add_input(graph);
  add_format(graph, {"text", "json", "svg"});
  graph->add_option("--level", config.level, "band level, or slice level (rational)");
  graph->add_option("--svg", config.svg_path, "write an SVG figure to this file");
  graph->add_option("--cap", config.cap, "vertex cap for one finite component (0: default)");

  CLI::App* verify = app.add_subcommand("verify", "formula against oracle sweeps");
  add_format(verify, {"text", "json"});
  verify->add_option("--max-entry", config.max_entry, "largest absolute matrix entry in the sweeps");
  verify->add_option("--seed", config.seed, "seed for the randomized suites");
  verify->add_option("--case", config.cases, "suite to run (repeatable)")
      ->check(CLI::IsMember({"2x2", "band", "andean", "dilation-boundary", "left-turn", "slice", "grading",
                             "a-independence"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // CLI11 only prints to the standard streams.
    std::ostringstream o, e_stream;
    const int code = app.exit(e, o, e_stream);
    out << o.str();
    err << e_stream.str();
    return code == 0 ? 0 : 2;
  }

  try {
    if (*decompose) return cmd_decompose(config, in, out);
    if (*arrangement) return cmd_arrangement(config, in, out);
    if (*holonomic) return cmd_holonomic(config, in, out);
    if (*graph) return cmd_graph(config, in, out);
    return cmd_verify(config, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.is_budget_exhaustion() ? 3 : 2;
  }
}

}  // namespace lbi
