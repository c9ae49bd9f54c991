#include "polystack/io.hpp"

#include "polystack/catalog.hpp"
#include "polystack/constructions.hpp"
#include "polystack/errors.hpp"
#include "polystack/lattice.hpp"
#include "polystack/linalg.hpp"
#include "polystack/rational.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <charconv>
#include <cstddef>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace polystack {

namespace {

struct Line {
  int number = 0;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(const std::string& text) {
  std::vector<Line> out;
  std::istringstream in(text);
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    const std::size_t hash = raw.find('#');
    if (hash != std::string::npos) raw.resize(hash);
    std::istringstream linestream(raw);
    Line line;
    line.number = number;
    std::string tok;
    while (linestream >> tok) line.tokens.push_back(tok);
    if (!line.tokens.empty()) out.push_back(std::move(line));
  }
  return out;
}

[[noreturn]] void parse_fail(int line, const std::string& msg) {
  fail(ErrorKind::Parse, "line " + std::to_string(line) + ": " + msg);
}

long parse_integer(const Line& line, const std::string& tok,
                   const std::string& what) {
  long value = 0;
  const char* begin = tok.data();
  const char* end = tok.data() + tok.size();
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end) {
    parse_fail(line.number, "expected " + what + ", got '" + tok + "'");
  }
  return value;
}

// Orients the span hyperplane of one facet row so the reference interior
// point is Beneath it.
Hyperplane oriented_facet_plane(const std::vector<Vec>& points,
                                const Vec& reference) {
  const std::optional<Hyperplane> plane = hyperplane_span(points);
  if (!plane) {
    fail(ErrorKind::Invariant, "facet vertices do not span a hyperplane");
  }
  const Side side = classify_point(*plane, reference);
  if (side == Side::On) {
    fail(ErrorKind::Invariant,
         "the vertex barycenter lies on a facet hyperplane");
  }
  Hyperplane out = *plane;
  if (side == Side::Beyond) {
    // Negation keeps the entries coprime integers, so it stays canonical.
    for (Rational& c : out.normal) c = -c;
    out.offset = -out.offset;
  }
  return out;
}

} // namespace

Polytope parse_polytope_text(const std::string& text) {
  const std::vector<Line> lines = tokenize(text);
  std::size_t li = 0;
  const auto need = [&](const std::string& what) -> const Line& {
    if (li >= lines.size()) {
      fail(ErrorKind::Parse, "unexpected end of file: expected " + what);
    }
    return lines[li];
  };

  {
    const Line& ln = need("header 'POLYTOPE 1'");
    if (ln.tokens.size() != 2 || ln.tokens[0] != "POLYTOPE" ||
        ln.tokens[1] != "1") {
      parse_fail(ln.number, "expected header 'POLYTOPE 1'");
    }
    ++li;
  }

  int dim = 0;
  {
    const Line& ln = need("'DIM <d>'");
    if (ln.tokens.size() != 2 || ln.tokens[0] != "DIM") {
      parse_fail(ln.number, "expected 'DIM <d>'");
    }
    const long d = parse_integer(ln, ln.tokens[1], "a dimension");
    if (d < 2 || d > 16) {
      parse_fail(ln.number, "DIM must be between 2 and 16");
    }
    dim = static_cast<int>(d);
    ++li;
  }

  long vertex_count = 0;
  {
    const Line& ln = need("'VERTICES <n>'");
    if (ln.tokens.size() != 2 || ln.tokens[0] != "VERTICES") {
      parse_fail(ln.number, "expected 'VERTICES <n>'");
    }
    vertex_count = parse_integer(ln, ln.tokens[1], "a vertex count");
    if (vertex_count < 1 || vertex_count > 100000) {
      parse_fail(ln.number, "VERTICES must be between 1 and 100000");
    }
    ++li;
  }

  std::vector<Vec> vertices;
  vertices.reserve(static_cast<std::size_t>(vertex_count));
  for (long i = 0; i < vertex_count; ++i) {
    const Line& ln = need("a vertex row");
    if (static_cast<int>(ln.tokens.size()) != dim) {
      parse_fail(ln.number, "vertex row must have exactly DIM coordinates");
    }
    Vec v;
    for (const std::string& tok : ln.tokens) {
      try {
        v.push_back(parse_rational(tok));
      } catch (const Error& e) {
        parse_fail(ln.number, e.what());
      }
    }
    vertices.push_back(std::move(v));
    ++li;
  }

  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (vertices[i] == vertices[j]) {
        fail(ErrorKind::Invariant,
             "vertex rows " + std::to_string(i) + " and " + std::to_string(j) +
                 " are identical points");
      }
    }
  }

  if (li >= lines.size()) {
    // No FACETS section: recompute the facet structure from scratch.
    if (vertex_count > 64) {
      fail(ErrorKind::Unsupported,
           "too many vertices to reconstruct the facet structure (limit 64)");
    }
    return polytope_from_vertices(dim, vertices);
  }

  long facet_count = 0;
  {
    const Line& ln = lines[li];
    if (ln.tokens.size() != 2 || ln.tokens[0] != "FACETS") {
      parse_fail(ln.number, "expected 'FACETS <m>' or end of file");
    }
    facet_count = parse_integer(ln, ln.tokens[1], "a facet count");
    if (facet_count < 1 || facet_count > 100000) {
      parse_fail(ln.number, "FACETS must be between 1 and 100000");
    }
    ++li;
  }

  std::vector<std::vector<int>> rows;
  rows.reserve(static_cast<std::size_t>(facet_count));
  for (long r = 0; r < facet_count; ++r) {
    const Line& ln = need("a facet row");
    std::vector<int> row;
    for (const std::string& tok : ln.tokens) {
      const long idx = parse_integer(ln, tok, "a vertex index");
      if (idx < 0 || idx >= vertex_count) {
        parse_fail(ln.number, "facet row lists vertex index out of range");
      }
      if (!row.empty() && idx <= row.back()) {
        parse_fail(ln.number,
                   "facet row must list strictly ascending vertex indices");
      }
      row.push_back(static_cast<int>(idx));
    }
    if (row.empty()) {
      parse_fail(ln.number, "facet row is empty");
    }
    rows.push_back(std::move(row));
    ++li;
  }
  if (li < lines.size()) {
    parse_fail(lines[li].number, "unexpected content after the facet rows");
  }

  const Vec reference = barycenter(vertices);
  Polytope p;
  p.dim = dim;
  p.vertices = vertices;
  for (const std::vector<int>& row : rows) {
    std::vector<Vec> points;
    points.reserve(row.size());
    for (int idx : row) points.push_back(vertices[static_cast<std::size_t>(idx)]);
    Facet f;
    f.plane = oriented_facet_plane(points, reference);
    f.vertex_set = row;
    p.facets.push_back(std::move(f));
  }
  validate(p);
  return p;
}

Polytope read_polytope_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    fail(ErrorKind::Parse, "cannot open file: " + path);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_polytope_text(buffer.str());
}

std::string emit_polytope_text(const Polytope& p) {
  std::ostringstream out;
  out << "POLYTOPE 1\n";
  out << "DIM " << p.dim << "\n";
  out << "VERTICES " << p.vertices.size() << "\n";
  for (const Vec& v : p.vertices) {
    for (std::size_t c = 0; c < v.size(); ++c) {
      if (c > 0) out << ' ';
      out << format_rational(v[c]);
    }
    out << "\n";
  }
  std::vector<std::vector<int>> rows;
  rows.reserve(p.facets.size());
  for (const Facet& f : p.facets) rows.push_back(f.vertex_set);
  std::sort(rows.begin(), rows.end());
  out << "FACETS " << rows.size() << "\n";
  for (const std::vector<int>& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) out << ' ';
      out << row[c];
    }
    out << "\n";
  }
  return out.str();
}

void write_polytope_file(const Polytope& p, const std::string& path) {
  std::ofstream out(path);
  if (!out) {
    fail(ErrorKind::Parse, "cannot open output file: " + path);
  }
  out << emit_polytope_text(p);
  out.flush();
  if (!out) {
    fail(ErrorKind::Parse, "failed to write output file: " + path);
  }
}

namespace {

std::string join_longs(const std::vector<long long>& values) {
  std::ostringstream out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out << ' ';
    out << values[i];
  }
  return out.str();
}

// Key for one flag-vector entry: dimension subset as concatenated digits
// appended to `f` (the empty set is plain `f`).
std::string flag_key(int mask) {
  std::string key = "f";
  for (int b = 0; b < 16; ++b) {
    if (mask & (1 << b)) key += std::to_string(b);
  }
  return key;
}

void append_aligned(std::ostream& out,
                    const std::vector<std::pair<std::string, std::string>>&
                        rows) {
  std::size_t width = 0;
  for (const auto& [name, value] : rows) width = std::max(width, name.size());
  for (const auto& [name, value] : rows) {
    out << "  " << name << std::string(width - name.size() + 2, ' ') << value
        << "\n";
  }
}

} // namespace

std::string info_report(const Polytope& p) {
  const AnalysisReport rep = analyze(p);
  const auto yn = [](bool b) { return b ? std::string("yes") : std::string("no"); };
  const auto tf = [](bool b) { return b ? std::string("true") : std::string("false"); };

  std::ostringstream out;
  std::vector<std::pair<std::string, std::string>> rows;
  rows.emplace_back("dimension", std::to_string(p.dim));
  rows.emplace_back("vertices", std::to_string(p.vertices.size()));
  rows.emplace_back("facets", std::to_string(p.facets.size()));
  rows.emplace_back("f-vector", join_longs(rep.fvec.f));
  if (rep.g2) rows.emplace_back("g2", std::to_string(*rep.g2));
  rows.emplace_back("2-simplicial", yn(rep.two_simplicial));
  rows.emplace_back("2-simple", yn(rep.two_simple));
  if (rep.on_ell1) rows.emplace_back("elementary", yn(*rep.on_ell1));
  rows.emplace_back("euler", rep.euler_ok ? "ok" : "VIOLATED");
  rows.emplace_back("dehn-sommerville",
                    rep.dehn_sommerville_ok ? "ok" : "VIOLATED");
  if (rep.fatness_lhs) {
    rows.emplace_back("fatness", "lhs " + std::to_string(*rep.fatness_lhs) +
                                     ", rhs " +
                                     std::to_string(*rep.fatness_rhs));
  }
  out << "Polytope analysis\n";
  append_aligned(out, rows);
  out << "\n";

  out << "f " << join_longs(rep.fvec.f) << "\n";
  for (int mask = 0; mask < (1 << rep.flag.dim); ++mask) {
    out << flag_key(mask) << ' ' << rep.flag.entries[mask] << "\n";
  }
  if (rep.g2) out << "g2 " << *rep.g2 << "\n";
  out << "two_simplicial " << tf(rep.two_simplicial) << "\n";
  out << "two_simple " << tf(rep.two_simple) << "\n";
  if (rep.on_ell1) out << "on_ell1 " << tf(*rep.on_ell1) << "\n";
  out << "euler_ok " << tf(rep.euler_ok) << "\n";
  out << "dehn_sommerville_ok " << tf(rep.dehn_sommerville_ok) << "\n";
  if (rep.fatness_lhs) {
    out << "fatness_lhs " << *rep.fatness_lhs << "\n";
    out << "fatness_rhs " << *rep.fatness_rhs << "\n";
  }
  return out.str();
}

std::string dual_report(const Polytope& p) {
  const FaceLattice lat = build_face_lattice(p);
  const FaceLattice dl = dual(lat);
  const FVector df = f_vector(dl);
  const bool sd = self_dual(lat);

  std::ostringstream out;
  std::vector<std::pair<std::string, std::string>> rows;
  rows.emplace_back("dual f-vector", join_longs(df.f));
  rows.emplace_back("self-dual", sd ? "yes" : "no");
  out << "Dual summary\n";
  append_aligned(out, rows);
  out << "\n";
  out << "dual_f " << join_longs(df.f) << "\n";
  out << "self_dual " << (sd ? "true" : "false") << "\n";
  return out.str();
}

namespace {

void verify_polytope(const Polytope& p, std::ostream& out) {
  validate(p);
  out << "validate ok\n";
  const AnalysisReport rep = analyze(p);
  if (!rep.euler_ok) {
    fail(ErrorKind::Invariant, "Euler relation violated");
  }
  out << "euler ok\n";
  if (!rep.dehn_sommerville_ok) {
    fail(ErrorKind::Invariant, "Dehn-Sommerville relations violated");
  }
  out << "dehn_sommerville ok\n";
  if (p.dim >= 4) {
    if (!rep.g2 || *rep.g2 < 0) {
      fail(ErrorKind::Invariant, "g2 is negative");
    }
    out << "g2_nonnegative ok\n";
  }
  out << "verified OK\n";
}

void emit_to(const Polytope& p, const std::string& path) {
  if (path.empty()) {
    std::cout << emit_polytope_text(p);
  } else {
    write_polytope_file(p, path);
  }
}

} // namespace

int run_cli(int argc, char** argv) {
  CLI::App app{"Exact construction and analysis of pseudo-stacked polytopes"};
  app.require_subcommand(1);
  int exit_code = 0;

  std::string names;
  for (const std::string& n : catalog_names()) {
    if (!names.empty()) names += ", ";
    names += n;
  }

  auto* example = app.add_subcommand("example", "Write a catalog polytope");
  std::string example_name;
  std::string example_out;
  example->add_option("name", example_name, "Catalog entry: " + names)
      ->required();
  example->add_option("-o,--output", example_out,
                      "Output file (default: stdout)");
  example->callback([&] {
    emit_to(catalog_entry(example_name).polytope, example_out);
  });

  auto* info = app.add_subcommand("info", "Analyze a polytope file");
  std::string info_file;
  info->add_option("file", info_file, "Polytope file")->required();
  info->callback([&] { std::cout << info_report(read_polytope_file(info_file)); });

  auto* construct = app.add_subcommand(
      "construct", "Run a multi-step construction on a labeled simplex facet");
  std::string construct_mode;
  std::string construct_file;
  std::string construct_out;
  std::vector<int> construct_facet;
  std::vector<int> construct_order;
  construct
      ->add_option("mode", construct_mode,
                   "i1 (five steps) or i2 (four steps)")
      ->required()
      ->check(CLI::IsMember({"i1", "i2"}));
  construct->add_option("file", construct_file, "Input polytope file")
      ->required();
  construct
      ->add_option("--facet", construct_facet,
                   "Vertex indices of the base simplex facet, e.g. 0,1,2,3")
      ->required()
      ->delimiter(',');
  construct
      ->add_option("--order", construct_order,
                   "Labeling order of the facet vertices (default ascending)")
      ->delimiter(',');
  construct->add_option("-o,--output", construct_out, "Output file")
      ->required();
  construct->callback([&] {
    const Polytope p = read_polytope_file(construct_file);
    const LabeledSimplexFacet s =
        make_labeled_facet(p, construct_facet, construct_order);
    auto [result, trace] =
        construct_mode == "i1" ? construct_i1(p, s) : construct_i2(p, s);
    (void)trace;
    emit_to(result, construct_out);
  });

  auto* generate = app.add_subcommand(
      "generate",
      "Build a 2-simple 2-simplicial 4-polytope with the given vertex count");
  int generate_k = 0;
  std::string generate_out;
  generate->add_option("k", generate_k, "Vertex count")->required();
  generate->add_option("-o,--output", generate_out, "Output file")->required();
  generate->callback(
      [&] { emit_to(generate_elementary_2s2s(generate_k), generate_out); });

  auto* verify = app.add_subcommand("verify", "Run the invariant suite");
  std::string verify_file;
  verify->add_option("file", verify_file, "Polytope file")->required();
  verify->callback(
      [&] { verify_polytope(read_polytope_file(verify_file), std::cout); });

  auto* dual_cmd = app.add_subcommand("dual", "Combinatorial dual summary");
  std::string dual_file;
  dual_cmd->add_option("file", dual_file, "Polytope file")->required();
  dual_cmd->callback(
      [&] { std::cout << dual_report(read_polytope_file(dual_file)); });

  auto* iso = app.add_subcommand(
      "iso", "Test two files for lattice isomorphism (exit 0 iff isomorphic)");
  std::string iso_a;
  std::string iso_b;
  iso->add_option("file1", iso_a, "First polytope file")->required();
  iso->add_option("file2", iso_b, "Second polytope file")->required();
  iso->callback([&] {
    const FaceLattice la = build_face_lattice(read_polytope_file(iso_a));
    const FaceLattice lb = build_face_lattice(read_polytope_file(iso_b));
    const bool same = lattices_isomorphic(la, lb);
    std::cout << "isomorphic " << (same ? "true" : "false") << "\n";
    if (!same) exit_code = 1;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.exit_code();
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return static_cast<int>(ErrorKind::Internal);
  }
  return exit_code;
}

} // namespace polystack
