#include "doctest.h"

#include "fixtures.hpp"
#include "polystack/catalog.hpp"
#include "polystack/errors.hpp"
#include "polystack/io.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace polystack;

namespace {

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an Error");
  return ErrorKind::Internal;
}

std::string message_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.what();
  }
  FAIL("expected an Error");
  return {};
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

std::string tmp_path(const std::string& name) {
  return "/tmp/polystack_io_test_" + name;
}

// Runs the CLI entry point on the given arguments, capturing stdout.
int cli(const std::vector<std::string>& args, std::string* out = nullptr) {
  std::vector<std::string> full = {"polystack"};
  full.insert(full.end(), args.begin(), args.end());
  std::vector<char*> argv;
  argv.reserve(full.size());
  for (std::string& a : full) argv.push_back(a.data());
  std::ostringstream captured;
  std::streambuf* old = std::cout.rdbuf(captured.rdbuf());
  const int rc =
      run_cli(static_cast<int>(argv.size()), argv.data());
  std::cout.rdbuf(old);
  if (out) *out = captured.str();
  return rc;
}

} // namespace

TEST_CASE("emitted text starts with the fixed header") {
  const std::string text =
      emit_polytope_text(catalog_entry("simplex4").polytope);
  CHECK(text.rfind("POLYTOPE 1\nDIM 4\nVERTICES 5\n", 0) == 0);
  CHECK(contains(text, "\nFACETS 5\n"));
}

TEST_CASE("emit and parse are mutually inverse on the catalog") {
  for (const std::string& name : catalog_names()) {
    CAPTURE(name);
    const Polytope& p = catalog_entry(name).polytope;
    const std::string text = emit_polytope_text(p);
    const Polytope q = parse_polytope_text(text);
    CHECK(q.dim == p.dim);
    CHECK(q.vertices == p.vertices);
    CHECK(fixtures::facet_rows(q) == fixtures::facet_rows(p));
    CHECK(emit_polytope_text(q) == text);
    CHECK_NOTHROW(validate(q));
  }
}

TEST_CASE("comments and blank lines are ignored") {
  const std::string text = R"(# leading comment
POLYTOPE 1

DIM 2  # trailing comment
VERTICES 3
0 0
1 0   # a vertex
0 1

FACETS 3
0 1
0 2
1 2
)";
  const Polytope p = parse_polytope_text(text);
  CHECK(p.dim == 2);
  CHECK(p.vertices.size() == 3);
  CHECK(p.facets.size() == 3);
}

TEST_CASE("a file without a facet section is reconstructed from coordinates") {
  const Polytope& d4 = catalog_entry("simplex4").polytope;
  std::string text = emit_polytope_text(d4);
  text.resize(text.find("FACETS"));
  const Polytope p = parse_polytope_text(text);
  CHECK(fixtures::facet_rows(p) == fixtures::facet_rows(d4));
}

TEST_CASE("reconstruction is refused beyond 64 vertices") {
  std::ostringstream text;
  text << "POLYTOPE 1\nDIM 2\nVERTICES 65\n";
  for (int i = 0; i < 65; ++i) text << i << " " << i * i << "\n";
  CHECK(kind_of([&] { parse_polytope_text(text.str()); }) ==
        ErrorKind::Unsupported);
}

TEST_CASE("rejected inputs") {
  const auto fails_with = [&](const std::string& text, ErrorKind kind,
                              const std::string& fragment) {
    const auto fn = [&] { parse_polytope_text(text); };
    CHECK(kind_of(fn) == kind);
    CHECK(contains(message_of(fn), fragment));
  };

  SUBCASE("wrong header") {
    fails_with("POLITOPE 1\n", ErrorKind::Parse,
               "line 1: expected header 'POLYTOPE 1'");
  }
  SUBCASE("empty input") {
    fails_with("", ErrorKind::Parse, "unexpected end of file");
  }
  SUBCASE("non-numeric dimension") {
    fails_with("POLYTOPE 1\nDIM x\n", ErrorKind::Parse,
               "line 2: expected a dimension");
  }
  SUBCASE("dimension out of range") {
    fails_with("POLYTOPE 1\nDIM 17\n", ErrorKind::Parse,
               "DIM must be between 2 and 16");
  }
  SUBCASE("vertex count out of range") {
    fails_with("POLYTOPE 1\nDIM 2\nVERTICES 0\n", ErrorKind::Parse,
               "VERTICES must be between 1 and 100000");
  }
  SUBCASE("vertex row of the wrong width") {
    fails_with("POLYTOPE 1\nDIM 2\nVERTICES 1\n1 2 3\n", ErrorKind::Parse,
               "line 4: vertex row must have exactly DIM coordinates");
  }
  SUBCASE("malformed coordinate") {
    fails_with("POLYTOPE 1\nDIM 2\nVERTICES 1\n1 2/0\n", ErrorKind::Parse,
               "line 4:");
  }
  SUBCASE("identical vertex rows") {
    fails_with(
        "POLYTOPE 1\nDIM 2\nVERTICES 3\n0 0\n1 1\n0 0\n", ErrorKind::Invariant,
        "vertex rows 0 and 2 are identical points");
  }
  SUBCASE("misspelled facet keyword") {
    fails_with(
        "POLYTOPE 1\nDIM 2\nVERTICES 3\n0 0\n1 0\n0 1\nFACET 3\n",
        ErrorKind::Parse, "expected 'FACETS <m>' or end of file");
  }
  SUBCASE("facet vertex index out of range") {
    fails_with(
        "POLYTOPE 1\nDIM 2\nVERTICES 3\n0 0\n1 0\n0 1\nFACETS 1\n0 7\n",
        ErrorKind::Parse, "facet row lists vertex index out of range");
  }
  SUBCASE("unsorted facet row") {
    fails_with(
        "POLYTOPE 1\nDIM 2\nVERTICES 3\n0 0\n1 0\n0 1\nFACETS 1\n1 0\n",
        ErrorKind::Parse, "facet row must list strictly ascending");
  }
  SUBCASE("missing facet rows") {
    fails_with(
        "POLYTOPE 1\nDIM 2\nVERTICES 3\n0 0\n1 0\n0 1\nFACETS 4\n0 1\n",
        ErrorKind::Parse, "expected a facet row");
  }
  SUBCASE("trailing content") {
    fails_with("POLYTOPE 1\nDIM 2\nVERTICES 3\n0 0\n1 0\n0 1\nFACETS 3\n0 "
               "1\n0 2\n1 2\nextra\n",
               ErrorKind::Parse, "unexpected content after the facet rows");
  }
  SUBCASE("facet row that does not span a hyperplane") {
    fails_with("POLYTOPE 1\nDIM 3\nVERTICES 4\n0 0 0\n1 0 0\n0 1 0\n0 0 "
               "1\nFACETS 1\n0 1\n",
               ErrorKind::Invariant, "facet vertices do not span a hyperplane");
  }
  SUBCASE("facet hyperplane through the barycenter") {
    fails_with("POLYTOPE 1\nDIM 2\nVERTICES 4\n0 0\n1 0\n1 1\n0 1\nFACETS "
               "1\n0 2\n",
               ErrorKind::Invariant,
               "the vertex barycenter lies on a facet hyperplane");
  }
  SUBCASE("facet row omitting an incident vertex") {
    const fixtures::SevenFixture fx = fixtures::seven();
    std::string text = emit_polytope_text(fx.p);
    const std::string row = "0 1 2 3\n";
    const std::size_t pos = text.find(row);
    REQUIRE(pos != std::string::npos);
    text.replace(pos, row.size(), "0 1 2\n");
    CHECK(kind_of([&] { parse_polytope_text(text); }) == ErrorKind::Invariant);
  }
}

TEST_CASE("file round trip") {
  const Polytope& p9 = catalog_entry("P9").polytope;
  const std::string path = tmp_path("p9.poly");
  write_polytope_file(p9, path);
  const Polytope q = read_polytope_file(path);
  CHECK(q.vertices == p9.vertices);
  CHECK(fixtures::facet_rows(q) == fixtures::facet_rows(p9));
  std::remove(path.c_str());

  const auto missing = [] { read_polytope_file("/tmp/does/not/exist.poly"); };
  CHECK(kind_of(missing) == ErrorKind::Parse);
  CHECK(contains(message_of(missing), "cannot open file"));
}

TEST_CASE("the analysis report lists both summaries and raw values") {
  const std::string report = info_report(catalog_entry("P9").polytope);
  CHECK(contains(report, "Polytope analysis"));
  CHECK(contains(report, "elementary"));
  CHECK(contains(report, "\nf 9 26 26 9\n"));
  CHECK(contains(report, "\nf0123 312\n"));
  CHECK(contains(report, "\nf03 44\n"));
  CHECK(contains(report, "\ng2 0\n"));
  CHECK(contains(report, "\non_ell1 true\n"));
  CHECK(contains(report, "\ntwo_simplicial true\n"));
  CHECK(contains(report, "\ntwo_simple true\n"));
  CHECK(contains(report, "\neuler_ok true\n"));
  CHECK(contains(report, "\ndehn_sommerville_ok true\n"));
  CHECK(contains(report, "\nfatness_lhs -96\n"));
  CHECK(contains(report, "\nfatness_rhs -152\n"));
}

TEST_CASE("three-dimensional reports omit the dimension-four lines") {
  const std::string report = info_report(catalog_entry("cube3").polytope);
  CHECK(contains(report, "\nf 8 12 6\n"));
  CHECK(contains(report, "\ng2 0\n"));
  CHECK(contains(report, "\ntwo_simplicial false\n"));
  CHECK(contains(report, "\ntwo_simple true\n"));
  CHECK_FALSE(contains(report, "on_ell1"));
  CHECK_FALSE(contains(report, "fatness"));
}

TEST_CASE("the dual summary reports the reversed f-vector") {
  const std::string p9 = dual_report(catalog_entry("P9").polytope);
  CHECK(contains(p9, "Dual summary"));
  CHECK(contains(p9, "\ndual_f 9 26 26 9\n"));
  CHECK(contains(p9, "\nself_dual true\n"));

  const std::string frustum = dual_report(catalog_entry("frustum3").polytope);
  CHECK(contains(frustum, "\ndual_f 5 9 6\n"));
  CHECK(contains(frustum, "\nself_dual false\n"));
}

TEST_CASE("command line flows") {
  const std::string a = tmp_path("cli_a.poly");
  const std::string b = tmp_path("cli_b.poly");

  SUBCASE("example writes a parseable file") {
    CHECK(cli({"example", "P10", "-o", a}) == 0);
    const Polytope p = read_polytope_file(a);
    CHECK(p.vertices.size() == 10);
    CHECK(cli({"verify", a}) == 0);
    std::string out;
    CHECK(cli({"info", a}, &out) == 0);
    CHECK(contains(out, "\nf 10 30 30 10\n"));
  }
  SUBCASE("example of an unknown name fails cleanly") {
    CHECK(cli({"example", "nonesuch", "-o", a}) == 4);
  }
  SUBCASE("construct runs a pipeline end to end") {
    CHECK(cli({"example", "simplex4", "-o", a}) == 0);
    CHECK(cli({"construct", "i2", a, "--facet", "0,1,2,3", "-o", b}) == 0);
    const Polytope q = read_polytope_file(b);
    CHECK(q.vertices.size() == 9);
    CHECK(cli({"example", "P9", "-o", a}) == 0);
    std::string out;
    CHECK(cli({"iso", a, b}, &out) == 0);
    CHECK(contains(out, "isomorphic true"));
  }
  SUBCASE("iso reports mismatches with exit code one") {
    CHECK(cli({"example", "simplex4", "-o", a}) == 0);
    CHECK(cli({"example", "P9", "-o", b}) == 0);
    std::string out;
    CHECK(cli({"iso", a, b}, &out) == 1);
    CHECK(contains(out, "isomorphic false"));
  }
  SUBCASE("generate rejects unsupported counts with exit code four") {
    CHECK(cli({"generate", "12", "-o", a}) == 4);
  }
  SUBCASE("generate then verify") {
    CHECK(cli({"generate", "13", "-o", a}) == 0);
    std::string out;
    CHECK(cli({"verify", a}, &out) == 0);
    CHECK(contains(out, "validate ok"));
    CHECK(contains(out, "euler ok"));
    CHECK(contains(out, "dehn_sommerville ok"));
    CHECK(contains(out, "g2_nonnegative ok"));
    CHECK(contains(out, "verified OK"));
  }
  SUBCASE("usage errors exit with code two") {
    CHECK(cli({}) == 2);
    CHECK(cli({"bogus"}) == 2);
    CHECK(cli({"construct", "i9", a, "--facet", "0,1,2,3", "-o", b}) == 2);
    CHECK(cli({"construct", "i1", a, "-o", b}) == 2);
    CHECK(cli({"--help"}) == 0);
  }

  std::remove(a.c_str());
  std::remove(b.c_str());
}
