#pragma once

#include "polystack/polytope.hpp"

#include <string>

namespace polystack {

// Parses the line-oriented polytope text format:
//
//   POLYTOPE 1
//   DIM 4
//   VERTICES 9
//   3 0 0 0
//   ...
//   FACETS 9
//   1 2 3 4 5
//   ...
//
// Coordinates are exact rationals (`p` or `p/q`); `#` starts a comment;
// facet rows are ascending 0-based vertex indices. When the FACETS
// section is absent the facet structure is recomputed from the vertices
// (at most 64 of them; Error(Unsupported) beyond). The result is fully
// validated; facet hyperplanes are recomputed from the vertex sets.
// Syntax problems raise Error(Parse) with a line number.
Polytope parse_polytope_text(const std::string& text);

// Reads and parses a polytope file. Unreadable files raise Error(Parse).
Polytope read_polytope_file(const std::string& path);

// Canonical text form: each facet row ascending, rows sorted
// lexicographically. parse(emit(p)) reproduces the polytope up to facet
// order, and emit(parse(emit(p))) == emit(p).
std::string emit_polytope_text(const Polytope& p);

// Writes the canonical text form. Unwritable paths raise Error(Parse).
void write_polytope_file(const Polytope& p, const std::string& path);

// Human-readable analysis block followed by machine-readable key-value
// lines (f-vector, all flag-vector entries, g2, property flags, fatness).
std::string info_report(const Polytope& p);

// Dual summary: dual f-vector and self-duality, human and key-value.
std::string dual_report(const Polytope& p);

// Command-line entry point. Exit codes: 0 ok (1 = `iso` mismatch),
// 2 parse, 3 invariant, 4 unsupported input, 5 internal failure.
int run_cli(int argc, char** argv);

} // namespace polystack
