#pragma once

#include "polystack/polytope.hpp"
#include "polystack/pseudostack.hpp"

#include <utility>
#include <vector>

namespace polystack {

// A simplex facet together with an ordering of its vertices. The ordering
// fixes which vertex plays which role in the multi-step constructions.
struct LabeledSimplexFacet {
  int facet_index = -1;
  std::vector<int> ordered_vertices; // permutation of the facet's vertex set
};

// One executed modification step, with snapshots for cross-checking.
struct StepRecord {
  StepSpec spec;
  ResolvedStep resolved;
  WitnessPoint witness;
  int new_vertex = -1;
  // Facet census of the result by origin (see StepResult).
  int kept_facets = 0;
  int base_pyramids = 0;
  int n_pyramids = 0;
  int updated_facets = 0;
  Polytope before;
  Polytope after;
};

// Record of a full multi-step construction run.
struct ConstructionTrace {
  std::vector<StepRecord> steps;
  // The distinguished simplex facet of the final polytope, labeled in
  // ascending vertex order; the handle for chaining further runs.
  LabeledSimplexFacet final_labeled_facet;
};

// Builds a labeling for the facet whose vertex set is exactly
// facet_vertices. An empty order means ascending; otherwise order must be
// a permutation of the facet's vertices. Error(Invariant) when no facet
// matches, the facet is not a simplex, or the order is not a permutation.
LabeledSimplexFacet make_labeled_facet(const Polytope& p,
                                       const std::vector<int>& facet_vertices,
                                       const std::vector<int>& order = {});

// The five-step construction: adds 5 vertices and grows the f-vector by
// (5,20,20,5). Requires a 4-polytope; the base facet must either be in
// bounded position or admit the single-contact fallback (the simplex
// case). Step failures are reported with their step number.
std::pair<Polytope, ConstructionTrace> construct_i1(
    const Polytope& p, const LabeledSimplexFacet& s);

// The four-step construction: adds 4 vertices and grows the f-vector by
// (4,16,16,4). Same preconditions as construct_i1.
std::pair<Polytope, ConstructionTrace> construct_i2(
    const Polytope& p, const LabeledSimplexFacet& s);

// A 2-simple 2-simplicial 4-polytope with k vertices and g2 = 0, built
// from the reference polytopes by chains of the two constructions.
// Supported: k in {5, 9, 10, 11} or k >= 13; other k raise
// Error(Unsupported). The result is re-verified before returning. When
// `traces` is given, every chained construction run is appended to it.
Polytope generate_elementary_2s2s(int k,
                                  std::vector<ConstructionTrace>* traces =
                                      nullptr);

// Pyramid over p: embeds p at height 0, adds the apex above the vertex
// barycenter at height 1.
Polytope pyramid(const Polytope& p);

// Stacks a shallow vertex onto the given simplex facet (a step with empty
// facet sets).
Polytope stack(const Polytope& p, int facet_index);

// Alternate derivation of the 11-vertex reference polytope: stack one
// octahedron facet, take the pyramid, then run three steps over the
// pyramids of the stacked facet's neighbors. The result is verified to be
// lattice-isomorphic to the builtin entry. When `trace` is given, the
// four executed steps (the stacking and the three main steps) are
// appended.
Polytope build_p11_via_octahedron(std::vector<StepRecord>* trace = nullptr);

} // namespace polystack
