#pragma once

#include "polystack/polytope.hpp"

#include <optional>
#include <random>
#include <vector>

namespace polystack {

// How a FacetSelector names a facet of the current polytope.
enum class SelectorMode {
  // The unique facet whose vertex set contains all listed vertices.
  ContainsAll,
  // The unique facet other than the base facet that contains the listed
  // vertices; they must span a ridge of the base facet.
  AdjacentToBaseVia,
};

struct FacetSelector {
  SelectorMode mode = SelectorMode::ContainsAll;
  std::vector<int> vertex_subset; // ascending vertex indices
};

// One modification step: a simplex base facet to stack over, the set of
// adjacent facets whose hyperplanes must keep the new vertex (the step
// stays inside them), and the set of adjacent facets the new vertex moves
// beyond (they are absorbed).
struct StepSpec {
  FacetSelector base; // must use ContainsAll
  std::vector<FacetSelector> f_set;
  std::vector<FacetSelector> n_set;
};

// StepSpec with every selector resolved to a facet index.
struct ResolvedStep {
  int base = -1;
  std::vector<int> f_set; // ascending facet indices
  std::vector<int> n_set; // ascending facet indices
};

// A point of the open region over the base facet: Beyond the base and
// absorbed-neighbor hyperplanes, On every kept-neighbor hyperplane,
// Beneath all remaining facet hyperplanes.
struct WitnessPoint {
  Vec point;
  // Final scale applied along the search ray.
  Rational epsilon;
  // Meeting point of the base facet's neighbor hyperplanes when the ray
  // starts there; nullopt when the barycentric fallback ray was used.
  std::optional<Vec> apex;
};

// Forecast for the facet degree of one (d-3)-face after a step.
struct SubridgeForecast {
  int phi = 0;               // number of kept-neighbor facets containing it
  int epsilon_indicator = 0; // 1 when it lies in both the base facet and
                             // the absorbed neighbor
  bool survives = false;
  int predicted_degree = 0;  // 0 when it does not survive
};

// Full outcome of one step.
struct StepResult {
  Polytope polytope;
  ResolvedStep resolved;
  WitnessPoint witness;
  // Old vertex index -> new index, -1 for vertices absorbed by the step.
  std::vector<int> old_to_new;
  // Index of the added vertex in the result (always the last one).
  int new_vertex = -1;
  // Facet census of the result by origin.
  int kept_facets = 0;    // facets untouched by the step
  int base_pyramids = 0;  // pyramids over ridges of the base facet
  int n_pyramids = 0;     // pyramids over ridges of absorbed neighbors
  int updated_facets = 0; // kept-neighbor facets rebuilt in their own plane

  int old_vertex_count = 0;
};

// Resolves all selectors, checking: the base selector uses ContainsAll and
// names a simplex facet; every selector matches exactly one facet; the two
// facet sets consist of distinct facets adjacent to the base and are
// disjoint. Violations raise Error(Invariant).
ResolvedStep resolve_step(const Polytope& p, const StepSpec& spec);

// Indices of the facets sharing a ridge (a (d-2)-face) with the given
// facet, ascending.
std::vector<int> adjacent_facets(const Polytope& p, int facet_index);

// True iff no two facets of f_set are adjacent to each other while sharing
// a (d-3)-face with the base facet. Steps require this of their kept
// neighbors so that the rebuilt facets cannot collide.
bool is_nonsimple(const Polytope& p, int base, const std::vector<int>& f_set);

// True iff the neighbor hyperplanes of this simplex facet meet in a single
// point Beyond the facet's hyperplane, i.e. the half-spaces other than the
// facet's own bound a pyramid tip over it. Non-simplex facets raise
// Error(Invariant).
bool bounded_position(const Polytope& p, int facet_index);

// Finds a witness point for the step: from the neighbor-plane apex along
// the lemma ray when the base facet is in bounded position, otherwise via
// the barycentric fallback ray (only available when n_set is empty and
// f_set has at most one facet). The scale starts at 1 and halves until all
// strict side conditions hold (cap 256; after the cap the exact feasible
// interval is used directly). Error(Unsupported) when the region is empty
// or the configuration is not supported.
WitnessPoint witness_point(const Polytope& p, const StepSpec& spec);

// Same, but with randomized ray coefficients: per-neighbor weights (lemma
// path) or per-vertex weights (fallback path) drawn uniformly from
// {1,...,8}. Distinct draws give independent valid witness points.
WitnessPoint witness_point_randomized(const Polytope& p, const StepSpec& spec,
                                      std::mt19937_64& rng);

// Incremental convex-hull update conv(P + witness): absorbed facets (the
// base and the n_set) disappear, pyramids over horizon ridges appear, and
// each f_set facet is rebuilt inside its own hyperplane one dimension
// lower. The witness must satisfy the WitnessPoint side conditions for
// this spec (Error(Internal) otherwise).
StepResult pseudo_stack_with(const Polytope& p, const StepSpec& spec,
                             const WitnessPoint& witness);

// witness_point + pseudo_stack_with.
StepResult pseudo_stack_ex(const Polytope& p, const StepSpec& spec);

// Result polytope only.
Polytope pseudo_stack(const Polytope& p, const StepSpec& spec);

// Predicted edge count of pseudo_stack(p, spec) from the edge count of p:
// the new vertex contributes dim edges plus, when one neighbor is
// absorbed, that neighbor's extra vertices; edges covered only by
// affected facets are destroyed. Requires at most one absorbed neighbor
// and every vertex of the affected facets to survive the step
// (Error(Unsupported) otherwise).
long long forecast_edge_count(const Polytope& p, const StepSpec& spec);

// Predicted facet degree of a (d-3)-face of the base facet (or of the
// absorbed neighbor) after the step. Requires at most one absorbed
// neighbor; the face must be a (d-3)-face of the base or absorbed facet
// (Error(Invariant) otherwise).
SubridgeForecast forecast_subridge_degree(const Polytope& p,
                                          const StepSpec& spec,
                                          const std::vector<int>& subridge);

// All nonempty proper faces of p that remain faces after the step: exactly
// those contained in at least one facet the step leaves untouched. Sorted
// by dimension, then lexicographically.
std::vector<std::vector<int>> surviving_faces(const Polytope& p,
                                              const StepSpec& spec);

// Projectively transforms p so the given simplex facet reaches bounded
// position, keeping the vertex-facet incidences verbatim. Returns p
// unchanged when the facet is already in bounded position. The transform
// family is tried and verified; impossible inputs (a simplex, or neighbor
// planes meeting on the facet's hyperplane or inside the polytope) raise
// Error(Unsupported), exhaustion of candidates Error(Internal).
Polytope normalize_bounded_position(const Polytope& p, int facet_index);

} // namespace polystack
