#pragma once

#include "polystack/polytope.hpp"

#include <string>
#include <vector>

namespace polystack {

// Facets of a convex hull found by exhaustive enumeration.
struct HullResult {
  // Facet vertex sets index the input point list; only extreme points
  // appear in them. Planes are oriented with the hull Beneath.
  std::vector<Facet> facets;
  // Ascending indices of the extreme input points.
  std::vector<int> extreme;
};

// Enumerates the facets of conv(points) by testing every dim-element
// subset of the points: a subset spanning a hyperplane with no points on
// both sides contributes that hyperplane as a facet. Exponential but
// exact; limited to 64 points (Error(Unsupported) beyond) and the points
// must affinely span the ambient space (Error(Invariant) otherwise).
// Deliberately independent of the incremental construction code so the
// two can cross-check each other.
HullResult brute_force_hull(int dim, const std::vector<Vec>& points);

// Builds a validated Polytope from a list of extreme points via
// brute_force_hull. Error(Invariant) when some input point is not a
// vertex of the hull.
Polytope polytope_from_vertices(int dim, const std::vector<Vec>& points);

struct CatalogEntry {
  std::string name;
  Polytope polytope;
  // Reference facet vertex sets (each row ascending, rows sorted), empty
  // when the entry carries no independently recorded incidence data.
  std::vector<std::vector<int>> expected_incidences;
  // Reference f-vector.
  std::vector<long long> expected_f;
};

// Built-in exact reference polytopes: simplex4, P9, P10, P11,
// hypersimplex, octahedron3, cube3, frustum3, prism3. Unknown names raise
// Error(Unsupported).
const CatalogEntry& catalog_entry(const std::string& name);

// Names served by catalog_entry, in a stable order.
const std::vector<std::string>& catalog_names();

} // namespace polystack
