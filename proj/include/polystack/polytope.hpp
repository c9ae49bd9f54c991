#pragma once

#include "polystack/linalg.hpp"

#include <vector>

namespace polystack {

// A facet of a polytope: its supporting hyperplane together with the
// sorted indices of all vertices lying on that hyperplane.
struct Facet {
  Hyperplane plane;
  std::vector<int> vertex_set; // strictly ascending vertex indices
};

// A bounded convex d-polytope in vertex + facet form. The hyperplanes are
// oriented so the polytope lies in {x : <n,x> >= c} for every facet.
struct Polytope {
  int dim = 0;
  std::vector<Vec> vertices;
  std::vector<Facet> facets;
};

// Checks the representation invariants and throws Error(Invariant) on the
// first violation:
//   - dim >= 2, every vertex has dim coordinates, the vertex set spans
//     an affine space of dimension dim
//   - every facet vertex set is sorted, in range, and spans dimension
//     dim - 1
//   - every vertex is Beneath or On each facet hyperplane, with On
//     exactly for the members of the facet's vertex set
//   - every vertex lies in at least dim facets
//   - no facet vertex set contains another facet's
void validate(const Polytope& p);

// Coordinates of the vertices named by `indices`.
std::vector<Vec> select_points(const Polytope& p,
                               const std::vector<int>& indices);

// Barycenter of all vertices; strictly Beneath every facet hyperplane.
Vec interior_point(const Polytope& p);

// Sorted-vector set helpers shared by the combinatorial code.
std::vector<int> set_intersect(const std::vector<int>& a,
                               const std::vector<int>& b);
std::vector<int> set_union(const std::vector<int>& a,
                           const std::vector<int>& b);
std::vector<int> set_difference(const std::vector<int>& a,
                                const std::vector<int>& b);
bool set_contains(const std::vector<int>& super, const std::vector<int>& sub);
bool set_member(const std::vector<int>& s, int v);

} // namespace polystack
