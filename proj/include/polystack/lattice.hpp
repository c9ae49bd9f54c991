#pragma once

#include "polystack/polytope.hpp"

#include <optional>
#include <vector>

namespace polystack {

// The face lattice of a d-polytope. Layer index li (0 <= li <= dim+1)
// holds the faces of dimension li-1 as sorted vertex-index sets, so
// layers[0] = {empty face} and layers[dim+1] = {all vertices}. Each layer
// is sorted lexicographically.
struct FaceLattice {
  int dim = 0;
  int vertex_count = 0;
  int facet_count = 0;
  std::vector<std::vector<std::vector<int>>> layers;
  // Parallel to layers: for each face, the ascending facet indices (into
  // facet_sets) of the facets containing it.
  std::vector<std::vector<std::vector<int>>> incident_facets;
  // covers[li][j] = indices within layers[li+1] of the faces covering
  // layers[li][j]; defined for 0 <= li <= dim.
  std::vector<std::vector<std::vector<int>>> covers;
  // Facet vertex sets in the polytope's original facet order.
  std::vector<std::vector<int>> facet_sets;
};

// Number of i-dimensional faces for 0 <= i <= d-1.
struct FVector {
  std::vector<long long> f;

  bool operator==(const FVector&) const = default;
};

// Chain counts f_S for every S subseteq {0,...,d-1}: entries[mask] is the
// number of face chains whose dimension set is exactly the bits of mask.
// entries[0] = 1 (the empty chain).
struct FlagVector {
  int dim = 0;
  std::vector<long long> entries;

  bool operator==(const FlagVector&) const = default;
};

struct AnalysisReport {
  FVector fvec;
  FlagVector flag;
  std::optional<long long> g2;          // defined for dim >= 3
  bool two_simplicial = false;
  bool two_simple = false;
  std::optional<bool> on_ell1;          // dim == 4 only
  bool euler_ok = false;
  bool dehn_sommerville_ok = false;
  std::optional<long long> fatness_lhs; // dim == 4 only: f03 - 140
  std::optional<long long> fatness_rhs; // dim == 4 only: 4(f1+f2) - 20(f0+f3)
};

// Builds the full face lattice by closing the facet vertex sets under
// intersection; each face's layer is the dimension of its affine hull.
FaceLattice build_face_lattice(const Polytope& p);

FVector f_vector(const FaceLattice& lat);

FlagVector flag_vector(const FaceLattice& lat);

// g2 = f02 - 3 f2 + f1 - d f0 + (d+1 choose 2); requires dim >= 3.
long long g2(const FlagVector& flag, int dim);

// True iff every k-dimensional face has exactly k+1 vertices.
bool k_simplicial(const FaceLattice& lat, int k);

// True iff every (d-h-1)-dimensional face lies in exactly h+1 facets.
bool h_simple(const FaceLattice& lat, int h);

// True iff the vertex set is a face of the lattice.
bool has_face(const FaceLattice& lat, const std::vector<int>& face);

// Number of facets containing the given face; throws Error(Invariant) if
// the vertex set is not a face of the lattice.
int face_degree(const FaceLattice& lat, const std::vector<int>& face);

// The combinatorial dual: order-reversal of the lattice. The dual's
// vertices are the facets of the input (in facet order) and its facets
// are the vertex stars of the input's vertices (in vertex order).
FaceLattice dual(const FaceLattice& lat);

// Searches for a vertex bijection from `a` to `b` inducing a bijection of
// facet vertex sets (which determines a lattice isomorphism). Returns the
// bijection as a vector mapping a-vertex index to b-vertex index.
std::optional<std::vector<int>> lattice_isomorphism(const FaceLattice& a,
                                                    const FaceLattice& b);

bool lattices_isomorphic(const FaceLattice& a, const FaceLattice& b);

bool self_dual(const FaceLattice& lat);

// Checks the full generalized Dehn-Sommerville equation family, which
// includes the Euler relation.
bool dehn_sommerville_check(const FlagVector& flag, int dim);

AnalysisReport analyze(const Polytope& p);

} // namespace polystack
