#pragma once

#include "polystack/catalog.hpp"
#include "polystack/lattice.hpp"
#include "polystack/polytope.hpp"
#include "polystack/pseudostack.hpp"
#include "polystack/rational.hpp"

#include <algorithm>
#include <initializer_list>
#include <string>
#include <vector>

namespace fixtures {

using namespace polystack;

inline Vec vec(std::initializer_list<long> coords) {
  Vec v;
  for (long c : coords) v.push_back(Rational(c));
  return v;
}

inline std::vector<int> ids(std::initializer_list<int> values) {
  std::vector<int> out(values);
  std::sort(out.begin(), out.end());
  return out;
}

// Index of the facet with exactly this vertex set; -1 when absent.
inline int find_facet(const Polytope& p, std::vector<int> verts) {
  std::sort(verts.begin(), verts.end());
  for (std::size_t i = 0; i < p.facets.size(); ++i) {
    if (p.facets[i].vertex_set == verts) return static_cast<int>(i);
  }
  return -1;
}

inline FacetSelector exact_sel(std::vector<int> verts) {
  std::sort(verts.begin(), verts.end());
  return FacetSelector{SelectorMode::ContainsAll, std::move(verts)};
}

// StepSpec naming every facet by its exact vertex set.
inline StepSpec spec_of(const Polytope&, std::vector<int> base,
                        std::vector<std::vector<int>> f_list = {},
                        std::vector<std::vector<int>> n_list = {}) {
  StepSpec spec;
  spec.base = exact_sel(std::move(base));
  for (std::vector<int>& f : f_list) spec.f_set.push_back(exact_sel(std::move(f)));
  for (std::vector<int>& n : n_list) spec.n_set.push_back(exact_sel(std::move(n)));
  return spec;
}

inline std::vector<long long> fvec(const Polytope& p) {
  return f_vector(build_face_lattice(p)).f;
}

inline std::vector<std::vector<int>> facet_rows(const Polytope& p) {
  std::vector<std::vector<int>> rows;
  for (const Facet& f : p.facets) rows.push_back(f.vertex_set);
  std::sort(rows.begin(), rows.end());
  return rows;
}

// From-scratch reconstruction oracle: the facet structure recomputed from
// the bare vertex coordinates must agree with the stored one.
inline bool hull_oracle_agrees(const Polytope& p) {
  const HullResult hull = brute_force_hull(p.dim, p.vertices);
  std::vector<std::vector<int>> rows;
  for (const Facet& f : hull.facets) rows.push_back(f.vertex_set);
  std::sort(rows.begin(), rows.end());
  std::vector<int> all(p.vertices.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
  return rows == facet_rows(p) && hull.extreme == all;
}

// A 7-vertex 3-polytope with a square bottom, a slanted triangular top and
// mixed facet shapes; small enough to reason about by hand, irregular
// enough to exercise every step configuration.
//
//   0 A=(0,0,0)  1 B=(4,0,0)  2 C=(4,4,0)  3 D=(0,4,0)
//   4 a=(1,1,2)  5 b=(3,1,2)  6 c=(3,3,2)
//
// Facets: bottom {0,1,2,3}, top {4,5,6}, front {0,1,4,5}, right {1,2,5,6},
// and three slopes {2,3,6}, {0,3,4}, {3,4,6}.
struct SevenFixture {
  Polytope p;
  std::vector<int> bottom = {0, 1, 2, 3};
  std::vector<int> top = {4, 5, 6};
  std::vector<int> front = {0, 1, 4, 5};
  std::vector<int> right = {1, 2, 5, 6};
  std::vector<int> back = {2, 3, 6};
  std::vector<int> left = {0, 3, 4};
  std::vector<int> corner = {3, 4, 6};
};

inline SevenFixture seven() {
  SevenFixture fx;
  fx.p = polytope_from_vertices(3, {
                                       vec({0, 0, 0}),
                                       vec({4, 0, 0}),
                                       vec({4, 4, 0}),
                                       vec({0, 4, 0}),
                                       vec({1, 1, 2}),
                                       vec({3, 1, 2}),
                                       vec({3, 3, 2}),
                                   });
  return fx;
}

} // namespace fixtures
