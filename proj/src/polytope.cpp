#include "polystack/polytope.hpp"

#include "polystack/errors.hpp"

#include <algorithm>
#include <string>

namespace polystack {

std::vector<Vec> select_points(const Polytope& p,
                               const std::vector<int>& indices) {
  std::vector<Vec> pts;
  pts.reserve(indices.size());
  for (int i : indices) {
    pts.push_back(p.vertices.at(static_cast<size_t>(i)));
  }
  return pts;
}

Vec interior_point(const Polytope& p) { return barycenter(p.vertices); }

std::vector<int> set_intersect(const std::vector<int>& a,
                               const std::vector<int>& b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

std::vector<int> set_union(const std::vector<int>& a,
                           const std::vector<int>& b) {
  std::vector<int> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(out));
  return out;
}

std::vector<int> set_difference(const std::vector<int>& a,
                                const std::vector<int>& b) {
  std::vector<int> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return out;
}

bool set_contains(const std::vector<int>& super, const std::vector<int>& sub) {
  return std::includes(super.begin(), super.end(), sub.begin(), sub.end());
}

bool set_member(const std::vector<int>& s, int v) {
  return std::binary_search(s.begin(), s.end(), v);
}

void validate(const Polytope& p) {
  if (p.dim < 2) {
    fail(ErrorKind::Invariant, "polytope dimension must be at least 2");
  }
  if (p.vertices.empty()) {
    fail(ErrorKind::Invariant, "polytope has no vertices");
  }
  if (p.facets.empty()) {
    fail(ErrorKind::Invariant, "polytope has no facets");
  }
  const int n = static_cast<int>(p.vertices.size());
  for (const Vec& v : p.vertices) {
    if (static_cast<int>(v.size()) != p.dim) {
      fail(ErrorKind::Invariant, "vertex coordinate count differs from the "
                                 "polytope dimension");
    }
  }
  if (affine_rank(p.vertices) != p.dim) {
    fail(ErrorKind::Invariant,
         "vertex set does not affinely span the polytope dimension");
  }

  for (const Facet& f : p.facets) {
    if (f.vertex_set.empty()) {
      fail(ErrorKind::Invariant, "facet has an empty vertex set");
    }
    for (size_t i = 0; i < f.vertex_set.size(); ++i) {
      if (f.vertex_set[i] < 0 || f.vertex_set[i] >= n) {
        fail(ErrorKind::Invariant, "facet vertex index out of range");
      }
      if (i > 0 && f.vertex_set[i - 1] >= f.vertex_set[i]) {
        fail(ErrorKind::Invariant,
             "facet vertex set is not strictly ascending");
      }
    }
    if (static_cast<int>(f.plane.normal.size()) != p.dim) {
      fail(ErrorKind::Invariant,
           "facet hyperplane normal length differs from the dimension");
    }
    bool zero = true;
    for (const Rational& c : f.plane.normal) {
      if (c != 0) {
        zero = false;
        break;
      }
    }
    if (zero) {
      fail(ErrorKind::Invariant, "facet hyperplane has a zero normal");
    }
    if (affine_rank(select_points(p, f.vertex_set)) != p.dim - 1) {
      fail(ErrorKind::Invariant,
           "facet vertex set does not span a hyperplane");
    }
  }

  std::vector<int> facets_per_vertex(static_cast<size_t>(n), 0);
  for (const Facet& f : p.facets) {
    for (int v = 0; v < n; ++v) {
      Side side = classify_point(f.plane, p.vertices[static_cast<size_t>(v)]);
      bool listed = set_member(f.vertex_set, v);
      if (side == Side::Beyond) {
        fail(ErrorKind::Invariant,
             "vertex " + std::to_string(v) + " lies beyond a facet hyperplane");
      }
      if ((side == Side::On) != listed) {
        fail(ErrorKind::Invariant,
             "facet vertex set disagrees with hyperplane incidence at vertex " +
                 std::to_string(v));
      }
      if (listed) {
        ++facets_per_vertex[static_cast<size_t>(v)];
      }
    }
  }
  for (int v = 0; v < n; ++v) {
    if (facets_per_vertex[static_cast<size_t>(v)] < p.dim) {
      fail(ErrorKind::Invariant, "vertex " + std::to_string(v) +
                                     " lies in fewer facets than the dimension");
    }
  }

  for (size_t i = 0; i < p.facets.size(); ++i) {
    for (size_t j = 0; j < p.facets.size(); ++j) {
      if (i != j && set_contains(p.facets[i].vertex_set,
                                 p.facets[j].vertex_set)) {
        fail(ErrorKind::Invariant,
             "one facet's vertex set contains another's");
      }
    }
  }
}

} // namespace polystack
