#include "doctest.h"

#include "fixtures.hpp"
#include "polystack/errors.hpp"
#include "polystack/polytope.hpp"

using namespace polystack;
using fixtures::vec;

TEST_CASE("validate accepts well-formed polytopes") {
  CHECK_NOTHROW(validate(catalog_entry("simplex4").polytope));
  CHECK_NOTHROW(validate(catalog_entry("cube3").polytope));
  CHECK_NOTHROW(validate(fixtures::seven().p));
}

TEST_CASE("validate rejects a facet set omitting an incident vertex") {
  Polytope p = catalog_entry("cube3").polytope;
  REQUIRE(p.facets[0].vertex_set.size() == 4);
  p.facets[0].vertex_set.pop_back();
  CHECK_THROWS_AS(validate(p), Error);
}

TEST_CASE("validate rejects a vertex beyond a facet hyperplane") {
  Polytope p = catalog_entry("cube3").polytope;
  p.facets[0].plane.offset = p.facets[0].plane.offset + rat(1);
  CHECK_THROWS_AS(validate(p), Error);
}

TEST_CASE("validate rejects unsorted facet rows") {
  Polytope p = catalog_entry("simplex4").polytope;
  std::swap(p.facets[0].vertex_set[0], p.facets[0].vertex_set[1]);
  CHECK_THROWS_AS(validate(p), Error);
}

TEST_CASE("validate rejects nested facet vertex sets") {
  Polytope p = catalog_entry("simplex4").polytope;
  // Duplicate a facet and drop one vertex from the copy: contained set.
  Facet extra = p.facets[0];
  extra.vertex_set.pop_back();
  p.facets.push_back(extra);
  CHECK_THROWS_AS(validate(p), Error);
}

TEST_CASE("validate rejects a flat vertex configuration") {
  Polytope p = catalog_entry("cube3").polytope;
  for (Vec& v : p.vertices) v[2] = rat(0); // squash to a plane
  CHECK_THROWS_AS(validate(p), Error);
}

TEST_CASE("interior_point is strictly beneath every facet") {
  for (const char* name : {"simplex4", "P9", "P10", "P11", "cube3"}) {
    const Polytope& p = catalog_entry(name).polytope;
    const Vec x = interior_point(p);
    for (const Facet& f : p.facets) {
      CHECK(classify_point(f.plane, x) == Side::Beneath);
    }
  }
}

TEST_CASE("select_points gathers coordinates by index") {
  const Polytope& p = catalog_entry("simplex4").polytope;
  const std::vector<Vec> pts = select_points(p, {0, 2});
  REQUIRE(pts.size() == 2);
  CHECK(pts[0] == p.vertices[0]);
  CHECK(pts[1] == p.vertices[2]);
}

TEST_CASE("sorted-set helpers") {
  const std::vector<int> a = {1, 3, 5, 7};
  const std::vector<int> b = {3, 4, 7};
  CHECK(set_intersect(a, b) == std::vector<int>{3, 7});
  CHECK(set_union(a, b) == std::vector<int>{1, 3, 4, 5, 7});
  CHECK(set_difference(a, b) == std::vector<int>{1, 5});
  CHECK(set_contains(a, {3, 7}));
  CHECK_FALSE(set_contains(a, {3, 4}));
  CHECK(set_contains(a, {}));
  CHECK(set_member(a, 5));
  CHECK_FALSE(set_member(a, 2));
}
