#include "doctest.h"

#include "polystack/errors.hpp"
#include "polystack/linalg.hpp"
#include "polystack/rational.hpp"

#include <optional>
#include <vector>

using namespace polystack;

namespace {
Vec v(std::initializer_list<long> coords) {
  Vec out;
  for (long c : coords) out.push_back(Rational(c));
  return out;
}
} // namespace

TEST_CASE("vector arithmetic") {
  CHECK(dot(v({1, 2, 3}), v({4, 5, 6})) == rat(32));
  CHECK(add(v({1, 2}), v({3, -5})) == v({4, -3}));
  CHECK(sub(v({1, 2}), v({3, -5})) == v({-2, 7}));
  CHECK(scale(rat(1, 2), v({4, 6})) == v({2, 3}));
}

TEST_CASE("canonicalization scales positively to coprime integers") {
  Hyperplane h;
  h.normal = {rat(-2, 3), rat(4, 3)};
  h.offset = rat(-2);
  const Hyperplane c = canonicalized(h);
  CHECK(c.normal == Vec{rat(-1), rat(2)});
  CHECK(c.offset == rat(-3));
  // Already-canonical planes are fixed points.
  CHECK(canonicalized(c) == c);
}

TEST_CASE("canonicalization preserves the sides") {
  Hyperplane h;
  h.normal = {rat(1, 2), rat(0)};
  h.offset = rat(3, 2);
  const Hyperplane c = canonicalized(h);
  const Vec beneath = v({10, 0});
  const Vec beyond = v({0, 0});
  CHECK(classify_point(h, beneath) == Side::Beneath);
  CHECK(classify_point(c, beneath) == Side::Beneath);
  CHECK(classify_point(h, beyond) == Side::Beyond);
  CHECK(classify_point(c, beyond) == Side::Beyond);
}

TEST_CASE("point classification against an oriented plane") {
  Hyperplane h;
  h.normal = {rat(1), rat(0)};
  h.offset = rat(0);
  CHECK(classify_point(h, v({1, 5})) == Side::Beneath);
  CHECK(classify_point(h, v({0, 2})) == Side::On);
  CHECK(classify_point(h, v({-1, 0})) == Side::Beyond);
}

TEST_CASE("square systems solve exactly or report singularity") {
  const std::vector<Vec> rows = {v({2, 1}), v({1, -1})};
  const std::optional<Vec> x = solve_square(rows, v({5, 1}));
  REQUIRE(x.has_value());
  CHECK(*x == v({2, 1}));

  const std::vector<Vec> fractional = {v({2, 0}), v({0, 3})};
  const std::optional<Vec> y = solve_square(fractional, v({1, 1}));
  REQUIRE(y.has_value());
  CHECK(*y == Vec{rat(1, 2), rat(1, 3)});

  const std::vector<Vec> singular = {v({1, 2}), v({2, 4})};
  CHECK_FALSE(solve_square(singular, v({1, 1})).has_value());
}

TEST_CASE("linear and affine rank") {
  CHECK(linear_rank({v({1, 0, 0}), v({0, 1, 0}), v({1, 1, 0})}) == 2);
  CHECK(linear_rank({v({0, 0})}) == 0);
  CHECK(linear_rank({v({2, 4}), v({1, 2})}) == 1);

  // Three collinear points have a 1-dimensional affine hull.
  CHECK(affine_rank({v({0, 0}), v({1, 1}), v({2, 2})}) == 1);
  CHECK(affine_rank({v({0, 0}), v({1, 0}), v({0, 1})}) == 2);
  CHECK(affine_rank({v({5, 7})}) == 0);
}

TEST_CASE("barycenter averages the points") {
  CHECK(barycenter({v({0, 0}), v({2, 4})}) == v({1, 2}));
  CHECK(barycenter({v({1, 1}), v({2, 2}), v({3, 3})}) == v({2, 2}));
}

TEST_CASE("hyperplane_span needs affine rank exactly dim-1") {
  // Two distinct points span a line in the plane.
  const auto line = hyperplane_span({v({1, 0}), v({0, 1})});
  REQUIRE(line.has_value());
  CHECK(classify_point(*line, v({1, 0})) == Side::On);
  CHECK(classify_point(*line, v({0, 1})) == Side::On);

  // Collinear points in space do not span a plane.
  CHECK_FALSE(hyperplane_span({v({0, 0, 0}), v({1, 1, 1}), v({2, 2, 2})})
                  .has_value());
  // Affinely spanning points do not lie on any hyperplane.
  CHECK_FALSE(
      hyperplane_span({v({0, 0}), v({1, 0}), v({0, 1})}).has_value());
  CHECK_FALSE(hyperplane_span({}).has_value());
}

TEST_CASE("hyperplane_through orients by the reference point") {
  const Hyperplane h = hyperplane_through({v({1, 0}), v({0, 1})}, v({0, 0}));
  CHECK(classify_point(h, v({0, 0})) == Side::Beneath);
  CHECK(classify_point(h, v({1, 0})) == Side::On);
  CHECK(classify_point(h, v({0, 1})) == Side::On);
  CHECK(classify_point(h, v({1, 1})) == Side::Beyond);
  // The result is canonical: integer coprime entries.
  CHECK(h.normal == Vec{rat(-1), rat(-1)});
  CHECK(h.offset == rat(-1));
}

TEST_CASE("hyperplane_through rejects degenerate inputs") {
  // Reference on the plane.
  const Vec midpoint = {rat(1, 2), rat(1, 2)};
  CHECK_THROWS_AS(hyperplane_through({v({1, 0}), v({0, 1})}, midpoint), Error);
  // Points that do not span.
  CHECK_THROWS_AS(hyperplane_through({v({0, 0, 0}), v({1, 1, 1})}, v({1, 0, 0})),
                  Error);
}
