#pragma once

#include "polystack/rational.hpp"

#include <optional>
#include <vector>

namespace polystack {

using Vec = std::vector<Rational>;

// Position of a point relative to an oriented hyperplane {x : <n,x> = c}
// whose polytope side is {<n,x> >= c}.
enum class Side {
  Beyond,  // <n,x> < c, outside the halfspace
  On,      // <n,x> = c
  Beneath, // <n,x> > c, interior side
};

struct Hyperplane {
  Vec normal;
  Rational offset;

  bool operator==(const Hyperplane&) const = default;
};

Rational dot(const Vec& a, const Vec& b);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Rational& s, const Vec& a);

Side classify_point(const Hyperplane& plane, const Vec& point);

// Rescales by a positive factor so all entries are coprime integers.
// Orientation (and therefore the Beyond/Beneath sides) is preserved.
// The zero normal is rejected.
Hyperplane canonicalized(const Hyperplane& plane);

// Solves the square system rows * x = rhs by fraction-free elimination.
// Returns nullopt when the matrix is singular.
std::optional<Vec> solve_square(const std::vector<Vec>& rows, const Vec& rhs);

// Rank of the span of the given vectors.
int linear_rank(std::vector<Vec> rows);

// Dimension of the affine hull of the given points.
int affine_rank(const std::vector<Vec>& points);

// Arithmetic mean of the points. Requires at least one point.
Vec barycenter(const std::vector<Vec>& points);

// The hyperplane spanned by the given points, canonicalized but with an
// arbitrary orientation. Returns nullopt unless the points determine a
// unique hyperplane (affine rank exactly dim-1).
std::optional<Hyperplane> hyperplane_span(const std::vector<Vec>& points);

// The unique hyperplane through the given points, oriented so beneath_ref
// lies strictly Beneath. Requires the points to span a hyperplane (affine
// rank dim-1) and beneath_ref to lie strictly off it; throws
// Error(Invariant) otherwise. The result is canonicalized.
Hyperplane hyperplane_through(const std::vector<Vec>& points,
                              const Vec& beneath_ref);

} // namespace polystack
