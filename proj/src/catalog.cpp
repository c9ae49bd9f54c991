#include "polystack/catalog.hpp"

#include "polystack/errors.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <utility>

namespace polystack {

HullResult brute_force_hull(int dim, const std::vector<Vec>& points) {
  if (dim < 2) {
    throw std::invalid_argument("brute_force_hull: dimension below 2");
  }
  const std::size_t n = points.size();
  if (n > 64) {
    fail(ErrorKind::Unsupported,
         "brute-force hull enumeration supports at most 64 points");
  }
  for (const Vec& p : points) {
    if (static_cast<int>(p.size()) != dim) {
      throw std::invalid_argument("brute_force_hull: point dimension mismatch");
    }
  }
  if (affine_rank(points) != dim) {
    fail(ErrorKind::Invariant,
         "points do not affinely span the ambient space");
  }

  struct Found {
    Hyperplane plane;
    std::uint64_t on_mask;
  };
  std::vector<Found> found;

  std::vector<int> idx(static_cast<size_t>(dim));
  for (int i = 0; i < dim; ++i) {
    idx[static_cast<size_t>(i)] = i;
  }
  auto advance = [&]() -> bool {
    int i = dim - 1;
    while (i >= 0 &&
           idx[static_cast<size_t>(i)] == static_cast<int>(n) - (dim - i)) {
      --i;
    }
    if (i < 0) {
      return false;
    }
    ++idx[static_cast<size_t>(i)];
    for (int j = i + 1; j < dim; ++j) {
      idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
    }
    return true;
  };

  do {
    std::uint64_t submask = 0;
    for (int i : idx) {
      submask |= std::uint64_t{1} << i;
    }
    bool covered = false;
    for (const Found& f : found) {
      if ((f.on_mask & submask) == submask) {
        covered = true;
        break;
      }
    }
    if (covered) {
      continue;
    }

    std::vector<Vec> sel;
    sel.reserve(static_cast<size_t>(dim));
    for (int i : idx) {
      sel.push_back(points[static_cast<size_t>(i)]);
    }
    std::optional<Hyperplane> span = hyperplane_span(sel);
    if (!span) {
      continue;
    }

    std::uint64_t on_mask = 0;
    bool beyond = false;
    bool beneath = false;
    for (std::size_t i = 0; i < n; ++i) {
      switch (classify_point(*span, points[i])) {
      case Side::On:
        on_mask |= std::uint64_t{1} << i;
        break;
      case Side::Beyond:
        beyond = true;
        break;
      case Side::Beneath:
        beneath = true;
        break;
      }
      if (beyond && beneath) {
        break;
      }
    }
    if (beyond && beneath) {
      continue;
    }
    Hyperplane plane = std::move(*span);
    if (beyond) {
      // Negating keeps the coprime-integer form canonical.
      for (Rational& entry : plane.normal) {
        entry = -entry;
      }
      plane.offset = -plane.offset;
    }
    found.push_back({std::move(plane), on_mask});
  } while (advance());

  HullResult out;
  std::vector<bool> extreme(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Vec> normals;
    for (const Found& f : found) {
      if (f.on_mask & (std::uint64_t{1} << i)) {
        normals.push_back(f.plane.normal);
      }
    }
    if (!normals.empty() && linear_rank(std::move(normals)) == dim) {
      extreme[i] = true;
      out.extreme.push_back(static_cast<int>(i));
    }
  }
  for (const Found& f : found) {
    Facet facet;
    facet.plane = f.plane;
    for (std::size_t i = 0; i < n; ++i) {
      if ((f.on_mask & (std::uint64_t{1} << i)) && extreme[i]) {
        facet.vertex_set.push_back(static_cast<int>(i));
      }
    }
    out.facets.push_back(std::move(facet));
  }
  return out;
}

Polytope polytope_from_vertices(int dim, const std::vector<Vec>& points) {
  HullResult hull = brute_force_hull(dim, points);
  if (hull.extreme.size() != points.size()) {
    fail(ErrorKind::Invariant,
         "input contains points that are not vertices of the hull");
  }
  Polytope p;
  p.dim = dim;
  p.vertices = points;
  p.facets = std::move(hull.facets);
  validate(p);
  return p;
}

namespace {

Rational q(long num, long den = 1) { return rat(num, den); }

const std::map<std::string, CatalogEntry>& entries() {
  static const std::map<std::string, CatalogEntry> table = [] {
    std::map<std::string, CatalogEntry> t;
    auto put = [&](const std::string& name, int dim, std::vector<Vec> pts,
                   std::vector<std::vector<int>> inc,
                   std::vector<long long> f) {
      CatalogEntry e;
      e.name = name;
      e.polytope = polytope_from_vertices(dim, pts);
      std::sort(inc.begin(), inc.end());
      e.expected_incidences = std::move(inc);
      e.expected_f = std::move(f);
      t.emplace(name, std::move(e));
    };

    put("simplex4", 4,
        {
            {q(0), q(0), q(0), q(0)},
            {q(1), q(0), q(0), q(0)},
            {q(0), q(1), q(0), q(0)},
            {q(0), q(0), q(1), q(0)},
            {q(0), q(0), q(0), q(1)},
        },
        {}, {5, 10, 10, 5});

    put("P9", 4,
        {
            {q(3), q(0), q(0), q(0)},
            {q(1), q(1), q(1), q(1)},
            {q(0), q(3), q(0), q(0)},
            {q(0), q(0), q(3), q(0)},
            {q(0), q(0), q(0), q(3, 2)},
            {q(-3), q(0), q(0), q(0)},
            {q(0), q(0), q(-3), q(0)},
            {q(0), q(-3), q(0), q(0)},
            {q(-1), q(-1), q(-1), q(1)},
        },
        {
            {1, 2, 3, 4, 5},
            {3, 4, 5, 7, 8},
            {5, 6, 7, 8},
            {2, 4, 5, 6, 8},
            {0, 1, 2, 3},
            {0, 2, 3, 5, 6, 7},
            {0, 4, 6, 7, 8},
            {0, 1, 3, 4, 7},
            {0, 1, 2, 4, 6},
        },
        {9, 26, 26, 9});

    put("P10", 4,
        {
            {q(9), q(-3), q(-3), q(-3)},
            {q(-3), q(9), q(-3), q(-3)},
            {q(-3), q(-3), q(-3), q(-3)},
            {q(-3), q(-3), q(9), q(-3)},
            {q(-3), q(-3), q(-3), q(9)},
            {q(1), q(-3), q(-7), q(1)},
            {q(-3), q(1), q(1), q(-7)},
            {q(3), q(3), q(3), q(3)},
            {q(5), q(-3), q(5), q(1)},
            {q(-3), q(5), q(1), q(5)},
        },
        {
            {3, 4, 7, 8, 9},
            {1, 2, 3, 4, 6, 9},
            {1, 2, 4, 5},
            {1, 3, 7, 9},
            {0, 2, 3, 6},
            {0, 4, 7, 8},
            {0, 1, 4, 5, 7, 9},
            {0, 1, 2, 5, 6},
            {0, 2, 3, 4, 5, 8},
            {0, 1, 3, 6, 7, 8},
        },
        {10, 30, 30, 10});

    put("P11", 4,
        {
            {q(1), q(0), q(0), q(0)},
            {q(0), q(1), q(0), q(0)},
            {q(0), q(0), q(1), q(0)},
            {q(-1), q(0), q(0), q(0)},
            {q(0), q(-1), q(0), q(0)},
            {q(0), q(0), q(-1), q(0)},
            {q(-11, 21), q(11, 21), q(-11, 21), q(0)},
            {q(-11, 147), q(11, 147), q(-11, 147), q(1)},
            {q(-428, 1617), q(428, 1617), q(68, 147), q(1, 2)},
            {q(68, 147), q(428, 1617), q(-428, 1617), q(1, 2)},
            {q(-428, 1617), q(-68, 147), q(-428, 1617), q(1, 2)},
        },
        {
            {1, 5, 6, 7, 9},
            {2, 3, 4, 7, 8, 10},
            {3, 4, 5, 10},
            {3, 5, 6, 7, 10},
            {1, 2, 3, 8},
            {1, 3, 6, 7, 8},
            {0, 2, 4, 7},
            {0, 1, 5, 9},
            {0, 1, 2, 3, 4, 5, 6},
            {0, 4, 5, 7, 9, 10},
            {0, 1, 2, 7, 8, 9},
        },
        {11, 34, 34, 11});

    // 0/1 points with coordinate sum 2 in five coordinates, with the last
    // coordinate dropped (it is determined by the first four).
    put("hypersimplex", 4,
        {
            {q(0), q(0), q(0), q(1)},
            {q(0), q(0), q(1), q(0)},
            {q(0), q(0), q(1), q(1)},
            {q(0), q(1), q(0), q(0)},
            {q(0), q(1), q(0), q(1)},
            {q(0), q(1), q(1), q(0)},
            {q(1), q(0), q(0), q(0)},
            {q(1), q(0), q(0), q(1)},
            {q(1), q(0), q(1), q(0)},
            {q(1), q(1), q(0), q(0)},
        },
        {}, {10, 30, 30, 10});

    put("octahedron3", 3,
        {
            {q(1), q(0), q(0)},
            {q(-1), q(0), q(0)},
            {q(0), q(1), q(0)},
            {q(0), q(-1), q(0)},
            {q(0), q(0), q(1)},
            {q(0), q(0), q(-1)},
        },
        {}, {6, 12, 8});

    put("cube3", 3,
        {
            {q(0), q(0), q(0)},
            {q(0), q(0), q(1)},
            {q(0), q(1), q(0)},
            {q(0), q(1), q(1)},
            {q(1), q(0), q(0)},
            {q(1), q(0), q(1)},
            {q(1), q(1), q(0)},
            {q(1), q(1), q(1)},
        },
        {}, {8, 12, 6});

    // Square base with a triangular cap: the three slanted planes meet
    // above the cap, so the cap facet has a bounded apex.
    put("frustum3", 3,
        {
            {q(0), q(0), q(0)},
            {q(4), q(0), q(0)},
            {q(0), q(4), q(0)},
            {q(0), q(0), q(2)},
            {q(2), q(0), q(2)},
            {q(0), q(2), q(2)},
        },
        {}, {6, 9, 5});

    // Triangular prism: the side planes of a triangle facet are parallel
    // to the prism axis, so that facet has no bounded apex.
    put("prism3", 3,
        {
            {q(0), q(0), q(0)},
            {q(2), q(0), q(0)},
            {q(0), q(2), q(0)},
            {q(0), q(0), q(2)},
            {q(2), q(0), q(2)},
            {q(0), q(2), q(2)},
        },
        {}, {6, 9, 5});

    return t;
  }();
  return table;
}

} // namespace

const CatalogEntry& catalog_entry(const std::string& name) {
  const auto& table = entries();
  auto it = table.find(name);
  if (it == table.end()) {
    fail(ErrorKind::Unsupported, "unknown catalog name: " + name);
  }
  return it->second;
}

const std::vector<std::string>& catalog_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, entry] : entries()) {
      (void)entry;
      out.push_back(name);
    }
    return out;
  }();
  return names;
}

} // namespace polystack
