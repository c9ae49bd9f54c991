#include "polystack/pseudostack.hpp"

#include "polystack/errors.hpp"
#include "polystack/lattice.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>

namespace polystack {

namespace {

Rational plane_value(const Hyperplane& h, const Vec& x) {
  return dot(h.normal, x) - h.offset;
}

std::vector<int> checked_subset(const Polytope& p, std::vector<int> subset) {
  if (subset.empty()) {
    fail(ErrorKind::Invariant, "facet selector lists no vertices");
  }
  std::sort(subset.begin(), subset.end());
  for (std::size_t i = 0; i < subset.size(); ++i) {
    if (subset[i] < 0 ||
        subset[i] >= static_cast<int>(p.vertices.size())) {
      fail(ErrorKind::Invariant,
           "facet selector lists an invalid vertex index");
    }
    if (i > 0 && subset[i] == subset[i - 1]) {
      fail(ErrorKind::Invariant, "facet selector repeats a vertex");
    }
  }
  return subset;
}

int resolve_contains_all(const Polytope& p, const std::vector<int>& subset) {
  int found = -1;
  for (std::size_t fi = 0; fi < p.facets.size(); ++fi) {
    if (set_contains(p.facets[fi].vertex_set, subset)) {
      if (found >= 0) {
        fail(ErrorKind::Invariant,
             "facet selector is ambiguous: several facets contain the "
             "listed vertices");
      }
      found = static_cast<int>(fi);
    }
  }
  if (found < 0) {
    fail(ErrorKind::Invariant, "facet selector matches no facet");
  }
  return found;
}

} // namespace

std::vector<int> adjacent_facets(const Polytope& p, int facet_index) {
  if (facet_index < 0 ||
      facet_index >= static_cast<int>(p.facets.size())) {
    throw std::invalid_argument("adjacent_facets: facet index out of range");
  }
  const int d = p.dim;
  std::vector<int> out;
  for (std::size_t g = 0; g < p.facets.size(); ++g) {
    if (static_cast<int>(g) == facet_index) {
      continue;
    }
    std::vector<int> meet =
        set_intersect(p.facets[static_cast<size_t>(facet_index)].vertex_set,
                      p.facets[g].vertex_set);
    if (static_cast<int>(meet.size()) < d - 1) {
      continue;
    }
    if (affine_rank(select_points(p, meet)) == d - 2) {
      out.push_back(static_cast<int>(g));
    }
  }
  return out;
}

ResolvedStep resolve_step(const Polytope& p, const StepSpec& spec) {
  const int d = p.dim;
  if (spec.base.mode != SelectorMode::ContainsAll) {
    fail(ErrorKind::Invariant,
         "base facet selector must name the facet by its own vertices");
  }
  ResolvedStep rs;
  rs.base = resolve_contains_all(p, checked_subset(p, spec.base.vertex_subset));
  const Facet& base = p.facets[static_cast<size_t>(rs.base)];
  if (static_cast<int>(base.vertex_set.size()) != d) {
    fail(ErrorKind::Invariant, "base facet is not a simplex");
  }
  std::vector<int> adj = adjacent_facets(p, rs.base);

  auto resolve_one = [&](const FacetSelector& sel) -> int {
    std::vector<int> subset = checked_subset(p, sel.vertex_subset);
    if (sel.mode == SelectorMode::ContainsAll) {
      return resolve_contains_all(p, subset);
    }
    if (!set_contains(base.vertex_set, subset)) {
      fail(ErrorKind::Invariant,
           "ridge selector lists vertices outside the base facet");
    }
    int found = -1;
    for (std::size_t fi = 0; fi < p.facets.size(); ++fi) {
      if (static_cast<int>(fi) == rs.base) {
        continue;
      }
      if (set_contains(p.facets[fi].vertex_set, subset)) {
        if (found >= 0) {
          fail(ErrorKind::Invariant,
               "ridge selector is ambiguous: several facets contain the "
               "listed vertices");
        }
        found = static_cast<int>(fi);
      }
    }
    if (found < 0) {
      fail(ErrorKind::Invariant, "ridge selector matches no facet");
    }
    std::vector<int> ridge = set_intersect(
        base.vertex_set, p.facets[static_cast<size_t>(found)].vertex_set);
    if (affine_rank(select_points(p, ridge)) != d - 2) {
      fail(ErrorKind::Invariant,
           "ridge selector does not name a ridge of the base facet");
    }
    return found;
  };

  for (const FacetSelector& sel : spec.f_set) {
    rs.f_set.push_back(resolve_one(sel));
  }
  for (const FacetSelector& sel : spec.n_set) {
    rs.n_set.push_back(resolve_one(sel));
  }
  std::sort(rs.f_set.begin(), rs.f_set.end());
  std::sort(rs.n_set.begin(), rs.n_set.end());
  if (std::adjacent_find(rs.f_set.begin(), rs.f_set.end()) != rs.f_set.end() ||
      std::adjacent_find(rs.n_set.begin(), rs.n_set.end()) != rs.n_set.end()) {
    fail(ErrorKind::Invariant, "a facet set names the same facet twice");
  }
  if (!set_intersect(rs.f_set, rs.n_set).empty()) {
    fail(ErrorKind::Invariant,
         "kept-neighbor and absorbed-neighbor facet sets overlap");
  }
  for (int fi : rs.f_set) {
    if (!set_member(adj, fi)) {
      fail(ErrorKind::Invariant,
           "kept-neighbor facet is not adjacent to the base facet");
    }
  }
  for (int fi : rs.n_set) {
    if (!set_member(adj, fi)) {
      fail(ErrorKind::Invariant,
           "absorbed-neighbor facet is not adjacent to the base facet");
    }
  }
  return rs;
}

bool is_nonsimple(const Polytope& p, int base, const std::vector<int>& f_set) {
  const int d = p.dim;
  const std::vector<int>& sverts =
      p.facets[static_cast<size_t>(base)].vertex_set;
  for (std::size_t i = 0; i < f_set.size(); ++i) {
    for (std::size_t j = i + 1; j < f_set.size(); ++j) {
      const std::vector<int>& a =
          p.facets[static_cast<size_t>(f_set[i])].vertex_set;
      const std::vector<int>& b =
          p.facets[static_cast<size_t>(f_set[j])].vertex_set;
      std::vector<int> meet = set_intersect(a, b);
      if (static_cast<int>(meet.size()) < d - 1 ||
          affine_rank(select_points(p, meet)) != d - 2) {
        continue; // not adjacent to each other
      }
      std::vector<int> with_base = set_intersect(meet, sverts);
      if (static_cast<int>(with_base.size()) >= d - 2 &&
          affine_rank(select_points(p, with_base)) >= d - 3) {
        return false;
      }
    }
  }
  return true;
}

namespace {

// Meeting point of the facet's neighbor hyperplanes, when unique.
std::optional<Vec> neighbor_apex(const Polytope& p,
                                 const std::vector<int>& neighbors) {
  std::vector<Vec> rows;
  Vec rhs;
  for (int fi : neighbors) {
    rows.push_back(p.facets[static_cast<size_t>(fi)].plane.normal);
    rhs.push_back(p.facets[static_cast<size_t>(fi)].plane.offset);
  }
  return solve_square(rows, rhs);
}

} // namespace

bool bounded_position(const Polytope& p, int facet_index) {
  if (facet_index < 0 ||
      facet_index >= static_cast<int>(p.facets.size())) {
    throw std::invalid_argument("bounded_position: facet index out of range");
  }
  const int d = p.dim;
  const Facet& facet = p.facets[static_cast<size_t>(facet_index)];
  if (static_cast<int>(facet.vertex_set.size()) != d) {
    fail(ErrorKind::Invariant,
         "bounded-position test requires a simplex facet");
  }
  std::vector<int> neighbors = adjacent_facets(p, facet_index);
  if (static_cast<int>(neighbors.size()) != d) {
    fail(ErrorKind::Internal,
         "simplex facet does not have exactly dim neighbor facets");
  }
  std::optional<Vec> apex = neighbor_apex(p, neighbors);
  if (!apex) {
    return false;
  }
  return classify_point(facet.plane, *apex) == Side::Beyond;
}

namespace {

struct LinearConstraint {
  Rational a; // value at scale 0
  Rational b; // slope in the scale
  bool want_positive;
};

// Smallest power of 1/2 satisfying every strict constraint a + t*b, t > 0;
// after 256 halvings the exact feasible interval is consulted directly.
std::optional<Rational> find_scale(const std::vector<LinearConstraint>& cons) {
  Rational lo(0);
  std::optional<Rational> hi;
  for (const LinearConstraint& c : cons) {
    Rational a = c.want_positive ? c.a : Rational(-c.a);
    Rational b = c.want_positive ? c.b : Rational(-c.b);
    if (b == 0) {
      if (a <= 0) {
        return std::nullopt;
      }
      continue;
    }
    Rational bound = -a / b;
    if (b > 0) {
      if (bound > lo) {
        lo = bound;
      }
    } else {
      if (bound <= 0) {
        return std::nullopt;
      }
      if (!hi || bound < *hi) {
        hi = bound;
      }
    }
  }
  if (hi && *hi <= lo) {
    return std::nullopt;
  }
  Rational eps(1);
  for (int k = 0; k <= 256; ++k) {
    if (eps > lo && (!hi || eps < *hi)) {
      return eps;
    }
    eps /= 2;
  }
  // The halving ladder can step over a feasible window bounded away from
  // zero; the window is exact, so take a point of it directly.
  if (hi) {
    return (lo + *hi) / 2;
  }
  return lo + 1;
}

WitnessPoint witness_for(const Polytope& p, const ResolvedStep& rs,
                         std::mt19937_64* rng) {
  const int d = p.dim;
  const int m = static_cast<int>(p.facets.size());
  const Facet& base = p.facets[static_cast<size_t>(rs.base)];

  auto expected_side = [&](int fi) {
    if (fi == rs.base || set_member(rs.n_set, fi)) {
      return Side::Beyond;
    }
    if (set_member(rs.f_set, fi)) {
      return Side::On;
    }
    return Side::Beneath;
  };
  auto verify = [&](const Vec& pt) {
    for (int fi = 0; fi < m; ++fi) {
      if (classify_point(p.facets[static_cast<size_t>(fi)].plane, pt) !=
          expected_side(fi)) {
        fail(ErrorKind::Internal, "witness point fails its side conditions");
      }
    }
  };
  auto weight = [&]() -> Rational {
    if (!rng) {
      return Rational(1);
    }
    std::uniform_int_distribution<int> dist(1, 8);
    return Rational(dist(*rng));
  };

  if (bounded_position(p, rs.base)) {
    std::vector<int> neighbors = adjacent_facets(p, rs.base);
    Vec apex = *neighbor_apex(p, neighbors);
    Vec dir(static_cast<size_t>(d), Rational(0));
    for (int j : neighbors) {
      if (set_member(rs.f_set, j)) {
        continue;
      }
      int opposite = -1;
      for (int v : base.vertex_set) {
        if (!set_member(p.facets[static_cast<size_t>(j)].vertex_set, v)) {
          if (opposite >= 0) {
            fail(ErrorKind::Internal,
                 "neighbor facet misses several base facet vertices");
          }
          opposite = v;
        }
      }
      if (opposite < 0) {
        fail(ErrorKind::Internal,
             "neighbor facet contains the whole base facet");
      }
      Rational w = weight();
      if (set_member(rs.n_set, j)) {
        w = -w;
      }
      dir = add(dir, scale(w, sub(p.vertices[static_cast<size_t>(opposite)],
                                  apex)));
    }
    std::vector<LinearConstraint> cons;
    for (int fi = 0; fi < m; ++fi) {
      const Hyperplane& h = p.facets[static_cast<size_t>(fi)].plane;
      Rational a = plane_value(h, apex);
      Rational b = dot(h.normal, dir);
      Side want = expected_side(fi);
      if (want == Side::On) {
        if (a != 0 || b != 0) {
          fail(ErrorKind::Internal,
               "kept-neighbor hyperplane is not preserved along the ray");
        }
        continue;
      }
      cons.push_back({std::move(a), std::move(b), want == Side::Beneath});
    }
    std::optional<Rational> eps = find_scale(cons);
    if (!eps) {
      fail(ErrorKind::Unsupported,
           "witness region is empty: no admissible scale along the ray");
    }
    WitnessPoint w;
    w.point = add(apex, scale(*eps, dir));
    w.epsilon = *eps;
    w.apex = std::move(apex);
    verify(w.point);
    return w;
  }

  // Barycentric fallback ray, available only without absorbed neighbors
  // and with at most one kept neighbor.
  if (!rs.n_set.empty() || rs.f_set.size() > 1) {
    fail(ErrorKind::Unsupported,
         "witness region unsupported: base facet lacks bounded position "
         "and the step has no barycentric fallback");
  }
  auto rel_interior = [&](const std::vector<int>& verts) -> Vec {
    if (!rng) {
      return barycenter(select_points(p, verts));
    }
    // Positive weights keep the point strictly off every hyperplane not
    // containing the whole vertex set.
    Vec sum(static_cast<size_t>(d), Rational(0));
    Rational total(0);
    for (int v : verts) {
      Rational w = weight();
      sum = add(sum, scale(w, p.vertices[static_cast<size_t>(v)]));
      total += w;
    }
    return scale(Rational(1) / total, sum);
  };

  Vec start, inner;
  if (rs.f_set.size() == 1) {
    const Facet& kept = p.facets[static_cast<size_t>(rs.f_set[0])];
    std::vector<int> ridge = set_intersect(base.vertex_set, kept.vertex_set);
    start = rel_interior(ridge);
    inner = barycenter(select_points(p, kept.vertex_set));
  } else {
    start = rel_interior(base.vertex_set);
    inner = interior_point(p);
  }
  Vec dir = sub(start, inner);
  std::vector<LinearConstraint> cons;
  for (int fi = 0; fi < m; ++fi) {
    const Hyperplane& h = p.facets[static_cast<size_t>(fi)].plane;
    Rational a = plane_value(h, start);
    Rational b = dot(h.normal, dir);
    Side want = expected_side(fi);
    if (want == Side::On) {
      if (a != 0 || b != 0) {
        fail(ErrorKind::Internal,
             "kept-neighbor hyperplane is not preserved along the "
             "fallback ray");
      }
      continue;
    }
    cons.push_back({std::move(a), std::move(b), want == Side::Beneath});
  }
  std::optional<Rational> eps = find_scale(cons);
  if (!eps) {
    fail(ErrorKind::Unsupported,
         "witness region is empty: no admissible scale along the fallback "
         "ray");
  }
  WitnessPoint w;
  w.point = add(start, scale(*eps, dir));
  w.epsilon = *eps;
  w.apex = std::nullopt;
  verify(w.point);
  return w;
}

void require_nonsimple(const Polytope& p, const ResolvedStep& rs) {
  if (!is_nonsimple(p, rs.base, rs.f_set)) {
    fail(ErrorKind::Invariant,
         "kept-neighbor facets violate the nonsimplicity requirement: two "
         "of them share a ridge and a low face with the base facet");
  }
}

} // namespace

WitnessPoint witness_point(const Polytope& p, const StepSpec& spec) {
  ResolvedStep rs = resolve_step(p, spec);
  require_nonsimple(p, rs);
  return witness_for(p, rs, nullptr);
}

WitnessPoint witness_point_randomized(const Polytope& p, const StepSpec& spec,
                                      std::mt19937_64& rng) {
  ResolvedStep rs = resolve_step(p, spec);
  require_nonsimple(p, rs);
  return witness_for(p, rs, &rng);
}

namespace {

// Rebuilds the vertex set of a face T (of dimension dim_t) after adding
// the point v lying on T's own hyperplane: subfaces of T that v is
// Beneath keep their vertices, subfaces On v's hyperplane pattern are
// rebuilt one dimension lower, Beyond subfaces vanish; v itself joins.
// `marker` stands for v's future vertex index.
std::vector<int> update_face(const Polytope& p, const std::vector<int>& t,
                             int dim_t, const Vec& v, int marker) {
  std::map<std::vector<int>, Side> subfaces;
  for (const Facet& f : p.facets) {
    if (set_contains(f.vertex_set, t)) {
      continue;
    }
    std::vector<int> meet = set_intersect(t, f.vertex_set);
    if (static_cast<int>(meet.size()) < dim_t) {
      continue;
    }
    if (affine_rank(select_points(p, meet)) != dim_t - 1) {
      continue;
    }
    Side s = classify_point(f.plane, v);
    auto [it, inserted] = subfaces.emplace(std::move(meet), s);
    if (!inserted && it->second != s) {
      fail(ErrorKind::Internal,
           "inconsistent side classification of a shared subface");
    }
  }

  std::vector<int> out;
  bool boundary_kept = false;
  for (const auto& [face, s] : subfaces) {
    if (s == Side::Beneath) {
      out = set_union(out, face);
      boundary_kept = true;
    } else if (s == Side::On) {
      if (dim_t - 1 < 1) {
        fail(ErrorKind::Internal,
             "witness point lies on a vertex of a rebuilt facet");
      }
      out = set_union(out, update_face(p, face, dim_t - 1, v, marker));
      boundary_kept = true;
    }
  }
  if (!boundary_kept) {
    fail(ErrorKind::Internal, "rebuilt facet lost all of its boundary");
  }
  out = set_union(out, std::vector<int>{marker});
  return out;
}

} // namespace

StepResult pseudo_stack_with(const Polytope& p, const StepSpec& spec,
                             const WitnessPoint& witness) {
  ResolvedStep rs = resolve_step(p, spec);
  require_nonsimple(p, rs);
  const int d = p.dim;
  const int m = static_cast<int>(p.facets.size());
  const int n = static_cast<int>(p.vertices.size());
  const Vec& v = witness.point;

  std::vector<int> dropped, kept, on;
  for (int fi = 0; fi < m; ++fi) {
    switch (classify_point(p.facets[static_cast<size_t>(fi)].plane, v)) {
    case Side::Beyond:
      dropped.push_back(fi);
      break;
    case Side::On:
      on.push_back(fi);
      break;
    case Side::Beneath:
      kept.push_back(fi);
      break;
    }
  }
  std::vector<int> expected_dropped = rs.n_set;
  expected_dropped.push_back(rs.base);
  std::sort(expected_dropped.begin(), expected_dropped.end());
  if (dropped != expected_dropped || on != rs.f_set) {
    fail(ErrorKind::Internal,
         "witness point classification does not match the step "
         "specification");
  }

  const int marker = n;
  struct NewFacet {
    Hyperplane plane;
    std::vector<int> verts;
    int type; // 0 kept, 1 base pyramid, 2 neighbor pyramid, 3 rebuilt
  };
  std::vector<NewFacet> result_facets;
  for (int fi : kept) {
    result_facets.push_back({p.facets[static_cast<size_t>(fi)].plane,
                             p.facets[static_cast<size_t>(fi)].vertex_set,
                             0});
  }
  Vec center = interior_point(p);
  for (int dfi : dropped) {
    for (int kfi : kept) {
      std::vector<int> ridge =
          set_intersect(p.facets[static_cast<size_t>(dfi)].vertex_set,
                        p.facets[static_cast<size_t>(kfi)].vertex_set);
      if (static_cast<int>(ridge.size()) < d - 1) {
        continue;
      }
      if (affine_rank(select_points(p, ridge)) != d - 2) {
        continue;
      }
      std::vector<Vec> pts = select_points(p, ridge);
      pts.push_back(v);
      Hyperplane plane = hyperplane_through(pts, center);
      std::vector<int> verts = ridge;
      verts.push_back(marker);
      result_facets.push_back(
          {std::move(plane), std::move(verts), dfi == rs.base ? 1 : 2});
    }
  }
  for (int ofi : on) {
    std::vector<int> verts = update_face(
        p, p.facets[static_cast<size_t>(ofi)].vertex_set, d - 1, v, marker);
    result_facets.push_back(
        {p.facets[static_cast<size_t>(ofi)].plane, std::move(verts), 3});
  }

  std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
  for (const NewFacet& f : result_facets) {
    for (int x : f.verts) {
      seen[static_cast<size_t>(x)] = 1;
    }
  }
  if (!seen[static_cast<size_t>(marker)]) {
    fail(ErrorKind::Internal, "step did not create any facet at the new "
                              "vertex");
  }

  StepResult res;
  res.resolved = rs;
  res.witness = witness;
  res.old_vertex_count = n;
  res.old_to_new.assign(static_cast<size_t>(n), -1);
  Polytope np;
  np.dim = d;
  for (int i = 0; i < n; ++i) {
    if (seen[static_cast<size_t>(i)]) {
      res.old_to_new[static_cast<size_t>(i)] =
          static_cast<int>(np.vertices.size());
      np.vertices.push_back(p.vertices[static_cast<size_t>(i)]);
    }
  }
  res.new_vertex = static_cast<int>(np.vertices.size());
  np.vertices.push_back(v);

  for (const NewFacet& f : result_facets) {
    Facet nf;
    nf.plane = f.plane;
    for (int x : f.verts) {
      int mapped = (x == marker) ? res.new_vertex
                                 : res.old_to_new[static_cast<size_t>(x)];
      if (mapped < 0) {
        fail(ErrorKind::Internal,
             "a surviving facet references an absorbed vertex");
      }
      nf.vertex_set.push_back(mapped);
    }
    // Remapping is monotone and the marker was appended as the largest
    // index, so the set stays sorted.
    np.facets.push_back(std::move(nf));
    switch (f.type) {
    case 0:
      ++res.kept_facets;
      break;
    case 1:
      ++res.base_pyramids;
      break;
    case 2:
      ++res.n_pyramids;
      break;
    default:
      ++res.updated_facets;
      break;
    }
  }
  validate(np);
  res.polytope = std::move(np);
  return res;
}

StepResult pseudo_stack_ex(const Polytope& p, const StepSpec& spec) {
  WitnessPoint w = witness_point(p, spec);
  return pseudo_stack_with(p, spec, w);
}

Polytope pseudo_stack(const Polytope& p, const StepSpec& spec) {
  return pseudo_stack_ex(p, spec).polytope;
}

namespace {

std::vector<int> affected_set(const ResolvedStep& rs) {
  std::vector<int> affected = rs.f_set;
  affected.insert(affected.end(), rs.n_set.begin(), rs.n_set.end());
  affected.push_back(rs.base);
  std::sort(affected.begin(), affected.end());
  return affected;
}

bool covered_by_unaffected(const std::vector<int>& incident,
                           const std::vector<int>& affected) {
  for (int fi : incident) {
    if (!set_member(affected, fi)) {
      return true;
    }
  }
  return false;
}

} // namespace

long long forecast_edge_count(const Polytope& p, const StepSpec& spec) {
  ResolvedStep rs = resolve_step(p, spec);
  require_nonsimple(p, rs);
  if (rs.n_set.size() > 1) {
    fail(ErrorKind::Unsupported,
         "edge forecast supports at most one absorbed neighbor");
  }
  const int d = p.dim;
  FaceLattice lat = build_face_lattice(p);
  std::vector<int> affected = affected_set(rs);

  // Every vertex of the facets that disappear must survive the step,
  // i.e. lie on at least one untouched facet.
  std::vector<int> must_survive =
      p.facets[static_cast<size_t>(rs.base)].vertex_set;
  if (rs.n_set.size() == 1) {
    must_survive = set_union(
        must_survive, p.facets[static_cast<size_t>(rs.n_set[0])].vertex_set);
  }
  for (int vtx : must_survive) {
    if (!covered_by_unaffected(lat.incident_facets[1][static_cast<size_t>(vtx)],
                               affected)) {
      fail(ErrorKind::Unsupported,
           "edge forecast precondition violated: a vertex of an affected "
           "facet would not survive the step");
    }
  }

  long long f1 = static_cast<long long>(lat.layers[2].size());
  long long destroyed = 0;
  for (std::size_t j = 0; j < lat.layers[2].size(); ++j) {
    if (!covered_by_unaffected(lat.incident_facets[2][j], affected)) {
      ++destroyed;
    }
  }
  long long extra = 0;
  if (rs.n_set.size() == 1) {
    const std::vector<int>& nverts =
        p.facets[static_cast<size_t>(rs.n_set[0])].vertex_set;
    const std::vector<int>& sverts =
        p.facets[static_cast<size_t>(rs.base)].vertex_set;
    extra = static_cast<long long>(nverts.size()) -
            static_cast<long long>(set_intersect(nverts, sverts).size());
  }
  return f1 + d + extra - destroyed;
}

SubridgeForecast forecast_subridge_degree(const Polytope& p,
                                          const StepSpec& spec,
                                          const std::vector<int>& subridge) {
  ResolvedStep rs = resolve_step(p, spec);
  require_nonsimple(p, rs);
  if (rs.n_set.size() > 1) {
    fail(ErrorKind::Unsupported,
         "degree forecast supports at most one absorbed neighbor");
  }
  const int d = p.dim;
  std::vector<int> g = checked_subset(p, subridge);
  const std::vector<int>& sverts =
      p.facets[static_cast<size_t>(rs.base)].vertex_set;
  bool in_base = set_contains(sverts, g);
  bool in_absorbed =
      rs.n_set.size() == 1 &&
      set_contains(p.facets[static_cast<size_t>(rs.n_set[0])].vertex_set, g);
  if (!in_base && !in_absorbed) {
    fail(ErrorKind::Invariant,
         "vertex set lies in neither the base facet nor the absorbed "
         "neighbor");
  }

  FaceLattice lat = build_face_lattice(p);
  const auto& layer = lat.layers[static_cast<size_t>(d - 2)];
  auto it = std::lower_bound(layer.begin(), layer.end(), g);
  if (it == layer.end() || *it != g) {
    fail(ErrorKind::Invariant,
         "vertex set is not a face of dimension dim-3");
  }
  std::size_t pos = static_cast<size_t>(it - layer.begin());
  const std::vector<int>& incident =
      lat.incident_facets[static_cast<size_t>(d - 2)][pos];

  SubridgeForecast out;
  for (int fi : rs.f_set) {
    if (set_contains(p.facets[static_cast<size_t>(fi)].vertex_set, g)) {
      ++out.phi;
    }
  }
  if (out.phi > 2) {
    fail(ErrorKind::Unsupported,
         "degree forecast unsupported: face lies in more than two "
         "kept-neighbor facets");
  }
  out.epsilon_indicator = (in_base && in_absorbed) ? 1 : 0;
  std::vector<int> affected = affected_set(rs);
  out.survives = covered_by_unaffected(incident, affected);
  out.predicted_degree =
      out.survives ? static_cast<int>(incident.size()) + 1 -
                         out.epsilon_indicator - out.phi
                   : 0;
  return out;
}

std::vector<std::vector<int>> surviving_faces(const Polytope& p,
                                              const StepSpec& spec) {
  ResolvedStep rs = resolve_step(p, spec);
  require_nonsimple(p, rs);
  FaceLattice lat = build_face_lattice(p);
  std::vector<int> affected = affected_set(rs);
  std::vector<std::vector<int>> out;
  for (std::size_t li = 1; li + 1 < lat.layers.size(); ++li) {
    for (std::size_t j = 0; j < lat.layers[li].size(); ++j) {
      if (covered_by_unaffected(lat.incident_facets[li][j], affected)) {
        out.push_back(lat.layers[li][j]);
      }
    }
  }
  return out;
}

namespace {

// Applies x -> x / (beta - <a,x>) to a polytope whose interior contains
// the origin, transforming facet planes along. Returns nullopt unless the
// map keeps every denominator positive, reproduces the vertex-facet
// incidences verbatim, and puts the chosen facet into bounded position.
std::optional<Polytope> try_projective(const Polytope& p, int facet_index,
                                       const Vec& a, const Rational& beta) {
  Polytope q;
  q.dim = p.dim;
  for (const Vec& x : p.vertices) {
    Rational den = beta - dot(a, x);
    if (den <= 0) {
      return std::nullopt;
    }
    q.vertices.push_back(scale(Rational(1) / den, x));
  }
  for (const Facet& f : p.facets) {
    Facet nf;
    nf.vertex_set = f.vertex_set;
    Hyperplane h;
    h.offset = f.plane.offset;
    h.normal = sub(scale(beta, f.plane.normal), scale(f.plane.offset, a));
    bool zero = true;
    for (const Rational& entry : h.normal) {
      if (entry != 0) {
        zero = false;
        break;
      }
    }
    if (zero) {
      return std::nullopt;
    }
    nf.plane = canonicalized(h);
    q.facets.push_back(std::move(nf));
  }
  // The incidences must be reproduced verbatim.
  for (const Facet& f : q.facets) {
    for (std::size_t i = 0; i < q.vertices.size(); ++i) {
      Side s = classify_point(f.plane, q.vertices[i]);
      bool listed = set_member(f.vertex_set, static_cast<int>(i));
      if (listed ? (s != Side::On) : (s != Side::Beneath)) {
        return std::nullopt;
      }
    }
  }
  try {
    validate(q);
    if (!bounded_position(q, facet_index)) {
      return std::nullopt;
    }
  } catch (const Error&) {
    return std::nullopt;
  }
  return q;
}

} // namespace

Polytope normalize_bounded_position(const Polytope& p, int facet_index) {
  if (facet_index < 0 ||
      facet_index >= static_cast<int>(p.facets.size())) {
    throw std::invalid_argument(
        "normalize_bounded_position: facet index out of range");
  }
  const int d = p.dim;
  if (static_cast<int>(p.vertices.size()) == d + 1) {
    fail(ErrorKind::Unsupported,
         "the polytope is a simplex: no facet can reach bounded position");
  }
  const Facet& facet = p.facets[static_cast<size_t>(facet_index)];
  if (static_cast<int>(facet.vertex_set.size()) != d) {
    fail(ErrorKind::Invariant,
         "bounded-position normalization requires a simplex facet");
  }
  if (bounded_position(p, facet_index)) {
    return p;
  }

  // Shift an interior point to the origin so every facet offset becomes
  // negative; the projective family below needs that.
  Vec center = interior_point(p);
  Polytope base = p;
  for (Vec& x : base.vertices) {
    x = sub(x, center);
  }
  for (Facet& f : base.facets) {
    f.plane.offset -= dot(f.plane.normal, center);
    f.plane = canonicalized(f.plane);
    if (f.plane.offset >= 0) {
      fail(ErrorKind::Internal,
           "interior point failed to move inside every half-space");
    }
  }

  std::vector<int> neighbors = adjacent_facets(base, facet_index);
  std::optional<Vec> apex = neighbor_apex(base, neighbors);
  if (apex) {
    const Hyperplane& hs = base.facets[static_cast<size_t>(facet_index)].plane;
    if (classify_point(hs, *apex) == Side::On) {
      fail(ErrorKind::Unsupported,
           "normalization impossible: the neighbor hyperplanes meet on the "
           "facet hyperplane");
    }
    bool outside = false;
    for (const Facet& f : base.facets) {
      if (classify_point(f.plane, *apex) == Side::Beyond) {
        outside = true;
        break;
      }
    }
    if (!outside) {
      fail(ErrorKind::Unsupported,
           "normalization impossible: the neighbor hyperplanes meet inside "
           "the polytope");
    }
    for (const Facet& f : base.facets) {
      if (classify_point(f.plane, *apex) != Side::Beyond) {
        continue;
      }
      // Send the meeting point across the chosen facet's hyperplane: pick
      // beta between the polytope's bound and the meeting point's value.
      Vec a = scale(Rational(-1), f.plane.normal);
      Rational lo = -f.plane.offset;             // sup over P of <a,x>
      Rational hi = -dot(f.plane.normal, *apex); // value at the meeting point
      for (int num = 1; num < 16; ++num) {
        Rational beta = lo + (hi - lo) * Rational(num) / 16;
        std::optional<Polytope> q =
            try_projective(base, facet_index, a, beta);
        if (q) {
          return *q;
        }
      }
    }
  } else {
    // Neighbor hyperplanes have no common point: tilt along the facet's
    // own normal direction.
    const Hyperplane& hs = base.facets[static_cast<size_t>(facet_index)].plane;
    Rational peak(0);
    for (const Vec& x : base.vertices) {
      Rational value = dot(hs.normal, x);
      if (value < 0) {
        value = -value;
      }
      if (value > peak) {
        peak = value;
      }
    }
    for (int j = 0; j <= 12; ++j) {
      Rational beta = (peak + 1) * Rational(1L << j);
      std::optional<Polytope> q =
          try_projective(base, facet_index, hs.normal, beta);
      if (q) {
        return *q;
      }
      q = try_projective(base, facet_index, scale(Rational(-1), hs.normal),
                         beta);
      if (q) {
        return *q;
      }
    }
  }
  fail(ErrorKind::Internal,
       "no candidate projective transformation reached bounded position");
}

} // namespace polystack
