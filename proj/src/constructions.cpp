#include "polystack/constructions.hpp"

#include "polystack/catalog.hpp"
#include "polystack/errors.hpp"
#include "polystack/lattice.hpp"
#include "polystack/linalg.hpp"

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace polystack {

namespace {

int find_facet_exact(const Polytope& p, const std::vector<int>& verts) {
  for (std::size_t i = 0; i < p.facets.size(); ++i) {
    if (p.facets[i].vertex_set == verts) return static_cast<int>(i);
  }
  return -1;
}

void check_labeled_facet(const Polytope& p, const LabeledSimplexFacet& s) {
  if (s.facet_index < 0 ||
      s.facet_index >= static_cast<int>(p.facets.size())) {
    fail(ErrorKind::Invariant, "labeled facet index out of range");
  }
  const std::vector<int>& verts = p.facets[s.facet_index].vertex_set;
  if (static_cast<int>(verts.size()) != p.dim) {
    fail(ErrorKind::Invariant, "labeled facet is not a simplex");
  }
  std::vector<int> sorted_labels = s.ordered_vertices;
  std::sort(sorted_labels.begin(), sorted_labels.end());
  if (sorted_labels != verts) {
    fail(ErrorKind::Invariant,
         "facet labeling is not a permutation of the facet's vertices");
  }
}

// Selector vertex lists in the step tables name label slots: slots 0..3 are
// the ordered base-facet vertices, slot 4+t is the vertex created by step
// t+1.
struct SelDef {
  SelectorMode mode;
  std::vector<int> labels;
};

struct StepDef {
  std::vector<int> base;
  std::vector<SelDef> f;
  std::vector<SelDef> n;
};

const std::vector<StepDef>& i1_defs() {
  static const std::vector<StepDef> defs = {
      {{0, 1, 2, 3}, {{SelectorMode::AdjacentToBaseVia, {0, 1, 2}}}, {}},
      {{0, 1, 3, 4},
       {{SelectorMode::ContainsAll, {1, 2, 3, 4}},
        {SelectorMode::AdjacentToBaseVia, {0, 1, 3}}},
       {}},
      {{0, 2, 3, 4},
       {{SelectorMode::ContainsAll, {0, 3, 4, 5}},
        {SelectorMode::AdjacentToBaseVia, {0, 2, 3}}},
       {}},
      {{2, 3, 4, 6},
       {{SelectorMode::ContainsAll, {1, 2, 3, 4}},
        {SelectorMode::AdjacentToBaseVia, {2, 3, 6}}},
       {}},
      {{0, 2, 4, 6},
       {{SelectorMode::ContainsAll, {0, 3, 4, 5, 6}},
        {SelectorMode::ContainsAll, {2, 4, 6, 7}},
        {SelectorMode::AdjacentToBaseVia, {0, 2, 4}}},
       {}},
  };
  return defs;
}

const std::vector<int>& i1_final_labels() {
  static const std::vector<int> labels = {0, 2, 6, 8};
  return labels;
}

const std::vector<StepDef>& i2_defs() {
  static const std::vector<StepDef> defs = {
      {{0, 1, 2, 3}, {{SelectorMode::AdjacentToBaseVia, {0, 1, 3}}}, {}},
      {{1, 2, 3, 4},
       {{SelectorMode::ContainsAll, {0, 1, 2, 4}},
        {SelectorMode::AdjacentToBaseVia, {1, 2, 3}}},
       {}},
      {{0, 2, 3, 4},
       {{SelectorMode::ContainsAll, {0, 1, 2, 4, 5}},
        {SelectorMode::AdjacentToBaseVia, {0, 2, 3}}},
       {{SelectorMode::ContainsAll, {2, 3, 4, 5}}}},
      {{3, 4, 5, 6},
       {{SelectorMode::ContainsAll, {0, 3, 4, 6}},
        {SelectorMode::ContainsAll, {1, 3, 4, 5}},
        {SelectorMode::ContainsAll, {2, 3, 5, 6}}},
       {}},
  };
  return defs;
}

const std::vector<int>& i2_final_labels() {
  static const std::vector<int> labels = {4, 5, 6, 7};
  return labels;
}

FacetSelector make_sel(SelectorMode mode, const std::vector<int>& labels,
                       const std::vector<int>& lab) {
  FacetSelector sel;
  sel.mode = mode;
  for (int l : labels) sel.vertex_subset.push_back(lab.at(l));
  std::sort(sel.vertex_subset.begin(), sel.vertex_subset.end());
  return sel;
}

StepRecord make_record(const Polytope& before, const StepSpec& spec,
                       const StepResult& sr) {
  StepRecord rec;
  rec.spec = spec;
  rec.resolved = sr.resolved;
  rec.witness = sr.witness;
  rec.new_vertex = sr.new_vertex;
  rec.kept_facets = sr.kept_facets;
  rec.base_pyramids = sr.base_pyramids;
  rec.n_pyramids = sr.n_pyramids;
  rec.updated_facets = sr.updated_facets;
  rec.before = before;
  rec.after = sr.polytope;
  return rec;
}

void require_identity_relabeling(const StepResult& sr, const std::string& what) {
  for (std::size_t i = 0; i < sr.old_to_new.size(); ++i) {
    if (sr.old_to_new[i] != static_cast<int>(i)) {
      fail(ErrorKind::Internal, what + " absorbed a vertex");
    }
  }
}

std::pair<Polytope, ConstructionTrace> run_pipeline(
    const Polytope& p, const LabeledSimplexFacet& s,
    const std::vector<StepDef>& defs, const std::vector<int>& final_labels,
    const std::string& name) {
  if (p.dim != 4) {
    fail(ErrorKind::Unsupported, name + " requires a 4-polytope");
  }
  check_labeled_facet(p, s);

  std::vector<int> lab = s.ordered_vertices;
  Polytope cur = p;
  ConstructionTrace trace;
  for (std::size_t t = 0; t < defs.size(); ++t) {
    const StepDef& def = defs[t];
    StepSpec spec;
    spec.base = make_sel(SelectorMode::ContainsAll, def.base, lab);
    for (const SelDef& sd : def.f) {
      spec.f_set.push_back(make_sel(sd.mode, sd.labels, lab));
    }
    for (const SelDef& sd : def.n) {
      spec.n_set.push_back(make_sel(sd.mode, sd.labels, lab));
    }
    const std::string where = name + " step " + std::to_string(t + 1);
    StepResult sr;
    try {
      sr = pseudo_stack_ex(cur, spec);
    } catch (const Error& e) {
      fail(e.kind(), where + ": " + e.what());
    }
    require_identity_relabeling(sr, where);
    lab.push_back(sr.new_vertex);
    trace.steps.push_back(make_record(cur, spec, sr));
    cur = std::move(sr.polytope);
  }

  std::vector<int> fl;
  for (int l : final_labels) fl.push_back(lab.at(l));
  std::sort(fl.begin(), fl.end());
  const int idx = find_facet_exact(cur, fl);
  if (idx < 0) {
    fail(ErrorKind::Internal, name + ": distinguished final facet is missing");
  }
  trace.final_labeled_facet = LabeledSimplexFacet{idx, fl};
  return {std::move(cur), std::move(trace)};
}

// Lex-smallest simplex facet in bounded position; when none qualifies,
// transforms the polytope so the lex-first simplex facet reaches bounded
// position. The labeling is ascending.
LabeledSimplexFacet pick_start_facet(Polytope& p) {
  std::vector<int> simplex_facets;
  for (std::size_t i = 0; i < p.facets.size(); ++i) {
    if (static_cast<int>(p.facets[i].vertex_set.size()) == p.dim) {
      simplex_facets.push_back(static_cast<int>(i));
    }
  }
  if (simplex_facets.empty()) {
    fail(ErrorKind::Internal, "no simplex facet available to start a chain");
  }
  std::sort(simplex_facets.begin(), simplex_facets.end(), [&](int a, int b) {
    return p.facets[a].vertex_set < p.facets[b].vertex_set;
  });
  for (int fi : simplex_facets) {
    if (bounded_position(p, fi)) {
      return LabeledSimplexFacet{fi, p.facets[fi].vertex_set};
    }
  }
  const int fi = simplex_facets.front();
  p = normalize_bounded_position(p, fi);
  return LabeledSimplexFacet{fi, p.facets[fi].vertex_set};
}

} // namespace

LabeledSimplexFacet make_labeled_facet(const Polytope& p,
                                       const std::vector<int>& facet_vertices,
                                       const std::vector<int>& order) {
  std::vector<int> want = facet_vertices;
  std::sort(want.begin(), want.end());
  if (std::adjacent_find(want.begin(), want.end()) != want.end()) {
    fail(ErrorKind::Invariant, "facet vertex list repeats a vertex");
  }
  const int idx = find_facet_exact(p, want);
  if (idx < 0) {
    fail(ErrorKind::Invariant, "no facet has exactly the given vertex set");
  }
  if (static_cast<int>(want.size()) != p.dim) {
    fail(ErrorKind::Invariant, "labeled facet is not a simplex");
  }
  LabeledSimplexFacet out;
  out.facet_index = idx;
  if (order.empty()) {
    out.ordered_vertices = want;
  } else {
    std::vector<int> check = order;
    std::sort(check.begin(), check.end());
    if (check != want) {
      fail(ErrorKind::Invariant,
           "facet ordering is not a permutation of the facet's vertices");
    }
    out.ordered_vertices = order;
  }
  return out;
}

std::pair<Polytope, ConstructionTrace> construct_i1(
    const Polytope& p, const LabeledSimplexFacet& s) {
  return run_pipeline(p, s, i1_defs(), i1_final_labels(), "construct_i1");
}

std::pair<Polytope, ConstructionTrace> construct_i2(
    const Polytope& p, const LabeledSimplexFacet& s) {
  return run_pipeline(p, s, i2_defs(), i2_final_labels(), "construct_i2");
}

Polytope generate_elementary_2s2s(int k,
                                  std::vector<ConstructionTrace>* traces) {
  if (k == 5) return catalog_entry("simplex4").polytope;
  if (k == 9) return catalog_entry("P9").polytope;
  if (k == 10) return catalog_entry("P10").polytope;
  if (k == 11) return catalog_entry("P11").polytope;
  if (k < 13) {
    fail(ErrorKind::Unsupported,
         "unsupported vertex count " + std::to_string(k) +
             ": supported counts are 5, 9, 10, 11, and every k >= 13");
  }

  // Route by vertex count mod 4. Each four-step run adds 4 vertices, so
  // the start polytope fixes the residue: 9, 10, or 11 vertices. Counts
  // divisible by 4 are reached from the 11-vertex polytope by one
  // five-step run (to 16 vertices) followed by four-step runs.
  std::string base_name;
  bool five_step_first = false;
  switch (k % 4) {
    case 1: base_name = "P9"; break;
    case 2: base_name = "P10"; break;
    case 3: base_name = "P11"; break;
    default:
      base_name = "P11";
      five_step_first = true;
      break;
  }

  Polytope cur = catalog_entry(base_name).polytope;
  LabeledSimplexFacet s = pick_start_facet(cur);
  while (static_cast<int>(cur.vertices.size()) < k) {
    const bool use_five_step = five_step_first;
    five_step_first = false;
    if (!bounded_position(cur, s.facet_index)) {
      cur = normalize_bounded_position(cur, s.facet_index);
    }
    auto [next, tr] =
        use_five_step ? construct_i1(cur, s) : construct_i2(cur, s);
    s = tr.final_labeled_facet;
    if (traces) traces->push_back(std::move(tr));
    cur = std::move(next);
  }
  if (static_cast<int>(cur.vertices.size()) != k) {
    fail(ErrorKind::Internal, "generator missed the target vertex count");
  }

  const AnalysisReport report = analyze(cur);
  if (!report.on_ell1.has_value() || !*report.on_ell1) {
    fail(ErrorKind::Internal,
         "generated polytope failed verification: it is not 2-simple "
         "2-simplicial with g2 = 0");
  }
  return cur;
}

Polytope pyramid(const Polytope& p) {
  validate(p);
  Polytope out;
  out.dim = p.dim + 1;
  const int n = static_cast<int>(p.vertices.size());
  for (const Vec& x : p.vertices) {
    Vec y = x;
    y.push_back(Rational(0));
    out.vertices.push_back(std::move(y));
  }
  const Vec bary = barycenter(p.vertices);
  Vec apex = bary;
  apex.push_back(Rational(1));
  out.vertices.push_back(std::move(apex));

  // Base facet: the input polytope at height zero.
  Facet base;
  base.plane.normal.assign(static_cast<std::size_t>(out.dim), Rational(0));
  base.plane.normal[static_cast<std::size_t>(p.dim)] = Rational(1);
  base.plane.offset = Rational(0);
  base.plane = canonicalized(base.plane);
  for (int i = 0; i < n; ++i) base.vertex_set.push_back(i);
  out.facets.push_back(std::move(base));

  // One side facet per input facet: its hyperplane is tilted to pass
  // through the apex, which keeps the input's side of the plane intact.
  for (const Facet& f : p.facets) {
    Facet g;
    g.plane.normal = f.plane.normal;
    g.plane.normal.push_back(f.plane.offset - dot(f.plane.normal, bary));
    g.plane.offset = f.plane.offset;
    g.plane = canonicalized(g.plane);
    g.vertex_set = f.vertex_set;
    g.vertex_set.push_back(n);
    out.facets.push_back(std::move(g));
  }

  validate(out);
  return out;
}

Polytope stack(const Polytope& p, int facet_index) {
  if (facet_index < 0 || facet_index >= static_cast<int>(p.facets.size())) {
    throw std::invalid_argument("stack: facet index out of range");
  }
  StepSpec spec;
  spec.base =
      FacetSelector{SelectorMode::ContainsAll, p.facets[facet_index].vertex_set};
  return pseudo_stack(p, spec);
}

Polytope build_p11_via_octahedron(std::vector<StepRecord>* trace) {
  const Polytope& oct = catalog_entry("octahedron3").polytope;

  // The facet with the lex-smallest vertex set gets stacked.
  int r = 0;
  for (std::size_t i = 1; i < oct.facets.size(); ++i) {
    if (oct.facets[i].vertex_set < oct.facets[r].vertex_set) {
      r = static_cast<int>(i);
    }
  }
  std::vector<std::vector<int>> neighbor_sets;
  for (int g : adjacent_facets(oct, r)) {
    neighbor_sets.push_back(oct.facets[g].vertex_set);
  }

  StepSpec stack_spec;
  stack_spec.base =
      FacetSelector{SelectorMode::ContainsAll, oct.facets[r].vertex_set};
  StepResult stacked = pseudo_stack_ex(oct, stack_spec);
  require_identity_relabeling(stacked, "octahedron stacking");
  if (trace) trace->push_back(make_record(oct, stack_spec, stacked));

  Polytope cur = pyramid(stacked.polytope);
  const int apex = static_cast<int>(cur.vertices.size()) - 1;

  // Three steps, one per pyramid over a neighbor of the stacked facet.
  // Each keeps exactly the three adjacent facets through the apex.
  for (const std::vector<int>& nb : neighbor_sets) {
    std::vector<int> fverts = nb;
    fverts.push_back(apex); // apex has the largest index, so still sorted
    const int fidx = find_facet_exact(cur, fverts);
    if (fidx < 0) {
      fail(ErrorKind::Internal, "expected pyramid facet is missing");
    }
    if (!bounded_position(cur, fidx)) {
      cur = normalize_bounded_position(cur, fidx);
    }
    StepSpec spec;
    spec.base = FacetSelector{SelectorMode::ContainsAll, fverts};
    for (int g : adjacent_facets(cur, fidx)) {
      if (set_member(cur.facets[g].vertex_set, apex)) {
        spec.f_set.push_back(
            FacetSelector{SelectorMode::ContainsAll, cur.facets[g].vertex_set});
      }
    }
    if (spec.f_set.size() != 3) {
      fail(ErrorKind::Internal,
           "expected exactly three kept neighbors through the pyramid apex");
    }
    StepResult sr = pseudo_stack_ex(cur, spec);
    require_identity_relabeling(sr, "pyramid-facet step");
    if (trace) trace->push_back(make_record(cur, spec, sr));
    cur = std::move(sr.polytope);
  }

  const FaceLattice got = build_face_lattice(cur);
  const FaceLattice want =
      build_face_lattice(catalog_entry("P11").polytope);
  if (!lattices_isomorphic(got, want)) {
    fail(ErrorKind::Internal,
         "octahedron-route polytope is not isomorphic to the builtin "
         "11-vertex polytope");
  }
  return cur;
}

} // namespace polystack
