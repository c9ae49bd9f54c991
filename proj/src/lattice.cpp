#include "polystack/lattice.hpp"

#include "polystack/errors.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>

namespace polystack {

FaceLattice build_face_lattice(const Polytope& p) {
  validate(p);
  const int d = p.dim;
  const int n = static_cast<int>(p.vertices.size());
  const int m = static_cast<int>(p.facets.size());

  std::vector<std::vector<int>> facet_sets;
  facet_sets.reserve(static_cast<size_t>(m));
  for (const Facet& f : p.facets) {
    facet_sets.push_back(f.vertex_set);
  }

  // Close the facet vertex sets under pairwise intersection. Every proper
  // face is an intersection of facets, and intersecting against facets
  // only is enough to reach all of them.
  std::set<std::vector<int>> closed;
  std::deque<std::vector<int>> work;
  std::vector<int> full(static_cast<size_t>(n));
  for (int v = 0; v < n; ++v) {
    full[static_cast<size_t>(v)] = v;
  }
  closed.insert(full);
  for (const auto& fs : facet_sets) {
    if (closed.insert(fs).second) {
      work.push_back(fs);
    }
  }
  while (!work.empty()) {
    std::vector<int> face = std::move(work.front());
    work.pop_front();
    for (const auto& fs : facet_sets) {
      std::vector<int> meet = set_intersect(face, fs);
      if (closed.insert(meet).second) {
        work.push_back(meet);
      }
    }
  }
  closed.insert(std::vector<int>{});

  FaceLattice lat;
  lat.dim = d;
  lat.vertex_count = n;
  lat.facet_count = m;
  lat.facet_sets = facet_sets;
  lat.layers.assign(static_cast<size_t>(d) + 2, {});
  for (const auto& face : closed) {
    int rank = face.empty() ? -1 : affine_rank(select_points(p, face));
    if (rank < -1 || rank > d) {
      fail(ErrorKind::Internal, "face with impossible affine rank");
    }
    lat.layers[static_cast<size_t>(rank + 1)].push_back(face);
  }
  for (auto& layer : lat.layers) {
    std::sort(layer.begin(), layer.end());
  }
  if (lat.layers.front().size() != 1 || lat.layers.back().size() != 1) {
    fail(ErrorKind::Internal, "face lattice misses the empty or full face");
  }
  if (static_cast<int>(lat.layers[1].size()) != n) {
    fail(ErrorKind::Internal,
         "face lattice does not contain every vertex as a 0-face");
  }
  if (static_cast<int>(lat.layers[static_cast<size_t>(d)].size()) != m) {
    fail(ErrorKind::Internal,
         "face lattice's top proper layer differs from the facet list");
  }

  lat.incident_facets.assign(lat.layers.size(), {});
  for (size_t li = 0; li < lat.layers.size(); ++li) {
    lat.incident_facets[li].resize(lat.layers[li].size());
    for (size_t j = 0; j < lat.layers[li].size(); ++j) {
      for (int fi = 0; fi < m; ++fi) {
        if (set_contains(facet_sets[static_cast<size_t>(fi)],
                         lat.layers[li][j])) {
          lat.incident_facets[li][j].push_back(fi);
        }
      }
    }
  }

  lat.covers.assign(static_cast<size_t>(d) + 1, {});
  for (size_t li = 0; li + 1 < lat.layers.size(); ++li) {
    lat.covers[li].resize(lat.layers[li].size());
    for (size_t j = 0; j < lat.layers[li].size(); ++j) {
      for (size_t k = 0; k < lat.layers[li + 1].size(); ++k) {
        if (set_contains(lat.layers[li + 1][k], lat.layers[li][j])) {
          lat.covers[li][j].push_back(static_cast<int>(k));
        }
      }
    }
  }
  return lat;
}

FVector f_vector(const FaceLattice& lat) {
  FVector out;
  for (int i = 0; i < lat.dim; ++i) {
    out.f.push_back(
        static_cast<long long>(lat.layers[static_cast<size_t>(i + 1)].size()));
  }
  return out;
}

namespace {

// For each face of layer `lo`, the indices of the faces of layer `hi`
// containing it (layers here are lattice layer indices, not dimensions).
std::vector<std::vector<int>> containment_lists(const FaceLattice& lat,
                                                size_t lo, size_t hi) {
  std::vector<std::vector<int>> up(lat.layers[lo].size());
  for (size_t i = 0; i < lat.layers[lo].size(); ++i) {
    for (size_t j = 0; j < lat.layers[hi].size(); ++j) {
      if (set_contains(lat.layers[hi][j], lat.layers[lo][i])) {
        up[i].push_back(static_cast<int>(j));
      }
    }
  }
  return up;
}

} // namespace

FlagVector flag_vector(const FaceLattice& lat) {
  const int d = lat.dim;
  FlagVector out;
  out.dim = d;
  out.entries.assign(static_cast<size_t>(1) << d, 0);
  std::map<std::pair<int, int>, std::vector<std::vector<int>>> memo;
  auto lists = [&](int lo, int hi) -> const std::vector<std::vector<int>>& {
    auto key = std::make_pair(lo, hi);
    auto it = memo.find(key);
    if (it == memo.end()) {
      it = memo
               .emplace(key, containment_lists(lat, static_cast<size_t>(lo),
                                               static_cast<size_t>(hi)))
               .first;
    }
    return it->second;
  };

  out.entries[0] = 1; // the empty chain
  for (int mask = 1; mask < (1 << d); ++mask) {
    std::vector<int> dims;
    for (int i = 0; i < d; ++i) {
      if (mask & (1 << i)) {
        dims.push_back(i);
      }
    }
    std::vector<long long> counts(lat.layers[static_cast<size_t>(dims[0] + 1)].size(), 1);
    for (size_t t = 1; t < dims.size(); ++t) {
      const auto& up = lists(dims[t - 1] + 1, dims[t] + 1);
      std::vector<long long> next(
          lat.layers[static_cast<size_t>(dims[t] + 1)].size(), 0);
      for (size_t i = 0; i < counts.size(); ++i) {
        for (int j : up[i]) {
          next[static_cast<size_t>(j)] += counts[i];
        }
      }
      counts = std::move(next);
    }
    long long total = 0;
    for (long long c : counts) {
      total += c;
    }
    out.entries[static_cast<size_t>(mask)] = total;
  }
  return out;
}

long long g2(const FlagVector& flag, int dim) {
  if (dim < 3) {
    throw std::invalid_argument("g2 requires dimension at least 3");
  }
  if (flag.dim != dim) {
    throw std::invalid_argument("flag vector dimension mismatch");
  }
  long long f0 = flag.entries[1 << 0];
  long long f1 = flag.entries[1 << 1];
  long long f2 = flag.entries[1 << 2];
  long long f02 = flag.entries[(1 << 0) | (1 << 2)];
  long long binom = static_cast<long long>(dim + 1) * dim / 2;
  return f02 - 3 * f2 + f1 - static_cast<long long>(dim) * f0 + binom;
}

bool k_simplicial(const FaceLattice& lat, int k) {
  if (k < 0 || k > lat.dim - 1) {
    throw std::invalid_argument("k out of range for k_simplicial");
  }
  for (const auto& face : lat.layers[static_cast<size_t>(k + 1)]) {
    if (static_cast<int>(face.size()) != k + 1) {
      return false;
    }
  }
  return true;
}

bool h_simple(const FaceLattice& lat, int h) {
  if (h < 0 || h > lat.dim - 1) {
    throw std::invalid_argument("h out of range for h_simple");
  }
  size_t li = static_cast<size_t>(lat.dim - h - 1 + 1);
  for (size_t j = 0; j < lat.layers[li].size(); ++j) {
    if (static_cast<int>(lat.incident_facets[li][j].size()) != h + 1) {
      return false;
    }
  }
  return true;
}

namespace {

// Locates a face; returns (layer, index) or nullopt.
std::optional<std::pair<size_t, size_t>> find_face(
    const FaceLattice& lat, const std::vector<int>& face) {
  for (size_t li = 0; li < lat.layers.size(); ++li) {
    const auto& layer = lat.layers[li];
    auto it = std::lower_bound(layer.begin(), layer.end(), face);
    if (it != layer.end() && *it == face) {
      return std::make_pair(li, static_cast<size_t>(it - layer.begin()));
    }
  }
  return std::nullopt;
}

} // namespace

bool has_face(const FaceLattice& lat, const std::vector<int>& face) {
  return find_face(lat, face).has_value();
}

int face_degree(const FaceLattice& lat, const std::vector<int>& face) {
  auto pos = find_face(lat, face);
  if (!pos) {
    fail(ErrorKind::Invariant, "vertex set is not a face of the lattice");
  }
  return static_cast<int>(lat.incident_facets[pos->first][pos->second].size());
}

FaceLattice dual(const FaceLattice& lat) {
  const int d = lat.dim;
  FaceLattice out;
  out.dim = d;
  out.vertex_count = lat.facet_count;
  out.facet_count = lat.vertex_count;

  // Dual facets are the vertex stars, in vertex order. layers[1] holds the
  // singletons in ascending vertex order, so its incidence rows line up.
  for (int v = 0; v < lat.vertex_count; ++v) {
    out.facet_sets.push_back(lat.incident_facets[1][static_cast<size_t>(v)]);
  }

  out.layers.assign(static_cast<size_t>(d) + 2, {});
  out.incident_facets.assign(static_cast<size_t>(d) + 2, {});
  // position[li][j] = index in out.layers[li] of the dual of primal face j
  // of layer d+1-li.
  std::vector<std::vector<size_t>> position(static_cast<size_t>(d) + 2);
  for (int li = 0; li <= d + 1; ++li) {
    size_t lp = static_cast<size_t>(d + 1 - li);
    const auto& primal_layer = lat.layers[lp];
    std::vector<size_t> order(primal_layer.size());
    for (size_t j = 0; j < order.size(); ++j) {
      order[j] = j;
    }
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
      return lat.incident_facets[lp][a] < lat.incident_facets[lp][b];
    });
    position[static_cast<size_t>(li)].resize(primal_layer.size());
    for (size_t pos = 0; pos < order.size(); ++pos) {
      size_t j = order[pos];
      position[static_cast<size_t>(li)][j] = pos;
      out.layers[static_cast<size_t>(li)].push_back(lat.incident_facets[lp][j]);
      out.incident_facets[static_cast<size_t>(li)].push_back(primal_layer[j]);
    }
  }

  out.covers.assign(static_cast<size_t>(d) + 1, {});
  for (int li = 0; li <= d; ++li) {
    // Dual layer li corresponds to primal layer d+1-li; the covering faces
    // live in dual layer li+1, i.e. primal layer d-li.
    size_t lp_low = static_cast<size_t>(d - li); // primal layer of dual li+1
    out.covers[static_cast<size_t>(li)].resize(
        out.layers[static_cast<size_t>(li)].size());
    for (size_t g = 0; g < lat.layers[lp_low].size(); ++g) {
      for (int f : lat.covers[lp_low][g]) {
        size_t from = position[static_cast<size_t>(li)][static_cast<size_t>(f)];
        size_t to = position[static_cast<size_t>(li) + 1][g];
        out.covers[static_cast<size_t>(li)][from].push_back(
            static_cast<int>(to));
      }
    }
    for (auto& row : out.covers[static_cast<size_t>(li)]) {
      std::sort(row.begin(), row.end());
    }
  }
  return out;
}

namespace {

struct IsoContext {
  const FaceLattice* a = nullptr;
  const FaceLattice* b = nullptr;
  int n = 0;
  // Facet-size signature of each vertex: sorted sizes of containing facets.
  std::vector<std::vector<int>> sig_a, sig_b;
  // co[u][w] = number of facets containing both u and w.
  std::vector<std::vector<int>> co_a, co_b;
  std::set<std::vector<int>> b_facets;
  std::vector<int> image;     // a-vertex -> b-vertex or -1
  std::vector<bool> used;     // b-vertex already taken
};

std::vector<std::vector<int>> co_matrix(const FaceLattice& lat) {
  int n = lat.vertex_count;
  std::vector<std::vector<int>> co(static_cast<size_t>(n),
                                   std::vector<int>(static_cast<size_t>(n), 0));
  for (const auto& fs : lat.facet_sets) {
    for (int u : fs) {
      for (int w : fs) {
        ++co[static_cast<size_t>(u)][static_cast<size_t>(w)];
      }
    }
  }
  return co;
}

std::vector<std::vector<int>> vertex_signatures(const FaceLattice& lat) {
  int n = lat.vertex_count;
  std::vector<std::vector<int>> sig(static_cast<size_t>(n));
  for (const auto& fs : lat.facet_sets) {
    for (int u : fs) {
      sig[static_cast<size_t>(u)].push_back(static_cast<int>(fs.size()));
    }
  }
  for (auto& s : sig) {
    std::sort(s.begin(), s.end());
  }
  return sig;
}

bool facet_bijection_holds(const IsoContext& ctx) {
  std::set<std::vector<int>> mapped;
  for (const auto& fs : ctx.a->facet_sets) {
    std::vector<int> img;
    img.reserve(fs.size());
    for (int u : fs) {
      img.push_back(ctx.image[static_cast<size_t>(u)]);
    }
    std::sort(img.begin(), img.end());
    if (!ctx.b_facets.count(img) || !mapped.insert(img).second) {
      return false;
    }
  }
  return true;
}

bool iso_search(IsoContext& ctx, int u) {
  if (u == ctx.n) {
    return facet_bijection_holds(ctx);
  }
  for (int x = 0; x < ctx.n; ++x) {
    if (ctx.used[static_cast<size_t>(x)]) {
      continue;
    }
    if (ctx.sig_a[static_cast<size_t>(u)] != ctx.sig_b[static_cast<size_t>(x)]) {
      continue;
    }
    bool ok = true;
    for (int w = 0; w < u; ++w) {
      int y = ctx.image[static_cast<size_t>(w)];
      if (ctx.co_a[static_cast<size_t>(u)][static_cast<size_t>(w)] !=
          ctx.co_b[static_cast<size_t>(x)][static_cast<size_t>(y)]) {
        ok = false;
        break;
      }
    }
    if (!ok) {
      continue;
    }
    ctx.image[static_cast<size_t>(u)] = x;
    ctx.used[static_cast<size_t>(x)] = true;
    if (iso_search(ctx, u + 1)) {
      return true;
    }
    ctx.image[static_cast<size_t>(u)] = -1;
    ctx.used[static_cast<size_t>(x)] = false;
  }
  return false;
}

} // namespace

std::optional<std::vector<int>> lattice_isomorphism(const FaceLattice& a,
                                                    const FaceLattice& b) {
  if (a.dim != b.dim || a.vertex_count != b.vertex_count ||
      a.facet_count != b.facet_count) {
    return std::nullopt;
  }
  std::vector<size_t> sizes_a, sizes_b;
  for (const auto& fs : a.facet_sets) {
    sizes_a.push_back(fs.size());
  }
  for (const auto& fs : b.facet_sets) {
    sizes_b.push_back(fs.size());
  }
  std::sort(sizes_a.begin(), sizes_a.end());
  std::sort(sizes_b.begin(), sizes_b.end());
  if (sizes_a != sizes_b) {
    return std::nullopt;
  }

  IsoContext ctx;
  ctx.a = &a;
  ctx.b = &b;
  ctx.n = a.vertex_count;
  ctx.sig_a = vertex_signatures(a);
  ctx.sig_b = vertex_signatures(b);
  ctx.co_a = co_matrix(a);
  ctx.co_b = co_matrix(b);
  ctx.b_facets.insert(b.facet_sets.begin(), b.facet_sets.end());
  ctx.image.assign(static_cast<size_t>(ctx.n), -1);
  ctx.used.assign(static_cast<size_t>(ctx.n), false);
  if (!iso_search(ctx, 0)) {
    return std::nullopt;
  }
  return ctx.image;
}

bool lattices_isomorphic(const FaceLattice& a, const FaceLattice& b) {
  return lattice_isomorphism(a, b).has_value();
}

bool self_dual(const FaceLattice& lat) {
  return lattices_isomorphic(lat, dual(lat));
}

bool dehn_sommerville_check(const FlagVector& flag, int dim) {
  const int d = dim;
  if (flag.dim != d || static_cast<int>(flag.entries.size()) != (1 << d)) {
    throw std::invalid_argument("flag vector does not match the dimension");
  }
  for (int S = 0; S < (1 << d); ++S) {
    for (int i = 0; i <= d - 1; ++i) {
      if (!(i == 0 || (S & (1 << (i - 1))))) {
        continue;
      }
      for (int k = i + 1; k <= d; ++k) {
        if (!(k == d || (S & (1 << k)))) {
          continue;
        }
        bool clash = false;
        for (int j = i; j <= k - 1; ++j) {
          if (S & (1 << j)) {
            clash = true;
            break;
          }
        }
        if (clash) {
          continue;
        }
        long long lhs = 0;
        for (int j = i; j <= k - 1; ++j) {
          long long term = flag.entries[static_cast<size_t>(S | (1 << j))];
          lhs += ((j - i) % 2 == 0) ? term : -term;
        }
        long long rhs =
            flag.entries[static_cast<size_t>(S)] * ((k - i) % 2 == 0 ? 0 : 2);
        if (lhs != rhs) {
          return false;
        }
      }
    }
  }
  return true;
}

AnalysisReport analyze(const Polytope& p) {
  FaceLattice lat = build_face_lattice(p);
  AnalysisReport r;
  r.fvec = f_vector(lat);
  r.flag = flag_vector(lat);
  const int d = p.dim;
  if (d >= 3) {
    r.g2 = g2(r.flag, d);
  }
  r.two_simplicial = d >= 3 && k_simplicial(lat, 2);
  r.two_simple = d >= 3 && h_simple(lat, 2);
  if (d == 4) {
    r.on_ell1 = r.two_simplicial && r.two_simple && *r.g2 == 0;
  }
  long long alternating = 0;
  for (int i = 0; i < d; ++i) {
    alternating += (i % 2 == 0) ? r.fvec.f[static_cast<size_t>(i)]
                                : -r.fvec.f[static_cast<size_t>(i)];
  }
  r.euler_ok = alternating == (d % 2 == 0 ? 0 : 2);
  r.dehn_sommerville_ok = dehn_sommerville_check(r.flag, d);
  if (d == 4) {
    long long f03 = r.flag.entries[(1 << 0) | (1 << 3)];
    r.fatness_lhs = f03 - 140;
    r.fatness_rhs = 4 * (r.fvec.f[1] + r.fvec.f[2]) -
                    20 * (r.fvec.f[0] + r.fvec.f[3]);
  }
  return r;
}

} // namespace polystack
