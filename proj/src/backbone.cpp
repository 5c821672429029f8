#include "ocp/backbone.hpp"

#include <algorithm>
#include <sstream>

#include "ocp/order_compat.hpp"

namespace ocp {

std::string backbone_line(const Backbone& bb) {
  std::ostringstream out;
  out << "backbone";
  for (int t : bb.vertices) out << ' ' << t;
  out << " ; floors";
  for (int f : bb.floors) out << ' ' << f;
  return out.str();
}

namespace {

struct Member {
  int index;
  std::vector<int> seq;

  std::size_t position(int v) const {
    return static_cast<std::size_t>(std::find(seq.begin(), seq.end(), v) -
                                    seq.begin());
  }
};

class BackboneBuilder {
 public:
  BackboneBuilder(const MultiGraph& g, int tau) : g_(g), tau_(tau) {}

  // Appends the chain strictly after x, ending with y. Returns the members
  // still alive.
  std::vector<const Member*> run(int x, int y, std::vector<const Member*> members) {
    if (g_.adjacent(x, y) || kappa_v(g_, x, y).value >= tau_) {
      chain_.push_back(y);
      return members;
    }
    Separator sep = min_internal_separator(g_, x, y);
    int best = -1;
    std::size_t best_hits = 0;
    for (int s : sep.vertices) {
      std::size_t hits = 0;
      for (const Member* m : members) {
        const std::size_t ps = m->position(s);
        if (ps > m->position(x) && ps < m->position(y)) ++hits;
      }
      if (hits > best_hits) {
        best = s;
        best_hits = hits;
      }
    }
    if (best < 0) {
      fail(ErrorKind::kInternal, "separator misses every surviving path");
    }
    separators_.push_back(std::move(sep));
    std::vector<const Member*> through;
    for (const Member* m : members) {
      const std::size_t ps = m->position(best);
      if (ps > m->position(x) && ps < m->position(y)) through.push_back(m);
    }
    through = run(x, best, std::move(through));
    return run(best, y, std::move(through));
  }

  std::vector<int>& chain() { return chain_; }
  std::vector<Separator>& separators() { return separators_; }

 private:
  const MultiGraph& g_;
  int tau_;
  std::vector<int> chain_;
  std::vector<Separator> separators_;
};

}  // namespace

Backbone extract_backbone(const MultiGraph& g, const PathSystem& family,
                          int tau) {
  if (tau < 1) fail(ErrorKind::kBadParameters, "tau must be positive");
  if (family.empty()) fail(ErrorKind::kEmptyFamily, "family is empty");
  const auto report = verify_system(g, family);
  if (!report.edge_disjoint) {
    fail(ErrorKind::kNotEdgeDisjoint,
         "family is not edge-disjoint: " + certificate_line(*report.certificate));
  }

  std::vector<Member> members;
  members.reserve(family.size());
  for (std::size_t i = 0; i < family.size(); ++i) {
    members.push_back({static_cast<int>(i), validate_path(g, family.paths[i])});
  }
  std::vector<const Member*> alive;
  for (const auto& m : members) alive.push_back(&m);

  BackboneBuilder builder(g, tau);
  builder.chain().push_back(family.source);
  alive = builder.run(family.source, family.sink, std::move(alive));

  Backbone bb;
  bb.vertices = std::move(builder.chain());
  bb.separators_used = std::move(builder.separators());
  bb.survivors = {family.source, family.sink, {}};
  std::sort(alive.begin(), alive.end(),
            [](const Member* l, const Member* r) { return l->index < r->index; });
  for (const Member* m : alive) bb.survivors.paths.push_back(family.paths[m->index]);
  for (std::size_t i = 0; i + 1 < bb.vertices.size(); ++i) {
    bb.floors.push_back(kappa_v(g, bb.vertices[i], bb.vertices[i + 1]).value);
  }
  return bb;
}

// --- Weave ------------------------------------------------------------------

PathSystem weave(const MultiGraph& g, std::span<const int> bb,
                 const std::vector<PathSystem>& segment_families, int r) {
  if (r < 1) fail(ErrorKind::kBadParameters, "r must be positive");
  if (bb.size() < 2 || segment_families.size() + 1 != bb.size()) {
    fail(ErrorKind::kBadParameters,
         "need one segment family per consecutive backbone pair");
  }
  const int n = g.vertex_count();
  std::vector<char> on_backbone(static_cast<std::size_t>(n), 0);
  for (int t : bb) {
    if (!g.has_vertex(t)) fail(ErrorKind::kRange, "backbone vertex out of range");
    if (on_backbone[t]) fail(ErrorKind::kBadParameters, "backbone repeats a vertex");
    on_backbone[t] = 1;
  }

  // Interior vertex sequences, checked for endpoints and internal disjointness.
  std::vector<std::vector<std::vector<int>>> interiors(segment_families.size());
  std::vector<int> owner(static_cast<std::size_t>(n), -1);
  for (std::size_t i = 0; i < segment_families.size(); ++i) {
    const auto& fam = segment_families[i];
    for (std::size_t j = 0; j < fam.size(); ++j) {
      const auto seq = validate_path(g, fam.paths[j]);
      if (seq.front() != bb[i] || seq.back() != bb[i + 1]) {
        fail(ErrorKind::kBadSegmentFamily,
             "segment " + std::to_string(i) + " member " + std::to_string(j) +
                 " does not join consecutive backbone vertices");
      }
      std::vector<int> inner(seq.begin() + 1, seq.end() - 1);
      for (int v : inner) {
        if (owner[v] >= 0) {
          fail(ErrorKind::kBadSegmentFamily,
               "segment " + std::to_string(i) + " members meet at vertex " +
                   std::to_string(v));
        }
        owner[v] = static_cast<int>(j);
      }
      interiors[i].push_back(std::move(inner));
    }
    for (const auto& inner : interiors[i]) {
      for (int v : inner) owner[v] = -1;
    }
  }

  PathSystem out{bb.front(), bb.back(), {}};
  std::vector<char> taken(static_cast<std::size_t>(n), 0);
  std::vector<std::vector<char>> used(segment_families.size());
  for (std::size_t i = 0; i < used.size(); ++i) {
    used[i].assign(segment_families[i].size(), 0);
  }

  while (static_cast<int>(out.size()) < r) {
    std::vector<std::size_t> pick;
    std::vector<int> marked;
    for (std::size_t i = 0; i < segment_families.size(); ++i) {
      bool found = false;
      for (std::size_t j = 0; j < interiors[i].size() && !found; ++j) {
        if (used[i][j]) continue;
        const auto& inner = interiors[i][j];
        const bool clear = std::none_of(inner.begin(), inner.end(), [&](int v) {
          return on_backbone[v] || taken[v];
        });
        if (!clear) continue;
        for (int v : inner) {
          taken[v] = 1;
          marked.push_back(v);
        }
        pick.push_back(j);
        found = true;
      }
      if (!found) break;
    }
    if (pick.size() != segment_families.size()) {
      for (int v : marked) taken[v] = 0;
      break;
    }
    OrientedPath path{bb.front(), {}};
    for (std::size_t i = 0; i < pick.size(); ++i) {
      used[i][pick[i]] = 1;
      path = concat(path, segment_families[i].paths[pick[i]]);
    }
    out.paths.push_back(std::move(path));
  }

  if (!verify_system(g, out).ok()) {
    fail(ErrorKind::kInternal, "weave produced an incompatible system");
  }
  return out;
}

// --- Auxiliary graph and lift -----------------------------------------------

bool AuxiliaryGraph::contains(int x, int y) const {
  if (x > y) std::swap(x, y);
  return std::binary_search(edges.begin(), edges.end(), std::pair{x, y});
}

AuxiliaryGraph auxiliary_graph(const MultiGraph& g, int theta,
                               const std::optional<std::vector<int>>& restrict_to) {
  if (theta < 1) fail(ErrorKind::kBadParameters, "theta must be positive");
  std::vector<int> pool;
  if (restrict_to) {
    pool = *restrict_to;
    std::sort(pool.begin(), pool.end());
    pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
    for (int v : pool) {
      if (!g.has_vertex(v)) fail(ErrorKind::kRange, "vertex out of range");
    }
  } else {
    for (int v = 0; v < g.vertex_count(); ++v) pool.push_back(v);
  }
  AuxiliaryGraph h{theta, g.vertex_count(), {}};
  for (std::size_t i = 0; i < pool.size(); ++i) {
    for (std::size_t j = i + 1; j < pool.size(); ++j) {
      if (kappa_v(g, pool[i], pool[j]).value >= theta) {
        h.edges.emplace_back(pool[i], pool[j]);
      }
    }
  }
  return h;
}

PathSystem lift(const MultiGraph& g, std::span<const int> w, int theta,
                const std::vector<int>& forbidden_vertices,
                const std::vector<int>& forbidden_edges, int r) {
  if (theta < 1 || r < 1) {
    fail(ErrorKind::kBadParameters, "theta and r must be positive");
  }
  if (w.size() < 2) fail(ErrorKind::kBadParameters, "walk needs two vertices");
  Restriction cut;
  cut.removed_vertices.assign(static_cast<std::size_t>(g.vertex_count()), 0);
  cut.removed_edges.assign(static_cast<std::size_t>(g.edge_count()), 0);
  for (int v : forbidden_vertices) {
    if (!g.has_vertex(v)) fail(ErrorKind::kRange, "forbidden vertex out of range");
    cut.removed_vertices[v] = 1;
  }
  for (int e : forbidden_edges) {
    if (!g.has_edge(e)) fail(ErrorKind::kUnknownEdge, "unknown forbidden edge");
    cut.removed_edges[e] = 1;
  }
  const auto distinct = static_cast<int>(
      std::count(cut.removed_vertices.begin(), cut.removed_vertices.end(), 1));
  if (distinct >= theta) {
    fail(ErrorKind::kForbiddenTooLarge,
         std::to_string(distinct) + " forbidden vertices, threshold " +
             std::to_string(theta));
  }
  for (int v : w) {
    if (!g.has_vertex(v)) fail(ErrorKind::kRange, "walk vertex out of range");
    if (cut.removed_vertices[v]) {
      fail(ErrorKind::kBadParameters,
           "walk vertex " + std::to_string(v) + " is forbidden");
    }
  }

  std::vector<PathSystem> families;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (kappa_v(g, w[i], w[i + 1]).value < theta) {
      fail(ErrorKind::kPreconditionFailed,
           "walk step " + std::to_string(w[i]) + "-" + std::to_string(w[i + 1]) +
               " is below the threshold");
    }
    auto residual = kappa_v(g, w[i], w[i + 1], cut);
    if (residual.value == 0) {
      fail(ErrorKind::kSegmentBlocked,
           "forbidden material disconnects " + std::to_string(w[i]) + " and " +
               std::to_string(w[i + 1]));
    }
    families.push_back(std::move(residual.witness));
  }
  return weave(g, w, families, r);
}

}  // namespace ocp
