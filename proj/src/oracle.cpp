#include "ocp/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <unordered_map>
#include <utility>

namespace ocp {

namespace {

using Mask = std::uint64_t;

void check_instance(const MultiGraph& g, int a, int b, const OracleLimits& limits) {
  if (g.vertex_count() > limits.max_vertices || g.edge_count() > limits.max_edges ||
      g.edge_count() > 64 || g.vertex_count() > 64) {
    fail(ErrorKind::kLimitExceeded,
         "graph with " + std::to_string(g.vertex_count()) + " vertices and " +
             std::to_string(g.edge_count()) + " edges exceeds the oracle limits");
  }
  if (!g.has_vertex(a) || !g.has_vertex(b)) fail(ErrorKind::kRange, "endpoint out of range");
  if (a == b) fail(ErrorKind::kSameEndpoints, "a and b must differ");
}

struct Enumerated {
  OrientedPath path;
  std::vector<int> seq;
  Mask edges = 0;
  Mask inner = 0;  // internal vertices
};

std::vector<Enumerated> enumerate(const MultiGraph& g, int a, int b,
                                  const OracleLimits& limits) {
  check_instance(g, a, b, limits);
  std::vector<Enumerated> out;
  std::vector<char> on_path(static_cast<std::size_t>(g.vertex_count()), 0);
  std::vector<int> edges;
  std::vector<int> seq{a};
  on_path[a] = 1;

  auto dfs = [&](auto&& self, int at) -> void {
    if (at == b) {
      if (out.size() >= limits.max_paths_enumerated) {
        fail(ErrorKind::kLimitExceeded,
             "more than " + std::to_string(limits.max_paths_enumerated) + " paths");
      }
      Enumerated e{{a, edges}, seq, 0, 0};
      for (int id : edges) e.edges |= Mask{1} << id;
      for (std::size_t i = 1; i + 1 < seq.size(); ++i) e.inner |= Mask{1} << seq[i];
      out.push_back(std::move(e));
      return;
    }
    for (int id : g.incident(at)) {
      const int next = g.other_end(id, at);
      if (on_path[next]) continue;
      on_path[next] = 1;
      edges.push_back(id);
      seq.push_back(next);
      self(self, next);
      seq.pop_back();
      edges.pop_back();
      on_path[next] = 0;
    }
  };
  dfs(dfs, a);
  return out;
}

// Paths indexed by the lowest edge they use, for the packing recursions.
std::vector<std::vector<int>> by_lowest_edge(const std::vector<Enumerated>& paths) {
  std::vector<std::vector<int>> out(64);
  for (std::size_t i = 0; i < paths.size(); ++i) {
    out[std::countr_zero(paths[i].edges)].push_back(static_cast<int>(i));
  }
  return out;
}

// Maximum number of paths whose edge sets (and, with vertex_disjoint, inner
// vertex sets) are pairwise disjoint. `free_edges` only shrinks, and the
// lowest free edge is either unused or spent by a path whose lowest edge it
// is: paths using a lower edge were decided earlier.
class Packer {
 public:
  Packer(const std::vector<Enumerated>& paths, bool vertex_disjoint)
      : paths_(paths), lowest_(by_lowest_edge(paths)), vertex_disjoint_(vertex_disjoint) {}

  int best(Mask free_edges, Mask free_inner) {
    if (free_edges == 0) return 0;
    const auto key = std::pair{free_edges, vertex_disjoint_ ? free_inner : Mask{0}};
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    const int e = std::countr_zero(free_edges);
    const Mask rest = free_edges & ~(Mask{1} << e);
    int result = best(rest, free_inner);
    for (int i : lowest_[e]) {
      const auto& p = paths_[i];
      if ((p.edges & ~free_edges) != 0) continue;
      if (vertex_disjoint_ && (p.inner & ~free_inner) != 0) continue;
      result = std::max(result, 1 + best(free_edges & ~p.edges, free_inner & ~p.inner));
    }
    memo_[key] = result;
    return result;
  }

 private:
  struct KeyHash {
    std::size_t operator()(const std::pair<Mask, Mask>& k) const {
      return std::hash<Mask>()(k.first * 0x9e3779b97f4a7c15ULL ^ k.second);
    }
  };

  const std::vector<Enumerated>& paths_;
  std::vector<std::vector<int>> lowest_;
  bool vertex_disjoint_;
  std::unordered_map<std::pair<Mask, Mask>, int, KeyHash> memo_;
};

Mask all_edges(const MultiGraph& g) {
  return g.edge_count() == 64 ? ~Mask{0} : (Mask{1} << g.edge_count()) - 1;
}

bool order_compatible(const Enumerated& p, const Enumerated& q, int n) {
  std::vector<int> pos(static_cast<std::size_t>(n), -1);
  for (std::size_t i = 0; i < q.seq.size(); ++i) pos[q.seq[i]] = static_cast<int>(i);
  int last = -1;
  for (int v : p.seq) {
    if (pos[v] < 0) continue;
    if (pos[v] < last) return false;
    last = pos[v];
  }
  return true;
}

}  // namespace

std::vector<OrientedPath> enumerate_paths(const MultiGraph& g, int a, int b,
                                          const OracleLimits& limits) {
  std::vector<OrientedPath> out;
  for (auto& e : enumerate(g, a, b, limits)) out.push_back(std::move(e.path));
  return out;
}

int brute_kappa_e(const MultiGraph& g, int a, int b, const OracleLimits& limits) {
  const auto paths = enumerate(g, a, b, limits);
  Packer packer(paths, false);
  return packer.best(all_edges(g), 0);
}

int brute_kappa_v(const MultiGraph& g, int a, int b, const OracleLimits& limits) {
  const auto paths = enumerate(g, a, b, limits);
  Packer packer(paths, true);
  return packer.best(all_edges(g), ~Mask{0});
}

OracleSystem brute_max_oc(const MultiGraph& g, int a, int b,
                          const OracleLimits& limits) {
  const auto paths = enumerate(g, a, b, limits);
  const int n = g.vertex_count();
  const int ceiling = Packer(paths, false).best(all_edges(g), 0);

  // Paths sharing their first edge conflict, so a solution takes at most one
  // path per group.
  std::map<int, std::vector<int>> groups;
  for (std::size_t i = 0; i < paths.size(); ++i) {
    groups[paths[i].path.edges.front()].push_back(static_cast<int>(i));
  }
  std::vector<std::vector<int>> group_list;
  for (auto& [first, members] : groups) {
    std::stable_sort(members.begin(), members.end(), [&](int x, int y) {
      return paths[x].seq.size() < paths[y].seq.size();
    });
    group_list.push_back(std::move(members));
  }

  std::vector<int> chosen, best;
  auto search = [&](auto&& self, std::size_t gi, Mask used) -> void {
    if (chosen.size() > best.size()) best = chosen;
    if (static_cast<int>(best.size()) == ceiling) return;
    if (chosen.size() + (group_list.size() - gi) <= best.size()) return;
    if (gi == group_list.size()) return;
    for (int i : group_list[gi]) {
      const auto& p = paths[i];
      if ((p.edges & used) != 0) continue;
      const bool fits = std::all_of(chosen.begin(), chosen.end(), [&](int j) {
        return order_compatible(p, paths[j], n);
      });
      if (!fits) continue;
      chosen.push_back(i);
      self(self, gi + 1, used | p.edges);
      chosen.pop_back();
      if (static_cast<int>(best.size()) == ceiling) return;
    }
    self(self, gi + 1, used);
  };
  search(search, 0, 0);

  OracleSystem result{static_cast<int>(best.size()), {a, b, {}}};
  std::sort(best.begin(), best.end());
  for (int i : best) result.witness.paths.push_back(paths[i].path);
  return result;
}

long brute_min_total_edges(const MultiGraph& g, int a, int b, int k,
                           const OracleLimits& limits) {
  if (k < 1) fail(ErrorKind::kBadParameters, "k must be positive");
  const auto paths = enumerate(g, a, b, limits);
  const auto lowest = by_lowest_edge(paths);
  constexpr long kNone = -1;
  std::map<std::pair<Mask, int>, long> memo;
  auto solve = [&](auto&& self, Mask free_edges, int need) -> long {
    if (need == 0) return 0;
    if (free_edges == 0) return kNone;
    const auto key = std::pair{free_edges, need};
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    const int e = std::countr_zero(free_edges);
    long result = self(self, free_edges & ~(Mask{1} << e), need);
    for (int i : lowest[e]) {
      const auto& p = paths[i];
      if ((p.edges & ~free_edges) != 0) continue;
      const long rest = self(self, free_edges & ~p.edges, need - 1);
      if (rest == kNone) continue;
      const long total = rest + static_cast<long>(p.path.length());
      if (result == kNone || total < result) result = total;
    }
    memo[key] = result;
    return result;
  };
  return solve(solve, all_edges(g), k);
}

}  // namespace ocp
