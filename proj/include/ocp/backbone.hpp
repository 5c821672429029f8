#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ocp/connectivity.hpp"
#include "ocp/graph.hpp"

namespace ocp {

// A vertex chain t_0..t_k that every survivor traverses in order.
// floors[i] is the vertex connectivity of t_i and t_{i+1} in the host graph.
struct Backbone {
  std::vector<int> vertices;
  std::vector<int> floors;
  PathSystem survivors;
  std::vector<Separator> separators_used;
};

// `backbone t0 t1 ... ; floors f0 f1 ...`
std::string backbone_line(const Backbone& bb);

// Splits the family at minimum separators until every consecutive pair is
// adjacent or has vertex connectivity at least `tau`. At each split the
// separator vertex lying on the most surviving paths is kept (lowest vertex
// on ties) and the family shrinks to the paths through it.
Backbone extract_backbone(const MultiGraph& g, const PathSystem& family,
                          int tau);

// Greedy rounds: each round takes, for every segment in turn, the first
// unused member whose interior avoids the backbone and every interior vertex
// taken so far. The first round that cannot complete ends the weave.
// segment_families[i] must hold internally disjoint bb[i]-bb[i+1] paths.
PathSystem weave(const MultiGraph& g, std::span<const int> bb,
                 const std::vector<PathSystem>& segment_families, int r);

// Simple graph on the host's vertices with an edge xy whenever the vertex
// connectivity of x and y reaches `threshold`.
struct AuxiliaryGraph {
  int threshold = 1;
  int host_vertices = 0;
  std::vector<std::pair<int, int>> edges;  // x < y, sorted

  bool contains(int x, int y) const;
};

// Only pairs inside `restrict_to` are examined when it is given.
AuxiliaryGraph auxiliary_graph(
    const MultiGraph& g, int theta,
    const std::optional<std::vector<int>>& restrict_to = std::nullopt);

// Realizes the walk `w` (consecutive vertices at connectivity >= theta) as up
// to r edge-disjoint order-compatible w[0]-w.back() paths in g with the
// forbidden vertices and edges removed.
PathSystem lift(const MultiGraph& g, std::span<const int> w, int theta,
                const std::vector<int>& forbidden_vertices,
                const std::vector<int>& forbidden_edges, int r);

}  // namespace ocp
