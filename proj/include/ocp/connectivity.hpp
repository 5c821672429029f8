#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ocp/graph.hpp"

namespace ocp {

// Vertices and edges to leave out of a flow computation. Empty vectors mean
// nothing is removed; otherwise they are indexed by vertex / edge id.
struct Restriction {
  std::vector<char> removed_vertices;
  std::vector<char> removed_edges;

  bool vertex_removed(int v) const {
    return !removed_vertices.empty() && removed_vertices[v];
  }
  bool edge_removed(int id) const {
    return !removed_edges.empty() && removed_edges[id];
  }
};

// Controls how a flow is turned into paths. Without a seed the walk always
// leaves a vertex by its lowest-id flow edge; with one, both the flow solver
// and the walk break ties pseudo-randomly.
struct FlowOptions {
  std::optional<std::uint64_t> shuffle_seed;
};

struct KappaResult {
  int value = 0;
  PathSystem witness;
};

struct Separator {
  std::vector<int> vertices;  // ascending
  int source = 0;
  int sink = 0;
};

struct ConnectivityReport {
  int kappa_e = 0;
  int kappa_v = 0;
};

// Maximum number of pairwise edge-disjoint a-b paths, with a witness.
KappaResult kappa_e(const MultiGraph& g, int a, int b,
                    const Restriction& restriction = {});

// Maximum number of pairwise internally vertex-disjoint a-b paths. Every
// parallel a-b edge counts as its own path.
KappaResult kappa_v(const MultiGraph& g, int a, int b,
                    const Restriction& restriction = {});

ConnectivityReport connectivity(const MultiGraph& g, int a, int b);

// Minimum vertex set avoiding a and b whose removal separates them. Throws
// AdjacentEndpoints when an a-b edge exists.
Separator min_internal_separator(const MultiGraph& g, int a, int b);

// k edge-disjoint a-b paths with the smallest possible total edge count.
PathSystem min_total_edge_system(const MultiGraph& g, int a, int b, int k,
                                 const FlowOptions& options = {});

struct MinCostSystem {
  PathSystem system;
  std::int64_t flow_cost = 0;
};
// Same, also reporting the cost of the min-cost flow it was decomposed from.
MinCostSystem min_total_edge_flow(const MultiGraph& g, int a, int b, int k,
                                  const FlowOptions& options = {});

// Flow decomposition used by the routines above, exposed for tests.
// `direction[e]` is +1 when edge e carries one unit from edge(e).u to
// edge(e).v, -1 for the opposite direction and 0 when unused. Cycles met
// along the way are cancelled; exactly `paths` a-b paths are extracted.
PathSystem decompose_flow(const MultiGraph& g, int a, int b,
                          const std::vector<int>& direction, int paths,
                          std::optional<std::uint64_t> shuffle_seed = {});

}  // namespace ocp
