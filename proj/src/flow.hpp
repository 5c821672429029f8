#pragma once

// Residual flow network shared by the connectivity routines. Not installed;
// only the .cpp files under src/ see it.

#include <cstdint>
#include <random>
#include <vector>

namespace ocp::detail {

class FlowNetwork {
 public:
  static constexpr int kInfinity = 1 << 29;

  struct Arc {
    int to;
    int cap;   // residual capacity
    int cost;
    int tag;   // caller-defined label, -1 on reverse arcs
  };

  explicit FlowNetwork(int nodes) : adj_(static_cast<std::size_t>(nodes)) {}

  // Adds from->to and its zero-capacity reverse. Returns the forward arc
  // index; the reverse arc is index ^ 1.
  int add_arc(int from, int to, int cap, int cost = 0, int tag = -1);

  int node_count() const { return static_cast<int>(adj_.size()); }
  const Arc& arc(int index) const { return arcs_[index]; }
  int arc_count() const { return static_cast<int>(arcs_.size()); }
  // Units currently routed through a forward arc.
  int flow(int index) const { return arcs_[index ^ 1].cap; }

  // Permutes every adjacency list; changes which of several optimal flows
  // the solvers below settle on.
  void shuffle(std::mt19937_64& rng);

  // Dinic. Stops once `limit` units have been routed.
  int max_flow(int source, int sink, int limit = kInfinity);

  struct CostFlow {
    int flow = 0;
    std::int64_t cost = 0;
  };
  // Successive shortest paths with Dijkstra on reduced costs. All forward
  // arc costs must be non-negative.
  CostFlow min_cost_flow(int source, int sink, int amount);

  // Nodes reachable from `source` along arcs with positive residual capacity.
  std::vector<char> residual_reachable(int source) const;

 private:
  bool build_levels(int source, int sink);
  int augment(int node, int sink, int pushed);

  std::vector<Arc> arcs_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> level_;
  std::vector<std::size_t> cursor_;
};

}  // namespace ocp::detail
