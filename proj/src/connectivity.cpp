#include "ocp/connectivity.hpp"

#include <algorithm>
#include <random>
#include <string>

#include "flow.hpp"

namespace ocp {

namespace {

using detail::FlowNetwork;

void check_endpoints(const MultiGraph& g, int a, int b) {
  if (!g.has_vertex(a) || !g.has_vertex(b)) {
    fail(ErrorKind::kRange, "endpoint out of range");
  }
  if (a == b) fail(ErrorKind::kSameEndpoints, "a and b must differ");
}

bool edge_usable(const MultiGraph& g, const Edge& e, const Restriction& r) {
  (void)g;
  return !r.edge_removed(e.id) && !r.vertex_removed(e.u) &&
         !r.vertex_removed(e.v);
}

// Each undirected edge becomes two unit arcs tagged 2*id (u->v) and
// 2*id+1 (v->u); the net flow over the pair is what counts.
FlowNetwork edge_network(const MultiGraph& g, const Restriction& r, int cost) {
  FlowNetwork net(g.vertex_count());
  for (const Edge& e : g.edges()) {
    if (!edge_usable(g, e, r)) continue;
    net.add_arc(e.u, e.v, 1, cost, 2 * e.id);
    net.add_arc(e.v, e.u, 1, cost, 2 * e.id + 1);
  }
  return net;
}

std::vector<int> net_directions(const MultiGraph& g, const FlowNetwork& net) {
  std::vector<int> direction(static_cast<std::size_t>(g.edge_count()), 0);
  for (int i = 0; i < net.arc_count(); i += 2) {
    const int tag = net.arc(i).tag;
    if (tag < 0) continue;
    const int units = net.flow(i);
    direction[tag / 2] += (tag % 2 == 0) ? units : -units;
  }
  return direction;
}

int in_node(int v) { return 2 * v; }
int out_node(int v) { return 2 * v + 1; }

// Split network for internal vertex connectivity: every vertex other than a
// and b gets a unit in->out arc. Edge arcs are uncapacitated except direct
// a-b edges, so a minimum cut only ever cuts vertex arcs or a-b edges.
FlowNetwork split_network(const MultiGraph& g, int a, int b,
                          const Restriction& r) {
  FlowNetwork net(2 * g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (r.vertex_removed(v)) continue;
    const bool terminal = (v == a || v == b);
    net.add_arc(in_node(v), out_node(v), terminal ? FlowNetwork::kInfinity : 1);
  }
  for (const Edge& e : g.edges()) {
    if (!edge_usable(g, e, r)) continue;
    const bool direct = (e.u == a && e.v == b) || (e.u == b && e.v == a);
    const int cap = direct ? 1 : FlowNetwork::kInfinity;
    // Arcs into a or out of b never carry useful flow.
    if (e.v != a && e.u != b) {
      net.add_arc(out_node(e.u), in_node(e.v), cap, 0, 2 * e.id);
    }
    if (e.u != a && e.v != b) {
      net.add_arc(out_node(e.v), in_node(e.u), cap, 0, 2 * e.id + 1);
    }
  }
  return net;
}

}  // namespace

PathSystem decompose_flow(const MultiGraph& g, int a, int b,
                          const std::vector<int>& direction, int paths,
                          std::optional<std::uint64_t> shuffle_seed) {
  const int n = g.vertex_count();
  std::vector<std::vector<int>> out(static_cast<std::size_t>(n));
  for (const Edge& e : g.edges()) {
    if (direction[e.id] > 0) out[e.u].push_back(e.id);
    if (direction[e.id] < 0) out[e.v].push_back(e.id);
  }
  if (shuffle_seed) {
    std::mt19937_64 rng(*shuffle_seed ^ 0x9e3779b97f4a7c15ULL);
    for (auto& list : out) std::shuffle(list.begin(), list.end(), rng);
  }

  std::vector<std::size_t> cursor(static_cast<std::size_t>(n), 0);
  std::vector<int> position(static_cast<std::size_t>(n), -1);
  PathSystem result{a, b, {}};

  for (int k = 0; k < paths; ++k) {
    std::vector<int> walk_vertices{a};
    std::vector<int> walk_edges;
    position[a] = 0;
    int at = a;
    while (at != b) {
      if (cursor[at] >= out[at].size()) {
        fail(ErrorKind::kInternal, "flow decomposition ran dry at vertex " +
                                       std::to_string(at));
      }
      const int id = out[at][cursor[at]++];
      const int next = g.other_end(id, at);
      if (position[next] >= 0) {
        // Closed a cycle: drop it, the units it used are cancelled.
        const auto keep = static_cast<std::size_t>(position[next]);
        for (std::size_t i = keep + 1; i < walk_vertices.size(); ++i) {
          position[walk_vertices[i]] = -1;
        }
        walk_vertices.resize(keep + 1);
        walk_edges.resize(keep);
        at = next;
        continue;
      }
      position[next] = static_cast<int>(walk_vertices.size());
      walk_vertices.push_back(next);
      walk_edges.push_back(id);
      at = next;
    }
    for (int v : walk_vertices) position[v] = -1;
    result.paths.push_back({a, std::move(walk_edges)});
  }
  return result;
}

KappaResult kappa_e(const MultiGraph& g, int a, int b,
                    const Restriction& restriction) {
  check_endpoints(g, a, b);
  KappaResult result;
  result.witness = {a, b, {}};
  if (restriction.vertex_removed(a) || restriction.vertex_removed(b)) {
    return result;
  }
  FlowNetwork net = edge_network(g, restriction, 0);
  result.value = net.max_flow(a, b);
  result.witness =
      decompose_flow(g, a, b, net_directions(g, net), result.value);
  return result;
}

KappaResult kappa_v(const MultiGraph& g, int a, int b,
                    const Restriction& restriction) {
  check_endpoints(g, a, b);
  KappaResult result;
  result.witness = {a, b, {}};
  if (restriction.vertex_removed(a) || restriction.vertex_removed(b)) {
    return result;
  }
  FlowNetwork net = split_network(g, a, b, restriction);
  result.value = net.max_flow(out_node(a), in_node(b));
  result.witness =
      decompose_flow(g, a, b, net_directions(g, net), result.value);
  return result;
}

ConnectivityReport connectivity(const MultiGraph& g, int a, int b) {
  return {kappa_e(g, a, b).value, kappa_v(g, a, b).value};
}

Separator min_internal_separator(const MultiGraph& g, int a, int b) {
  check_endpoints(g, a, b);
  if (g.adjacent(a, b)) {
    fail(ErrorKind::kAdjacentEndpoints,
         "an a-b edge exists, no internal separator");
  }
  FlowNetwork net = split_network(g, a, b, {});
  const int value = net.max_flow(out_node(a), in_node(b));
  const auto reach = net.residual_reachable(out_node(a));
  Separator s{{}, a, b};
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (v == a || v == b) continue;
    if (reach[in_node(v)] && !reach[out_node(v)]) s.vertices.push_back(v);
  }
  if (static_cast<int>(s.vertices.size()) != value) {
    fail(ErrorKind::kInternal, "separator size differs from vertex connectivity");
  }
  return s;
}

MinCostSystem min_total_edge_flow(const MultiGraph& g, int a, int b, int k,
                                  const FlowOptions& options) {
  check_endpoints(g, a, b);
  if (k < 1) fail(ErrorKind::kBadParameters, "k must be positive");
  FlowNetwork net = edge_network(g, {}, 1);
  if (options.shuffle_seed) {
    std::mt19937_64 rng(*options.shuffle_seed);
    net.shuffle(rng);
  }
  const auto flow = net.min_cost_flow(a, b, k);
  if (flow.flow < k) {
    fail(ErrorKind::kInfeasible,
         "only " + std::to_string(flow.flow) + " edge-disjoint paths exist, " +
             std::to_string(k) + " requested");
  }
  PathSystem s = decompose_flow(g, a, b, net_directions(g, net), k,
                                options.shuffle_seed);
  std::int64_t total = 0;
  for (const auto& p : s.paths) total += static_cast<std::int64_t>(p.length());
  if (total != flow.cost) {
    fail(ErrorKind::kInternal, "decomposed paths do not account for flow cost");
  }
  return {std::move(s), flow.cost};
}

PathSystem min_total_edge_system(const MultiGraph& g, int a, int b, int k,
                                 const FlowOptions& options) {
  return min_total_edge_flow(g, a, b, k, options).system;
}

}  // namespace ocp
