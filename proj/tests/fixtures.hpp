#pragma once

#include <initializer_list>
#include <utility>
#include <vector>

#include "ocp/graph.hpp"

namespace fixtures {

inline ocp::MultiGraph graph(int n, std::initializer_list<std::pair<int, int>> edges) {
  ocp::MultiGraph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

inline ocp::MultiGraph parallel(int k) {
  ocp::MultiGraph g(2);
  for (int i = 0; i < k; ++i) g.add_edge(0, 1);
  return g;
}

// a=0, b=1, x=2, y=3: edge ab, a-x-b, a-y-b.
inline ocp::MultiGraph theta() {
  return graph(4, {{0, 1}, {0, 2}, {2, 1}, {0, 3}, {3, 1}});
}

// a=0, u=1, v=2, b=3: au, av, uv twice, ub, vb.
inline ocp::MultiGraph crossing() {
  return graph(4, {{0, 1}, {0, 2}, {1, 2}, {1, 2}, {1, 3}, {2, 3}});
}

inline ocp::MultiGraph complete(int n) {
  ocp::MultiGraph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

// Triangles a=0,x=1,s=2 and s=2,y=3,b=4 sharing s.
inline ocp::MultiGraph bowtie() {
  return graph(5, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 2}});
}

inline ocp::OrientedPath path(const ocp::MultiGraph& g, std::vector<int> vertices) {
  return ocp::path_through(g, vertices);
}

inline ocp::PathSystem system(int source, int sink, std::vector<ocp::OrientedPath> paths) {
  return ocp::PathSystem{source, sink, std::move(paths)};
}

}  // namespace fixtures
