#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ocp/error.hpp"

namespace ocp {

struct Edge {
  int id = 0;
  int u = 0;
  int v = 0;
};

// Undirected multigraph on vertices 0..n-1. Edge ids are dense, assigned in
// insertion order, and are the identity used by every path. Loops are
// rejected; parallel edges are fine.
class MultiGraph {
 public:
  MultiGraph() = default;
  explicit MultiGraph(int vertex_count);

  int add_edge(int u, int v);

  int vertex_count() const { return static_cast<int>(incident_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  bool has_vertex(int v) const { return v >= 0 && v < vertex_count(); }
  bool has_edge(int id) const { return id >= 0 && id < edge_count(); }

  const Edge& edge(int id) const;
  std::span<const Edge> edges() const { return edges_; }

  // Incident edge ids in ascending order.
  std::span<const int> incident(int v) const;
  int degree(int v) const { return static_cast<int>(incident(v).size()); }

  // The endpoint of `id` that is not `v`. `v` must be an endpoint.
  int other_end(int id, int v) const;
  bool adjacent(int u, int v) const;

  friend bool operator==(const MultiGraph&, const MultiGraph&);

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> incident_;
};

// A path is a start vertex plus the edges it traverses, in order. With
// parallel edges the vertex sequence alone does not identify the path.
struct OrientedPath {
  int start = 0;
  std::vector<int> edges;

  std::size_t length() const { return edges.size(); }
  friend bool operator==(const OrientedPath&, const OrientedPath&) = default;
};

struct PathSystem {
  int source = 0;
  int sink = 0;
  std::vector<OrientedPath> paths;

  std::size_t size() const { return paths.size(); }
  bool empty() const { return paths.empty(); }
  friend bool operator==(const PathSystem&, const PathSystem&) = default;
};

// Vertex sequence of `p` if it is a simple path in `g`; throws UnknownEdge,
// NotIncident or RepeatedVertex otherwise.
std::vector<int> validate_path(const MultiGraph& g, const OrientedPath& p);

// Final vertex of a path. Assumes `p` is valid in `g`.
int end_vertex(const MultiGraph& g, const OrientedPath& p);

// Subpath between the positions `from` and `to` (indices into the vertex
// sequence, from <= to). The orientation of `p` is kept.
OrientedPath subpath(const OrientedPath& p, std::span<const int> vertices,
                     std::size_t from, std::size_t to);

// Joins `head` and `tail`; the caller guarantees end(head) == tail.start.
OrientedPath concat(const OrientedPath& head, const OrientedPath& tail);

// Builds a path from a vertex sequence, taking the lowest-id edge between
// consecutive vertices. Used by generators and tests.
OrientedPath path_through(const MultiGraph& g, std::span<const int> vertices);

std::map<std::size_t, PathSystem> partition_by_length(const PathSystem& s);

// --- Text formats -----------------------------------------------------------

MultiGraph parse_graph(std::string_view text);
std::string serialize_graph(const MultiGraph& g);

OrientedPath parse_path_line(std::string_view line, int line_number = 1);
std::string serialize_path(const OrientedPath& p);

// A system file: `system <source> <sink>` followed by `path` lines. Paths are
// not validated against a graph here.
PathSystem parse_system(std::string_view text);
std::string serialize_system(const PathSystem& s);

}  // namespace ocp
