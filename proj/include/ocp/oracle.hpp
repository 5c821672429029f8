#pragma once

#include <cstddef>
#include <vector>

#include "ocp/graph.hpp"

namespace ocp {

// Exhaustive reference answers for tiny graphs. Every call refuses graphs
// beyond the limits with LimitExceeded. Edge sets are held as 64-bit masks,
// so more than 64 edges or vertices is refused whatever the limits say.
struct OracleLimits {
  int max_vertices = 7;
  int max_edges = 12;
  std::size_t max_paths_enumerated = 10000;
};

// All simple a-b paths, parallel edges telling paths apart, in
// lexicographic order of their edge-id sequences.
std::vector<OrientedPath> enumerate_paths(const MultiGraph& g, int a, int b,
                                          const OracleLimits& limits = {});

int brute_kappa_e(const MultiGraph& g, int a, int b,
                  const OracleLimits& limits = {});

int brute_kappa_v(const MultiGraph& g, int a, int b,
                  const OracleLimits& limits = {});

struct OracleSystem {
  int value = 0;
  PathSystem witness;
};

// Largest family of pairwise edge-disjoint, order-compatible a-b paths.
OracleSystem brute_max_oc(const MultiGraph& g, int a, int b,
                          const OracleLimits& limits = {});

// Smallest total length of k pairwise edge-disjoint a-b paths, -1 when
// fewer than k exist.
long brute_min_total_edges(const MultiGraph& g, int a, int b, int k,
                           const OracleLimits& limits = {});

}  // namespace ocp
