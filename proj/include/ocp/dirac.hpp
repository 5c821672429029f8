#pragma once

#include <cstdint>

#include "ocp/connectivity.hpp"
#include "ocp/graph.hpp"

namespace ocp {

// A minimum-total-edge family of edge-disjoint a-b paths. For edge-disjoint
// paths the size of the edge union equals the sum of lengths, which is the
// cost of the underlying unit-cost flow.
struct DiracResult {
  PathSystem system;
  std::int64_t total_edges = 0;
  std::int64_t flow_cost = 0;
};

// k edge-disjoint a-b paths of minimum total length, checked to be pairwise
// order-compatible. A failed check raises MinimalityBreach: it can only mean
// the minimisation is broken.
DiracResult dirac_system(const MultiGraph& g, int a, int b, int k,
                         const FlowOptions& options = {});

// As many pairwise order-compatible edge-disjoint a-b paths as there are
// edge-disjoint ones (empty when a and b are disconnected).
DiracResult max_oc_system(const MultiGraph& g, int a, int b,
                          const FlowOptions& options = {});

}  // namespace ocp
