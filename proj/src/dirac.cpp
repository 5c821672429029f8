#include "ocp/dirac.hpp"

#include "ocp/order_compat.hpp"

namespace ocp {

DiracResult dirac_system(const MultiGraph& g, int a, int b, int k,
                         const FlowOptions& options) {
  DiracResult result;
  auto flow = min_total_edge_flow(g, a, b, k, options);
  result.system = std::move(flow.system);
  result.flow_cost = flow.flow_cost;
  for (const auto& p : result.system.paths) {
    result.total_edges += static_cast<std::int64_t>(p.length());
  }

  const auto report = verify_system(g, result.system);
  if (!report.ok()) {
    fail(ErrorKind::kMinimalityBreach,
         "minimal system failed verification: " +
             certificate_line(*report.certificate));
  }
  return result;
}

DiracResult max_oc_system(const MultiGraph& g, int a, int b,
                          const FlowOptions& options) {
  const int k = kappa_e(g, a, b).value;
  if (k == 0) return DiracResult{PathSystem{a, b, {}}, 0, 0};
  return dirac_system(g, a, b, k, options);
}

}  // namespace ocp
