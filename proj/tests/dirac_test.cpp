#include <gtest/gtest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "ocp/connectivity.hpp"
#include "ocp/dirac.hpp"
#include "ocp/gen.hpp"
#include "ocp/oracle.hpp"
#include "ocp/order_compat.hpp"

using namespace ocp;

namespace {

std::vector<std::vector<int>> sorted_sequences(const MultiGraph& g, const PathSystem& s) {
  std::vector<std::vector<int>> out;
  for (const auto& p : s.paths) out.push_back(validate_path(g, p));
  std::sort(out.begin(), out.end());
  return out;
}

TEST(Dirac, CrossingGraph) {
  const auto g = fixtures::crossing();
  const auto r = dirac_system(g, 0, 3, 2);
  EXPECT_EQ(r.total_edges, 4);
  EXPECT_EQ(r.flow_cost, 4);
  EXPECT_EQ(sorted_sequences(g, r.system),
            (std::vector<std::vector<int>>{{0, 1, 3}, {0, 2, 3}}));
  EXPECT_TRUE(verify_system(g, r.system).ok());
}

TEST(Dirac, ParallelEdges) {
  for (int k = 1; k <= 5; ++k) {
    const auto r = dirac_system(fixtures::parallel(k), 0, 1, k);
    EXPECT_EQ(r.system.size(), static_cast<std::size_t>(k));
    EXPECT_EQ(r.total_edges, k);
  }
}

TEST(Dirac, TooManyPathsIsInfeasible) {
  const auto g = fixtures::theta();
  try {
    dirac_system(g, 0, 1, kappa_e(g, 0, 1).value + 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kInfeasible);
  }
  EXPECT_THROW(dirac_system(g, 0, 1, 0), Error);
}

TEST(MaxOc, Examples) {
  EXPECT_EQ(max_oc_system(fixtures::crossing(), 0, 3).system.size(), 2u);
  EXPECT_EQ(max_oc_system(fixtures::theta(), 0, 1).system.size(), 3u);
  EXPECT_TRUE(max_oc_system(fixtures::graph(4, {{0, 2}, {1, 3}}), 0, 1).system.empty());
}

TEST(DiracProperties, FiniteEqualityOnSmallGraphs) {
  Rng rng(404);
  for (int t = 0; t < 150; ++t) {
    const int n = rng.uniform(2, 7);
    const int mult = rng.uniform(1, 3);
    const auto g = gen_random_multigraph(n, rng.uniform(0, std::min(12, mult * n * (n - 1) / 2)),
                                         mult, rng.next());
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) {
        const auto r = max_oc_system(g, a, b);
        const int ke = brute_kappa_e(g, a, b);
        EXPECT_EQ(static_cast<int>(r.system.size()), ke);
        EXPECT_EQ(brute_max_oc(g, a, b).value, ke);
        EXPECT_TRUE(verify_system(g, r.system).ok());
        if (ke > 0) EXPECT_EQ(r.total_edges, brute_min_total_edges(g, a, b, ke));
      }
    }
  }
}

TEST(DiracProperties, EveryDecompositionOrderIsCompatible) {
  Rng rng(12);
  int instances = 0;
  while (instances < 5) {
    const auto g = gen_random_multigraph(25, 70, 2, rng.next());
    const int ke = kappa_e(g, 0, 24).value;
    if (ke < 2) continue;
    ++instances;
    const auto base = dirac_system(g, 0, 24, ke).total_edges;
    for (int rerun = 0; rerun < 100; ++rerun) {
      const auto r = dirac_system(g, 0, 24, ke, FlowOptions{rng.next()});
      EXPECT_EQ(r.total_edges, base);
      EXPECT_TRUE(verify_system(g, r.system).ok());
    }
  }
}

}  // namespace
