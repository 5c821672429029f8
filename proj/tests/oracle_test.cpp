#include <gtest/gtest.h>

#include <algorithm>
#include <functional>

#include "fixtures.hpp"
#include "ocp/oracle.hpp"
#include "ocp/order_compat.hpp"

using namespace ocp;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::kInternal;
}

TEST(EnumeratePaths, ThetaGraph) {
  const auto g = fixtures::theta();
  const auto paths = enumerate_paths(g, 0, 1);
  ASSERT_EQ(paths.size(), 3u);
  EXPECT_EQ(paths[0].edges, std::vector<int>{0});
  EXPECT_EQ(paths[1].edges, (std::vector<int>{1, 2}));
  EXPECT_EQ(paths[2].edges, (std::vector<int>{3, 4}));
}

TEST(EnumeratePaths, ParallelEdges) {
  EXPECT_EQ(enumerate_paths(fixtures::parallel(4), 0, 1).size(), 4u);
}

TEST(EnumeratePaths, CompleteGraphCount) {
  // Simple 0-3 paths in K5: 1 + 3 + 3*2 + 3*2*1 = 16.
  EXPECT_EQ(enumerate_paths(fixtures::complete(5), 0, 3).size(), 16u);
}

TEST(Oracle, SameEndpoints) {
  const auto g = fixtures::theta();
  EXPECT_EQ(kind_of([&] { enumerate_paths(g, 1, 1); }), ErrorKind::kSameEndpoints);
}

TEST(Oracle, RefusesLargeInputs) {
  const auto g = fixtures::complete(8);
  EXPECT_EQ(kind_of([&] { brute_kappa_e(g, 0, 1); }), ErrorKind::kLimitExceeded);
  EXPECT_EQ(kind_of([&] { brute_kappa_v(fixtures::parallel(13), 0, 1); }),
            ErrorKind::kLimitExceeded);
  EXPECT_EQ(kind_of([&] { enumerate_paths(fixtures::complete(6), 0, 1, {7, 15, 10}); }),
            ErrorKind::kLimitExceeded);
  const MultiGraph wide(65);
  EXPECT_EQ(kind_of([&] { enumerate_paths(wide, 0, 1, {100, 100, 1000000}); }),
            ErrorKind::kLimitExceeded);
}

TEST(BruteKappa, Examples) {
  EXPECT_EQ(brute_kappa_e(fixtures::theta(), 0, 1), 3);
  EXPECT_EQ(brute_kappa_e(fixtures::graph(4, {{0, 2}, {1, 3}}), 0, 1), 0);
  EXPECT_EQ(brute_kappa_e(fixtures::crossing(), 0, 3), 2);
  EXPECT_EQ(brute_kappa_v(fixtures::complete(4), 0, 3), 3);
  EXPECT_EQ(brute_kappa_v(fixtures::bowtie(), 0, 4), 1);
  EXPECT_EQ(brute_kappa_v(fixtures::parallel(3), 0, 1), 3);
}

TEST(BruteMaxOc, CrossingGraph) {
  const auto g = fixtures::crossing();
  const auto r = brute_max_oc(g, 0, 3);
  EXPECT_EQ(r.value, 2);
  ASSERT_EQ(r.witness.size(), 2u);
  EXPECT_TRUE(verify_system(g, r.witness).ok());
  std::vector<std::vector<int>> seqs;
  for (const auto& p : r.witness.paths) seqs.push_back(validate_path(g, p));
  std::sort(seqs.begin(), seqs.end());
  EXPECT_EQ(seqs, (std::vector<std::vector<int>>{{0, 1, 3}, {0, 2, 3}}));
}

TEST(BruteMinTotal, Examples) {
  EXPECT_EQ(brute_min_total_edges(fixtures::crossing(), 0, 3, 2), 4);
  EXPECT_EQ(brute_min_total_edges(fixtures::crossing(), 0, 3, 3), -1);
  EXPECT_EQ(brute_min_total_edges(fixtures::theta(), 0, 1, 3), 5);
  EXPECT_EQ(brute_min_total_edges(fixtures::theta(), 0, 1, 1), 1);
}

}  // namespace
