#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>

#include "fixtures.hpp"
#include "ocp/backbone.hpp"
#include "ocp/connectivity.hpp"
#include "ocp/gen.hpp"
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

// a=0, s=1, b=2, x_i = 3+i, y_i = 3+k+i; family a-x_i-s-y_i-b.
struct Hourglass {
  MultiGraph g;
  PathSystem family;
};

Hourglass hourglass(int k) {
  Hourglass h{MultiGraph(3 + 2 * k), {0, 2, {}}};
  for (int i = 0; i < k; ++i) {
    const int x = 3 + i, y = 3 + k + i;
    const int e1 = h.g.add_edge(0, x), e2 = h.g.add_edge(x, 1);
    const int e3 = h.g.add_edge(1, y), e4 = h.g.add_edge(y, 2);
    h.family.paths.push_back({0, {e1, e2, e3, e4}});
  }
  return h;
}

std::set<int> vertex_set(const MultiGraph& g, const OrientedPath& p) {
  const auto seq = validate_path(g, p);
  return {seq.begin(), seq.end()};
}

void expect_pairwise_meet_in(const MultiGraph& g, const PathSystem& s, const std::vector<int>& bb) {
  const std::set<int> want(bb.begin(), bb.end());
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      const auto a = vertex_set(g, s.paths[i]);
      const auto b = vertex_set(g, s.paths[j]);
      std::set<int> both;
      std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                            std::inserter(both, both.end()));
      EXPECT_EQ(both, want);
    }
  }
}

TEST(Backbone, Hourglass) {
  for (int k = 2; k <= 6; ++k) {
    const auto h = hourglass(k);
    const auto bb = extract_backbone(h.g, h.family, k);
    EXPECT_EQ(bb.vertices, (std::vector<int>{0, 1, 2}));
    EXPECT_EQ(bb.survivors.size(), static_cast<std::size_t>(k));
    EXPECT_EQ(bb.floors, (std::vector<int>{k, k}));
    EXPECT_EQ(backbone_line(bb), "backbone 0 1 2 ; floors " + std::to_string(k) + " " +
                                     std::to_string(k));
  }
}

TEST(Backbone, InternallyDisjointFamilyIsABaseCase) {
  const auto g = fixtures::graph(5, {{0, 2}, {2, 1}, {0, 3}, {3, 1}, {0, 4}, {4, 1}});
  const auto family = fixtures::system(
      0, 1, {fixtures::path(g, {0, 2, 1}), fixtures::path(g, {0, 3, 1}), fixtures::path(g, {0, 4, 1})});
  const auto bb = extract_backbone(g, family, 3);
  EXPECT_EQ(bb.vertices, (std::vector<int>{0, 1}));
  EXPECT_EQ(bb.survivors, family);
  EXPECT_TRUE(bb.separators_used.empty());
}

TEST(Backbone, SinglePathSplitsToAdjacentPairs) {
  const auto g = fixtures::graph(3, {{0, 1}, {1, 2}});
  const auto bb = extract_backbone(g, fixtures::system(0, 2, {fixtures::path(g, {0, 1, 2})}), 5);
  EXPECT_EQ(bb.vertices, (std::vector<int>{0, 1, 2}));
  EXPECT_EQ(bb.floors, (std::vector<int>{1, 1}));
  EXPECT_EQ(bb.survivors.size(), 1u);
}

TEST(Backbone, InputErrors) {
  const auto h = hourglass(3);
  EXPECT_EQ(kind_of([&] { extract_backbone(h.g, h.family, 0); }), ErrorKind::kBadParameters);
  EXPECT_EQ(kind_of([&] { extract_backbone(h.g, PathSystem{0, 2, {}}, 2); }),
            ErrorKind::kEmptyFamily);
  auto doubled = h.family;
  doubled.paths.push_back(h.family.paths[0]);
  EXPECT_EQ(kind_of([&] { extract_backbone(h.g, doubled, 2); }), ErrorKind::kNotEdgeDisjoint);
}

TEST(Backbone, PlantedChains) {
  // (3, 4, 2): backbone of 4 vertices, floors at least 4.
  const auto inst = gen_planted_backbone(3, 4, 2, 11);
  const auto bb = extract_backbone(inst.graph, inst.system("family"), 4);
  EXPECT_EQ(bb.vertices, inst.backbone);
  EXPECT_EQ(bb.vertices.size(), 4u);
  for (int f : bb.floors) EXPECT_GE(f, 4);
}

TEST(BackboneProperties, SurvivorsAndBounds) {
  Rng rng(8);
  for (int t = 0; t < 60; ++t) {
    const int segments = rng.uniform(1, 4);
    const int width = rng.uniform(1, 8);
    const int len = rng.uniform(1, 4);
    const auto inst = gen_planted_backbone(segments, width, len, rng.next());
    const auto& family = inst.system("family");
    const int tau = rng.uniform(1, width + 2);
    const auto bb = extract_backbone(inst.graph, family, tau);

    ASSERT_EQ(bb.floors.size() + 1, bb.vertices.size());
    for (std::size_t i = 0; i < bb.floors.size(); ++i) {
      EXPECT_EQ(bb.floors[i], kappa_v(inst.graph, bb.vertices[i], bb.vertices[i + 1]).value);
    }
    for (const auto& p : bb.survivors.paths) {
      const auto seq = validate_path(inst.graph, p);
      long last = -1;
      for (int v : bb.vertices) {
        const long at = std::find(seq.begin(), seq.end(), v) - seq.begin();
        ASSERT_LT(at, static_cast<long>(seq.size()));
        EXPECT_GT(at, last);
        last = at;
      }
    }
    double product = 1;
    for (const auto& sep : bb.separators_used) product *= static_cast<double>(sep.vertices.size());
    EXPECT_GE(static_cast<double>(bb.survivors.size()),
              std::ceil(static_cast<double>(family.size()) / product));
    std::size_t longest = 0;
    for (const auto& p : family.paths) longest = std::max(longest, p.length());
    EXPECT_LE(bb.vertices.size() - 1, longest);
  }
}

TEST(Weave, HourglassSegments) {
  const int k = 4;
  const auto h = hourglass(k);
  PathSystem left{0, 1, {}}, right{1, 2, {}};
  for (const auto& p : h.family.paths) {
    left.paths.push_back({0, {p.edges[0], p.edges[1]}});
    right.paths.push_back({1, {p.edges[2], p.edges[3]}});
  }
  const std::vector<int> bb{0, 1, 2};
  const auto all = weave(h.g, bb, {left, right}, k);
  EXPECT_EQ(all.size(), static_cast<std::size_t>(k));
  EXPECT_TRUE(verify_system(h.g, all).ok());
  expect_pairwise_meet_in(h.g, all, bb);

  const auto one = weave(h.g, bb, {left, right}, 1);
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(validate_path(h.g, one.paths[0]).size(), 5u);

  EXPECT_EQ(weave(h.g, bb, {left, right}, k + 3).size(), static_cast<std::size_t>(k));
}

TEST(Weave, RejectsBadFamilies) {
  const auto h = hourglass(2);
  const std::vector<int> bb{0, 1, 2};
  PathSystem left{0, 1, {{0, {h.family.paths[0].edges[0], h.family.paths[0].edges[1]}}}};
  PathSystem right{1, 2, {{1, {h.family.paths[0].edges[2], h.family.paths[0].edges[3]}}}};
  auto twice = left;
  twice.paths.push_back(left.paths[0]);
  EXPECT_EQ(kind_of([&] { weave(h.g, bb, {twice, right}, 1); }), ErrorKind::kBadSegmentFamily);
  EXPECT_EQ(kind_of([&] { weave(h.g, bb, {right, left}, 1); }), ErrorKind::kBadSegmentFamily);
  EXPECT_EQ(kind_of([&] { weave(h.g, bb, {left}, 1); }), ErrorKind::kBadParameters);
}

TEST(WeaveProperties, BeyondTheBoundStaysSound) {
  Rng rng(19);
  for (int t = 0; t < 40; ++t) {
    const int segments = rng.uniform(1, 3);
    const int width = rng.uniform(2, 6);
    const int len = rng.uniform(2, 3);
    const auto inst = gen_weave_scenario(segments, width, len, rng.uniform(0, 2 * width), rng.next());
    std::vector<PathSystem> families;
    for (int s = 0; s < segments; ++s) families.push_back(inst.system("seg" + std::to_string(s)));
    const int r = width;
    const auto out = weave(inst.graph, inst.backbone, families, r);
    EXPECT_LE(out.size(), static_cast<std::size_t>(r));
    EXPECT_GE(out.size(), static_cast<std::size_t>(std::min(r, inst.planted_count)));
    EXPECT_TRUE(verify_system(inst.graph, out).ok());
    expect_pairwise_meet_in(inst.graph, out, inst.backbone);
  }
}

TEST(AuxiliaryGraph, Examples) {
  const auto k4 = fixtures::complete(4);
  EXPECT_EQ(auxiliary_graph(k4, 1).edges.size(), 6u);
  const auto par = fixtures::parallel(3);
  EXPECT_TRUE(auxiliary_graph(par, 3).contains(0, 1));
  EXPECT_TRUE(auxiliary_graph(par, 3).contains(1, 0));
  EXPECT_FALSE(auxiliary_graph(par, 4).contains(0, 1));
  const auto theta = fixtures::theta();
  EXPECT_TRUE(auxiliary_graph(theta, theta.edge_count() + 1).edges.empty());
  EXPECT_EQ(kind_of([&] { auxiliary_graph(theta, 0); }), ErrorKind::kBadParameters);
}

TEST(AuxiliaryGraph, RestrictedAndAgainstOracle) {
  Rng rng(3);
  for (int t = 0; t < 40; ++t) {
    const auto g = gen_random_multigraph(7, 12, 3, rng.next());
    const int theta = rng.uniform(1, 3);
    const auto h = auxiliary_graph(g, theta);
    EXPECT_TRUE(std::is_sorted(h.edges.begin(), h.edges.end()));
    for (int x = 0; x < 7; ++x)
      for (int y = x + 1; y < 7; ++y) EXPECT_EQ(h.contains(x, y), brute_kappa_v(g, x, y) >= theta);
    const auto part = auxiliary_graph(g, theta, std::vector<int>{0, 2, 4});
    for (const auto& [x, y] : part.edges) {
      EXPECT_TRUE(h.contains(x, y));
      EXPECT_TRUE(x % 2 == 0 && y % 2 == 0);
    }
  }
}

TEST(Lift, SinglePairWithoutForbiddenMaterial) {
  // Six a-x_i-b routes.
  MultiGraph g(8);
  for (int i = 0; i < 6; ++i) {
    g.add_edge(0, 2 + i);
    g.add_edge(2 + i, 1);
  }
  const std::vector<int> w{0, 1};
  for (int r = 1; r <= 6; ++r) {
    const auto out = lift(g, w, 6, {}, {}, r);
    EXPECT_EQ(out.size(), static_cast<std::size_t>(r));
    EXPECT_TRUE(verify_system(g, out).ok());
  }
  EXPECT_EQ(kind_of([&] { lift(g, w, 6, {2, 3, 4, 5, 6, 7}, {}, 1); }),
            ErrorKind::kForbiddenTooLarge);
  const auto two = lift(g, w, 6, {2, 3, 4, 5}, {}, 5);
  EXPECT_EQ(two.size(), 2u);
  for (const auto& p : two.paths) {
    const auto seq = validate_path(g, p);
    EXPECT_TRUE(seq[1] == 6 || seq[1] == 7);
  }
  EXPECT_EQ(kind_of([&] { lift(g, w, 7, {}, {}, 1); }), ErrorKind::kPreconditionFailed);
  std::vector<int> every_left;
  for (int i = 0; i < 6; ++i) every_left.push_back(2 * i);
  EXPECT_EQ(kind_of([&] { lift(g, w, 6, {}, every_left, 1); }), ErrorKind::kSegmentBlocked);
}

TEST(LiftProperties, AvoidsForbiddenMaterial) {
  Rng rng(21);
  for (int t = 0; t < 30; ++t) {
    const int theta = rng.uniform(2, 5);
    const auto inst = gen_lift_instance(rng.uniform(1, 3), theta, rng.uniform(1, 3),
                                        rng.uniform(0, 4), rng.next());
    std::vector<int> fv;
    for (int v = 0; v < inst.graph.vertex_count() && static_cast<int>(fv.size()) < theta - 1; ++v) {
      if (std::find(inst.backbone.begin(), inst.backbone.end(), v) == inst.backbone.end() &&
          rng.coin()) {
        fv.push_back(v);
      }
    }
    const std::vector<int> fe{rng.uniform(0, inst.graph.edge_count() - 1)};
    const std::vector<int> fe_used = static_cast<int>(fv.size()) < theta - 1 ? fe : std::vector<int>{};
    const auto out = lift(inst.graph, inst.backbone, theta, fv, fe_used, theta);
    EXPECT_GE(out.size(), 1u);
    EXPECT_TRUE(verify_system(inst.graph, out).ok());
    for (const auto& p : out.paths) {
      for (int e : p.edges) EXPECT_TRUE(std::find(fe_used.begin(), fe_used.end(), e) == fe_used.end());
      for (int v : validate_path(inst.graph, p))
        EXPECT_TRUE(std::find(fv.begin(), fv.end(), v) == fv.end());
    }
  }
}

}  // namespace
