#include <gtest/gtest.h>

#include <algorithm>
#include <functional>

#include "fixtures.hpp"
#include "ocp/compose.hpp"
#include "ocp/gen.hpp"
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

// a=0, b=1, c=2, t=3. P0 = a-4-t-5-b, P1 = a-6-t-7-b, P2 = a-8-b.
// Q_j = b-(9+j)-t-(14+j)-c for j < 5.
struct TwoHitTerminal {
  MultiGraph g{19};
  PathSystem p{0, 1, {}};
  PathSystem q{1, 2, {}};

  TwoHitTerminal() {
    p.paths.push_back(fixtures::path(g_add({0, 4, 3, 5, 1}), {0, 4, 3, 5, 1}));
    p.paths.push_back(fixtures::path(g_add({0, 6, 3, 7, 1}), {0, 6, 3, 7, 1}));
    p.paths.push_back(fixtures::path(g_add({0, 8, 1}), {0, 8, 1}));
    for (int j = 0; j < 5; ++j) {
      const std::vector<int> route{1, 9 + j, 3, 14 + j, 2};
      q.paths.push_back(fixtures::path(g_add(route), route));
    }
  }

  const MultiGraph& g_add(const std::vector<int>& route) {
    for (std::size_t i = 0; i + 1 < route.size(); ++i) g.add_edge(route[i], route[i + 1]);
    return g;
  }
};

bool independently_terminal(const MultiGraph& g, const PathSystem& P, const PathSystem& Q, int v) {
  std::vector<char> on_p(static_cast<std::size_t>(g.vertex_count()), 0);
  for (const auto& p : P.paths)
    for (int x : validate_path(g, p)) on_p[x] = 1;
  if (!on_p[v]) return false;
  for (const auto& q : Q.paths) {
    const auto seq = validate_path(g, q);
    const auto at = std::find(seq.begin(), seq.end(), v);
    if (at == seq.end()) return false;
    for (auto it = at + 1; it != seq.end(); ++it)
      if (on_p[*it]) return false;
  }
  return true;
}

TEST(Terminals, StarAtB) {
  const auto inst = gen_compose_scenario(Scenario::kTerminalRich, 6, 0, 1);
  const auto ts = find_terminals(inst.graph, inst.system("P"), inst.system("Q"));
  ASSERT_EQ(ts.size(), 1u);
  EXPECT_EQ(ts[0].vertex, inst.b);
  EXPECT_EQ(ts[0].hitting_count, 6);
}

TEST(Terminals, CombHasNone) {
  const auto inst = gen_compose_scenario(Scenario::kTerminalFree, 6, 0, 1);
  EXPECT_TRUE(find_terminals(inst.graph, inst.system("P"), inst.system("Q")).empty());
}

TEST(Terminals, EmptyQ) {
  const auto inst = gen_compose_scenario(Scenario::kTerminalRich, 3, 0, 1);
  const PathSystem none{inst.b, *inst.c, {}};
  EXPECT_EQ(kind_of([&] { find_terminals(inst.graph, inst.system("P"), none); }),
            ErrorKind::kEmptyFamily);
  EXPECT_EQ(kind_of([&] { compose_terminal_free(inst.graph, inst.system("P"), none); }),
            ErrorKind::kEmptyFamily);
}

TEST(Terminals, EndpointMismatch) {
  const auto inst = gen_compose_scenario(Scenario::kTerminalRich, 3, 0, 1);
  const auto& P = inst.system("P");
  EXPECT_EQ(kind_of([&] { find_terminals(inst.graph, P, P); }), ErrorKind::kEndpointMismatch);
}

TEST(ViaTerminal, StarAtB) {
  const auto inst = gen_compose_scenario(Scenario::kTerminalRich, 7, 0, 2);
  const auto& P = inst.system("P");
  const auto& Q = inst.system("Q");
  const auto out = compose_via_terminal(inst.graph, P, Q, find_terminals(inst.graph, P, Q).at(0));
  EXPECT_EQ(out.size(), 7u);
  EXPECT_TRUE(verify_system(inst.graph, out).ok());
}

TEST(ViaTerminal, TwoHitTerminal) {
  const TwoHitTerminal t;
  const auto ts = find_terminals(t.g, t.p, t.q);
  ASSERT_EQ(ts.size(), 1u);
  EXPECT_EQ(ts[0].vertex, 3);
  EXPECT_EQ(ts[0].hitting_count, 2);
  const auto out = compose_via_terminal(t.g, t.p, t.q, ts[0]);
  EXPECT_EQ(out.size(), 2u);
  EXPECT_TRUE(verify_system(t.g, out).ok());
  EXPECT_EQ(kind_of([&] { compose_via_terminal(t.g, t.p, t.q, {1, 3, true}); }),
            ErrorKind::kNotATerminal);
}

TEST(TerminalFree, Comb) {
  for (int k : {2, 5, 20}) {
    const auto inst = gen_compose_scenario(Scenario::kTerminalFree, k, 0, 3);
    const auto out = compose_terminal_free(inst.graph, inst.system("P"), inst.system("Q"));
    EXPECT_EQ(out.size(), static_cast<std::size_t>(k));
    EXPECT_TRUE(verify_system(inst.graph, out).ok());
  }
}

TEST(TerminalFree, SharedExitMeansTerminal) {
  const auto inst = gen_compose_scenario(Scenario::kTerminalRich, 4, 0, 3);
  EXPECT_EQ(kind_of([&] {
              compose_terminal_free(inst.graph, inst.system("P"), inst.system("Q"));
            }),
            ErrorKind::kTerminalExists);
}

TEST(Cascade, PlantedLevels) {
  const auto inst = gen_compose_scenario(Scenario::kCascade, 5, 4, 7);
  const auto& P = inst.system("P");
  const auto& Q = inst.system("Q");
  const auto cascade = build_cascade(inst.graph, P, Q, 1, 10);
  ASSERT_EQ(cascade.depth(), 4);
  for (std::size_t n = 0; n < cascade.levels.size(); ++n) {
    EXPECT_EQ(cascade.levels[n].cut, inst.backbone[n]);
    EXPECT_EQ(static_cast<int>(cascade.levels[n].segments.size()), inst.level_widths[n]);
  }
  EXPECT_FALSE(check_cascade(inst.graph, P, Q, cascade));
  const auto lines = cascade_lines(cascade);
  ASSERT_EQ(lines.size(), 5u);
  EXPECT_EQ(lines[0], "level 0 cut " + std::to_string(inst.backbone[0]) + " segs 5");
}

TEST(Cascade, Truncation) {
  const auto inst = gen_compose_scenario(Scenario::kCascade, 3, 4, 2);
  const auto cascade = build_cascade(inst.graph, inst.system("P"), inst.system("Q"), 1, 1);
  EXPECT_EQ(cascade.depth(), 1);
}

TEST(Cascade, CapBelowStarTerminal) {
  const auto inst = gen_compose_scenario(Scenario::kTerminalRich, 4, 0, 5);
  try {
    build_cascade(inst.graph, inst.system("P"), inst.system("Q"), 3, 4);
    FAIL();
  } catch (const NoTerminalAtLevel& e) {
    EXPECT_EQ(e.level(), 0);
    EXPECT_TRUE(e.partial().levels.empty());
  }
}

TEST(Cascade, TamperedCascadeIsRejected) {
  const auto inst = gen_compose_scenario(Scenario::kCascade, 3, 3, 4);
  const auto& P = inst.system("P");
  const auto& Q = inst.system("Q");
  auto cascade = build_cascade(inst.graph, P, Q, 1, 10);
  std::swap(cascade.levels[1].cut, cascade.levels[2].cut);
  EXPECT_TRUE(check_cascade(inst.graph, P, Q, cascade));
  EXPECT_EQ(kind_of([&] { cascade_compose(inst.graph, P, Q, cascade); }),
            ErrorKind::kPreconditionFailed);
}

TEST(CascadeCompose, DepthSixWidthEight) {
  const auto inst = gen_compose_scenario(Scenario::kCascade, 8, 6, 1);
  const auto& P = inst.system("P");
  const auto& Q = inst.system("Q");
  const auto out = cascade_compose(inst.graph, P, Q, build_cascade(inst.graph, P, Q, 1, 10));
  EXPECT_GE(out.size(), 3u);
  EXPECT_TRUE(verify_system(inst.graph, out).ok());
}

TEST(CascadeCompose, DepthOne) {
  const auto inst = gen_compose_scenario(Scenario::kCascade, 4, 1, 1);
  const auto& P = inst.system("P");
  const auto& Q = inst.system("Q");
  const auto out = cascade_compose(inst.graph, P, Q, build_cascade(inst.graph, P, Q, 1, 10));
  EXPECT_EQ(out.size(), 1u);
  EXPECT_TRUE(verify_system(inst.graph, out).ok());
}

TEST(CascadeCompose, WidthOneRunsOutOfFreshPaths) {
  const auto inst = gen_compose_scenario(Scenario::kCascade, 1, 6, 1);
  const auto& P = inst.system("P");
  const auto& Q = inst.system("Q");
  try {
    cascade_compose(inst.graph, P, Q, build_cascade(inst.graph, P, Q, 1, 10));
    FAIL();
  } catch (const LevelExhausted& e) {
    EXPECT_EQ(e.partial().size(), 1u);
    EXPECT_TRUE(verify_system(inst.graph, e.partial()).ok());
  }
}

TEST(Compose, Dispatcher) {
  const auto star = gen_compose_scenario(Scenario::kTerminalRich, 20, 0, 1);
  const auto a = compose(star.graph, star.system("P"), star.system("Q"));
  EXPECT_EQ(a.system.size(), 20u);
  EXPECT_EQ(a.strategy, "terminal");

  const auto comb = gen_compose_scenario(Scenario::kTerminalFree, 20, 0, 1);
  const auto b = compose(comb.graph, comb.system("P"), comb.system("Q"));
  EXPECT_EQ(b.system.size(), 20u);
  EXPECT_EQ(b.strategy, "terminal-free");

  const auto cas = gen_compose_scenario(Scenario::kCascade, 8, 6, 1);
  const auto c = compose(cas.graph, cas.system("P"), cas.system("Q"));
  EXPECT_GE(c.system.size(), 3u);
  EXPECT_TRUE(verify_system(cas.graph, c.system).ok());
}

TEST(Compose, RejectsIncompatibleInput) {
  const TwoHitTerminal t;
  auto bad = t.p;
  bad.paths.push_back(t.p.paths[0]);
  EXPECT_EQ(kind_of([&] { compose(t.g, bad, t.q); }), ErrorKind::kPreconditionFailed);
}

TEST(ComposeProperties, SoundOnEveryScenario) {
  Rng rng(99);
  for (int t = 0; t < 60; ++t) {
    const auto kind = static_cast<Scenario>(t % 3);
    const int size = rng.uniform(1, 10);
    const int depth = rng.uniform(1, 6);
    const auto inst = gen_compose_scenario(kind, size, depth, rng.next());
    const auto& P = inst.system("P");
    const auto& Q = inst.system("Q");
    EXPECT_TRUE(verify_system(inst.graph, P).ok());
    EXPECT_TRUE(verify_system(inst.graph, Q).ok());
    for (const auto& term : find_terminals(inst.graph, P, Q)) {
      EXPECT_TRUE(independently_terminal(inst.graph, P, Q, term.vertex));
    }
    for (int v = 0; v < inst.graph.vertex_count(); ++v) {
      const auto ts = find_terminals(inst.graph, P, Q);
      const bool listed = std::any_of(ts.begin(), ts.end(), [&](auto& r) { return r.vertex == v; });
      EXPECT_EQ(listed, independently_terminal(inst.graph, P, Q, v));
    }
    const auto out = compose(inst.graph, P, Q);
    EXPECT_TRUE(verify_system(inst.graph, out.system).ok());
    EXPECT_GE(out.system.size(), std::max({out.terminal_size, out.terminal_free_size, out.cascade_size}));
    EXPECT_GE(static_cast<int>(out.system.size()), inst.planted_count);
    if (!out.cascade.levels.empty()) EXPECT_FALSE(check_cascade(inst.graph, P, Q, out.cascade));
  }
}

}  // namespace
