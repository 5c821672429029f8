#include "ocp/corpus.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iterator>
#include <numeric>
#include <set>
#include <sstream>

#include "ocp/backbone.hpp"
#include "ocp/compose.hpp"
#include "ocp/connectivity.hpp"
#include "ocp/dirac.hpp"
#include "ocp/gen.hpp"
#include "ocp/oracle.hpp"
#include "ocp/order_compat.hpp"

namespace ocp {

namespace {

// Collects the first failure; later ones only bump the count.
class Tally {
 public:
  void check(bool ok, const std::function<std::string()>& what) {
    ++checks_;
    if (ok) return;
    if (failures_++ == 0) first_ = what();
  }
  void fail_with(const std::string& what) {
    check(false, [&] { return what; });
  }
  bool ok() const { return failures_ == 0; }
  long checks() const { return checks_; }
  std::string summary(const std::string& scope) const {
    std::ostringstream out;
    out << scope << ", " << checks_ << " checks";
    if (failures_ > 0) out << ", " << failures_ << " failed; first: " << first_;
    return out.str();
  }

 private:
  long checks_ = 0;
  long failures_ = 0;
  std::string first_;
};

std::uint64_t stream_seed(std::uint64_t seed, int criterion) {
  return seed * 0x9e3779b97f4a7c15ULL + static_cast<std::uint64_t>(criterion);
}

std::vector<MultiGraph> small_corpus(std::uint64_t seed) {
  Rng rng(stream_seed(seed, 1));
  std::vector<MultiGraph> out;
  for (int i = 0; i < 300; ++i) {
    const int n = rng.uniform(2, 7);
    const int mult = rng.uniform(1, 3);
    const int cap = std::min(12, mult * n * (n - 1) / 2);
    const int m = rng.uniform(0, cap);
    out.push_back(gen_random_multigraph(n, m, mult, rng.next()));
  }
  return out;
}

std::string where(const MultiGraph& g, int a, int b) {
  return "n=" + std::to_string(g.vertex_count()) + " m=" +
         std::to_string(g.edge_count()) + " a=" + std::to_string(a) +
         " b=" + std::to_string(b);
}

// Criterion 1: brute_max_oc = brute_kappa_e = kappa_e.
std::string finite_dirac_equality(std::uint64_t seed, Tally& t) {
  long pairs = 0;
  for (const auto& g : small_corpus(seed)) {
    for (int a = 0; a < g.vertex_count(); ++a) {
      for (int b = a + 1; b < g.vertex_count(); ++b) {
        const int flow = kappa_e(g, a, b).value;
        if (flow == 0) continue;
        ++pairs;
        const int brute = brute_kappa_e(g, a, b);
        const auto oc = brute_max_oc(g, a, b);
        t.check(brute == flow && oc.value == flow, [&] {
          return where(g, a, b) + " flow=" + std::to_string(flow) +
                 " brute=" + std::to_string(brute) + " oc=" + std::to_string(oc.value);
        });
        t.check(oc.witness.size() == static_cast<std::size_t>(oc.value) &&
                    verify_system(g, oc.witness).ok(),
                [&] { return where(g, a, b) + " witness fails verification"; });
      }
    }
  }
  return "300 graphs, " + std::to_string(pairs) + " connected pairs";
}

// Criterion 2: minimal systems are order-compatible.
std::string minimal_systems(std::uint64_t seed, Tally& t) {
  Rng rng(stream_seed(seed, 2));
  struct Case {
    MultiGraph g;
    int a, b, k;
  };
  std::vector<Case> rerun;
  for (int i = 0; i < 1000; ++i) {
    Case cs;
    do {
      const int n = rng.uniform(2, 30);
      const int mult = rng.uniform(1, 3);
      const int cap = std::min(80, mult * n * (n - 1) / 2);
      const int m = rng.uniform(std::min(cap, n), cap);
      cs.g = gen_random_multigraph(n, m, mult, rng.next());
      cs.a = rng.uniform(0, n - 1);
      cs.b = rng.uniform(0, n - 2);
      if (cs.b >= cs.a) ++cs.b;
      cs.k = kappa_e(cs.g, cs.a, cs.b).value;
    } while (cs.k == 0);
    try {
      const auto r = dirac_system(cs.g, cs.a, cs.b, cs.k);
      t.check(r.system.size() == static_cast<std::size_t>(cs.k) &&
                  r.total_edges == r.flow_cost && verify_system(cs.g, r.system).ok(),
              [&] { return where(cs.g, cs.a, cs.b) + " minimal system fails"; });
    } catch (const Error& e) {
      t.fail_with(where(cs.g, cs.a, cs.b) + " " + e.what());
    }
    if (cs.k >= 2 && rerun.size() < 10) rerun.push_back(std::move(cs));
  }
  for (const auto& cs : rerun) {
    const auto base = dirac_system(cs.g, cs.a, cs.b, cs.k).total_edges;
    for (int r = 0; r < 100; ++r) {
      try {
        const auto res = dirac_system(cs.g, cs.a, cs.b, cs.k, FlowOptions{rng.next()});
        t.check(res.total_edges == base && verify_system(cs.g, res.system).ok(), [&] {
          return where(cs.g, cs.a, cs.b) + " seeded rerun fails";
        });
      } catch (const Error& e) {
        t.fail_with(where(cs.g, cs.a, cs.b) + " seeded rerun: " + e.what());
      }
    }
  }
  return "1000 instances + " + std::to_string(rerun.size()) + "x100 seeded reruns";
}

// Criterion 3: guarded concatenation.
std::string concatenation_suite(std::uint64_t seed, Tally& t) {
  Rng rng(stream_seed(seed, 3));
  for (int i = 0; i < 1000; ++i) {
    const auto q = gen_quadruple(std::nullopt, rng.next());
    try {
      const auto out = concatenate_pair(q.graph, q.prefix_u, q.prefix_v, q.suffix_u,
                                        q.suffix_v);
      const int c = end_vertex(q.graph, q.suffix_u);
      const PathSystem pair{q.prefix_u.start, c, {out.first, out.second}};
      t.check(!(out.first == out.second) && verify_system(q.graph, pair).ok(),
              [&] { return "satisfying quadruple " + std::to_string(i) + " fails"; });
    } catch (const Error& e) {
      t.fail_with("satisfying quadruple " + std::to_string(i) + ": " + e.what());
    }
  }
  constexpr Hypothesis kAll[] = {
      Hypothesis::kPrefixesCompatible, Hypothesis::kSuffixesCompatible,
      Hypothesis::kIntersectionAtU,    Hypothesis::kIntersectionAtV,
      Hypothesis::kCrossAtU,           Hypothesis::kCrossAtV};
  for (int i = 0; i < 200; ++i) {
    const Hypothesis h = kAll[i % 6];
    const auto q = gen_quadruple(h, rng.next());
    const std::string label =
        "violated quadruple " + std::to_string(i) + " (" + std::string(hypothesis_name(h)) + ")";
    try {
      concatenate_pair(q.graph, q.prefix_u, q.prefix_v, q.suffix_u, q.suffix_v);
      t.fail_with(label + " was accepted");
    } catch (const HypothesisViolated& e) {
      t.check(e.hypothesis() == h, [&] {
        return label + " reported " + std::string(hypothesis_name(e.hypothesis()));
      });
    } catch (const Error& e) {
      t.fail_with(label + ": " + e.what());
    }
  }
  return "1000 satisfying + 200 violated quadruples";
}

// Criterion 4: planted backbones are recovered.
std::string backbone_recovery(std::uint64_t seed, Tally& t) {
  Rng rng(stream_seed(seed, 4));
  for (int i = 0; i < 100; ++i) {
    const int segments = rng.uniform(1, 5);
    const int width = rng.uniform(2, 20);
    const int len = rng.uniform(1, 4);
    const auto inst = gen_planted_backbone(segments, width, len, rng.next());
    const auto& g = inst.graph;
    const auto& family = inst.system("family");
    const std::string label = "instance " + std::to_string(i) + " (" +
                              std::to_string(segments) + "," + std::to_string(width) +
                              "," + std::to_string(len) + ")";
    try {
      const auto bb = extract_backbone(g, family, width);
      t.check(bb.vertices == inst.backbone, [&] { return label + " wrong backbone"; });
      bool floors_ok = bb.floors.size() + 1 == bb.vertices.size();
      for (std::size_t s = 0; floors_ok && s < bb.floors.size(); ++s) {
        const int fresh = kappa_v(g, bb.vertices[s], bb.vertices[s + 1]).value;
        floors_ok = bb.floors[s] == fresh && fresh >= width;
      }
      t.check(floors_ok, [&] { return label + " floor below planted width"; });
      double product = 1;
      for (const auto& sep : bb.separators_used) product *= static_cast<double>(sep.vertices.size());
      const double bound = std::ceil(static_cast<double>(family.size()) / product);
      t.check(static_cast<double>(bb.survivors.size()) >= bound,
              [&] { return label + " pigeonhole bound fails"; });
      std::size_t longest = 0;
      for (const auto& p : family.paths) longest = std::max(longest, p.length());
      t.check(bb.vertices.size() - 1 <= longest,
              [&] { return label + " backbone longer than the family's paths"; });
    } catch (const Error& e) {
      t.fail_with(label + ": " + e.what());
    }
  }
  return "100 planted backbones";
}

bool meet_exactly_in(const MultiGraph& g, const PathSystem& s,
                     const std::vector<int>& expected) {
  std::vector<std::set<int>> sets;
  for (const auto& p : s.paths) {
    const auto seq = validate_path(g, p);
    sets.emplace_back(seq.begin(), seq.end());
  }
  const std::set<int> want(expected.begin(), expected.end());
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::size_t j = i + 1; j < sets.size(); ++j) {
      std::set<int> both;
      std::set_intersection(sets[i].begin(), sets[i].end(), sets[j].begin(),
                            sets[j].end(), std::inserter(both, both.end()));
      if (both != want) return false;
    }
  }
  return true;
}

// Criterion 5: weave sufficiency.
std::string weave_sufficiency(std::uint64_t seed, Tally& t) {
  Rng rng(stream_seed(seed, 5));
  for (int i = 0; i < 100; ++i) {
    const int segments = rng.uniform(1, 4);
    const int len = rng.uniform(1, 3);
    const int r = rng.uniform(1, 3);
    const int width = r * segments * len + 1 + rng.uniform(0, 3);
    const int merges = rng.uniform(0, width);
    const auto inst = gen_weave_scenario(segments, width, len, merges, rng.next());
    std::vector<PathSystem> families;
    for (int s = 0; s < segments; ++s) families.push_back(inst.system("seg" + std::to_string(s)));
    const std::string label = "configuration " + std::to_string(i);
    try {
      const auto out = weave(inst.graph, inst.backbone, families, r);
      t.check(static_cast<int>(out.size()) == r, [&] {
        return label + " returned " + std::to_string(out.size()) + " of " + std::to_string(r);
      });
      t.check(meet_exactly_in(inst.graph, out, inst.backbone),
              [&] { return label + " paths meet outside the backbone"; });
    } catch (const Error& e) {
      t.fail_with(label + ": " + e.what());
    }
  }
  return "100 configurations";
}

// Criterion 6: compose soundness and planted recovery.
std::string compose_recovery(std::uint64_t seed, Tally& t) {
  Rng rng(stream_seed(seed, 6));
  int runs = 0;
  const auto run = [&](Scenario kind, int size, int depth, std::size_t want,
                       const std::string& label) {
    ++runs;
    try {
      const auto inst = gen_compose_scenario(kind, size, depth, rng.next());
      const auto out = compose(inst.graph, inst.system("P"), inst.system("Q"));
      t.check(out.system.size() >= want && verify_system(inst.graph, out.system).ok(), [&] {
        return label + " gave " + std::to_string(out.system.size()) + ", wanted " +
               std::to_string(want);
      });
      if (kind != Scenario::kCascade) {
        t.check(out.system.size() == want, [&] { return label + " size differs"; });
      }
    } catch (const Error& e) {
      t.fail_with(label + ": " + e.what());
    }
  };
  for (Scenario kind : {Scenario::kTerminalRich, Scenario::kTerminalFree}) {
    const std::string name(scenario_name(kind));
    for (int i = 0; i < 25; ++i) {
      const int k = i == 0 ? 50 : rng.uniform(1, 50);
      run(kind, k, 0, static_cast<std::size_t>(k), name + " k=" + std::to_string(k));
    }
  }
  for (int depth = 1; depth <= 6; ++depth) {
    for (int width = std::max(1, depth / 2); width <= 8; ++width) {
      run(Scenario::kCascade, width, depth, static_cast<std::size_t>(depth / 2),
          "cascade depth=" + std::to_string(depth) + " width=" + std::to_string(width));
    }
  }
  return std::to_string(runs) + " planted scenarios";
}

bool separates(const MultiGraph& g, int a, int b, const std::vector<int>& cut) {
  std::vector<char> seen(static_cast<std::size_t>(g.vertex_count()), 0);
  for (int v : cut) seen[v] = 1;
  std::vector<int> stack{a};
  seen[a] = 1;
  while (!stack.empty()) {
    const int x = stack.back();
    stack.pop_back();
    if (x == b) return false;
    for (int id : g.incident(x)) {
      const int y = g.other_end(id, x);
      if (!seen[y]) {
        seen[y] = 1;
        stack.push_back(y);
      }
    }
  }
  return true;
}

// Criterion 7: connectivity cross-checks.
std::string connectivity_checks(std::uint64_t seed, Tally& t) {
  Rng rng(stream_seed(seed, 7));
  long pairs = 0;
  for (const auto& g : small_corpus(seed)) {
    const int n = g.vertex_count();
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) {
        ++pairs;
        const int kv = kappa_v(g, a, b).value;
        const int ke = kappa_e(g, a, b).value;
        t.check(kv <= ke, [&] { return where(g, a, b) + " kappa_v exceeds kappa_e"; });
        t.check(kv == brute_kappa_v(g, a, b),
                [&] { return where(g, a, b) + " kappa_v differs from brute force"; });
        if (!g.adjacent(a, b)) {
          const auto sep = min_internal_separator(g, a, b);
          t.check(static_cast<int>(sep.vertices.size()) == kv &&
                      separates(g, a, b, sep.vertices),
                  [&] { return where(g, a, b) + " separator is wrong"; });
        }
      }
    }
    const int theta = rng.uniform(1, 3);
    const auto h = auxiliary_graph(g, theta);
    for (int i = 0; i < 20; ++i) {
      const int x = rng.uniform(0, n - 1);
      int y = rng.uniform(0, n - 2);
      if (y >= x) ++y;
      t.check(h.contains(x, y) == (brute_kappa_v(g, x, y) >= theta),
              [&] { return where(g, x, y) + " auxiliary edge disagrees"; });
    }
  }
  return "300 graphs, " + std::to_string(pairs) + " pairs";
}

// Criterion 8: lift avoids forbidden material.
std::string lift_avoidance(std::uint64_t seed, Tally& t) {
  Rng rng(stream_seed(seed, 8));
  long produced = 0;
  for (int i = 0; i < 50; ++i) {
    const int segments = rng.uniform(1, 3);
    const int theta = rng.uniform(2, 6);
    const int len = rng.uniform(1, 3);
    const auto inst = gen_lift_instance(segments, theta, len, rng.uniform(0, 5), rng.next());
    const auto& g = inst.graph;

    std::vector<int> pool;
    for (int v = 0; v < g.vertex_count(); ++v) {
      if (std::find(inst.backbone.begin(), inst.backbone.end(), v) == inst.backbone.end()) {
        pool.push_back(v);
      }
    }
    std::vector<int> edges(static_cast<std::size_t>(g.edge_count()));
    std::iota(edges.begin(), edges.end(), 0);
    rng.shuffle(pool);
    rng.shuffle(edges);
    const int budget = rng.uniform(0, theta - 1);
    const int nv = std::min(rng.uniform(0, budget), static_cast<int>(pool.size()));
    const int ne = std::min(budget - nv, static_cast<int>(edges.size()));
    const std::vector<int> fv(pool.begin(), pool.begin() + nv);
    const std::vector<int> fe(edges.begin(), edges.begin() + ne);
    const int r = rng.uniform(1, theta);
    const std::string label = "instance " + std::to_string(i);
    try {
      const auto out = lift(g, inst.backbone, theta, fv, fe, r);
      produced += static_cast<long>(out.size());
      bool clean = true;
      for (const auto& p : out.paths) {
        for (int e : p.edges) clean &= std::find(fe.begin(), fe.end(), e) == fe.end();
        for (int v : validate_path(g, p)) clean &= std::find(fv.begin(), fv.end(), v) == fv.end();
      }
      t.check(clean, [&] { return label + " touches forbidden material"; });
      t.check(verify_system(g, out).ok() && out.source == inst.a && out.sink == inst.b,
              [&] { return label + " fails verification"; });
    } catch (const Error& e) {
      t.fail_with(label + ": " + e.what());
    }
  }
  return "50 instances, " + std::to_string(produced) + " lifted paths";
}

struct Spec {
  const char* name;
  double budget;
  std::string (*body)(std::uint64_t, Tally&);
};

constexpr Spec kCriteria[] = {
    {"finite-dirac-equality", 120, finite_dirac_equality},
    {"minimal-systems-order-compatible", 60, minimal_systems},
    {"guarded-concatenation", 0, concatenation_suite},
    {"backbone-recovery", 60, backbone_recovery},
    {"weave-sufficiency", 0, weave_sufficiency},
    {"compose-recovery", 120, compose_recovery},
    {"connectivity-cross-checks", 0, connectivity_checks},
    {"lift-avoidance", 0, lift_avoidance},
};

}  // namespace

int criterion_count() { return static_cast<int>(std::size(kCriteria)); }

CriterionResult run_criterion(int id, std::uint64_t seed) {
  if (id < 1 || id > criterion_count()) {
    fail(ErrorKind::kBadParameters, "criterion must be between 1 and " +
                                        std::to_string(criterion_count()));
  }
  const Spec& spec = kCriteria[id - 1];
  CriterionResult result;
  result.id = id;
  result.name = spec.name;
  result.budget_seconds = spec.budget;
  Tally tally;
  const auto start = std::chrono::steady_clock::now();
  std::string scope;
  try {
    scope = spec.body(seed, tally);
  } catch (const std::exception& e) {
    tally.fail_with(std::string("aborted: ") + e.what());
  }
  result.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  result.passed = tally.ok() && tally.checks() > 0;
  result.detail = tally.summary(scope);
  if (spec.budget > 0 && result.seconds > spec.budget) {
    result.passed = false;
    result.detail += ", over the time budget";
  }
  return result;
}

std::vector<CriterionResult> run_acceptance(std::uint64_t seed) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= criterion_count(); ++id) out.push_back(run_criterion(id, seed));
  return out;
}

std::string criterion_line(const CriterionResult& r) {
  char timing[64];
  if (r.budget_seconds > 0) {
    std::snprintf(timing, sizeof timing, "(%.2fs of %.0fs)", r.seconds, r.budget_seconds);
  } else {
    std::snprintf(timing, sizeof timing, "(%.2fs)", r.seconds);
  }
  return std::string(r.passed ? "PASS " : "FAIL ") + std::to_string(r.id) + " " + r.name +
         " " + timing + " " + r.detail;
}

std::string corpus_table(const std::vector<CriterionResult>& results) {
  std::string out;
  int passed = 0;
  for (const auto& r : results) {
    out += criterion_line(r) + "\n";
    passed += r.passed ? 1 : 0;
  }
  out += std::to_string(passed) + "/" + std::to_string(results.size()) + " criteria passed\n";
  return out;
}

}  // namespace ocp
