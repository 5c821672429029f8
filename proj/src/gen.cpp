#include "ocp/gen.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "ocp/backbone.hpp"
#include "ocp/compose.hpp"
#include "ocp/connectivity.hpp"
#include "ocp/order_compat.hpp"

namespace ocp {

Rng::Rng(std::uint64_t seed) : engine_(seed) {}

std::uint64_t Rng::next() { return engine_(); }

std::uint64_t Rng::below(std::uint64_t bound) {
  // Rejection sampling keeps the draw exactly uniform.
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  std::uint64_t x;
  do {
    x = next();
  } while (x >= limit);
  return x % bound;
}

int Rng::uniform(int lo, int hi) {
  return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

const PathSystem& PlantedInstance::system(std::string_view name) const {
  for (const auto& [key, s] : systems) {
    if (key == name) return s;
  }
  fail(ErrorKind::kBadParameters, "instance has no system named " + std::string(name));
}

std::string meta_text(const PlantedInstance& inst) {
  std::ostringstream out;
  const auto list = [&](const char* key, const std::vector<int>& values) {
    if (values.empty()) return;
    out << "meta " << key;
    for (int v : values) out << ' ' << v;
    out << '\n';
  };
  out << "meta kind " << inst.kind << '\n';
  out << "meta a " << inst.a << '\n';
  out << "meta b " << inst.b << '\n';
  if (inst.c) out << "meta c " << *inst.c << '\n';
  out << "meta planted_count " << inst.planted_count << '\n';
  list("backbone", inst.backbone);
  list("level_widths", inst.level_widths);
  if (!inst.systems.empty()) {
    out << "meta systems";
    for (const auto& [name, s] : inst.systems) out << ' ' << name;
    out << '\n';
  }
  return out.str();
}

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) fail(ErrorKind::kBadParameters, message);
}

void recheck(bool ok, const std::string& message) {
  if (!ok) fail(ErrorKind::kInternal, "planted structure does not re-verify: " + message);
}

// Collects logical vertices, edges and paths, then emits them with shuffled
// vertex labels and edge ids. Vertices can be identified before emission.
class Builder {
 public:
  int vertex() {
    parent_.push_back(static_cast<int>(parent_.size()));
    return parent_.back();
  }
  int vertex_count() const { return static_cast<int>(parent_.size()); }
  std::vector<int> vertices(int count) {
    std::vector<int> out;
    for (int i = 0; i < count; ++i) out.push_back(vertex());
    return out;
  }

  // A path over edges that already exist, e.g. to plant a shared edge.
  int path_over(int start, std::vector<int> edges) {
    paths_.push_back({start, std::move(edges)});
    return static_cast<int>(paths_.size()) - 1;
  }
  const std::vector<int>& path_edges(int handle) const { return paths_[handle].edges; }

  int edge(int u, int v) {
    edges_.emplace_back(u, v);
    return static_cast<int>(edges_.size()) - 1;
  }

  // Adds a fresh edge between each consecutive pair; returns a path handle.
  int path(const std::vector<int>& seq) {
    Logical p{seq.front(), {}};
    for (std::size_t i = 0; i + 1 < seq.size(); ++i) p.edges.push_back(edge(seq[i], seq[i + 1]));
    paths_.push_back(std::move(p));
    return static_cast<int>(paths_.size()) - 1;
  }

  // Joins already recorded paths into one new handle.
  int join(const std::vector<int>& handles) {
    Logical p{paths_[handles.front()].start, {}};
    for (int h : handles) {
      p.edges.insert(p.edges.end(), paths_[h].edges.begin(), paths_[h].edges.end());
    }
    paths_.push_back(std::move(p));
    return static_cast<int>(paths_.size()) - 1;
  }

  void merge(int x, int y) { parent_[find(x)] = find(y); }
  int find(int v) {
    while (parent_[v] != v) v = parent_[v] = parent_[parent_[v]];
    return v;
  }

  void emit(Rng& rng) {
    std::vector<int> reps;
    for (int v = 0; v < static_cast<int>(parent_.size()); ++v) {
      if (find(v) == v) reps.push_back(v);
    }
    std::vector<int> labels(reps.size());
    std::iota(labels.begin(), labels.end(), 0);
    rng.shuffle(labels);
    label_.assign(parent_.size(), -1);
    for (std::size_t i = 0; i < reps.size(); ++i) label_[reps[i]] = labels[i];

    std::vector<int> order(edges_.size());
    std::iota(order.begin(), order.end(), 0);
    rng.shuffle(order);
    graph_ = MultiGraph(static_cast<int>(reps.size()));
    edge_id_.assign(edges_.size(), -1);
    for (int logical : order) {
      const auto [u, v] = edges_[logical];
      edge_id_[logical] = graph_.add_edge(label(u), label(v));
    }
  }

  int label(int v) { return label_[find(v)]; }
  const MultiGraph& graph() const { return graph_; }

  OrientedPath oriented(int handle) {
    OrientedPath p{label(paths_[handle].start), {}};
    for (int e : paths_[handle].edges) p.edges.push_back(edge_id_[e]);
    return p;
  }
  PathSystem system(int source, int sink, const std::vector<int>& handles) {
    PathSystem s{label(source), label(sink), {}};
    for (int h : handles) s.paths.push_back(oriented(h));
    return s;
  }

 private:
  struct Logical {
    int start;
    std::vector<int> edges;
  };
  std::vector<int> parent_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<Logical> paths_;
  std::vector<int> label_;
  std::vector<int> edge_id_;
  MultiGraph graph_;
};

std::vector<int> chain(int from, const std::vector<int>& middle, int to) {
  std::vector<int> seq{from};
  seq.insert(seq.end(), middle.begin(), middle.end());
  seq.push_back(to);
  return seq;
}

// Logical layout shared by the backbone-style generators.
struct Ladder {
  std::vector<int> t;
  std::vector<std::vector<int>> members;                // handles per segment
  std::vector<std::vector<std::vector<int>>> interior;  // vertices per member
};

Ladder build_ladder(Builder& b, int segments, int width, int seg_length) {
  Ladder l;
  l.t = b.vertices(segments + 1);
  l.members.resize(segments);
  l.interior.resize(segments);
  for (int i = 0; i < segments; ++i) {
    for (int j = 0; j < width; ++j) {
      auto inner = b.vertices(seg_length - 1);
      l.members[i].push_back(b.path(chain(l.t[i], inner, l.t[i + 1])));
      l.interior[i].push_back(std::move(inner));
    }
  }
  return l;
}

void check_ladder_args(int segments, int width, int seg_length) {
  require(segments >= 1, "segments must be at least 1");
  require(width >= 1, "width must be at least 1");
  require(seg_length >= 1, "seg_length must be at least 1");
}

PlantedInstance ladder_instance(Builder& b, const Ladder& l, const char* kind,
                                int width) {
  PlantedInstance inst;
  inst.graph = b.graph();
  inst.kind = kind;
  inst.a = b.label(l.t.front());
  inst.b = b.label(l.t.back());
  for (int t : l.t) inst.backbone.push_back(b.label(t));
  inst.planted_count = width;
  for (std::size_t i = 0; i < l.members.size(); ++i) {
    inst.systems.emplace_back("seg" + std::to_string(i),
                              b.system(l.t[i], l.t[i + 1], l.members[i]));
  }
  return inst;
}

}  // namespace

MultiGraph gen_random_multigraph(int n, int m, int max_multiplicity,
                                 std::uint64_t seed) {
  require(n >= 2, "n must be at least 2");
  require(m >= 0, "m must be nonnegative");
  require(max_multiplicity >= 1, "multiplicity cap must be at least 1");
  const long pairs = static_cast<long>(n) * (n - 1) / 2;
  require(static_cast<long>(m) <= pairs * max_multiplicity,
          "m exceeds the multiplicity cap");
  Rng rng(seed);
  MultiGraph g(n);
  std::map<std::pair<int, int>, int> count;
  while (g.edge_count() < m) {
    int u = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
    int v = static_cast<int>(rng.below(static_cast<std::uint64_t>(n - 1)));
    if (v >= u) ++v;
    int& c = count[{std::min(u, v), std::max(u, v)}];
    if (c == max_multiplicity) continue;
    ++c;
    g.add_edge(u, v);
  }
  return g;
}

PlantedInstance gen_planted_backbone(int segments, int width, int seg_length,
                                     std::uint64_t seed) {
  check_ladder_args(segments, width, seg_length);
  Rng rng(seed);
  Builder b;
  const Ladder l = build_ladder(b, segments, width, seg_length);
  // Member j of the family takes a random member of every segment.
  std::vector<std::vector<int>> picks(segments);
  for (int i = 0; i < segments; ++i) {
    picks[i] = l.members[i];
    rng.shuffle(picks[i]);
  }
  std::vector<int> family;
  for (int j = 0; j < width; ++j) {
    std::vector<int> parts;
    for (int i = 0; i < segments; ++i) parts.push_back(picks[i][j]);
    family.push_back(b.join(parts));
  }
  b.emit(rng);

  PlantedInstance inst = ladder_instance(b, l, "backbone", width);
  inst.systems.insert(inst.systems.begin(),
                      {"family", b.system(l.t.front(), l.t.back(), family)});
  recheck(verify_system(inst.graph, inst.system("family")).ok(), "family");
  for (int i = 0; i < segments; ++i) {
    recheck(kappa_v(inst.graph, inst.backbone[i], inst.backbone[i + 1]).value >= width,
            "segment connectivity");
  }
  return inst;
}

PlantedInstance gen_weave_scenario(int segments, int width, int seg_length,
                                   int merges, std::uint64_t seed) {
  check_ladder_args(segments, width, seg_length);
  require(merges >= 0, "merges must be nonnegative");
  Rng rng(seed);
  Builder b;
  const Ladder l = build_ladder(b, segments, width, seg_length);

  std::vector<char> merged(static_cast<std::size_t>(b.vertex_count()), 0);
  std::map<std::pair<int, int>, bool> anchor_used;  // (t index, segment)
  if (seg_length >= 2) {
    const auto pick_inner = [&](int seg) {
      const auto& member = l.interior[seg][rng.below(static_cast<std::uint64_t>(width))];
      return member[rng.below(member.size())];
    };
    for (int step = 0; step < merges; ++step) {
      const int i = static_cast<int>(rng.below(static_cast<std::uint64_t>(segments)));
      const int x = pick_inner(i);
      if (merged[x]) continue;
      if (segments >= 3 && rng.below(4) == 0) {
        const int j = static_cast<int>(rng.below(static_cast<std::uint64_t>(segments + 1)));
        if (j == i || j == i + 1 || anchor_used[{j, i}]) continue;
        anchor_used[{j, i}] = true;
        merged[x] = 1;
        b.merge(x, l.t[j]);
      } else if (segments >= 2) {
        int i2 = static_cast<int>(rng.below(static_cast<std::uint64_t>(segments - 1)));
        if (i2 >= i) ++i2;
        const int y = pick_inner(i2);
        if (merged[y]) continue;
        merged[x] = merged[y] = 1;
        b.merge(x, y);
      }
    }
  }
  b.emit(rng);

  PlantedInstance inst = ladder_instance(b, l, "weave", width);
  inst.planted_count = (width - 1) / (segments * seg_length);
  std::vector<PathSystem> families;
  for (int i = 0; i < segments; ++i) {
    families.push_back(inst.system("seg" + std::to_string(i)));
  }
  if (inst.planted_count > 0) {
    recheck(static_cast<int>(weave(inst.graph, inst.backbone, families, inst.planted_count)
                                 .size()) == inst.planted_count,
            "segment families");
  }
  return inst;
}

PlantedInstance gen_lift_instance(int segments, int width, int seg_length,
                                  int noise, std::uint64_t seed) {
  check_ladder_args(segments, width, seg_length);
  require(noise >= 0, "noise must be nonnegative");
  Rng rng(seed);
  Builder b;
  const Ladder l = build_ladder(b, segments, width, seg_length);
  const int n = b.vertex_count();
  for (int k = 0; k < noise; ++k) {
    const int u = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
    int v = static_cast<int>(rng.below(static_cast<std::uint64_t>(n - 1)));
    if (v >= u) ++v;
    b.edge(u, v);
  }
  b.emit(rng);

  PlantedInstance inst = ladder_instance(b, l, "lift", width);
  for (int i = 0; i < segments; ++i) {
    recheck(kappa_v(inst.graph, inst.backbone[i], inst.backbone[i + 1]).value >= width,
            "segment connectivity");
  }
  return inst;
}

// --- Compose scenarios ------------------------------------------------------

std::optional<Scenario> parse_scenario(std::string_view name) {
  if (name == "terminal_rich") return Scenario::kTerminalRich;
  if (name == "terminal_free") return Scenario::kTerminalFree;
  if (name == "cascade") return Scenario::kCascade;
  return std::nullopt;
}

std::string_view scenario_name(Scenario s) {
  switch (s) {
    case Scenario::kTerminalRich: return "terminal_rich";
    case Scenario::kTerminalFree: return "terminal_free";
    case Scenario::kCascade: return "cascade";
  }
  return "unknown";
}

PlantedInstance gen_compose_scenario(Scenario kind, int size, int depth,
                                     std::uint64_t seed) {
  require(size >= 1, "size must be at least 1");
  if (kind == Scenario::kCascade) require(depth >= 1, "depth must be at least 1");
  Rng rng(seed);
  Builder bld;
  const int a = bld.vertex();
  const int b = bld.vertex();
  const int c = bld.vertex();
  const auto fresh = [&](int lo, int hi) { return bld.vertices(rng.uniform(lo, hi)); };
  std::vector<int> p_handles, q_handles;
  std::vector<int> cuts;

  switch (kind) {
    case Scenario::kTerminalRich:
      for (int i = 0; i < size; ++i) p_handles.push_back(bld.path(chain(a, fresh(1, 3), b)));
      for (int i = 0; i < size; ++i) q_handles.push_back(bld.path(chain(b, fresh(1, 3), c)));
      break;
    case Scenario::kTerminalFree:
      for (int i = 0; i < size; ++i) {
        const int v = bld.vertex();
        auto p = chain(a, fresh(1, 2), v);
        const auto p_tail = fresh(1, 2);
        p.insert(p.end(), p_tail.begin(), p_tail.end());
        p.push_back(b);
        auto q = chain(b, fresh(1, 2), v);
        const auto q_tail = fresh(1, 2);
        q.insert(q.end(), q_tail.begin(), q_tail.end());
        q.push_back(c);
        p_handles.push_back(bld.path(p));
        q_handles.push_back(bld.path(q));
      }
      break;
    case Scenario::kCascade: {
      cuts = bld.vertices(depth + 1);
      // inner[n][j]: interior of Q_j between w_n and w_{n-1} (c for n = 0).
      std::vector<std::vector<std::vector<int>>> inner(depth + 1);
      for (int j = 0; j < size; ++j) {
        std::vector<int> q{b};
        const auto lead = fresh(1, 2);
        q.insert(q.end(), lead.begin(), lead.end());
        for (int n = depth; n >= 0; --n) {
          q.push_back(cuts[n]);
          inner[n].push_back(fresh(1, 2));
          q.insert(q.end(), inner[n][j].begin(), inner[n][j].end());
        }
        q.push_back(c);
        q_handles.push_back(bld.path(q));
      }
      for (int k = 0; k <= depth; ++k) {
        auto p = chain(a, fresh(1, 2), cuts[k]);
        if (k < depth && rng.coin()) {
          // Enter the next level's segment first, then reach w_k.
          const auto& seg = inner[k + 1][(k / 2) % size];
          const int entry = seg[rng.below(seg.size())];
          p.pop_back();
          p.push_back(entry);
          const auto hop = fresh(1, 1);
          p.insert(p.end(), hop.begin(), hop.end());
          p.push_back(cuts[k]);
        }
        const auto tail = fresh(1, 2);
        p.insert(p.end(), tail.begin(), tail.end());
        p.push_back(b);
        p_handles.push_back(bld.path(p));
      }
      break;
    }
  }
  bld.emit(rng);

  PlantedInstance inst;
  inst.graph = bld.graph();
  inst.kind = std::string(scenario_name(kind));
  inst.a = bld.label(a);
  inst.b = bld.label(b);
  inst.c = bld.label(c);
  inst.systems.emplace_back("P", bld.system(a, b, p_handles));
  inst.systems.emplace_back("Q", bld.system(b, c, q_handles));
  const auto& g = inst.graph;
  const auto& P = inst.system("P");
  const auto& Q = inst.system("Q");
  recheck(verify_system(g, P).ok() && verify_system(g, Q).ok(), "P and Q verify");

  switch (kind) {
    case Scenario::kTerminalRich: {
      inst.planted_count = size;
      const auto terminals = find_terminals(g, P, Q);
      recheck(terminals.size() == 1 && terminals.front().vertex == inst.b &&
                  terminals.front().hitting_count == size,
              "terminal at b");
      break;
    }
    case Scenario::kTerminalFree: {
      inst.planted_count = size;
      if (size >= 2) {
        recheck(find_terminals(g, P, Q).empty(), "no terminal");
        recheck(static_cast<int>(compose_terminal_free(g, P, Q).size()) == size,
                "distinct exit vertices on distinct carriers");
      }
      break;
    }
    case Scenario::kCascade: {
      inst.planted_count = std::min((depth + 1) / 2, size);
      for (int w : cuts) inst.backbone.push_back(bld.label(w));
      inst.level_widths.assign(static_cast<std::size_t>(depth + 1), size);
      const int cap = static_cast<int>((P.size() + 1) / 2);
      const Cascade cascade = build_cascade(g, P, Q, cap, depth);
      bool faithful = cascade.depth() == depth;
      for (int n = 0; faithful && n <= depth; ++n) {
        faithful = cascade.levels[n].cut == inst.backbone[n] &&
                   static_cast<int>(cascade.levels[n].segments.size()) == size;
      }
      recheck(faithful, "cascade levels");
      break;
    }
  }
  return inst;
}

// --- Concatenation quadruples ----------------------------------------------

Quadruple gen_quadruple(std::optional<Hypothesis> violate, std::uint64_t seed) {
  Rng rng(seed);
  Builder bld;
  const int a = bld.vertex();
  const int c = bld.vertex();
  const int u = bld.vertex();
  const bool same_end = rng.below(8) == 0;
  const int v = same_end ? u : bld.vertex();

  const bool edge_clash = violate == Hypothesis::kPrefixesCompatible ||
                          violate == Hypothesis::kSuffixesCompatible;
  const bool swap = edge_clash && rng.coin();
  const bool on_prefix = violate == Hypothesis::kPrefixesCompatible;
  const bool on_suffix = violate == Hypothesis::kSuffixesCompatible;

  // Vertices both prefixes (resp. both suffixes) pass through, in order.
  const int min_shared = swap ? 2 : (edge_clash ? 1 : 0);
  const auto shared_pre = bld.vertices(on_prefix ? std::max(min_shared, rng.uniform(0, 3))
                                                 : rng.uniform(0, 3));
  const auto shared_suf = bld.vertices(on_suffix ? std::max(min_shared, rng.uniform(0, 3))
                                                 : rng.uniform(0, 3));

  // One end of each pair may sit on the other pair's suffix, right after
  // its start.
  const int mode = same_end ? 0 : static_cast<int>(rng.below(3));

  const auto weave_in = [&](int from, const std::vector<int>& stops, int to,
                            bool tight_first, bool tight_last) {
    std::vector<int> seq{from};
    for (std::size_t i = 0; i < stops.size(); ++i) {
      if (!(tight_first && i == 0)) {
        const auto priv = bld.vertices(rng.uniform(0, 1));
        seq.insert(seq.end(), priv.begin(), priv.end());
      }
      seq.push_back(stops[i]);
    }
    if (!tight_last) {
      const auto priv = bld.vertices(rng.uniform(0, 1));
      seq.insert(seq.end(), priv.begin(), priv.end());
    }
    seq.push_back(to);
    return seq;
  };

  const bool share_pre_edge = on_prefix && !swap;
  const bool share_suf_edge = on_suffix && !swap;
  auto pu = weave_in(a, shared_pre, u, share_pre_edge, false);
  auto pv_stops = shared_pre;
  if (on_prefix && swap) std::swap(pv_stops[0], pv_stops[1]);
  auto pv = weave_in(a, pv_stops, v, share_pre_edge, false);

  std::vector<int> qu_stops, qv_stops;
  if (mode == 1) qu_stops.push_back(v);
  if (mode == 2) qv_stops.push_back(u);
  qu_stops.insert(qu_stops.end(), shared_suf.begin(), shared_suf.end());
  qv_stops.insert(qv_stops.end(), shared_suf.begin(), shared_suf.end());
  if (on_suffix && swap) {
    const std::size_t off = qv_stops.size() - shared_suf.size();
    std::swap(qv_stops[off], qv_stops[off + 1]);
  }
  auto qu = weave_in(u, qu_stops, c, false, share_suf_edge);
  auto qv = weave_in(v, qv_stops, c, false, share_suf_edge);

  // A fresh vertex planted on two legs breaks one intersection clause.
  const auto plant = [&](std::vector<int>& first, std::vector<int>& second) {
    const int x = bld.vertex();
    first.insert(first.end() - 1, x);
    second.insert(second.begin() + 1, x);
  };
  if (violate == Hypothesis::kIntersectionAtU) plant(pu, qu);
  if (violate == Hypothesis::kIntersectionAtV) plant(pv, qv);
  if (violate == Hypothesis::kCrossAtU) plant(pu, qv);
  if (violate == Hypothesis::kCrossAtV) plant(pv, qu);

  const int hpu = bld.path(pu);
  const int hqu = bld.path(qu);
  int hpv, hqv;
  if (share_pre_edge) {
    // The second prefix reuses the first prefix's opening edge.
    auto edges = std::vector<int>{bld.path_edges(hpu).front()};
    const int tail = bld.path(std::vector<int>(pv.begin() + 1, pv.end()));
    edges.insert(edges.end(), bld.path_edges(tail).begin(), bld.path_edges(tail).end());
    hpv = bld.path_over(a, edges);
  } else {
    hpv = bld.path(pv);
  }
  if (share_suf_edge) {
    // The second suffix reuses the first suffix's closing edge.
    const int head = bld.path(std::vector<int>(qv.begin(), qv.end() - 1));
    auto edges = bld.path_edges(head);
    edges.push_back(bld.path_edges(hqu).back());
    hqv = bld.path_over(v, edges);
  } else {
    hqv = bld.path(qv);
  }
  bld.emit(rng);

  Quadruple out{bld.graph(), bld.oriented(hpu), bld.oriented(hpv),
                bld.oriented(hqu), bld.oriented(hqv), violate};
  return out;
}

}  // namespace ocp
