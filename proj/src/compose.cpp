#include "ocp/compose.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "ocp/order_compat.hpp"

namespace ocp {

namespace {

using Seq = std::vector<int>;

struct Prepared {
  int a = 0;
  int b = 0;
  int c = 0;
  int n = 0;
  std::vector<Seq> p;
  std::vector<Seq> q;
};

Prepared prepare(const MultiGraph& g, const PathSystem& P, const PathSystem& Q) {
  if (P.empty() || Q.empty()) fail(ErrorKind::kEmptyFamily, "P and Q must be nonempty");
  if (P.sink != Q.source) {
    fail(ErrorKind::kEndpointMismatch, "P must end where Q starts");
  }
  if (P.source == Q.sink) fail(ErrorKind::kEndpointMismatch, "a and c coincide");
  for (const PathSystem* s : {&P, &Q}) {
    const auto report = verify_system(g, *s);
    if (!report.ok()) {
      fail(ErrorKind::kPreconditionFailed,
           std::string(s == &P ? "P" : "Q") + " fails verification: " +
               certificate_line(*report.certificate));
    }
  }
  Prepared pr{P.source, P.sink, Q.sink, g.vertex_count(), {}, {}};
  for (const auto& path : P.paths) pr.p.push_back(validate_path(g, path));
  for (const auto& path : Q.paths) pr.q.push_back(validate_path(g, path));
  return pr;
}

std::vector<char> union_of(const Prepared& pr, const std::vector<int>& members) {
  std::vector<char> mark(static_cast<std::size_t>(pr.n), 0);
  for (int i : members) {
    for (int v : pr.p[i]) mark[v] = 1;
  }
  return mark;
}

std::vector<int> all_indices(std::size_t count) {
  std::vector<int> out(count);
  for (std::size_t i = 0; i < count; ++i) out[i] = static_cast<int>(i);
  return out;
}

// Walking q back from c, the first vertex inside the marked union. b is
// always marked, so this exists.
int exit_vertex(const Seq& q, const std::vector<char>& mark) {
  for (auto it = q.rbegin(); it != q.rend(); ++it) {
    if (mark[*it]) return *it;
  }
  fail(ErrorKind::kInternal, "Q path never meets the union of P");
}

std::size_t index_of(const Seq& seq, int v) {
  return static_cast<std::size_t>(std::find(seq.begin(), seq.end(), v) - seq.begin());
}

bool contains(const Seq& seq, int v) {
  return std::find(seq.begin(), seq.end(), v) != seq.end();
}

int hits(const Prepared& pr, const std::vector<int>& members, int v) {
  return static_cast<int>(std::count_if(members.begin(), members.end(),
                                        [&](int i) { return contains(pr.p[i], v); }));
}

bool is_terminal(const Prepared& pr, const std::vector<int>& p_members,
                 const std::vector<int>& q_members, int v) {
  const auto mark = union_of(pr, p_members);
  if (v < 0 || v >= pr.n || !mark[v]) return false;
  return std::all_of(q_members.begin(), q_members.end(),
                     [&](int j) { return exit_vertex(pr.q[j], mark) == v; });
}

// Joins prefix i with suffix i. Every pair goes through the guarded
// concatenation, and the final system is verified.
PathSystem assemble(const MultiGraph& g, int a, int c,
                    const std::vector<OrientedPath>& prefixes,
                    const std::vector<OrientedPath>& suffixes) {
  for (std::size_t i = 0; i < prefixes.size(); ++i) {
    for (std::size_t j = i + 1; j < prefixes.size(); ++j) {
      concatenate_pair(g, prefixes[i], prefixes[j], suffixes[i], suffixes[j]);
    }
  }
  PathSystem out{a, c, {}};
  for (std::size_t i = 0; i < prefixes.size(); ++i) {
    out.paths.push_back(concat(prefixes[i], suffixes[i]));
  }
  if (!verify_system(g, out).ok()) {
    fail(ErrorKind::kInternal, "composed system fails verification");
  }
  return out;
}

}  // namespace

// --- Terminals --------------------------------------------------------------

std::vector<TerminalReport> find_terminals(const MultiGraph& g,
                                           const PathSystem& P,
                                           const PathSystem& Q) {
  const Prepared pr = prepare(g, P, Q);
  const auto p_all = all_indices(pr.p.size());
  const auto mark = union_of(pr, p_all);
  const int v = exit_vertex(pr.q.front(), mark);
  std::vector<TerminalReport> out;
  if (is_terminal(pr, p_all, all_indices(pr.q.size()), v)) {
    out.push_back({v, hits(pr, p_all, v), true});
  }
  return out;
}

PathSystem compose_via_terminal(const MultiGraph& g, const PathSystem& P,
                                const PathSystem& Q, const TerminalReport& t) {
  const Prepared pr = prepare(g, P, Q);
  const auto p_all = all_indices(pr.p.size());
  if (!g.has_vertex(t.vertex) ||
      !is_terminal(pr, p_all, all_indices(pr.q.size()), t.vertex) ||
      hits(pr, p_all, t.vertex) != t.hitting_count) {
    fail(ErrorKind::kNotATerminal,
         "vertex " + std::to_string(t.vertex) + " is not a terminal as reported");
  }
  std::vector<OrientedPath> prefixes, suffixes;
  std::size_t next_q = 0;
  for (int i : p_all) {
    if (next_q == pr.q.size()) break;
    if (!contains(pr.p[i], t.vertex)) continue;
    prefixes.push_back(subpath(P.paths[i], pr.p[i], 0, index_of(pr.p[i], t.vertex)));
    const Seq& q = pr.q[next_q];
    suffixes.push_back(
        subpath(Q.paths[next_q], q, index_of(q, t.vertex), q.size() - 1));
    ++next_q;
  }
  return assemble(g, pr.a, pr.c, prefixes, suffixes);
}

PathSystem compose_terminal_free(const MultiGraph& g, const PathSystem& P,
                                 const PathSystem& Q) {
  const Prepared pr = prepare(g, P, Q);
  const auto mark = union_of(pr, all_indices(pr.p.size()));
  std::vector<int> exits;
  for (const auto& q : pr.q) {
    const int v = exit_vertex(q, mark);
    const auto tail = std::span<const int>(q).subspan(index_of(q, v) + 1);
    if (std::any_of(tail.begin(), tail.end(), [&](int x) { return mark[x] != 0; })) {
      fail(ErrorKind::kInternal, "exit vertex tail meets the union of P");
    }
    exits.push_back(v);
  }
  if (std::all_of(exits.begin(), exits.end(),
                  [&](int v) { return v == exits.front(); })) {
    fail(ErrorKind::kTerminalExists,
         "every Q path exits at vertex " + std::to_string(exits.front()));
  }

  // Each chosen exit vertex must stay off the a-side prefix of every other
  // chosen carrier, in both directions.
  std::vector<int> chosen_exits;
  std::vector<Seq> chosen_prefixes;
  std::vector<OrientedPath> prefixes, suffixes;
  for (std::size_t j = 0; j < pr.q.size(); ++j) {
    const int v = exits[j];
    if (contains(chosen_exits, v)) continue;
    const bool blocked = std::any_of(
        chosen_prefixes.begin(), chosen_prefixes.end(),
        [&](const Seq& pre) { return contains(pre, v); });
    if (blocked) continue;
    for (std::size_t i = 0; i < pr.p.size(); ++i) {
      if (!contains(pr.p[i], v)) continue;
      const std::size_t at = index_of(pr.p[i], v);
      const Seq pre(pr.p[i].begin(), pr.p[i].begin() + static_cast<long>(at) + 1);
      const bool clean = std::none_of(chosen_exits.begin(), chosen_exits.end(),
                                      [&](int w) { return contains(pre, w); });
      if (!clean) continue;
      chosen_exits.push_back(v);
      chosen_prefixes.push_back(pre);
      prefixes.push_back(subpath(P.paths[i], pr.p[i], 0, at));
      const Seq& q = pr.q[j];
      suffixes.push_back(subpath(Q.paths[j], q, index_of(q, v), q.size() - 1));
      break;
    }
  }
  return assemble(g, pr.a, pr.c, prefixes, suffixes);
}

// --- Cascade ----------------------------------------------------------------

std::vector<std::string> cascade_lines(const Cascade& cascade) {
  std::vector<std::string> out;
  for (std::size_t n = 0; n < cascade.levels.size(); ++n) {
    std::ostringstream line;
    line << "level " << n << " cut " << cascade.levels[n].cut << " segs "
         << cascade.levels[n].segments.size();
    out.push_back(line.str());
  }
  return out;
}

namespace {

std::optional<std::string> cascade_violation(const MultiGraph& g,
                                             const Prepared& pr,
                                             const PathSystem& Q,
                                             const Cascade& cascade) {
  const auto& levels = cascade.levels;
  const auto in_range = [](const std::vector<int>& ids, std::size_t size) {
    return std::all_of(ids.begin(), ids.end(), [&](int i) {
      return i >= 0 && static_cast<std::size_t>(i) < size;
    });
  };
  const auto subset = [](const std::vector<int>& inner, const std::vector<int>& outer) {
    return std::all_of(inner.begin(), inner.end(),
                       [&](int i) { return contains(outer, i); });
  };
  for (std::size_t n = 0; n < levels.size(); ++n) {
    const auto& L = levels[n];
    const std::string at = "level " + std::to_string(n) + ": ";
    if (L.p_members.empty() || L.q_members.empty()) return at + "empty family";
    if (!in_range(L.p_members, pr.p.size()) || !in_range(L.q_members, pr.q.size())) {
      return at + "member index out of range";
    }
    if (!g.has_vertex(L.cut)) return at + "cut vertex out of range";
    if (n > 0 && (!subset(L.p_members, levels[n - 1].p_members) ||
                  !subset(L.q_members, levels[n - 1].q_members))) {
      return at + "families are not nested";
    }
    if (!is_terminal(pr, L.p_members, L.q_members, L.cut)) {
      return at + "cut vertex is not a terminal of its families";
    }
    if (n + 1 < levels.size()) {
      for (int i : levels[n + 1].p_members) {
        if (contains(pr.p[i], L.cut)) return at + "cut vertex stays on the next P family";
      }
    }
    for (std::size_t m = 0; m < n; ++m) {
      for (int j : L.q_members) {
        if (!contains(pr.q[j], levels[m].cut)) {
          return at + "Q path misses an earlier cut vertex";
        }
      }
    }
    if (L.segments.size() != L.q_members.size()) return at + "segment count mismatch";
    const int far = n == 0 ? pr.c : levels[n - 1].cut;
    for (std::size_t s = 0; s < L.segments.size(); ++s) {
      const Seq& q = pr.q[L.q_members[s]];
      const std::size_t from = index_of(q, L.cut);
      const std::size_t to = index_of(q, far);
      if (from >= q.size() || to >= q.size() || from > to || (from == to && n > 0)) {
        return at + "cut vertices out of order on a Q path";
      }
      if (!(L.segments[s] == subpath(Q.paths[L.q_members[s]], q, from, to))) {
        return at + "segment differs from its Q path";
      }
    }
  }

  // Segment unions of distinct levels meet only at the cut vertex they share.
  std::vector<std::vector<char>> level_sets;
  for (const auto& L : levels) {
    std::vector<char> mark(static_cast<std::size_t>(pr.n), 0);
    for (std::size_t s = 0; s < L.segments.size(); ++s) {
      for (int v : validate_path(g, L.segments[s])) mark[v] = 1;
    }
    level_sets.push_back(std::move(mark));
  }
  for (std::size_t m = 0; m < levels.size(); ++m) {
    for (std::size_t n = m + 1; n < levels.size(); ++n) {
      for (int v = 0; v < pr.n; ++v) {
        if (!level_sets[m][v] || !level_sets[n][v]) continue;
        if (n != m + 1 || v != levels[m].cut) {
          return "levels " + std::to_string(m) + " and " + std::to_string(n) +
                 " meet at vertex " + std::to_string(v);
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::string> check_cascade(const MultiGraph& g,
                                         const PathSystem& P,
                                         const PathSystem& Q,
                                         const Cascade& cascade) {
  return cascade_violation(g, prepare(g, P, Q), Q, cascade);
}

Cascade build_cascade(const MultiGraph& g, const PathSystem& P,
                      const PathSystem& Q, int hit_cap, int max_depth) {
  if (hit_cap < 1 || max_depth < 1) {
    fail(ErrorKind::kBadParameters, "hit_cap and max_depth must be positive");
  }
  const Prepared pr = prepare(g, P, Q);
  Cascade cascade;
  const auto finish = [&] {
    if (auto bad = cascade_violation(g, pr, Q, cascade)) {
      fail(ErrorKind::kInternal, "cascade invariant broken: " + *bad);
    }
  };

  std::vector<int> p_members = all_indices(pr.p.size());
  std::vector<int> q_members = all_indices(pr.q.size());
  for (int n = 0; n <= max_depth && !p_members.empty(); ++n) {
    const auto mark = union_of(pr, p_members);
    std::map<int, std::vector<int>> groups;
    for (int j : q_members) groups[exit_vertex(pr.q[j], mark)].push_back(j);

    int best = -1;
    int best_hits = 0;
    for (const auto& [v, members] : groups) {
      const int h = hits(pr, p_members, v);
      if (h > hit_cap) continue;
      if (best < 0 || members.size() > groups[best].size()) {
        best = v;
        best_hits = h;
      }
    }
    if (best < 0) {
      finish();
      throw NoTerminalAtLevel(n, std::move(cascade));
    }

    CascadeLevel level;
    level.cut = best;
    level.hitting_count = best_hits;
    level.p_members = p_members;
    level.q_members = groups[best];
    const int far = n == 0 ? pr.c : cascade.levels.back().cut;
    for (int j : level.q_members) {
      const Seq& q = pr.q[j];
      const std::size_t from = index_of(q, best);
      const std::size_t to = index_of(q, far);
      if (to >= q.size() || from > to || (from == to && n > 0)) {
        fail(ErrorKind::kInternal, "cut vertices out of order on a Q path");
      }
      level.segments.push_back(subpath(Q.paths[j], q, from, to));
    }
    std::erase_if(p_members, [&](int i) { return contains(pr.p[i], best); });
    q_members = level.q_members;
    cascade.levels.push_back(std::move(level));
  }
  finish();
  return cascade;
}

PathSystem cascade_compose(const MultiGraph& g, const PathSystem& P,
                           const PathSystem& Q, const Cascade& cascade) {
  const Prepared pr = prepare(g, P, Q);
  if (auto bad = cascade_violation(g, pr, Q, cascade)) {
    fail(ErrorKind::kPreconditionFailed, "cascade does not fit P and Q: " + *bad);
  }
  const auto& levels = cascade.levels;

  // Deepest level whose segments contain each vertex, -1 off the cascade.
  std::vector<int> level_of(static_cast<std::size_t>(pr.n), -1);
  for (std::size_t n = 0; n < levels.size(); ++n) {
    for (const auto& seg : levels[n].segments) {
      for (int v : validate_path(g, seg)) level_of[v] = static_cast<int>(n);
    }
  }

  std::vector<OrientedPath> prefixes, suffixes;
  std::vector<int> used_q;
  int previous = -1;
  for (std::size_t k = 0; k < levels.size(); ++k) {
    const int w = levels[k].cut;
    int carrier = -1;
    for (int i : levels[k].p_members) {
      if (contains(pr.p[i], w)) {
        carrier = i;
        break;
      }
    }
    if (carrier < 0) fail(ErrorKind::kInternal, "no P path through the cut vertex");
    const Seq& p = pr.p[carrier];
    std::size_t at = 0;
    while (at < p.size() && level_of[p[at]] < 0) ++at;
    if (at == p.size()) fail(ErrorKind::kInternal, "carrier misses the segments");
    const int u = p[at];
    const int nk = level_of[u];
    if (nk < static_cast<int>(k)) {
      fail(ErrorKind::kInternal, "entry level below the cascade index");
    }
    if (nk < 1 || (previous >= 0 && nk < previous + 2)) continue;

    const int v = levels[nk - 1].cut;
    int inner = -1;  // Q path carrying the stretch from u to v
    if (u != v) {
      const auto& L = levels[nk];
      for (std::size_t s = 0; s < L.segments.size() && inner < 0; ++s) {
        if (contains(validate_path(g, L.segments[s]), u)) inner = L.q_members[s];
      }
      if (inner < 0) fail(ErrorKind::kInternal, "entry vertex on no segment");
    }
    const auto& candidates = levels[nk - 1].q_members;
    int outer = -1;
    if (inner >= 0 && !contains(used_q, inner) && contains(candidates, inner)) {
      outer = inner;
    } else {
      for (int j : candidates) {
        if (!contains(used_q, j)) {
          outer = j;
          break;
        }
      }
    }
    if (outer < 0) {
      throw LevelExhausted(static_cast<int>(k),
                           assemble(g, pr.a, pr.c, prefixes, suffixes));
    }

    prefixes.push_back(subpath(P.paths[carrier], p, 0, at));
    const Seq& qo = pr.q[outer];
    OrientedPath tail = subpath(Q.paths[outer], qo, index_of(qo, v), qo.size() - 1);
    if (inner >= 0) {
      const Seq& qi = pr.q[inner];
      tail = concat(subpath(Q.paths[inner], qi, index_of(qi, u), index_of(qi, v)), tail);
      used_q.push_back(inner);
    }
    suffixes.push_back(std::move(tail));
    if (!contains(used_q, outer)) used_q.push_back(outer);
    previous = nk;
  }
  return assemble(g, pr.a, pr.c, prefixes, suffixes);
}

// --- Dispatcher -------------------------------------------------------------

ComposeOutcome compose(const MultiGraph& g, const PathSystem& P,
                       const PathSystem& Q, const ComposeOptions& options) {
  const Prepared pr = prepare(g, P, Q);
  const int hit_cap =
      options.hit_cap.value_or(static_cast<int>((P.size() + 1) / 2));
  const int max_depth = options.max_depth.value_or(static_cast<int>(P.size()));
  ComposeOutcome outcome;

  // Terminal route on the best Q subfamily: Q paths sharing an exit vertex v
  // make v a terminal for P and that subfamily.
  {
    const auto p_all = all_indices(pr.p.size());
    const auto mark = union_of(pr, p_all);
    std::map<int, std::vector<int>> groups;
    for (std::size_t j = 0; j < pr.q.size(); ++j) {
      groups[exit_vertex(pr.q[j], mark)].push_back(static_cast<int>(j));
    }
    int best = -1;
    int best_value = 0;
    int best_hits = 0;
    for (const auto& [v, members] : groups) {
      const int h = hits(pr, p_all, v);
      const int value = std::min(h, static_cast<int>(members.size()));
      if (value > best_value) {
        best = v;
        best_value = value;
        best_hits = h;
      }
    }
    if (best >= 0) {
      PathSystem sub{Q.source, Q.sink, {}};
      for (int j : groups[best]) sub.paths.push_back(Q.paths[j]);
      outcome.system = compose_via_terminal(g, P, sub, {best, best_hits, true});
      outcome.strategy = "terminal";
      outcome.terminal_size = outcome.system.size();
    }
  }

  try {
    PathSystem s = compose_terminal_free(g, P, Q);
    outcome.terminal_free_size = s.size();
    if (s.size() > outcome.system.size()) {
      outcome.system = std::move(s);
      outcome.strategy = "terminal-free";
    }
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::kTerminalExists) throw;
  }

  try {
    outcome.cascade = build_cascade(g, P, Q, hit_cap, max_depth);
  } catch (const NoTerminalAtLevel& e) {
    outcome.cascade = e.partial();
  }
  if (!outcome.cascade.levels.empty()) {
    PathSystem s;
    try {
      s = cascade_compose(g, P, Q, outcome.cascade);
    } catch (const LevelExhausted& e) {
      s = e.partial();
    }
    outcome.cascade_size = s.size();
    if (s.size() > outcome.system.size()) {
      outcome.system = std::move(s);
      outcome.strategy = "cascade";
    }
  }

  if (outcome.system.empty()) {
    fail(ErrorKind::kNothingFound, "no strategy produced an a-c path");
  }
  return outcome;
}

}  // namespace ocp
