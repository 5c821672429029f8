#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ocp/graph.hpp"

namespace ocp {

// Inputs throughout: P is a system a->b, Q a system b->c, both edge-disjoint
// and order-compatible, with a != c. Q paths are read in their b->c
// orientation.

// A vertex of the union of P lying on every Q whose tail towards c meets the
// union of P only in itself.
struct TerminalReport {
  int vertex = 0;
  int hitting_count = 0;  // P paths through the vertex
  bool on_all_q = true;
};

// All terminals, by descending hitting count then vertex. Every tail clause
// is checked for every Q, so there is at most one.
std::vector<TerminalReport> find_terminals(const MultiGraph& g,
                                           const PathSystem& P,
                                           const PathSystem& Q);

// Pairs the P paths through the terminal with Q paths, in index order.
PathSystem compose_via_terminal(const MultiGraph& g, const PathSystem& P,
                                const PathSystem& Q, const TerminalReport& t);

// Routes each selected Q from the first vertex where it touches the union of
// P (walking back from c) along a carrier P path to a. Throws TerminalExists
// when every Q exits at the same vertex.
PathSystem compose_terminal_free(const MultiGraph& g, const PathSystem& P,
                                 const PathSystem& Q);

// One level n of the cascade: the cut vertex w_n, the P and Q index sets
// alive at this level, and the segments of those Q paths between w_n and
// w_{n-1} (c for level 0), kept in Q's orientation and parallel to
// q_members.
struct CascadeLevel {
  int cut = 0;
  int hitting_count = 0;
  std::vector<int> p_members;
  std::vector<int> q_members;
  std::vector<OrientedPath> segments;
};

struct Cascade {
  std::vector<CascadeLevel> levels;

  // Index of the deepest level, -1 when empty.
  int depth() const { return static_cast<int>(levels.size()) - 1; }
};

// `level <n> cut <w> segs <count>` per level.
std::vector<std::string> cascade_lines(const Cascade& cascade);

// Describes the first structural violation, if any: nesting, terminal
// property at each level, cut vertices leaving the next P family, and the
// segment overlap rule (levels meet only at shared cut vertices).
std::optional<std::string> check_cascade(const MultiGraph& g,
                                         const PathSystem& P,
                                         const PathSystem& Q,
                                         const Cascade& cascade);

class NoTerminalAtLevel : public Error {
 public:
  NoTerminalAtLevel(int level, Cascade partial)
      : Error(ErrorKind::kNoTerminalAtLevel,
              "no terminal within the hitting cap at level " +
                  std::to_string(level)),
        level_(level),
        partial_(std::move(partial)) {}

  int level() const { return level_; }
  const Cascade& partial() const { return partial_; }

 private:
  int level_;
  Cascade partial_;
};

// Levels 0..max_depth at most. Each level picks the largest group of Q paths
// sharing an exit vertex whose hitting count is within hit_cap (lowest
// vertex on ties); the next P family drops every path through it.
Cascade build_cascade(const MultiGraph& g, const PathSystem& P,
                      const PathSystem& Q, int hit_cap, int max_depth);

class LevelExhausted : public Error {
 public:
  LevelExhausted(int level, PathSystem partial)
      : Error(ErrorKind::kLevelExhausted,
              "no unused Q path left for level " + std::to_string(level)),
        level_(level),
        partial_(std::move(partial)) {}

  int level() const { return level_; }
  const PathSystem& partial() const { return partial_; }

 private:
  int level_;
  PathSystem partial_;
};

PathSystem cascade_compose(const MultiGraph& g, const PathSystem& P,
                           const PathSystem& Q, const Cascade& cascade);

struct ComposeOptions {
  std::optional<int> hit_cap;    // default: half of |P|, rounded up
  std::optional<int> max_depth;  // default: |P|
};

struct ComposeOutcome {
  PathSystem system;
  std::string strategy;  // "terminal", "terminal-free" or "cascade"
  std::size_t terminal_size = 0;
  std::size_t terminal_free_size = 0;
  std::size_t cascade_size = 0;
  Cascade cascade;
};

// Runs every strategy and keeps the largest result (earlier strategies win
// ties). Throws NothingFound if all of them come back empty.
ComposeOutcome compose(const MultiGraph& g, const PathSystem& P,
                       const PathSystem& Q, const ComposeOptions& options = {});

}  // namespace ocp
