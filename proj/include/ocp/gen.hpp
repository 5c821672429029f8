#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ocp/graph.hpp"
#include "ocp/order_compat.hpp"

namespace ocp {

// std::mt19937_64 (its output sequence is fixed by the standard) with our
// own bounded draws, so results do not depend on the standard library's
// distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  std::uint64_t next();
  // Uniform in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound);
  int uniform(int lo, int hi);  // inclusive
  bool coin() { return (next() >> 63) != 0; }

  template <class T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::swap(items[i - 1], items[below(i)]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

struct PlantedInstance {
  MultiGraph graph;
  int a = 0;
  int b = 0;
  std::optional<int> c;
  std::string kind;
  int planted_count = 0;
  std::vector<int> backbone;
  std::vector<int> level_widths;
  std::vector<std::pair<std::string, PathSystem>> systems;

  // Throws BadParameters when no system carries that name.
  const PathSystem& system(std::string_view name) const;
};

// `meta <key> <value>` lines describing the instance.
std::string meta_text(const PlantedInstance& inst);

MultiGraph gen_random_multigraph(int n, int m, int max_multiplicity,
                                 std::uint64_t seed);

// Chain t_0..t_segments, `width` internally disjoint paths of `seg_length`
// edges between consecutive entries. Systems: "family" (width edge-disjoint
// t_0-t_k paths, one member per segment each) and "seg0", "seg1", ...
PlantedInstance gen_planted_backbone(int segments, int width, int seg_length,
                                     std::uint64_t seed);

enum class Scenario { kTerminalRich, kTerminalFree, kCascade };

std::optional<Scenario> parse_scenario(std::string_view name);
std::string_view scenario_name(Scenario s);

// Systems "P" (a->b) and "Q" (b->c).
//   terminal_rich: P and Q meet only at b, `size` paths each.
//   terminal_free: comb; Q_i leaves the union of P at its own vertex on P_i.
//   cascade: `size` Q paths sharing cut vertices w_0..w_depth, one P path per
//     cut vertex, some entering the segments one level deeper.
PlantedInstance gen_compose_scenario(Scenario kind, int size, int depth,
                                     std::uint64_t seed);

// Like gen_planted_backbone, but interior vertices of different segments are
// identified in pairs and some are identified with backbone vertices, so
// segment families collide across segments.
PlantedInstance gen_weave_scenario(int segments, int width, int seg_length,
                                   int merges, std::uint64_t seed);

// A planted backbone with `noise` extra random edges.
PlantedInstance gen_lift_instance(int segments, int width, int seg_length,
                                  int noise, std::uint64_t seed);

// Legs a->u, a->v, u->c, v->c for the guarded concatenation. Without
// `violate` every hypothesis holds; otherwise exactly the named one fails.
struct Quadruple {
  MultiGraph graph;
  OrientedPath prefix_u;
  OrientedPath prefix_v;
  OrientedPath suffix_u;
  OrientedPath suffix_v;
  std::optional<Hypothesis> violated;
};

Quadruple gen_quadruple(std::optional<Hypothesis> violate, std::uint64_t seed);

}  // namespace ocp
