#include "ocp/ocp.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <sstream>
#include <string>
#include <vector>

#include "ocp/backbone.hpp"
#include "ocp/compose.hpp"
#include "ocp/connectivity.hpp"
#include "ocp/corpus.hpp"
#include "ocp/dirac.hpp"
#include "ocp/gen.hpp"
#include "ocp/oracle.hpp"
#include "ocp/order_compat.hpp"

struct ocp_graph {
  ocp::MultiGraph g;
};

struct ocp_system {
  ocp::PathSystem s;
};

struct ocp_instance {
  ocp::PlantedInstance inst;
};

namespace {

thread_local std::string last_message;
thread_local int last_line = 0;

ocp_status record(ocp_status status, const std::string& message, int line = 0) {
  last_message = message;
  last_line = line;
  return status;
}

template <class F>
ocp_status guarded(F&& body) {
  last_message.clear();
  last_line = 0;
  try {
    body();
    return OCP_OK;
  } catch (const ocp::ParseError& e) {
    return record(static_cast<ocp_status>(e.kind()), e.what(), e.line());
  } catch (const ocp::Error& e) {
    return record(static_cast<ocp_status>(e.kind()), e.what());
  } catch (const std::bad_alloc&) {
    return record(OCP_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return record(OCP_ERR_INTERNAL, e.what());
  }
}

#define OCP_REQUIRE(cond)                                                   \
  do {                                                                      \
    if (!(cond)) return record(OCP_ERR_NULL_ARGUMENT, "null argument: " #cond); \
  } while (0)

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

ocp_system* wrap(ocp::PathSystem s) { return new ocp_system{std::move(s)}; }

std::vector<int> to_vector(const int* values, std::size_t n) {
  if (n == 0) return {};
  return std::vector<int>(values, values + n);
}

}  // namespace

extern "C" {

const char* ocp_last_error(void) { return last_message.c_str(); }
int ocp_last_error_line(void) { return last_line; }

const char* ocp_status_name(ocp_status status) {
  if (status == OCP_OK) return "Ok";
  if (status == OCP_ERR_NULL_ARGUMENT) return "NullArgument";
  if (status < OCP_ERR_PARSE || status > OCP_ERR_INTERNAL) return "Unknown";
  return ocp::error_kind_name(static_cast<ocp::ErrorKind>(status)).data();
}

void ocp_string_free(char* s) { std::free(s); }
void ocp_ints_free(int* values) { std::free(values); }

ocp_status ocp_graph_parse(const char* text, ocp_graph** out) {
  OCP_REQUIRE(text && out);
  return guarded([&] { *out = new ocp_graph{ocp::parse_graph(text)}; });
}

ocp_status ocp_graph_serialize(const ocp_graph* g, char** out) {
  OCP_REQUIRE(g && out);
  return guarded([&] { *out = copy_string(ocp::serialize_graph(g->g)); });
}

int ocp_graph_vertex_count(const ocp_graph* g) { return g ? g->g.vertex_count() : 0; }
int ocp_graph_edge_count(const ocp_graph* g) { return g ? g->g.edge_count() : 0; }
void ocp_graph_free(ocp_graph* g) { delete g; }

ocp_status ocp_system_parse(const ocp_graph* g, const char* text, ocp_system** out) {
  OCP_REQUIRE(g && text && out);
  return guarded([&] {
    auto s = ocp::parse_system(text);
    if (!g->g.has_vertex(s.source) || !g->g.has_vertex(s.sink)) {
      ocp::fail(ocp::ErrorKind::kRange, "system endpoints are not vertices of the graph");
    }
    for (std::size_t i = 0; i < s.paths.size(); ++i) {
      const auto seq = ocp::validate_path(g->g, s.paths[i]);
      if (seq.front() != s.source || seq.back() != s.sink) {
        ocp::fail(ocp::ErrorKind::kMixedEndpoints,
                  "path " + std::to_string(i) + " does not run from " +
                      std::to_string(s.source) + " to " + std::to_string(s.sink));
      }
    }
    *out = wrap(std::move(s));
  });
}

ocp_status ocp_system_serialize(const ocp_system* s, char** out) {
  OCP_REQUIRE(s && out);
  return guarded([&] { *out = copy_string(ocp::serialize_system(s->s)); });
}

size_t ocp_system_size(const ocp_system* s) { return s ? s->s.size() : 0; }
int ocp_system_source(const ocp_system* s) { return s ? s->s.source : 0; }
int ocp_system_sink(const ocp_system* s) { return s ? s->s.sink : 0; }
void ocp_system_free(ocp_system* s) { delete s; }

ocp_status ocp_verify(const ocp_graph* g, const ocp_system* s, int* ok,
                      char** certificate) {
  OCP_REQUIRE(g && s && ok);
  return guarded([&] {
    const auto report = ocp::verify_system(g->g, s->s);
    *ok = report.ok() ? 1 : 0;
    if (certificate != nullptr) {
      *certificate = report.certificate
                         ? copy_string(ocp::certificate_line(*report.certificate))
                         : nullptr;
    }
  });
}

ocp_status ocp_certificate_holds(const ocp_graph* g, const ocp_system* s,
                                 const char* line, int* holds) {
  OCP_REQUIRE(g && s && line && holds);
  return guarded([&] {
    *holds = ocp::certificate_holds(g->g, s->s, ocp::parse_certificate_line(line)) ? 1 : 0;
  });
}

ocp_status ocp_kappa_e(const ocp_graph* g, int a, int b, int* value,
                       ocp_system** witness) {
  OCP_REQUIRE(g && value);
  return guarded([&] {
    auto r = ocp::kappa_e(g->g, a, b);
    *value = r.value;
    if (witness != nullptr) *witness = wrap(std::move(r.witness));
  });
}

ocp_status ocp_kappa_v(const ocp_graph* g, int a, int b, int* value,
                       ocp_system** witness) {
  OCP_REQUIRE(g && value);
  return guarded([&] {
    auto r = ocp::kappa_v(g->g, a, b);
    *value = r.value;
    if (witness != nullptr) *witness = wrap(std::move(r.witness));
  });
}

ocp_status ocp_separator(const ocp_graph* g, int a, int b, int** vertices,
                         size_t* count) {
  OCP_REQUIRE(g && vertices && count);
  return guarded([&] {
    const auto sep = ocp::min_internal_separator(g->g, a, b);
    int* out = static_cast<int*>(std::malloc((sep.vertices.size() + 1) * sizeof(int)));
    if (out == nullptr) throw std::bad_alloc();
    std::copy(sep.vertices.begin(), sep.vertices.end(), out);
    *vertices = out;
    *count = sep.vertices.size();
  });
}

ocp_status ocp_auxiliary_graph(const ocp_graph* g, int theta, char** text) {
  OCP_REQUIRE(g && text);
  return guarded([&] {
    const auto h = ocp::auxiliary_graph(g->g, theta);
    std::string out;
    for (const auto& [x, y] : h.edges) {
      out += "aux " + std::to_string(x) + " " + std::to_string(y) + "\n";
    }
    *text = copy_string(out);
  });
}

ocp_status ocp_dirac(const ocp_graph* g, int a, int b, int k, const uint64_t* seed,
                     ocp_system** out, int64_t* total_edges, int64_t* flow_cost) {
  OCP_REQUIRE(g && out);
  return guarded([&] {
    ocp::FlowOptions options;
    if (seed != nullptr) options.shuffle_seed = *seed;
    auto r = k <= 0 ? ocp::max_oc_system(g->g, a, b, options)
                    : ocp::dirac_system(g->g, a, b, k, options);
    if (total_edges != nullptr) *total_edges = r.total_edges;
    if (flow_cost != nullptr) *flow_cost = r.flow_cost;
    *out = wrap(std::move(r.system));
  });
}

ocp_status ocp_backbone(const ocp_graph* g, const ocp_system* family, int tau,
                        char** line, ocp_system** survivors) {
  OCP_REQUIRE(g && family && line);
  return guarded([&] {
    auto bb = ocp::extract_backbone(g->g, family->s, tau);
    *line = copy_string(ocp::backbone_line(bb));
    if (survivors != nullptr) *survivors = wrap(std::move(bb.survivors));
  });
}

ocp_status ocp_weave(const ocp_graph* g, const ocp_system* family, int tau, int r,
                     char** line, ocp_system** out) {
  OCP_REQUIRE(g && family && out);
  return guarded([&] {
    const auto bb = ocp::extract_backbone(g->g, family->s, tau);
    std::vector<ocp::PathSystem> segments;
    for (std::size_t i = 0; i + 1 < bb.vertices.size(); ++i) {
      segments.push_back(ocp::kappa_v(g->g, bb.vertices[i], bb.vertices[i + 1]).witness);
    }
    auto woven = ocp::weave(g->g, bb.vertices, segments, r);
    if (line != nullptr) *line = copy_string(ocp::backbone_line(bb));
    *out = wrap(std::move(woven));
  });
}

ocp_status ocp_lift(const ocp_graph* g, const int* walk, size_t walk_length, int theta,
                    const int* forbidden_vertices, size_t vertex_count,
                    const int* forbidden_edges, size_t edge_count, int r,
                    ocp_system** out) {
  OCP_REQUIRE(g && walk && out);
  OCP_REQUIRE(forbidden_vertices || vertex_count == 0);
  OCP_REQUIRE(forbidden_edges || edge_count == 0);
  return guarded([&] {
    const auto w = to_vector(walk, walk_length);
    *out = wrap(ocp::lift(g->g, w, theta, to_vector(forbidden_vertices, vertex_count),
                          to_vector(forbidden_edges, edge_count), r));
  });
}

ocp_status ocp_compose(const ocp_graph* g, const ocp_system* p, const ocp_system* q,
                       int hit_cap, int max_depth, ocp_system** out, char** report) {
  OCP_REQUIRE(g && p && q && out);
  return guarded([&] {
    ocp::ComposeOptions options;
    if (hit_cap > 0) options.hit_cap = hit_cap;
    if (max_depth > 0) options.max_depth = max_depth;
    auto outcome = ocp::compose(g->g, p->s, q->s, options);
    if (report != nullptr) {
      std::ostringstream text;
      text << "strategy " << outcome.strategy << '\n'
           << "sizes terminal " << outcome.terminal_size << " terminal-free "
           << outcome.terminal_free_size << " cascade " << outcome.cascade_size << '\n';
      for (const auto& l : ocp::cascade_lines(outcome.cascade)) text << l << '\n';
      *report = copy_string(text.str());
    }
    *out = wrap(std::move(outcome.system));
  });
}

ocp_gen_params ocp_gen_defaults(ocp_gen_kind kind) {
  ocp_gen_params p{};
  p.kind = kind;
  p.seed = 1;
  p.n = 6;
  p.m = 9;
  p.multiplicity = 2;
  p.segments = 3;
  p.width = 4;
  p.seg_length = 2;
  p.size = 4;
  p.depth = 4;
  p.extra = 0;
  switch (kind) {
    case OCP_GEN_CASCADE: p.size = 3; break;
    case OCP_GEN_WEAVE: p.segments = 2; p.width = 9; p.extra = 2; break;
    case OCP_GEN_LIFT: p.segments = 2; p.extra = 3; break;
    default: break;
  }
  return p;
}

ocp_status ocp_gen_kind_parse(const char* name, ocp_gen_kind* kind) {
  OCP_REQUIRE(name && kind);
  static const struct {
    const char* name;
    ocp_gen_kind kind;
  } table[] = {{"random", OCP_GEN_RANDOM},          {"backbone", OCP_GEN_BACKBONE},
               {"terminal_rich", OCP_GEN_TERMINAL_RICH}, {"terminal_free", OCP_GEN_TERMINAL_FREE},
               {"cascade", OCP_GEN_CASCADE},        {"weave", OCP_GEN_WEAVE},
               {"lift", OCP_GEN_LIFT}};
  for (const auto& entry : table) {
    if (std::strcmp(entry.name, name) == 0) {
      *kind = entry.kind;
      return OCP_OK;
    }
  }
  return record(OCP_ERR_BAD_PARAMETERS, std::string("unknown scenario kind: ") + name);
}

ocp_status ocp_generate(const ocp_gen_params* params, ocp_instance** out) {
  OCP_REQUIRE(params && out);
  return guarded([&] {
    const auto& p = *params;
    ocp::PlantedInstance inst;
    switch (p.kind) {
      case OCP_GEN_RANDOM:
        inst.graph = ocp::gen_random_multigraph(p.n, p.m, p.multiplicity, p.seed);
        inst.kind = "random";
        inst.b = p.n - 1;
        break;
      case OCP_GEN_BACKBONE:
        inst = ocp::gen_planted_backbone(p.segments, p.width, p.seg_length, p.seed);
        break;
      case OCP_GEN_TERMINAL_RICH:
        inst = ocp::gen_compose_scenario(ocp::Scenario::kTerminalRich, p.size, p.depth, p.seed);
        break;
      case OCP_GEN_TERMINAL_FREE:
        inst = ocp::gen_compose_scenario(ocp::Scenario::kTerminalFree, p.size, p.depth, p.seed);
        break;
      case OCP_GEN_CASCADE:
        inst = ocp::gen_compose_scenario(ocp::Scenario::kCascade, p.size, p.depth, p.seed);
        break;
      case OCP_GEN_WEAVE:
        inst = ocp::gen_weave_scenario(p.segments, p.width, p.seg_length, p.extra, p.seed);
        break;
      case OCP_GEN_LIFT:
        inst = ocp::gen_lift_instance(p.segments, p.width, p.seg_length, p.extra, p.seed);
        break;
      default:
        ocp::fail(ocp::ErrorKind::kBadParameters, "unknown generator kind");
    }
    *out = new ocp_instance{std::move(inst)};
  });
}

ocp_status ocp_instance_graph(const ocp_instance* inst, ocp_graph** out) {
  OCP_REQUIRE(inst && out);
  return guarded([&] { *out = new ocp_graph{inst->inst.graph}; });
}

size_t ocp_instance_system_count(const ocp_instance* inst) {
  return inst ? inst->inst.systems.size() : 0;
}

const char* ocp_instance_system_name(const ocp_instance* inst, size_t i) {
  if (inst == nullptr || i >= inst->inst.systems.size()) return nullptr;
  return inst->inst.systems[i].first.c_str();
}

ocp_status ocp_instance_system(const ocp_instance* inst, size_t i, ocp_system** out) {
  OCP_REQUIRE(inst && out);
  if (i >= inst->inst.systems.size()) return record(OCP_ERR_RANGE, "no such system");
  return guarded([&] { *out = wrap(inst->inst.systems[i].second); });
}

ocp_status ocp_instance_meta(const ocp_instance* inst, char** out) {
  OCP_REQUIRE(inst && out);
  return guarded([&] { *out = copy_string(ocp::meta_text(inst->inst)); });
}

void ocp_instance_free(ocp_instance* inst) { delete inst; }

ocp_oracle_limits ocp_oracle_default_limits(void) {
  const ocp::OracleLimits d;
  return {d.max_vertices, d.max_edges, d.max_paths_enumerated};
}

ocp_status ocp_oracle(const ocp_graph* g, int a, int b, const ocp_oracle_limits* limits,
                      ocp_oracle_report* report, ocp_system** witness) {
  OCP_REQUIRE(g && report);
  return guarded([&] {
    ocp::OracleLimits l;
    if (limits != nullptr) {
      l.max_vertices = limits->max_vertices;
      l.max_edges = limits->max_edges;
      l.max_paths_enumerated = limits->max_paths;
    }
    ocp_oracle_report r{};
    r.path_count = ocp::enumerate_paths(g->g, a, b, l).size();
    r.kappa_e = ocp::brute_kappa_e(g->g, a, b, l);
    r.kappa_v = ocp::brute_kappa_v(g->g, a, b, l);
    auto oc = ocp::brute_max_oc(g->g, a, b, l);
    r.max_order_compatible = oc.value;
    r.min_total_edges =
        r.kappa_e == 0 ? -1 : ocp::brute_min_total_edges(g->g, a, b, r.kappa_e, l);
    *report = r;
    if (witness != nullptr) *witness = wrap(std::move(oc.witness));
  });
}

ocp_status ocp_corpus_run(uint64_t seed, int criterion, char** table, int* passed,
                          int* total) {
  OCP_REQUIRE(table);
  return guarded([&] {
    std::vector<ocp::CriterionResult> results;
    if (criterion == 0) {
      results = ocp::run_acceptance(seed);
    } else {
      results.push_back(ocp::run_criterion(criterion, seed));
    }
    int ok = 0;
    for (const auto& r : results) ok += r.passed ? 1 : 0;
    if (passed != nullptr) *passed = ok;
    if (total != nullptr) *total = static_cast<int>(results.size());
    *table = copy_string(ocp::corpus_table(results));
  });
}

}  // extern "C"
