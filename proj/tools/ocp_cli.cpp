// ocpath: command-line front end over the ocp C API.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ocp/ocp.h"

namespace {

enum Exit { kSuccess = 0, kPropertyFailure = 1, kUsage = 2, kInfeasible = 3 };

int exit_code(ocp_status s) {
  switch (s) {
    case OCP_OK:
      return kSuccess;
    case OCP_ERR_INFEASIBLE:
    case OCP_ERR_LIMIT_EXCEEDED:
    case OCP_ERR_FORBIDDEN_TOO_LARGE:
    case OCP_ERR_SEGMENT_BLOCKED:
    case OCP_ERR_NOTHING_FOUND:
    case OCP_ERR_TERMINAL_EXISTS:
    case OCP_ERR_NO_TERMINAL_AT_LEVEL:
    case OCP_ERR_LEVEL_EXHAUSTED:
      return kInfeasible;
    case OCP_ERR_PRECONDITION_FAILED:
    case OCP_ERR_MINIMALITY_BREACH:
    case OCP_ERR_HYPOTHESIS_VIOLATED:
    case OCP_ERR_NOT_EDGE_DISJOINT:
    case OCP_ERR_BAD_SEGMENT_FAMILY:
    case OCP_ERR_NOT_A_TERMINAL:
    case OCP_ERR_INTERNAL:
      return kPropertyFailure;
    default:
      return kUsage;
  }
}

// Thrown to unwind with a ready exit code; the message is already printed.
struct Stop {
  int code;
};

void check(ocp_status s) {
  if (s == OCP_OK) return;
  std::cerr << "error: " << ocp_status_name(s) << ": " << ocp_last_error() << '\n';
  throw Stop{exit_code(s)};
}

[[noreturn]] void usage(const std::string& message) {
  std::cerr << "error: " << message << '\n';
  throw Stop{kUsage};
}

struct GraphDeleter {
  void operator()(ocp_graph* g) const { ocp_graph_free(g); }
};
struct SystemDeleter {
  void operator()(ocp_system* s) const { ocp_system_free(s); }
};
struct InstanceDeleter {
  void operator()(ocp_instance* i) const { ocp_instance_free(i); }
};
using Graph = std::unique_ptr<ocp_graph, GraphDeleter>;
using System = std::unique_ptr<ocp_system, SystemDeleter>;
using Instance = std::unique_ptr<ocp_instance, InstanceDeleter>;

std::string take(char* s) {
  std::string out = s ? s : "";
  ocp_string_free(s);
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) usage("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) usage("cannot write " + path);
}

Graph load_graph(const std::string& path) {
  ocp_graph* g = nullptr;
  check(ocp_graph_parse(read_file(path).c_str(), &g));
  return Graph(g);
}

System load_system(const ocp_graph* g, const std::string& path) {
  ocp_system* s = nullptr;
  check(ocp_system_parse(g, read_file(path).c_str(), &s));
  return System(s);
}

void print_system(const ocp_system* s) {
  char* text = nullptr;
  check(ocp_system_serialize(s, &text));
  std::cout << take(text);
}

struct Options {
  std::string graph;
  std::vector<std::string> systems;
  std::optional<int> a, b, c;
  std::optional<int> k;
  std::optional<int> tau;
  std::optional<int> theta;
  std::optional<std::uint64_t> seed;
  std::string limits;
  std::string kind;
  std::string certificate;
  std::string out;
  int criterion = 0;
  int hit_cap = 0;
  int max_depth = 0;
  bool witness = false;
  std::optional<int> n, m, mult, segments, width, length, size, depth, extra;
};

int need(const std::optional<int>& v, const char* flag) {
  if (!v) usage(std::string("missing ") + flag);
  return *v;
}

int run_check(const Options& o) {
  const Graph g = load_graph(o.graph);
  const System s = load_system(g.get(), o.systems.at(0));
  if (!o.certificate.empty()) {
    std::istringstream lines(read_file(o.certificate));
    std::string line;
    bool all = true;
    while (std::getline(lines, line)) {
      if (line.empty()) continue;
      int holds = 0;
      check(ocp_certificate_holds(g.get(), s.get(), line.c_str(), &holds));
      std::cout << line << (holds ? " holds" : " does-not-hold") << '\n';
      all = all && holds;
    }
    return all ? kSuccess : kPropertyFailure;
  }
  int ok = 0;
  char* cert = nullptr;
  check(ocp_verify(g.get(), s.get(), &ok, &cert));
  const std::string line = take(cert);
  if (ok) {
    std::cout << "ok " << ocp_system_size(s.get()) << '\n';
    return kSuccess;
  }
  std::cout << line << '\n';
  return kPropertyFailure;
}

int run_kappa(const Options& o) {
  const Graph g = load_graph(o.graph);
  if (o.theta) {
    char* text = nullptr;
    check(ocp_auxiliary_graph(g.get(), *o.theta, &text));
    std::cout << take(text);
    return kSuccess;
  }
  const int a = need(o.a, "-a");
  const int b = need(o.b, "-b");
  int ke = 0, kv = 0;
  ocp_system* we = nullptr;
  ocp_system* wv = nullptr;
  check(ocp_kappa_e(g.get(), a, b, &ke, &we));
  const System witness_e(we);
  check(ocp_kappa_v(g.get(), a, b, &kv, &wv));
  const System witness_v(wv);
  std::cout << "kappa_e " << ke << '\n' << "kappa_v " << kv << '\n';
  int* sep = nullptr;
  std::size_t count = 0;
  const ocp_status s = ocp_separator(g.get(), a, b, &sep, &count);
  if (s == OCP_ERR_ADJACENT_ENDPOINTS) {
    std::cout << "separator adjacent\n";
  } else {
    check(s);
    std::cout << "separator";
    for (std::size_t i = 0; i < count; ++i) std::cout << ' ' << sep[i];
    std::cout << '\n';
    ocp_ints_free(sep);
  }
  if (o.witness) {
    print_system(witness_e.get());
    print_system(witness_v.get());
  }
  return kSuccess;
}

int run_dirac(const Options& o) {
  const Graph g = load_graph(o.graph);
  ocp_system* out = nullptr;
  std::int64_t total = 0, cost = 0;
  const std::uint64_t seed = o.seed.value_or(0);
  check(ocp_dirac(g.get(), need(o.a, "-a"), need(o.b, "-b"), o.k.value_or(0),
                  o.seed ? &seed : nullptr, &out, &total, &cost));
  const System s(out);
  print_system(s.get());
  std::cout << "total_edges " << total << '\n';
  return kSuccess;
}

int run_backbone(const Options& o, bool weave) {
  const Graph g = load_graph(o.graph);
  const System family = load_system(g.get(), o.systems.at(0));
  char* line = nullptr;
  ocp_system* out = nullptr;
  if (weave) {
    check(ocp_weave(g.get(), family.get(), need(o.tau, "--tau"), need(o.k, "-k"), &line, &out));
  } else {
    check(ocp_backbone(g.get(), family.get(), need(o.tau, "--tau"), &line, &out));
  }
  const System s(out);
  std::cout << take(line) << '\n';
  print_system(s.get());
  return kSuccess;
}

int run_compose(const Options& o) {
  if (o.systems.size() != 2) usage("compose takes two --system files (P then Q)");
  const Graph g = load_graph(o.graph);
  const System p = load_system(g.get(), o.systems[0]);
  const System q = load_system(g.get(), o.systems[1]);
  if ((o.a && *o.a != ocp_system_source(p.get())) ||
      (o.b && *o.b != ocp_system_sink(p.get())) ||
      (o.c && *o.c != ocp_system_sink(q.get()))) {
    usage("-a/-b/-c do not match the systems' endpoints");
  }
  ocp_system* out = nullptr;
  char* report = nullptr;
  check(ocp_compose(g.get(), p.get(), q.get(), o.hit_cap, o.max_depth, &out, &report));
  const System s(out);
  std::cout << take(report);
  print_system(s.get());
  return kSuccess;
}

int run_gen(const Options& o) {
  ocp_gen_kind kind{};
  check(ocp_gen_kind_parse(o.kind.c_str(), &kind));
  ocp_gen_params p = ocp_gen_defaults(kind);
  p.seed = o.seed.value_or(p.seed);
  p.n = o.n.value_or(p.n);
  p.m = o.m.value_or(p.m);
  p.multiplicity = o.mult.value_or(p.multiplicity);
  p.segments = o.segments.value_or(p.segments);
  p.width = o.width.value_or(p.width);
  p.seg_length = o.length.value_or(p.seg_length);
  p.size = o.size.value_or(o.k.value_or(p.size));
  p.depth = o.depth.value_or(p.depth);
  p.extra = o.extra.value_or(p.extra);

  ocp_instance* raw = nullptr;
  check(ocp_generate(&p, &raw));
  const Instance inst(raw);
  ocp_graph* gr = nullptr;
  check(ocp_instance_graph(inst.get(), &gr));
  const Graph g(gr);
  char* text = nullptr;
  check(ocp_graph_serialize(g.get(), &text));
  const std::string graph = take(text);
  check(ocp_instance_meta(inst.get(), &text));
  const std::string meta = take(text);

  if (o.out.empty()) {
    std::cout << graph;
    return kSuccess;
  }
  write_file(o.out + ".ocg", graph);
  write_file(o.out + ".meta", meta);
  std::cout << o.out << ".ocg\n" << o.out << ".meta\n";
  for (std::size_t i = 0; i < ocp_instance_system_count(inst.get()); ++i) {
    ocp_system* sys = nullptr;
    check(ocp_instance_system(inst.get(), i, &sys));
    const System s(sys);
    check(ocp_system_serialize(s.get(), &text));
    const std::string path = o.out + "." + ocp_instance_system_name(inst.get(), i) + ".txt";
    write_file(path, take(text));
    std::cout << path << '\n';
  }
  return kSuccess;
}

int run_oracle(const Options& o) {
  const Graph g = load_graph(o.graph);
  ocp_oracle_limits limits = ocp_oracle_default_limits();
  if (!o.limits.empty()) {
    char comma1 = 0, comma2 = 0;
    long long paths = 0;
    std::istringstream in(o.limits);
    if (!(in >> limits.max_vertices >> comma1 >> limits.max_edges >> comma2 >> paths) ||
        comma1 != ',' || comma2 != ',' || paths < 0 || !(in >> std::ws).eof()) {
      usage("--limits expects n,m,paths");
    }
    limits.max_paths = static_cast<std::size_t>(paths);
  }
  ocp_oracle_report r{};
  ocp_system* w = nullptr;
  check(ocp_oracle(g.get(), need(o.a, "-a"), need(o.b, "-b"), &limits, &r, &w));
  const System witness(w);
  std::cout << "paths " << r.path_count << '\n'
            << "kappa_e " << r.kappa_e << '\n'
            << "kappa_v " << r.kappa_v << '\n'
            << "max_oc " << r.max_order_compatible << '\n'
            << "min_total_edges " << r.min_total_edges << '\n';
  if (o.witness) print_system(witness.get());
  return kSuccess;
}

int run_corpus(const Options& o) {
  char* table = nullptr;
  int passed = 0, total = 0;
  check(ocp_corpus_run(o.seed.value_or(1), o.criterion, &table, &passed, &total));
  std::cout << take(table);
  return passed == total ? kSuccess : kPropertyFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Order-compatible path systems in multigraphs"};
  app.require_subcommand(1);
  Options o;

  const auto graph = [&](CLI::App* sub) {
    sub->add_option("--graph", o.graph, "ocg graph file")->required();
  };
  const auto system = [&](CLI::App* sub, const char* help) {
    sub->add_option("--system", o.systems, help)->required();
  };
  const auto ends = [&](CLI::App* sub) {
    sub->add_option("-a", o.a, "source vertex");
    sub->add_option("-b", o.b, "sink vertex");
  };

  auto* c_check = app.add_subcommand("check", "verify a path system");
  graph(c_check);
  system(c_check, "path system file");
  c_check->add_option("--certificate", o.certificate, "re-check certificate lines");

  auto* c_kappa = app.add_subcommand("kappa", "edge and vertex connectivity");
  graph(c_kappa);
  ends(c_kappa);
  c_kappa->add_option("--theta", o.theta, "print the auxiliary graph at this threshold");
  c_kappa->add_flag("--witness", o.witness, "print witness systems");

  auto* c_dirac = app.add_subcommand("dirac", "minimum-total-edge system");
  graph(c_dirac);
  ends(c_dirac);
  c_dirac->add_option("-k", o.k, "number of paths (default: kappa_e)");
  c_dirac->add_option("--seed", o.seed, "randomize decomposition tie-breaks");

  auto* c_backbone = app.add_subcommand("backbone", "extract a backbone from a family");
  graph(c_backbone);
  system(c_backbone, "edge-disjoint family");
  c_backbone->add_option("--tau", o.tau, "connectivity floor")->required();

  auto* c_weave = app.add_subcommand("weave", "weave paths along an extracted backbone");
  graph(c_weave);
  system(c_weave, "edge-disjoint family");
  c_weave->add_option("--tau", o.tau, "connectivity floor")->required();
  c_weave->add_option("-k", o.k, "paths wanted")->required();

  auto* c_compose = app.add_subcommand("compose", "compose an a-b and a b-c system");
  graph(c_compose);
  system(c_compose, "P (a->b) then Q (b->c)");
  ends(c_compose);
  c_compose->add_option("-c", o.c, "target vertex");
  c_compose->add_option("--hit-cap", o.hit_cap, "cascade hitting cap");
  c_compose->add_option("--depth", o.max_depth, "cascade depth limit");

  auto* c_gen = app.add_subcommand("gen", "generate a seeded instance");
  c_gen->add_option("--kind", o.kind,
                    "random, backbone, terminal_rich, terminal_free, cascade, weave, lift")
      ->required();
  c_gen->add_option("--seed", o.seed, "seed");
  c_gen->add_option("-k", o.k, "same as --size");
  c_gen->add_option("--n", o.n, "vertices (random)");
  c_gen->add_option("--m", o.m, "edges (random)");
  c_gen->add_option("--mult", o.mult, "multiplicity cap (random)");
  c_gen->add_option("--segments", o.segments, "backbone segments");
  c_gen->add_option("--width", o.width, "paths per segment");
  c_gen->add_option("--length", o.length, "segment length");
  c_gen->add_option("--size", o.size, "family size or cascade width");
  c_gen->add_option("--depth", o.depth, "cascade depth");
  c_gen->add_option("--extra", o.extra, "merges (weave) or noise edges (lift)");
  c_gen->add_option("--out", o.out, "write <out>.ocg, <out>.meta and systems");

  auto* c_oracle = app.add_subcommand("oracle", "exhaustive reference values");
  graph(c_oracle);
  ends(c_oracle);
  c_oracle->add_option("--limits", o.limits, "n,m,paths");
  c_oracle->add_flag("--witness", o.witness, "print a largest order-compatible system");

  auto* c_corpus = app.add_subcommand("corpus", "run the acceptance sweep");
  c_corpus->add_option("--seed", o.seed, "corpus seed");
  c_corpus->add_option("--criterion", o.criterion, "run one criterion (1-8)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kSuccess : kUsage;
  }

  try {
    if (c_check->parsed()) return run_check(o);
    if (c_kappa->parsed()) return run_kappa(o);
    if (c_dirac->parsed()) return run_dirac(o);
    if (c_backbone->parsed()) return run_backbone(o, false);
    if (c_weave->parsed()) return run_backbone(o, true);
    if (c_compose->parsed()) return run_compose(o);
    if (c_gen->parsed()) return run_gen(o);
    if (c_oracle->parsed()) return run_oracle(o);
    if (c_corpus->parsed()) return run_corpus(o);
  } catch (const Stop& s) {
    return s.code;
  }
  return kUsage;
}
