#include "ocp/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <optional>
#include <sstream>

namespace ocp {

std::string_view error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kParse: return "ParseError";
    case ErrorKind::kRange: return "RangeError";
    case ErrorKind::kDuplicateEdgeId: return "DuplicateEdgeId";
    case ErrorKind::kUnknownEdge: return "UnknownEdge";
    case ErrorKind::kNotIncident: return "NotIncident";
    case ErrorKind::kRepeatedVertex: return "RepeatedVertex";
    case ErrorKind::kMixedEndpoints: return "MixedEndpoints";
    case ErrorKind::kSameEndpoints: return "SameEndpoints";
    case ErrorKind::kAdjacentEndpoints: return "AdjacentEndpoints";
    case ErrorKind::kBadParameters: return "BadParameters";
    case ErrorKind::kPreconditionFailed: return "PreconditionFailed";
    case ErrorKind::kInfeasible: return "Infeasible";
    case ErrorKind::kLimitExceeded: return "LimitExceeded";
    case ErrorKind::kForbiddenTooLarge: return "ForbiddenTooLarge";
    case ErrorKind::kSegmentBlocked: return "SegmentBlocked";
    case ErrorKind::kNothingFound: return "NothingFound";
    case ErrorKind::kMinimalityBreach: return "MinimalityBreach";
    case ErrorKind::kHypothesisViolated: return "HypothesisViolated";
    case ErrorKind::kEmptyFamily: return "EmptyFamily";
    case ErrorKind::kNotEdgeDisjoint: return "NotEdgeDisjoint";
    case ErrorKind::kBadSegmentFamily: return "BadSegmentFamily";
    case ErrorKind::kEndpointMismatch: return "EndpointMismatch";
    case ErrorKind::kNotATerminal: return "NotATerminal";
    case ErrorKind::kTerminalExists: return "TerminalExists";
    case ErrorKind::kNoTerminalAtLevel: return "NoTerminalAtLevel";
    case ErrorKind::kLevelExhausted: return "LevelExhausted";
    case ErrorKind::kInternal: return "Internal";
  }
  return "Unknown";
}

MultiGraph::MultiGraph(int vertex_count) {
  if (vertex_count < 0) fail(ErrorKind::kRange, "negative vertex count");
  incident_.resize(static_cast<std::size_t>(vertex_count));
}

int MultiGraph::add_edge(int u, int v) {
  if (!has_vertex(u) || !has_vertex(v)) {
    fail(ErrorKind::kRange, "edge endpoint out of range");
  }
  if (u == v) fail(ErrorKind::kParse, "loops are not allowed");
  const int id = edge_count();
  edges_.push_back({id, u, v});
  incident_[u].push_back(id);
  incident_[v].push_back(id);
  return id;
}

const Edge& MultiGraph::edge(int id) const {
  if (!has_edge(id)) {
    fail(ErrorKind::kUnknownEdge, "unknown edge " + std::to_string(id));
  }
  return edges_[id];
}

std::span<const int> MultiGraph::incident(int v) const {
  if (!has_vertex(v)) {
    fail(ErrorKind::kRange, "vertex " + std::to_string(v) + " out of range");
  }
  return incident_[v];
}

int MultiGraph::other_end(int id, int v) const {
  const Edge& e = edge(id);
  if (e.u == v) return e.v;
  if (e.v == v) return e.u;
  fail(ErrorKind::kNotIncident, "edge " + std::to_string(id) +
                                    " is not incident to vertex " +
                                    std::to_string(v));
}

bool MultiGraph::adjacent(int u, int v) const {
  for (int id : incident(u)) {
    if (other_end(id, u) == v) return true;
  }
  return false;
}

bool operator==(const MultiGraph& x, const MultiGraph& y) {
  if (x.vertex_count() != y.vertex_count()) return false;
  if (x.edge_count() != y.edge_count()) return false;
  for (int i = 0; i < x.edge_count(); ++i) {
    if (x.edges_[i].u != y.edges_[i].u || x.edges_[i].v != y.edges_[i].v) {
      return false;
    }
  }
  return true;
}

std::vector<int> validate_path(const MultiGraph& g, const OrientedPath& p) {
  if (!g.has_vertex(p.start)) {
    fail(ErrorKind::kRange,
         "path start " + std::to_string(p.start) + " out of range");
  }
  std::vector<int> vertices;
  vertices.reserve(p.edges.size() + 1);
  vertices.push_back(p.start);
  std::vector<char> seen(static_cast<std::size_t>(g.vertex_count()), 0);
  seen[p.start] = 1;
  int at = p.start;
  for (int id : p.edges) {
    const Edge& e = g.edge(id);
    int next;
    if (e.u == at) {
      next = e.v;
    } else if (e.v == at) {
      next = e.u;
    } else {
      fail(ErrorKind::kNotIncident, "edge " + std::to_string(id) +
                                        " does not continue from vertex " +
                                        std::to_string(at));
    }
    if (seen[next]) {
      fail(ErrorKind::kRepeatedVertex,
           "vertex " + std::to_string(next) + " visited twice");
    }
    seen[next] = 1;
    vertices.push_back(next);
    at = next;
  }
  return vertices;
}

int end_vertex(const MultiGraph& g, const OrientedPath& p) {
  int at = p.start;
  for (int id : p.edges) at = g.other_end(id, at);
  return at;
}

OrientedPath subpath(const OrientedPath& p, std::span<const int> vertices,
                     std::size_t from, std::size_t to) {
  OrientedPath out;
  out.start = vertices[from];
  out.edges.assign(p.edges.begin() + static_cast<std::ptrdiff_t>(from),
                   p.edges.begin() + static_cast<std::ptrdiff_t>(to));
  return out;
}

OrientedPath concat(const OrientedPath& head, const OrientedPath& tail) {
  OrientedPath out = head;
  out.edges.insert(out.edges.end(), tail.edges.begin(), tail.edges.end());
  return out;
}

OrientedPath path_through(const MultiGraph& g, std::span<const int> vertices) {
  OrientedPath out;
  out.start = vertices.front();
  for (std::size_t i = 0; i + 1 < vertices.size(); ++i) {
    int chosen = -1;
    for (int id : g.incident(vertices[i])) {
      if (g.other_end(id, vertices[i]) == vertices[i + 1]) {
        chosen = id;
        break;
      }
    }
    if (chosen < 0) {
      fail(ErrorKind::kNotIncident, "no edge between " +
                                        std::to_string(vertices[i]) + " and " +
                                        std::to_string(vertices[i + 1]));
    }
    out.edges.push_back(chosen);
  }
  return out;
}

std::map<std::size_t, PathSystem> partition_by_length(const PathSystem& s) {
  std::map<std::size_t, PathSystem> buckets;
  for (const OrientedPath& p : s.paths) {
    auto [it, inserted] = buckets.try_emplace(p.length());
    if (inserted) {
      it->second.source = s.source;
      it->second.sink = s.sink;
    }
    it->second.paths.push_back(p);
  }
  return buckets;
}

// --- Text formats -----------------------------------------------------------

namespace {

struct Line {
  int number = 0;
  std::vector<std::string_view> tokens;
};

std::vector<std::string_view> tokenize(std::string_view line) {
  if (auto hash = line.find('#'); hash != std::string_view::npos) {
    line = line.substr(0, hash);
  }
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) tokens.push_back(line.substr(i, j - i));
    i = j;
  }
  return tokens;
}

// Non-empty lines after comment stripping.
std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> out;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    auto tokens = tokenize(text.substr(pos, end - pos));
    if (!tokens.empty()) out.push_back({number, std::move(tokens)});
    if (end == text.size()) break;
    pos = end + 1;
  }
  return out;
}

int parse_int(std::string_view token, int line) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParseError(ErrorKind::kParse, line,
                     "expected an integer, got '" + std::string(token) + "'");
  }
  return value;
}

int parse_count(std::string_view token, int line) {
  int value = parse_int(token, line);
  if (value < 0) {
    throw ParseError(ErrorKind::kParse, line, "negative value not allowed");
  }
  return value;
}

void expect_tokens(const Line& l, std::size_t count, std::string_view keyword) {
  if (l.tokens.size() != count || l.tokens[0] != keyword) {
    throw ParseError(ErrorKind::kParse, l.number,
                     "expected '" + std::string(keyword) + "' line");
  }
}

}  // namespace

MultiGraph parse_graph(std::string_view text) {
  const auto lines = content_lines(text);
  if (lines.empty()) throw ParseError(ErrorKind::kParse, 1, "empty input");
  if (lines[0].tokens.size() != 2 || lines[0].tokens[0] != "ocg" ||
      lines[0].tokens[1] != "1") {
    throw ParseError(ErrorKind::kParse, lines[0].number, "expected 'ocg 1' header");
  }
  if (lines.size() < 3) {
    throw ParseError(ErrorKind::kParse, lines.back().number + 1,
                     "missing 'n' or 'm' line");
  }
  expect_tokens(lines[1], 2, "n");
  const int n = parse_count(lines[1].tokens[1], lines[1].number);
  expect_tokens(lines[2], 2, "m");
  const int m = parse_count(lines[2].tokens[1], lines[2].number);

  if (lines.size() - 3 != static_cast<std::size_t>(m)) {
    const int at = lines.size() - 3 < static_cast<std::size_t>(m)
                       ? lines.back().number + 1
                       : lines[3 + m].number;
    throw ParseError(ErrorKind::kParse, at,
                     "expected exactly " + std::to_string(m) + " edge lines");
  }

  std::vector<std::optional<std::pair<int, int>>> slots(static_cast<std::size_t>(m));
  for (std::size_t i = 3; i < lines.size(); ++i) {
    const Line& l = lines[i];
    expect_tokens(l, 4, "e");
    const int id = parse_count(l.tokens[1], l.number);
    const int u = parse_count(l.tokens[2], l.number);
    const int v = parse_count(l.tokens[3], l.number);
    if (id >= m) {
      throw ParseError(ErrorKind::kRange, l.number,
                       "edge id " + std::to_string(id) + " not below m");
    }
    if (u >= n || v >= n) {
      throw ParseError(ErrorKind::kRange, l.number,
                       "endpoint not below n=" + std::to_string(n));
    }
    if (u == v) throw ParseError(ErrorKind::kParse, l.number, "loop edge");
    if (slots[id]) {
      throw ParseError(ErrorKind::kDuplicateEdgeId, l.number,
                       "duplicate edge id " + std::to_string(id));
    }
    slots[id] = std::pair{u, v};
  }

  MultiGraph g(n);
  for (const auto& slot : slots) g.add_edge(slot->first, slot->second);
  return g;
}

std::string serialize_graph(const MultiGraph& g) {
  std::ostringstream out;
  out << "ocg 1\n"
      << "n " << g.vertex_count() << "\n"
      << "m " << g.edge_count() << "\n";
  for (const Edge& e : g.edges()) {
    out << "e " << e.id << ' ' << e.u << ' ' << e.v << "\n";
  }
  return out.str();
}

namespace {

OrientedPath path_from_tokens(const Line& l) {
  if (l.tokens.size() < 3 || l.tokens[0] != "path" || l.tokens[2] != ":") {
    throw ParseError(ErrorKind::kParse, l.number,
                     "expected 'path <start> : <edge ids>'");
  }
  OrientedPath p;
  p.start = parse_count(l.tokens[1], l.number);
  for (std::size_t i = 3; i < l.tokens.size(); ++i) {
    p.edges.push_back(parse_count(l.tokens[i], l.number));
  }
  return p;
}

}  // namespace

OrientedPath parse_path_line(std::string_view line, int line_number) {
  auto tokens = tokenize(line);
  return path_from_tokens({line_number, std::move(tokens)});
}

std::string serialize_path(const OrientedPath& p) {
  std::string out = "path " + std::to_string(p.start) + " :";
  for (int id : p.edges) {
    out += ' ';
    out += std::to_string(id);
  }
  return out;
}

PathSystem parse_system(std::string_view text) {
  const auto lines = content_lines(text);
  if (lines.empty()) throw ParseError(ErrorKind::kParse, 1, "empty input");
  expect_tokens(lines[0], 3, "system");
  PathSystem s;
  s.source = parse_count(lines[0].tokens[1], lines[0].number);
  s.sink = parse_count(lines[0].tokens[2], lines[0].number);
  if (s.source == s.sink) {
    throw ParseError(ErrorKind::kSameEndpoints, lines[0].number,
                     "source and sink must differ");
  }
  for (std::size_t i = 1; i < lines.size(); ++i) {
    s.paths.push_back(path_from_tokens(lines[i]));
  }
  return s;
}

std::string serialize_system(const PathSystem& s) {
  std::string out =
      "system " + std::to_string(s.source) + " " + std::to_string(s.sink) + "\n";
  for (const OrientedPath& p : s.paths) {
    out += serialize_path(p);
    out += '\n';
  }
  return out;
}

}  // namespace ocp
