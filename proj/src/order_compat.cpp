#include "ocp/order_compat.hpp"

#include <algorithm>
#include <sstream>

namespace ocp {

namespace {

// Position map over vertex ids, reset after each use.
class PositionMap {
 public:
  explicit PositionMap(int vertex_count)
      : pos_(static_cast<std::size_t>(vertex_count), -1) {}

  void load(std::span<const int> seq) {
    clear();
    for (std::size_t i = 0; i < seq.size(); ++i) pos_[seq[i]] = static_cast<int>(i);
    loaded_.assign(seq.begin(), seq.end());
  }
  void clear() {
    for (int v : loaded_) pos_[v] = -1;
    loaded_.clear();
  }
  int operator[](int v) const { return pos_[v]; }

 private:
  std::vector<int> pos_;
  std::vector<int> loaded_;
};

std::optional<std::pair<int, int>> inversion_against(const PositionMap& pos_p,
                                                     std::span<const int> q) {
  int best = -1;
  for (std::size_t j = 0; j < q.size(); ++j) {
    const int pj = pos_p[q[j]];
    if (pj < 0) continue;
    if (pj < best) {
      // q[j] is the first vertex q reaches out of p's order. Report it
      // against the earliest q-vertex that p visits after it.
      for (std::size_t i = 0; i < j; ++i) {
        if (pos_p[q[i]] > pj) return std::pair{q[j], q[i]};
      }
    }
    best = std::max(best, pj);
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::pair<int, int>> first_inversion(std::span<const int> p,
                                                   std::span<const int> q,
                                                   int vertex_count) {
  PositionMap pos(vertex_count);
  pos.load(p);
  return inversion_against(pos, q);
}

OrderCheck is_order_compatible(const MultiGraph& g, const OrientedPath& p,
                               const OrientedPath& q) {
  const auto vp = validate_path(g, p);
  const auto vq = validate_path(g, q);
  OrderCheck check;
  if (auto inv = first_inversion(vp, vq, g.vertex_count())) {
    check.compatible = false;
    check.certificate = InversionCertificate{inv->first, inv->second, 0, 1};
  }
  return check;
}

VerificationReport verify_system(const MultiGraph& g, const PathSystem& s) {
  std::vector<std::vector<int>> seqs;
  seqs.reserve(s.paths.size());
  for (const auto& p : s.paths) {
    seqs.push_back(validate_path(g, p));
    if (seqs.back().front() != s.source || seqs.back().back() != s.sink) {
      fail(ErrorKind::kMixedEndpoints,
           "path " + std::to_string(seqs.size() - 1) + " does not run from " +
               std::to_string(s.source) + " to " + std::to_string(s.sink));
    }
  }

  VerificationReport report;
  PositionMap pos(g.vertex_count());
  std::vector<int> edge_mark(static_cast<std::size_t>(g.edge_count()), -1);
  const int k = static_cast<int>(s.paths.size());
  for (int i = 0; i < k; ++i) {
    for (int id : s.paths[i].edges) edge_mark[id] = i;
    pos.load(seqs[i]);
    for (int j = i + 1; j < k; ++j) {
      int shared = -1;
      for (int id : s.paths[j].edges) {
        if (edge_mark[id] == i && (shared < 0 || id < shared)) shared = id;
      }
      const auto inv = inversion_against(pos, seqs[j]);
      if (shared >= 0) report.edge_disjoint = false;
      if (inv) report.order_compatible = false;
      if (report.certificate) continue;
      if (shared >= 0) {
        report.certificate = SharedEdgeCertificate{shared, i, j};
      } else if (inv) {
        report.certificate = InversionCertificate{inv->first, inv->second, i, j};
      }
    }
  }
  return report;
}

std::string certificate_line(const Certificate& c) {
  std::ostringstream out;
  if (const auto* e = std::get_if<SharedEdgeCertificate>(&c)) {
    out << "sharededge " << e->edge_id << ' ' << e->first_path << ' '
        << e->second_path;
  } else {
    const auto& inv = std::get<InversionCertificate>(c);
    out << "inv " << inv.x << ' ' << inv.y << ' ' << inv.first_path << ' '
        << inv.second_path;
  }
  return out.str();
}

Certificate parse_certificate_line(std::string_view line) {
  std::istringstream in{std::string(line)};
  std::string keyword;
  in >> keyword;
  if (keyword == "sharededge") {
    SharedEdgeCertificate c;
    if (in >> c.edge_id >> c.first_path >> c.second_path) return c;
  } else if (keyword == "inv") {
    InversionCertificate c;
    if (in >> c.x >> c.y >> c.first_path >> c.second_path) return c;
  }
  throw ParseError(ErrorKind::kParse, 1, "malformed certificate line");
}

bool certificate_holds(const MultiGraph& g, const PathSystem& s,
                       const Certificate& c) {
  const auto in_range = [&](int i) {
    return i >= 0 && i < static_cast<int>(s.paths.size());
  };
  if (const auto* e = std::get_if<SharedEdgeCertificate>(&c)) {
    if (!in_range(e->first_path) || !in_range(e->second_path) ||
        e->first_path == e->second_path) {
      return false;
    }
    const auto has = [&](int i) {
      const auto& edges = s.paths[i].edges;
      return std::find(edges.begin(), edges.end(), e->edge_id) != edges.end();
    };
    return has(e->first_path) && has(e->second_path);
  }
  const auto& inv = std::get<InversionCertificate>(c);
  if (!in_range(inv.first_path) || !in_range(inv.second_path)) return false;
  const auto index_in = [&](const std::vector<int>& seq, int v) {
    auto it = std::find(seq.begin(), seq.end(), v);
    return it == seq.end() ? -1 : static_cast<int>(it - seq.begin());
  };
  const auto first = validate_path(g, s.paths[inv.first_path]);
  const auto second = validate_path(g, s.paths[inv.second_path]);
  const int fx = index_in(first, inv.x), fy = index_in(first, inv.y);
  const int sx = index_in(second, inv.x), sy = index_in(second, inv.y);
  return fx >= 0 && fy >= 0 && sx >= 0 && sy >= 0 && fx < fy && sy < sx;
}

// --- Guarded concatenation ----------------------------------------------------

std::string_view hypothesis_name(Hypothesis h) {
  switch (h) {
    case Hypothesis::kPrefixesCompatible: return "prefixes-compatible";
    case Hypothesis::kSuffixesCompatible: return "suffixes-compatible";
    case Hypothesis::kIntersectionAtU: return "intersection-at-u";
    case Hypothesis::kIntersectionAtV: return "intersection-at-v";
    case Hypothesis::kCrossAtU: return "cross-at-u";
    case Hypothesis::kCrossAtV: return "cross-at-v";
  }
  return "unknown";
}

namespace {

bool share_edge(const OrientedPath& p, const OrientedPath& q) {
  for (int e : p.edges) {
    if (std::find(q.edges.begin(), q.edges.end(), e) != q.edges.end()) return true;
  }
  return false;
}

// Common vertices of two sequences, excluding `allowed`.
bool meet_outside(std::span<const int> x, std::span<const int> y, int allowed) {
  for (int v : x) {
    if (v == allowed) continue;
    if (std::find(y.begin(), y.end(), v) != y.end()) return true;
  }
  return false;
}

}  // namespace

ConcatenatedPair concatenate_pair(const MultiGraph& g,
                                  const OrientedPath& prefix_u,
                                  const OrientedPath& prefix_v,
                                  const OrientedPath& suffix_u,
                                  const OrientedPath& suffix_v) {
  const auto pu = validate_path(g, prefix_u);
  const auto pv = validate_path(g, prefix_v);
  const auto qu = validate_path(g, suffix_u);
  const auto qv = validate_path(g, suffix_v);
  const int a = pu.front();
  const int u = pu.back();
  const int v = pv.back();
  const int c = qu.back();
  if (pv.front() != a || qu.front() != u || qv.front() != v || qv.back() != c) {
    fail(ErrorKind::kEndpointMismatch,
         "legs do not line up as a->u, a->v, u->c, v->c");
  }
  if (a == c) fail(ErrorKind::kEndpointMismatch, "a and c must differ");

  const int n = g.vertex_count();
  if (share_edge(prefix_u, prefix_v) || first_inversion(pu, pv, n)) {
    throw HypothesisViolated(Hypothesis::kPrefixesCompatible);
  }
  if (share_edge(suffix_u, suffix_v) || first_inversion(qu, qv, n)) {
    throw HypothesisViolated(Hypothesis::kSuffixesCompatible);
  }
  if (meet_outside(pu, qu, u)) throw HypothesisViolated(Hypothesis::kIntersectionAtU);
  if (meet_outside(pv, qv, v)) throw HypothesisViolated(Hypothesis::kIntersectionAtV);
  if (meet_outside(pu, qv, u)) throw HypothesisViolated(Hypothesis::kCrossAtU);
  if (meet_outside(pv, qu, v)) throw HypothesisViolated(Hypothesis::kCrossAtV);

  ConcatenatedPair out{concat(prefix_u, suffix_u), concat(prefix_v, suffix_v)};
  const PathSystem pair{a, c, {out.first, out.second}};
  if (out.first == out.second || !verify_system(g, pair).ok()) {
    fail(ErrorKind::kInternal, "concatenation produced an incompatible pair");
  }
  return out;
}

}  // namespace ocp
