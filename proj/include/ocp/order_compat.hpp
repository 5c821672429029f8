#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "ocp/graph.hpp"

namespace ocp {

// The first path visits x strictly before y, the second visits y strictly
// before x.
struct InversionCertificate {
  int x = 0;
  int y = 0;
  int first_path = 0;
  int second_path = 1;
  friend bool operator==(const InversionCertificate&,
                         const InversionCertificate&) = default;
};

struct SharedEdgeCertificate {
  int edge_id = 0;
  int first_path = 0;
  int second_path = 1;
  friend bool operator==(const SharedEdgeCertificate&,
                         const SharedEdgeCertificate&) = default;
};

using Certificate = std::variant<SharedEdgeCertificate, InversionCertificate>;

struct OrderCheck {
  bool compatible = true;
  std::optional<InversionCertificate> certificate;
};

struct VerificationReport {
  bool edge_disjoint = true;
  bool order_compatible = true;
  std::optional<Certificate> certificate;

  bool ok() const { return edge_disjoint && order_compatible; }
};

// Works on vertex sequences. Returns the first inversion in q's traversal
// order as (x, y): p visits x before y, q visits y before x. `vertex_count`
// bounds the vertex ids.
std::optional<std::pair<int, int>> first_inversion(std::span<const int> p,
                                                   std::span<const int> q,
                                                   int vertex_count);

// Paths may have different endpoints; each is read in its own orientation.
OrderCheck is_order_compatible(const MultiGraph& g, const OrientedPath& p,
                               const OrientedPath& q);

VerificationReport verify_system(const MultiGraph& g, const PathSystem& s);

// `inv <x> <y> <i> <j>` or `sharededge <eid> <i> <j>`.
std::string certificate_line(const Certificate& c);
Certificate parse_certificate_line(std::string_view line);

// Re-checks a certificate against the system it was issued for.
bool certificate_holds(const MultiGraph& g, const PathSystem& s,
                       const Certificate& c);

// --- Guarded concatenation ----------------------------------------------------

enum class Hypothesis {
  kPrefixesCompatible,   // {aPu, aP'v} edge-disjoint and order-compatible
  kSuffixesCompatible,   // {uQc, vQ'c} edge-disjoint and order-compatible
  kIntersectionAtU,      // V(aPu) ∩ V(uQc) = {u}
  kIntersectionAtV,      // V(aP'v) ∩ V(vQ'c) = {v}
  kCrossAtU,             // V(aPu) ∩ V(vQ'c) ⊆ {u}
  kCrossAtV,             // V(aP'v) ∩ V(uQc) ⊆ {v}
};

std::string_view hypothesis_name(Hypothesis h);

class HypothesisViolated : public Error {
 public:
  explicit HypothesisViolated(Hypothesis h)
      : Error(ErrorKind::kHypothesisViolated,
              "hypothesis violated: " + std::string(hypothesis_name(h))),
        hypothesis_(h) {}

  Hypothesis hypothesis() const { return hypothesis_; }

 private:
  Hypothesis hypothesis_;
};

struct ConcatenatedPair {
  OrientedPath first;   // aPu followed by uQc
  OrientedPath second;  // aP'v followed by vQ'c
};

// Checks every hypothesis (in the order of the Hypothesis enum, reporting the
// first failure), joins the two pairs and re-verifies that the results are
// distinct, edge-disjoint and order-compatible a-c paths.
ConcatenatedPair concatenate_pair(const MultiGraph& g,
                                  const OrientedPath& prefix_u,
                                  const OrientedPath& prefix_v,
                                  const OrientedPath& suffix_u,
                                  const OrientedPath& suffix_v);

}  // namespace ocp
