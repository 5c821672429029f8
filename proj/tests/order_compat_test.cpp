#include <gtest/gtest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "ocp/gen.hpp"
#include "ocp/oracle.hpp"
#include "ocp/order_compat.hpp"

using namespace ocp;

namespace {

long position(const std::vector<int>& seq, int v) {
  const auto it = std::find(seq.begin(), seq.end(), v);
  return it == seq.end() ? -1 : it - seq.begin();
}

TEST(OrderCompat, PathWithItself) {
  const auto g = fixtures::crossing();
  const auto p = fixtures::path(g, {0, 1, 2, 3});
  EXPECT_TRUE(is_order_compatible(g, p, p).compatible);
}

TEST(OrderCompat, CrossingPair) {
  const auto g = fixtures::crossing();
  const OrientedPath p{0, {0, 2, 5}};  // a-u-v-b
  const OrientedPath q{0, {1, 3, 4}};  // a-v-u-b
  const auto r = is_order_compatible(g, p, q);
  EXPECT_FALSE(r.compatible);
  ASSERT_TRUE(r.certificate);
  EXPECT_EQ(r.certificate->x, 1);
  EXPECT_EQ(r.certificate->y, 2);
}

TEST(OrderCompat, MeetingOnlyAtEnds) {
  const auto g = fixtures::theta();
  EXPECT_TRUE(is_order_compatible(g, fixtures::path(g, {0, 2, 1}), fixtures::path(g, {0, 3, 1}))
                  .compatible);
}

TEST(OrderCompat, OppositeOrientationsAreReadAsGiven) {
  const auto g = fixtures::graph(3, {{0, 1}, {1, 2}});
  const OrientedPath forward{0, {0, 1}};
  const OrientedPath backward{2, {1, 0}};
  EXPECT_FALSE(is_order_compatible(g, forward, backward).compatible);
}

TEST(FirstInversion, OnVertexSequences) {
  const std::vector<int> p{0, 1, 2, 3, 4};
  EXPECT_FALSE(first_inversion(p, std::vector<int>{0, 2, 4}, 5));
  const auto inv = first_inversion(p, std::vector<int>{0, 3, 1, 4}, 5);
  ASSERT_TRUE(inv);
  EXPECT_EQ(*inv, std::pair(1, 3));
}

TEST(Verify, InternallyDisjointFan) {
  const auto g = fixtures::graph(6, {{0, 2}, {2, 1}, {0, 3}, {3, 1}, {0, 4}, {4, 1}, {0, 1}});
  const auto s = fixtures::system(0, 1,
                                  {fixtures::path(g, {0, 2, 1}), fixtures::path(g, {0, 3, 1}),
                                   fixtures::path(g, {0, 4, 1}), fixtures::path(g, {0, 1})});
  const auto r = verify_system(g, s);
  EXPECT_TRUE(r.edge_disjoint);
  EXPECT_TRUE(r.order_compatible);
  EXPECT_FALSE(r.certificate);
}

TEST(Verify, CrossingPairCertificate) {
  const auto g = fixtures::crossing();
  const PathSystem s{0, 3, {{0, {0, 2, 5}}, {0, {1, 3, 4}}}};
  const auto r = verify_system(g, s);
  EXPECT_TRUE(r.edge_disjoint);
  EXPECT_FALSE(r.order_compatible);
  ASSERT_TRUE(r.certificate);
  EXPECT_EQ(certificate_line(*r.certificate), "inv 1 2 0 1");
  EXPECT_TRUE(certificate_holds(g, s, *r.certificate));
}

TEST(Verify, SharedEdgeCertificate) {
  const auto g = fixtures::graph(5, {{0, 2}, {0, 3}, {2, 4}, {3, 4}, {4, 1}});
  const PathSystem s{0, 1, {fixtures::path(g, {0, 2, 4, 1}), fixtures::path(g, {0, 3, 4, 1})}};
  const auto r = verify_system(g, s);
  EXPECT_FALSE(r.edge_disjoint);
  ASSERT_TRUE(r.certificate);
  EXPECT_EQ(certificate_line(*r.certificate), "sharededge 4 0 1");
}

TEST(Verify, MixedEndpoints) {
  const auto g = fixtures::theta();
  const PathSystem s{0, 1, {fixtures::path(g, {0, 2})}};
  try {
    verify_system(g, s);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kMixedEndpoints);
  }
}

TEST(Certificates, LineRoundTrip) {
  const Certificate a = InversionCertificate{4, 7, 0, 2};
  const Certificate b = SharedEdgeCertificate{3, 1, 5};
  EXPECT_EQ(parse_certificate_line(certificate_line(a)), a);
  EXPECT_EQ(parse_certificate_line(certificate_line(b)), b);
  EXPECT_THROW(parse_certificate_line("inv 1 2"), ParseError);
  EXPECT_THROW(parse_certificate_line("cross 1 2 3 4"), ParseError);
}

TEST(Certificates, FalseClaimsDoNotHold) {
  const auto g = fixtures::theta();
  const PathSystem s{0, 1, {fixtures::path(g, {0, 2, 1}), fixtures::path(g, {0, 3, 1})}};
  EXPECT_FALSE(certificate_holds(g, s, InversionCertificate{0, 1, 0, 1}));
  EXPECT_FALSE(certificate_holds(g, s, SharedEdgeCertificate{1, 0, 1}));
  EXPECT_FALSE(certificate_holds(g, s, SharedEdgeCertificate{1, 0, 7}));
}

TEST(OrderCompatProperties, SymmetricAndSound) {
  Rng rng(31);
  int incompatible = 0;
  for (int t = 0; t < 80; ++t) {
    const auto g = gen_random_multigraph(6, 11, 2, rng.next());
    const auto paths = enumerate_paths(g, 0, 5);
    for (std::size_t i = 0; i < paths.size(); ++i) {
      for (std::size_t j = 0; j < paths.size(); ++j) {
        const auto vp = validate_path(g, paths[i]);
        const auto vq = validate_path(g, paths[j]);
        const auto pq = is_order_compatible(g, paths[i], paths[j]);
        const auto qp = is_order_compatible(g, paths[j], paths[i]);
        EXPECT_EQ(pq.compatible, qp.compatible);
        long shared = 0;
        for (int v : vp) shared += position(vq, v) >= 0 ? 1 : 0;
        if (shared <= 1) EXPECT_TRUE(pq.compatible);
        if (pq.certificate) {
          ++incompatible;
          const auto [x, y] = std::pair(pq.certificate->x, pq.certificate->y);
          EXPECT_LT(position(vp, x), position(vp, y));
          EXPECT_LT(position(vq, y), position(vq, x));
          EXPECT_GE(position(vq, y), 0);
        }
      }
    }
  }
  EXPECT_GT(incompatible, 0);
}

TEST(Concatenate, StarAtB) {
  // a=0, b=1, c=2; legs a-3-b, a-4-b, b-5-c, b-6-c.
  const auto g = fixtures::graph(7, {{0, 3}, {3, 1}, {0, 4}, {4, 1}, {1, 5}, {5, 2}, {1, 6}, {6, 2}});
  const auto out = concatenate_pair(g, fixtures::path(g, {0, 3, 1}), fixtures::path(g, {0, 4, 1}),
                                    fixtures::path(g, {1, 5, 2}), fixtures::path(g, {1, 6, 2}));
  EXPECT_EQ(validate_path(g, out.first), (std::vector<int>{0, 3, 1, 5, 2}));
  EXPECT_EQ(validate_path(g, out.second), (std::vector<int>{0, 4, 1, 6, 2}));
  EXPECT_TRUE(verify_system(g, PathSystem{0, 2, {out.first, out.second}}).ok());
}

TEST(Concatenate, PrefixReentersSuffix) {
  // a=0, u=1, c=2, x=3, v=4, y=5, z=6. aPu = a-x-u, uQc = u-x-c over a
  // parallel u-x edge.
  const auto g = fixtures::graph(7, {{0, 3}, {3, 1}, {1, 3}, {3, 2}, {0, 5}, {5, 4}, {4, 6}, {6, 2}});
  try {
    concatenate_pair(g, {0, {0, 1}}, {0, {4, 5}}, {1, {2, 3}}, {4, {6, 7}});
    FAIL();
  } catch (const HypothesisViolated& e) {
    EXPECT_EQ(e.hypothesis(), Hypothesis::kIntersectionAtU);
    EXPECT_EQ(e.kind(), ErrorKind::kHypothesisViolated);
  }
}

TEST(Concatenate, GeneratedQuadruples) {
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    const auto q = gen_quadruple(std::nullopt, seed);
    const auto out = concatenate_pair(q.graph, q.prefix_u, q.prefix_v, q.suffix_u, q.suffix_v);
    const int a = q.prefix_u.start;
    const int c = end_vertex(q.graph, q.suffix_u);
    EXPECT_TRUE(verify_system(q.graph, PathSystem{a, c, {out.first, out.second}}).ok());
    EXPECT_FALSE(out.first == out.second);
  }
}

TEST(Concatenate, EachViolationIsNamed) {
  const Hypothesis all[] = {Hypothesis::kPrefixesCompatible, Hypothesis::kSuffixesCompatible,
                            Hypothesis::kIntersectionAtU,    Hypothesis::kIntersectionAtV,
                            Hypothesis::kCrossAtU,           Hypothesis::kCrossAtV};
  for (Hypothesis h : all) {
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
      const auto q = gen_quadruple(h, seed);
      ASSERT_EQ(q.violated, h);
      try {
        concatenate_pair(q.graph, q.prefix_u, q.prefix_v, q.suffix_u, q.suffix_v);
        ADD_FAILURE() << hypothesis_name(h) << " accepted, seed " << seed;
      } catch (const HypothesisViolated& e) {
        EXPECT_EQ(e.hypothesis(), h) << "seed " << seed;
      }
    }
  }
}

}  // namespace
