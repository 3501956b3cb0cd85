#include "hypersparse/evaluate.hpp"
#include "hypersparse/sketch.hpp"
#include "support/instances.hpp"

#include <gtest/gtest.h>

#include <cmath>

namespace hs = hypersparse;
using hs::CutSet;

namespace {

hs::UndirectedHypergraph<double> graph(int n, std::vector<std::vector<int>> edges) {
  hs::UndirectedHypergraph<double> h(n);
  for (auto& e : edges) h.add_edge(std::move(e));
  return h;
}

std::vector<hs::UndirectedHypergraph<double>> random_family(hstest::Engine& g, int n, int k) {
  std::vector<hs::UndirectedHypergraph<double>> out;
  for (int i = 0; i < k; ++i)
    out.push_back(hstest::random_undirected(g, n, hstest::uniform_int(g, 0, n), 1.0, true));
  return out;
}

}  // namespace

TEST(EncodeMulti, Examples) {
  const auto a = hs::encode_multi({graph(2, {{0, 1}}), graph(2, {})});
  EXPECT_EQ(a.graph.n, 4);
  ASSERT_EQ(a.graph.edges.size(), 1u);
  EXPECT_EQ(a.graph.edges[0].tail, (std::vector<int>{0, 1}));
  EXPECT_EQ(a.graph.edges[0].head, (std::vector<int>{2}));

  const auto b = hs::encode_multi({graph(2, {{0, 1}}), graph(2, {{0, 1}})});
  ASSERT_EQ(b.graph.edges.size(), 2u);
  EXPECT_EQ(b.graph.edges[0].head, (std::vector<int>{2}));
  EXPECT_EQ(b.graph.edges[1].head, (std::vector<int>{3}));

  const auto c = hs::encode_multi({graph(3, {{0, 1}, {1, 2}}), graph(3, {{0, 2}}),
                                   graph(3, {{0}, {0, 1, 2}, {2}})});
  EXPECT_EQ(c.graph.n, 6);
  EXPECT_EQ(c.graph.edges.size(), 6u);
  EXPECT_EQ(c.tags, (std::vector<int>{0, 0, 1, 2, 2, 2}));
  EXPECT_EQ(c.source_edge_count(2), 3u);
}

TEST(EncodeMulti, Rejections) {
  EXPECT_THROW(hs::encode_multi({}), std::invalid_argument);
  EXPECT_THROW(hs::encode_multi({graph(2, {}), graph(3, {})}), std::invalid_argument);
  hs::UndirectedHypergraph<double> weighted(2);
  weighted.add_edge({0, 1}, 2.0);
  EXPECT_THROW(hs::encode_multi({weighted, graph(2, {})}), std::invalid_argument);
}

TEST(EncodeMulti, DecodeRoundTrip) {
  hstest::Engine g(51);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = hstest::uniform_int(g, 1, 6);
    const auto inputs = random_family(g, n, hstest::uniform_int(g, 1, 4));
    const auto enc = hs::encode_multi(inputs);
    if (enc.graph.edges.empty()) continue;
    const auto back = hs::decode_encoding(enc.graph, enc.tags);
    EXPECT_EQ(back.n, enc.n);
    EXPECT_EQ(back.k, enc.k);
    for (int i = 0; i < enc.k; ++i) EXPECT_EQ(back.source(i), inputs[static_cast<std::size_t>(i)]);
  }
  const auto enc = hs::encode_multi({graph(2, {{0, 1}}), graph(2, {})});
  EXPECT_THROW(hs::decode_encoding(enc.graph, {1}), std::invalid_argument);
  EXPECT_THROW(hs::decode_encoding(enc.graph, {}), std::invalid_argument);
}

TEST(RecoveryQueries, Examples) {
  const auto enc = hs::encode_multi({graph(2, {}), graph(2, {})});
  const auto a = hs::recovery_queries(enc, 0, CutSet::from_members(2, {0}));
  EXPECT_EQ(a.q1.members(), (std::vector<int>{0, 3}));
  EXPECT_EQ(a.q2.members(), (std::vector<int>{1, 3}));
  EXPECT_EQ(a.q3.members(), (std::vector<int>{0, 1, 3}));

  const auto b = hs::recovery_queries(enc, 1, CutSet(2));
  EXPECT_EQ(b.q1.members(), (std::vector<int>{2}));
  EXPECT_EQ(b.q2.members(), (std::vector<int>{0, 1, 2}));
  EXPECT_EQ(b.q3.members(), (std::vector<int>{0, 1, 2}));

  const auto c = hs::recovery_queries(enc, 0, CutSet::full(2));
  EXPECT_EQ(c.q1, c.q3);

  EXPECT_THROW(hs::recovery_queries(enc, 2, CutSet(2)), std::out_of_range);
  EXPECT_THROW(hs::recovery_queries(enc, 0, CutSet(4)), std::invalid_argument);
}

TEST(RecoverCut, ExactExamples) {
  const auto enc = hs::encode_multi({graph(3, {{0, 1}, {1, 2}}), graph(3, {}), graph(3, {})});
  const auto exact = hs::noisy_oracle(enc, 0.0, hs::OracleMode::Exact);
  const auto s = CutSet::from_members(3, {0});
  const auto q = hs::recovery_queries(enc, 0, s);
  EXPECT_EQ(exact(q.q1), 1.0);
  EXPECT_EQ(exact(q.q2), 2.0);
  EXPECT_EQ(exact(q.q3), 2.0);
  EXPECT_EQ(hs::recover_cut(exact, enc, 0, s), 1.0);
  EXPECT_EQ(hs::recover_cut(exact, enc, 0, CutSet(3)), 0.0);
}

TEST(RecoverCut, AdversarialCornerExample) {
  const auto enc = hs::encode_multi({graph(3, {{0, 1}, {1, 2}}), graph(3, {}), graph(3, {})});
  const double eps = 0.125;
  const auto adv = hs::noisy_oracle(enc, eps, hs::OracleMode::AdversarialCorner);
  const auto s = CutSet::from_members(3, {0});
  // A = 1, B = 2, T = 2.
  const double err = std::abs(hs::recover_cut(adv, enc, 0, s) - 1.0);
  EXPECT_EQ(err, eps * 5);
  EXPECT_LE(err, 3 * eps * 2);
}

TEST(Census, Examples) {
  const auto enc = hs::encode_multi({graph(3, {{0, 1}, {1, 2}})});
  EXPECT_EQ(hs::crossing_census(enc, 0, CutSet::from_members(3, {0})), (hs::Census{1, 2, 2}));
  EXPECT_EQ(hs::crossing_census(enc, 0, CutSet(3)), (hs::Census{0, 2, 2}));
  EXPECT_EQ(hs::crossing_census(enc, 0, CutSet::full(3)), (hs::Census{2, 0, 2}));
}

TEST(NoisyOracle, EpsilonZeroAndConsistency) {
  hstest::Engine g(52);
  const auto enc = hs::encode_multi(random_family(g, 4, 4));
  for (auto mode : {hs::OracleMode::Exact, hs::OracleMode::Random,
                    hs::OracleMode::AdversarialCorner}) {
    const auto o = hs::noisy_oracle(enc, 0.0, mode, 7);
    for (std::uint64_t q = 0; q < 256; ++q) {
      const auto cs = CutSet::from_mask(8, q);
      EXPECT_EQ(o(cs), hs::cut_value(enc.graph, cs));
    }
  }
  const auto r = hs::noisy_oracle(enc, 0.3, hs::OracleMode::Random, 7);
  const auto r2 = hs::noisy_oracle(enc, 0.3, hs::OracleMode::Random, 7);
  bool any_noise = false;
  for (std::uint64_t q = 0; q < 256; ++q) {
    const auto cs = CutSet::from_mask(8, q);
    const double truth = hs::cut_value(enc.graph, cs);
    EXPECT_EQ(r(cs), r(cs));
    EXPECT_EQ(r(cs), r2(cs));
    EXPECT_GE(r(cs), 0.7 * truth);
    EXPECT_LE(r(cs), 1.3 * truth);
    any_noise |= r(cs) != truth;
  }
  EXPECT_TRUE(any_noise);
  EXPECT_THROW(hs::noisy_oracle(enc, 1.0, hs::OracleMode::Random), std::invalid_argument);
}

TEST(SketchProperties, QueriesEqualCensusAndExactRecovery) {
  hstest::Engine g(53);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = hstest::uniform_int(g, 2, 6);
    const auto inputs = random_family(g, n, hstest::uniform_int(g, 1, n));
    const auto enc = hs::encode_multi(inputs);
    const auto exact = hs::noisy_oracle(enc, 0.0, hs::OracleMode::Exact);
    for (int i = 0; i < enc.k; ++i) {
      for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
        const auto cs = CutSet::from_mask(n, s);
        const auto q = hs::recovery_queries(enc, i, cs);
        const auto c = hs::crossing_census(enc, i, cs);
        EXPECT_EQ(hs::cut_value(enc.graph, q.q1), c.a);
        EXPECT_EQ(hs::cut_value(enc.graph, q.q2), c.b);
        EXPECT_EQ(hs::cut_value(enc.graph, q.q3), c.t);
        const double truth = hstest::ref_cut(inputs[static_cast<std::size_t>(i)], s);
        EXPECT_EQ(c.a + c.b - c.t, truth);
        EXPECT_EQ(hs::recover_cut(exact, enc, i, cs), truth);
      }
    }
  }
}

TEST(SketchProperties, NoCrossTalk) {
  hstest::Engine g(54);
  auto inputs = random_family(g, 5, 3);
  const auto before = hs::encode_multi(inputs);
  inputs[2] = hstest::random_undirected(g, 5, 5, 1.0, true);
  const auto after = hs::encode_multi(inputs);
  const auto ob = hs::noisy_oracle(before, 0.0, hs::OracleMode::Exact);
  const auto oa = hs::noisy_oracle(after, 0.0, hs::OracleMode::Exact);
  for (int i = 0; i < 2; ++i)
    for (std::uint64_t s = 0; s < 32; ++s) {
      const auto cs = CutSet::from_mask(5, s);
      const auto q = hs::recovery_queries(before, i, cs);
      EXPECT_EQ(ob(q.q1), oa(q.q1));
      EXPECT_EQ(ob(q.q2), oa(q.q2));
      EXPECT_EQ(ob(q.q3), oa(q.q3));
    }
}
