#include "hypersparse/errors.hpp"
#include "hypersparse/evaluate.hpp"
#include "hypersparse/lift.hpp"
#include "support/instances.hpp"

#include <gtest/gtest.h>

#include <limits>
#include <set>

namespace hs = hypersparse;
using hs::CutSet;
using hs::LiftedVertexId;

namespace {

hs::DirectedHyperedge<double> dedge(std::vector<int> t, std::vector<int> h, double w = 1.0) {
  return {std::move(t), std::move(h), w};
}

hs::UndirectedHyperedge<double> uedge(std::vector<int> v, double w = 1.0) {
  return {std::move(v), w};
}

}  // namespace

TEST(LiftedVertexId, IndexBijection) {
  for (int n = 1; n <= 6; ++n) {
    for (int i = 0; i <= n * n; ++i) {
      const auto id = LiftedVertexId::from_index(i, n);
      EXPECT_EQ(id.index(n), i);
      EXPECT_EQ(id.is_star(), i == n * n);
    }
  }
  EXPECT_EQ(LiftedVertexId::pair(2, 1).index(3), 7);
  EXPECT_THROW(LiftedVertexId::from_index(10, 3), std::out_of_range);
}

TEST(LiftEdge, Examples) {
  EXPECT_EQ(hs::lift_edge(dedge({0}, {1}), 2).vertices, (std::vector<int>{1, 4}));

  const auto b = hs::lift_edge(dedge({0, 1}, {2}), 3);
  EXPECT_EQ(b.vertices, (std::vector<int>{LiftedVertexId::pair(0, 2).index(3),
                                          LiftedVertexId::pair(1, 2).index(3), 9}));

  const auto c = hs::lift_edge(dedge({0, 1}, {0, 1}, 2.5), 2);
  EXPECT_EQ(c.vertices, (std::vector<int>{0, 1, 2, 3, 4}));
  EXPECT_EQ(c.weight, 2.5);
  // Overlapping sides exceed |e|^2 = 4.
  EXPECT_EQ(c.vertices.size(), 5u);
}

TEST(UnliftEdge, Examples) {
  EXPECT_EQ(hs::unlift_edge(uedge({1, 4}), 2), dedge({0}, {1}));
  EXPECT_EQ(hs::unlift_edge(uedge({2, 5, 9}), 3), dedge({0, 1}, {2}));
  try {
    hs::unlift_edge(uedge({1, 2, 4}), 2);
    FAIL() << "expected NotALiftedEdge";
  } catch (const hs::NotALiftedEdge& e) {
    EXPECT_STREQ(e.what(), "{2 tail} x {2 head} requires 4 pairs but 2 present");
  }
  EXPECT_THROW(hs::unlift_edge(uedge({1}), 2), hs::NotALiftedEdge);
  EXPECT_THROW(hs::unlift_edge(uedge({4}), 2), hs::NotALiftedEdge);
  EXPECT_THROW(hs::unlift_edge(uedge({1, 4, 9}), 2), hs::NotALiftedEdge);
}

TEST(LiftHypergraph, Examples) {
  const auto empty = hs::lift_hypergraph(hs::DirectedHypergraph<double>(3));
  EXPECT_EQ(empty.graph.n, 10);
  EXPECT_EQ(empty.source_n, 3);
  EXPECT_TRUE(empty.graph.edges.empty());

  hs::DirectedHypergraph<double> one(2);
  one.add_edge({0}, {1});
  const auto l = hs::lift_hypergraph(one);
  EXPECT_EQ(l.graph.n, 5);
  ASSERT_EQ(l.graph.edges.size(), 1u);
  EXPECT_EQ(l.graph.edges[0].vertices, (std::vector<int>{1, 4}));

  hstest::Engine g(5);
  const auto h = hstest::random_directed(g, 6, 100);
  const auto big = hs::lift_hypergraph(h);
  ASSERT_EQ(big.graph.edges.size(), 100u);
  for (const auto& e : big.graph.edges) EXPECT_EQ(e.vertices.back(), 36);
  EXPECT_TRUE(hs::validate(big.graph).empty());
}

TEST(LiftVector, Examples) {
  EXPECT_EQ(hs::lift_vector(Eigen::Vector2d(0, 0)), Eigen::VectorXd::Zero(5));

  Eigen::VectorXd want = Eigen::VectorXd::Zero(5);
  want(LiftedVertexId::pair(0, 1).index(2)) = 1;
  EXPECT_EQ(hs::lift_vector(Eigen::Vector2d(1, 0)), want);

  const auto y = hs::lift_vector(Eigen::Vector3d(0.5, 0.2, 0.9));
  Eigen::VectorXd ref = Eigen::VectorXd::Zero(10);
  ref(LiftedVertexId::pair(0, 1).index(3)) = 0.5 - 0.2;
  ref(LiftedVertexId::pair(2, 0).index(3)) = 0.9 - 0.5;
  ref(LiftedVertexId::pair(2, 1).index(3)) = 0.9 - 0.2;
  EXPECT_EQ(y, ref);
  EXPECT_NEAR(y(1), 0.3, 1e-15);
  EXPECT_NEAR(y(7), 0.7, 1e-15);

  const double inf = std::numeric_limits<double>::infinity();
  EXPECT_THROW(hs::lift_vector(Eigen::Vector2d(inf, 0)), std::invalid_argument);
}

TEST(UnliftHypergraph, Examples) {
  hstest::Engine g(6);
  const auto h = hstest::random_directed(g, 5, 20);
  auto lifted = hs::lift_hypergraph(h);
  EXPECT_EQ(hs::unlift_hypergraph(lifted), h);

  // Reweighted subset.
  hs::LiftedHypergraph<double> sub{hs::UndirectedHypergraph<double>(26), 5};
  hs::DirectedHypergraph<double> want(5);
  for (std::size_t j = 0; j < h.edges.size(); j += 3) {
    sub.graph.edges.push_back({lifted.graph.edges[j].vertices, 0.5 * j + 1});
    want.edges.push_back({h.edges[j].tail, h.edges[j].head, 0.5 * j + 1});
  }
  EXPECT_EQ(hs::unlift_hypergraph(sub), want);

  lifted.graph.edges[7].vertices.erase(lifted.graph.edges[7].vertices.end() - 1);
  try {
    hs::unlift_hypergraph(lifted);
    FAIL() << "expected NotALiftedEdge";
  } catch (const hs::NotALiftedEdge& e) {
    EXPECT_EQ(std::string(e.what()).rfind("edge 7: ", 0), 0u) << e.what();
  }
}

TEST(LiftCut, IndicatorIsLiftedIndicator) {
  for (int n = 1; n <= 5; ++n) {
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
      const CutSet cs = CutSet::from_mask(n, s);
      EXPECT_EQ(hs::lift_cut(cs).indicator(), hs::lift_vector(cs.indicator()));
    }
  }
}

TEST(LiftProperties, PerEdgeAndGlobalExactness) {
  hstest::Engine g(7);
  std::normal_distribution<double> normal;
  for (int trial = 0; trial < 50; ++trial) {
    const int n = hstest::uniform_int(g, 2, 7);
    const auto h = hstest::random_directed(g, n, hstest::uniform_int(g, 1, 20));
    const auto l = hs::lift_hypergraph(h);
    Eigen::VectorXd x(n);
    for (int v = 0; v < n; ++v) x(v) = normal(g);
    const auto y = hs::lift_vector(x);
    for (std::size_t j = 0; j < h.edges.size(); ++j) {
      EXPECT_EQ(hs::edge_energy(h.edges[j], x), hs::edge_energy(l.graph.edges[j], y));
      EXPECT_EQ(h.edges[j].weight * hs::edge_energy(h.edges[j], x),
                hstest::ref_edge_energy(h.edges[j], x));
    }
    EXPECT_NEAR(hs::quad_form(h, x), hs::quad_form(l.graph, y), 1e-12 * (1 + hs::quad_form(h, x)));
  }
}

TEST(LiftProperties, SizeAndBijectivity) {
  hstest::Engine g(8);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = hstest::uniform_int(g, 1, 9);
    const auto e = hs::DirectedHyperedge<double>{hstest::random_nonempty_subset(g, n),
                                                 hstest::random_nonempty_subset(g, n), 1.5};
    const auto f = hs::lift_edge(e, n);
    EXPECT_EQ(f.vertices.size(), e.tail.size() * e.head.size() + 1);
    EXPECT_EQ(hs::unlift_edge(f, n), e);
    std::set<int> tail(e.tail.begin(), e.tail.end()), both(tail);
    both.insert(e.head.begin(), e.head.end());
    const bool disjoint = both.size() == e.tail.size() + e.head.size();
    if (disjoint && both.size() >= 2) EXPECT_LE(f.vertices.size(), both.size() * both.size());
  }
}
