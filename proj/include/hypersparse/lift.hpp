#pragma once

// Directed -> undirected lifting.
//
// A directed hypergraph on n vertices maps to an undirected hypergraph on
// n^2 + 1 vertices: vertex u*n + v stands for the ordered pair (u, v) and
// vertex n^2 is the star. Edge (T, H) maps to (T x H) + {star}; a vector x
// maps to y with y[(u,v)] = max(x_u - x_v, 0) and y[star] = 0. Quadratic
// forms agree term by term under these maps.

#include "hypersparse/cut_set.hpp"
#include "hypersparse/errors.hpp"
#include "hypersparse/evaluate.hpp"
#include "hypersparse/hypergraph.hpp"

#include <Eigen/Core>

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

namespace hypersparse {

/// A vertex of the lifted hypergraph: an ordered pair or the star.
class LiftedVertexId {
 public:
  static LiftedVertexId pair(VertexId u, VertexId v) { return {false, u, v}; }
  static LiftedVertexId star() { return {true, 0, 0}; }

  /// Decodes a dense index in [0, n^2].
  static LiftedVertexId from_index(VertexId index, int source_n) {
    const long long sq = static_cast<long long>(source_n) * source_n;
    if (index < 0 || index > sq)
      throw std::out_of_range("lifted vertex " + std::to_string(index) +
                              " outside [0, " + std::to_string(sq) + "]");
    if (index == sq) return star();
    return pair(index / source_n, index % source_n);
  }

  VertexId index(int source_n) const {
    return is_star_ ? source_n * source_n : u_ * source_n + v_;
  }

  bool is_star() const { return is_star_; }
  VertexId first() const { return u_; }
  VertexId second() const { return v_; }

  friend bool operator==(const LiftedVertexId&, const LiftedVertexId&) = default;

 private:
  LiftedVertexId(bool star, VertexId u, VertexId v)
      : is_star_(star), u_(u), v_(v) {}

  bool is_star_;
  VertexId u_;
  VertexId v_;
};

inline int lifted_vertex_count(int source_n) { return source_n * source_n + 1; }

template <typename Scalar = double>
struct LiftedHypergraph {
  UndirectedHypergraph<Scalar> graph;
  int source_n = 1;

  friend bool operator==(const LiftedHypergraph&, const LiftedHypergraph&) = default;
};

template <typename Scalar>
UndirectedHyperedge<Scalar> lift_edge(const DirectedHyperedge<Scalar>& e,
                                      int source_n) {
  UndirectedHyperedge<Scalar> out;
  out.weight = e.weight;
  out.vertices.reserve(e.tail.size() * e.head.size() + 1);
  for (VertexId u : e.tail)
    for (VertexId v : e.head)
      out.vertices.push_back(LiftedVertexId::pair(u, v).index(source_n));
  out.vertices.push_back(LiftedVertexId::star().index(source_n));
  std::sort(out.vertices.begin(), out.vertices.end());
  return out;
}

/// Inverse of lift_edge. Rejects anything that is not exactly
/// (L x R) + {star} for nonempty L and R.
template <typename Scalar>
DirectedHyperedge<Scalar> unlift_edge(const UndirectedHyperedge<Scalar>& f,
                                      int source_n) {
  const VertexId star = LiftedVertexId::star().index(source_n);
  std::vector<VertexId> tail, head;
  std::vector<std::pair<VertexId, VertexId>> pairs;
  bool has_star = false;
  for (VertexId id : f.vertices) {
    if (id == star) {
      has_star = true;
      continue;
    }
    if (id < 0 || id > star)
      throw NotALiftedEdge("vertex " + std::to_string(id) +
                           " is not a lifted vertex id");
    const auto lv = LiftedVertexId::from_index(id, source_n);
    pairs.emplace_back(lv.first(), lv.second());
    tail.push_back(lv.first());
    head.push_back(lv.second());
  }
  if (!has_star) throw NotALiftedEdge("star vertex missing");
  if (pairs.empty()) throw NotALiftedEdge("no pair vertices");

  auto unique_sorted = [](std::vector<VertexId>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  };
  unique_sorted(tail);
  unique_sorted(head);
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  const std::size_t want = tail.size() * head.size();
  if (pairs.size() != want)
    throw NotALiftedEdge("{" + std::to_string(tail.size()) + " tail} x {" +
                         std::to_string(head.size()) + " head} requires " +
                         std::to_string(want) + " pairs but " +
                         std::to_string(pairs.size()) + " present");
  return {std::move(tail), std::move(head), f.weight};
}

template <typename Scalar>
LiftedHypergraph<Scalar> lift_hypergraph(const DirectedHypergraph<Scalar>& h) {
  LiftedHypergraph<Scalar> out{UndirectedHypergraph<Scalar>(lifted_vertex_count(h.n)),
                               h.n};
  out.graph.edges.reserve(h.edges.size());
  for (const auto& e : h.edges) out.graph.edges.push_back(lift_edge(e, h.n));
  return out;
}

template <typename Scalar>
DirectedHypergraph<Scalar> unlift_hypergraph(const LiftedHypergraph<Scalar>& lifted) {
  if (lifted.graph.n != lifted_vertex_count(lifted.source_n))
    throw std::invalid_argument("lifted hypergraph has n = " +
                                std::to_string(lifted.graph.n) + ", expected " +
                                std::to_string(lifted_vertex_count(lifted.source_n)));
  DirectedHypergraph<Scalar> out(lifted.source_n);
  out.edges.reserve(lifted.graph.edges.size());
  for (std::size_t i = 0; i < lifted.graph.edges.size(); ++i) {
    try {
      out.edges.push_back(unlift_edge(lifted.graph.edges[i], lifted.source_n));
    } catch (const NotALiftedEdge& err) {
      throw NotALiftedEdge("edge " + std::to_string(i) + ": " + err.what());
    }
  }
  return out;
}

/// Dense lifting of a test vector, O(n^2).
template <typename Derived>
Vector<typename Derived::Scalar> lift_vector(const Eigen::MatrixBase<Derived>& x) {
  using Scalar = typename Derived::Scalar;
  if (!x.allFinite()) throw std::invalid_argument("test vector has non-finite entries");
  const int n = static_cast<int>(x.size());
  Vector<Scalar> y(lifted_vertex_count(n));
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      y(u * n + v) = std::max<Scalar>(x(u) - x(v), Scalar(0));
  y(n * n) = Scalar(0);
  return y;
}

/// The lifted cut S' with indicator equal to the lifted indicator of S:
/// (u, v) is in S' iff u is in S and v is not.
inline CutSet lift_cut(const CutSet& s) {
  const int n = s.universe_size();
  CutSet out(lifted_vertex_count(n));
  for (VertexId u = 0; u < n; ++u) {
    if (!s.contains(u)) continue;
    for (VertexId v = 0; v < n; ++v)
      if (!s.contains(v)) out.insert(u * n + v);
  }
  return out;
}

}  // namespace hypersparse
