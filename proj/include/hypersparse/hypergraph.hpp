#pragma once

#include "hypersparse/cut_set.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace hypersparse {

template <typename Scalar = double>
struct UndirectedHyperedge {
  std::vector<VertexId> vertices;
  Scalar weight = Scalar(1);

  friend bool operator==(const UndirectedHyperedge&,
                         const UndirectedHyperedge&) = default;
};

/// A directed hyperedge (tail, head). Tail and head may overlap.
template <typename Scalar = double>
struct DirectedHyperedge {
  std::vector<VertexId> tail;
  std::vector<VertexId> head;
  Scalar weight = Scalar(1);

  friend bool operator==(const DirectedHyperedge&,
                         const DirectedHyperedge&) = default;
};

namespace detail {
inline std::vector<VertexId> sorted(std::vector<VertexId> v) {
  std::sort(v.begin(), v.end());
  return v;
}
}  // namespace detail

template <typename Scalar = double>
struct UndirectedHypergraph {
  using scalar_type = Scalar;
  using edge_type = UndirectedHyperedge<Scalar>;

  int n = 1;
  std::vector<edge_type> edges;

  UndirectedHypergraph() = default;
  explicit UndirectedHypergraph(int vertex_count) : n(vertex_count) {}

  /// Appends an edge with its vertex list sorted ascending.
  edge_type& add_edge(std::vector<VertexId> vertices, Scalar weight = Scalar(1)) {
    edges.push_back({detail::sorted(std::move(vertices)), weight});
    return edges.back();
  }

  std::size_t num_edges() const { return edges.size(); }

  friend bool operator==(const UndirectedHypergraph&,
                         const UndirectedHypergraph&) = default;
};

template <typename Scalar = double>
struct DirectedHypergraph {
  using scalar_type = Scalar;
  using edge_type = DirectedHyperedge<Scalar>;

  int n = 1;
  std::vector<edge_type> edges;

  DirectedHypergraph() = default;
  explicit DirectedHypergraph(int vertex_count) : n(vertex_count) {}

  edge_type& add_edge(std::vector<VertexId> tail, std::vector<VertexId> head,
                      Scalar weight = Scalar(1)) {
    edges.push_back({detail::sorted(std::move(tail)),
                     detail::sorted(std::move(head)), weight});
    return edges.back();
  }

  std::size_t num_edges() const { return edges.size(); }

  friend bool operator==(const DirectedHypergraph&,
                         const DirectedHypergraph&) = default;
};

namespace detail {

template <typename Scalar>
void check_weight(std::vector<std::string>& out, std::size_t i, Scalar w) {
  using std::isfinite;
  if (!isfinite(w))
    out.push_back("edge " + std::to_string(i) + ": non-finite weight");
  else if (w < Scalar(0))
    out.push_back("edge " + std::to_string(i) + ": negative weight");
}

inline void check_members(std::vector<std::string>& out, std::size_t i,
                          const std::vector<VertexId>& members, int n,
                          const char* side) {
  const std::string prefix = "edge " + std::to_string(i) + ": ";
  if (members.empty()) {
    out.push_back(prefix + "empty " + side);
    return;
  }
  std::vector<VertexId> seen = sorted(members);
  for (std::size_t k = 0; k < seen.size(); ++k) {
    if (seen[k] < 0 || seen[k] >= n)
      out.push_back(prefix + "bad vertex id " + std::to_string(seen[k]) +
                    " (n = " + std::to_string(n) + ")");
    if (k > 0 && seen[k] == seen[k - 1])
      out.push_back(prefix + "duplicate vertex " + std::to_string(seen[k]) +
                    " in " + side);
  }
}

}  // namespace detail

/// Human-readable invariant violations; empty iff the hypergraph is well formed.
template <typename Scalar>
std::vector<std::string> validate(const UndirectedHypergraph<Scalar>& h) {
  std::vector<std::string> out;
  if (h.n < 1) out.push_back("vertex count must be >= 1");
  for (std::size_t i = 0; i < h.edges.size(); ++i) {
    detail::check_members(out, i, h.edges[i].vertices, h.n, "vertex set");
    detail::check_weight(out, i, h.edges[i].weight);
  }
  return out;
}

template <typename Scalar>
std::vector<std::string> validate(const DirectedHypergraph<Scalar>& h) {
  std::vector<std::string> out;
  if (h.n < 1) out.push_back("vertex count must be >= 1");
  for (std::size_t i = 0; i < h.edges.size(); ++i) {
    detail::check_members(out, i, h.edges[i].tail, h.n, "tail");
    detail::check_members(out, i, h.edges[i].head, h.n, "head");
    detail::check_weight(out, i, h.edges[i].weight);
  }
  return out;
}

/// Collapses parallel edges into one edge carrying the summed weight. Edges
/// keep the position of their first occurrence. Never applied implicitly.
template <typename Scalar>
UndirectedHypergraph<Scalar> merge_parallel_edges(
    const UndirectedHypergraph<Scalar>& h) {
  UndirectedHypergraph<Scalar> out(h.n);
  std::map<std::vector<VertexId>, std::size_t> position;
  for (const auto& e : h.edges) {
    auto key = detail::sorted(e.vertices);
    auto [it, inserted] = position.try_emplace(key, out.edges.size());
    if (inserted)
      out.edges.push_back({std::move(key), e.weight});
    else
      out.edges[it->second].weight += e.weight;
  }
  return out;
}

template <typename Scalar>
DirectedHypergraph<Scalar> merge_parallel_edges(
    const DirectedHypergraph<Scalar>& h) {
  DirectedHypergraph<Scalar> out(h.n);
  std::map<std::pair<std::vector<VertexId>, std::vector<VertexId>>, std::size_t>
      position;
  for (const auto& e : h.edges) {
    auto key = std::make_pair(detail::sorted(e.tail), detail::sorted(e.head));
    auto [it, inserted] = position.try_emplace(key, out.edges.size());
    if (inserted)
      out.edges.push_back({key.first, key.second, e.weight});
    else
      out.edges[it->second].weight += e.weight;
  }
  return out;
}

/// Maps every weight through w -> c * w.
template <typename Graph>
Graph scaled(Graph h, typename Graph::scalar_type c) {
  for (auto& e : h.edges) e.weight *= c;
  return h;
}

}  // namespace hypersparse
