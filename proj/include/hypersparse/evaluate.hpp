#pragma once

// Exact cut and Laplacian quadratic-form evaluators.
//
// Directed convention, used everywhere in this library: an edge crosses S iff
// tail meets S and head meets V - S. This is the 0/1 restriction of
//   sum_e w_e * max_{u in tail, v in head} (x_u - x_v)_+^2.

#include "hypersparse/cut_set.hpp"
#include "hypersparse/errors.hpp"
#include "hypersparse/hypergraph.hpp"
#include "hypersparse/splitting.hpp"

#include <Eigen/Core>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace hypersparse {

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

/// Default cap on n for 2^n enumeration.
inline constexpr int kDefaultEnumerationLimit = 20;
/// No override may raise the cap beyond this.
inline constexpr int kMaxEnumerationLimit = 24;

/// Current cap: a programmatic override if set, else HYPERSPARSE_ENUM_LIMIT,
/// else kDefaultEnumerationLimit. Throws std::invalid_argument on a malformed
/// or out-of-range environment value.
int enumeration_limit();
/// Process-wide override; pass 0 to clear it.
void set_enumeration_limit(int limit);
/// Throws EnumerationLimitExceeded when n exceeds the current cap.
void require_enumerable(int n);

namespace detail {

inline void require_same_universe(int graph_n, int query_n) {
  if (graph_n != query_n)
    throw std::invalid_argument("dimension mismatch: hypergraph has n = " +
                                std::to_string(graph_n) + ", query has n = " +
                                std::to_string(query_n));
}

template <typename Derived>
void require_finite_vector(const Eigen::MatrixBase<Derived>& x, int n) {
  if (x.size() != n)
    throw std::invalid_argument("dimension mismatch: hypergraph has n = " +
                                std::to_string(n) + ", vector has length " +
                                std::to_string(x.size()));
  if (!x.allFinite())
    throw std::invalid_argument("test vector has non-finite entries");
}

template <typename Scalar, typename Derived>
Scalar max_over(const std::vector<VertexId>& ids,
                const Eigen::MatrixBase<Derived>& x) {
  Scalar best = x(ids.front());
  for (VertexId v : ids) best = std::max<Scalar>(best, x(v));
  return best;
}

template <typename Scalar, typename Derived>
Scalar min_over(const std::vector<VertexId>& ids,
                const Eigen::MatrixBase<Derived>& x) {
  Scalar best = x(ids.front());
  for (VertexId v : ids) best = std::min<Scalar>(best, x(v));
  return best;
}

inline std::uint64_t mask_of(const std::vector<VertexId>& ids) {
  std::uint64_t m = 0;
  for (VertexId v : ids) m |= std::uint64_t{1} << v;
  return m;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Per-edge terms

/// 1 iff the edge has members on both sides of S.
template <typename Scalar>
bool crosses(const UndirectedHyperedge<Scalar>& e, const CutSet& s) {
  bool inside = false, outside = false;
  for (VertexId v : e.vertices) {
    (s.contains(v) ? inside : outside) = true;
    if (inside && outside) return true;
  }
  return false;
}

template <typename Scalar>
bool crosses(const DirectedHyperedge<Scalar>& e, const CutSet& s) {
  const bool tail_in = std::any_of(e.tail.begin(), e.tail.end(),
                                   [&](VertexId v) { return s.contains(v); });
  if (!tail_in) return false;
  return std::any_of(e.head.begin(), e.head.end(),
                     [&](VertexId v) { return !s.contains(v); });
}

/// Unweighted energy max_{u,v in e} (x_u - x_v)^2.
template <typename Scalar, typename Derived>
Scalar edge_energy(const UndirectedHyperedge<Scalar>& e,
                   const Eigen::MatrixBase<Derived>& x) {
  const Scalar spread = detail::max_over<Scalar>(e.vertices, x) -
                        detail::min_over<Scalar>(e.vertices, x);
  return spread * spread;
}

/// Unweighted energy max_{u in tail, v in head} (x_u - x_v)_+^2. Rounded
/// subtraction is monotone in both operands, so max(tail) - min(head) is the
/// same double as the maximum over all pairwise differences.
template <typename Scalar, typename Derived>
Scalar edge_energy(const DirectedHyperedge<Scalar>& e,
                   const Eigen::MatrixBase<Derived>& x) {
  const Scalar gap = detail::max_over<Scalar>(e.tail, x) -
                     detail::min_over<Scalar>(e.head, x);
  return gap > Scalar(0) ? gap * gap : Scalar(0);
}

// ---------------------------------------------------------------------------
// Whole-hypergraph evaluators

template <typename Scalar>
Scalar cut_value(const UndirectedHypergraph<Scalar>& h, const CutSet& s) {
  detail::require_same_universe(h.n, s.universe_size());
  Scalar total(0);
  for (const auto& e : h.edges)
    if (crosses(e, s)) total += e.weight;
  return total;
}

template <typename Scalar>
Scalar cut_value(const DirectedHypergraph<Scalar>& h, const CutSet& s) {
  detail::require_same_universe(h.n, s.universe_size());
  Scalar total(0);
  for (const auto& e : h.edges)
    if (crosses(e, s)) total += e.weight;
  return total;
}

/// sum_e w_e * g_e(S cap e). Throws ContractViolation when an oracle answers
/// with a negative or non-finite value.
double cut_value(const SubmodularHypergraph& h, const CutSet& s);

template <typename Scalar, typename Derived>
Scalar quad_form(const UndirectedHypergraph<Scalar>& h,
                 const Eigen::MatrixBase<Derived>& x) {
  detail::require_finite_vector(x, h.n);
  Scalar total(0);
  for (const auto& e : h.edges) total += e.weight * edge_energy(e, x);
  return total;
}

template <typename Scalar, typename Derived>
Scalar quad_form(const DirectedHypergraph<Scalar>& h,
                 const Eigen::MatrixBase<Derived>& x) {
  detail::require_finite_vector(x, h.n);
  Scalar total(0);
  for (const auto& e : h.edges) total += e.weight * edge_energy(e, x);
  return total;
}

template <typename Scalar>
Scalar cut_value_undirected(const UndirectedHypergraph<Scalar>& h,
                            const CutSet& s) {
  return cut_value(h, s);
}
template <typename Scalar>
Scalar cut_value_directed(const DirectedHypergraph<Scalar>& h, const CutSet& s) {
  return cut_value(h, s);
}
inline double cut_value_submodular(const SubmodularHypergraph& h,
                                   const CutSet& s) {
  return cut_value(h, s);
}
template <typename Scalar, typename Derived>
Scalar quad_form_undirected(const UndirectedHypergraph<Scalar>& h,
                            const Eigen::MatrixBase<Derived>& x) {
  return quad_form(h, x);
}
template <typename Scalar, typename Derived>
Scalar quad_form_directed(const DirectedHypergraph<Scalar>& h,
                          const Eigen::MatrixBase<Derived>& x) {
  return quad_form(h, x);
}

// ---------------------------------------------------------------------------
// Brute-force enumeration, indexed by subset bitmask (bit v = vertex v).

template <typename Scalar>
std::vector<Scalar> all_cut_values(const UndirectedHypergraph<Scalar>& h) {
  require_enumerable(h.n);
  std::vector<std::uint64_t> masks;
  masks.reserve(h.edges.size());
  for (const auto& e : h.edges) masks.push_back(detail::mask_of(e.vertices));
  std::vector<Scalar> out(std::size_t{1} << h.n, Scalar(0));
  for (std::uint64_t s = 0; s < out.size(); ++s) {
    Scalar total(0);
    for (std::size_t i = 0; i < masks.size(); ++i) {
      const std::uint64_t inside = s & masks[i];
      if (inside != 0 && inside != masks[i]) total += h.edges[i].weight;
    }
    out[s] = total;
  }
  return out;
}

template <typename Scalar>
std::vector<Scalar> all_cut_values(const DirectedHypergraph<Scalar>& h) {
  require_enumerable(h.n);
  std::vector<std::pair<std::uint64_t, std::uint64_t>> masks;
  masks.reserve(h.edges.size());
  for (const auto& e : h.edges)
    masks.emplace_back(detail::mask_of(e.tail), detail::mask_of(e.head));
  std::vector<Scalar> out(std::size_t{1} << h.n, Scalar(0));
  for (std::uint64_t s = 0; s < out.size(); ++s) {
    Scalar total(0);
    for (std::size_t i = 0; i < masks.size(); ++i) {
      if ((s & masks[i].first) != 0 && (masks[i].second & ~s) != 0)
        total += h.edges[i].weight;
    }
    out[s] = total;
  }
  return out;
}

std::vector<double> all_cut_values(const SubmodularHypergraph& h);

}  // namespace hypersparse
