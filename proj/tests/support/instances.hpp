#pragma once

// Random instance generators and brute-force reference evaluators for the
// tests. The references are written directly from the definitions (maxima
// over vertex pairs, membership scans) and share no code with the library
// evaluators they check.

#include "hypersparse/hypergraph.hpp"
#include "hypersparse/splitting.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace hstest {

namespace hs = hypersparse;

using Engine = std::mt19937_64;

inline int uniform_int(Engine& g, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(g);
}

inline double uniform_real(Engine& g, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(g);
}

/// Nonempty random subset of [0, n), ascending.
inline std::vector<int> random_nonempty_subset(Engine& g, int n) {
  std::vector<int> out;
  while (out.empty())
    for (int v = 0; v < n; ++v)
      if (uniform_int(g, 0, 1)) out.push_back(v);
  return out;
}

/// Weight in (0, max_weight]; integral in [1, max_weight] when asked.
inline double random_weight(Engine& g, double max_weight, bool integral) {
  if (integral) return uniform_int(g, 1, static_cast<int>(max_weight));
  double w = 0;
  while (w <= 0) w = max_weight - uniform_real(g, 0.0, max_weight);
  return w;
}

inline hs::DirectedHypergraph<double> random_directed(Engine& g, int n, int m,
                                                      double max_weight = 10.0,
                                                      bool integral = false) {
  hs::DirectedHypergraph<double> h(n);
  for (int j = 0; j < m; ++j)
    h.add_edge(random_nonempty_subset(g, n), random_nonempty_subset(g, n),
               random_weight(g, max_weight, integral));
  return h;
}

/// Undirected edges with at least min_size vertices (capped at n).
inline hs::UndirectedHypergraph<double> random_undirected(Engine& g, int n, int m,
                                                          double max_weight = 10.0,
                                                          bool integral = false,
                                                          int min_size = 1) {
  hs::UndirectedHypergraph<double> h(n);
  min_size = std::min(min_size, n);
  for (int j = 0; j < m; ++j) {
    std::vector<int> e;
    while (static_cast<int>(e.size()) < min_size) e = random_nonempty_subset(g, n);
    h.add_edge(std::move(e), random_weight(g, max_weight, integral));
  }
  return h;
}

/// A few distinct directed edge types, each repeated many times: the regime
/// where sampling can drop edges and still preserve every cut.
inline hs::DirectedHypergraph<double> random_multiplicity_directed(Engine& g, int n, int m,
                                                                   int types) {
  std::vector<hs::DirectedHyperedge<double>> kinds;
  for (int t = 0; t < types; ++t)
    kinds.push_back({random_nonempty_subset(g, n), random_nonempty_subset(g, n), 1.0});
  hs::DirectedHypergraph<double> h(n);
  for (int j = 0; j < m; ++j) {
    const auto& k = kinds[static_cast<std::size_t>(uniform_int(g, 0, types - 1))];
    h.add_edge(k.tail, k.head, static_cast<double>(uniform_int(g, 1, 3)));
  }
  return h;
}

inline bool in_mask(std::uint64_t mask, int v) { return (mask >> v) & 1u; }

// ---- reference evaluators -------------------------------------------------

inline double ref_cut(const hs::UndirectedHypergraph<double>& h, std::uint64_t s) {
  double total = 0;
  for (const auto& e : h.edges) {
    bool in = false, out = false;
    for (int v : e.vertices) (in_mask(s, v) ? in : out) = true;
    if (in && out) total += e.weight;
  }
  return total;
}

inline double ref_cut(const hs::DirectedHypergraph<double>& h, std::uint64_t s) {
  double total = 0;
  for (const auto& e : h.edges) {
    const bool tail_in = std::any_of(e.tail.begin(), e.tail.end(),
                                     [&](int v) { return in_mask(s, v); });
    const bool head_out = std::any_of(e.head.begin(), e.head.end(),
                                      [&](int v) { return !in_mask(s, v); });
    if (tail_in && head_out) total += e.weight;
  }
  return total;
}

template <typename Vec>
double ref_edge_energy(const hs::UndirectedHyperedge<double>& e, const Vec& x) {
  double best = 0;
  for (int u : e.vertices)
    for (int v : e.vertices) best = std::max(best, (x[u] - x[v]) * (x[u] - x[v]));
  return e.weight * best;
}

template <typename Vec>
double ref_edge_energy(const hs::DirectedHyperedge<double>& e, const Vec& x) {
  double best = 0;
  for (int u : e.tail)
    for (int v : e.head) {
      const double d = std::max(x[u] - x[v], 0.0);
      best = std::max(best, d * d);
    }
  return e.weight * best;
}

template <typename Graph, typename Vec>
double ref_quad(const Graph& h, const Vec& x) {
  double total = 0;
  for (const auto& e : h.edges) total += ref_edge_energy(e, x);
  return total;
}

inline double ref_cut(const hs::SubmodularHypergraph& h, std::uint64_t s) {
  double total = 0;
  for (const auto& e : h.edges) {
    std::uint64_t local = 0;
    const auto& sup = e.function.support();
    for (std::size_t j = 0; j < sup.size(); ++j)
      if (in_mask(s, sup[j])) local |= std::uint64_t{1} << j;
    total += e.weight * e.function(local);
  }
  return total;
}

/// Sensitivities from their definition over all 2^n cuts.
inline std::vector<double> ref_sensitivities(const hs::UndirectedHypergraph<double>& h) {
  std::vector<double> sigma(h.edges.size(), 0.0);
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << h.n); ++s) {
    const double c = ref_cut(h, s);
    if (c <= 0) continue;
    for (std::size_t j = 0; j < h.edges.size(); ++j) {
      hs::UndirectedHypergraph<double> one(h.n);
      one.edges.push_back(h.edges[j]);
      sigma[j] = std::max(sigma[j], ref_cut(one, s) / c);
    }
  }
  return sigma;
}

}  // namespace hstest
