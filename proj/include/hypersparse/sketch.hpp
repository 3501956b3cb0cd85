#pragma once

// Packing k undirected hypergraphs on V = [0, n) into one directed hypergraph
// on V + W, W = {w_0 .. w_{k-1}} = [n, n + k). Edge e of H_i becomes the
// directed edge (tail = e, head = {w_i}). With Q_i(X) = X + (W - {w_i}):
//
//   cut_G(Q_i(S))     = A = #{e in E_i : e meets S}
//   cut_G(Q_i(V - S)) = B = #{e in E_i : e not inside S}
//   cut_G(Q_i(V))     = T = |E_i|
//
// and cut_{H_i}(S) = A + B - T by inclusion-exclusion.

#include "hypersparse/cut_set.hpp"
#include "hypersparse/hypergraph.hpp"

#include <cstdint>
#include <functional>
#include <memory>
#include <vector>

namespace hypersparse {

struct MultiEncoding {
  DirectedHypergraph<double> graph;
  /// |V|.
  int n = 1;
  /// Number of packed hypergraphs, |W|.
  int k = 1;
  /// tags[j] is the source hypergraph of edge j.
  std::vector<int> tags;

  VertexId w(int i) const { return n + i; }
  /// H_i, reconstructed from the edges tagged i.
  UndirectedHypergraph<double> source(int i) const;
  std::size_t source_edge_count(int i) const;
};

/// All inputs must share one vertex count and have unit weights.
MultiEncoding encode_multi(const std::vector<UndirectedHypergraph<double>>& inputs);

/// Rebuilds an encoding from its graph and tags, checking every invariant:
/// each head is a single W vertex matching the tag, each tail lies in V and
/// every weight is 1. n is taken from the edges (head - tag) when there are
/// any, else n = graph.n / 2.
MultiEncoding decode_encoding(DirectedHypergraph<double> graph, std::vector<int> tags);

struct RecoveryQueries {
  CutSet q1;  ///< S + (W - w_i)
  CutSet q2;  ///< (V - S) + (W - w_i)
  CutSet q3;  ///< V + (W - w_i)
};

RecoveryQueries recovery_queries(const MultiEncoding& enc, int i, const CutSet& s);

struct Census {
  long long a = 0;  ///< edges of H_i meeting S
  long long b = 0;  ///< edges of H_i not contained in S
  long long t = 0;  ///< |E_i|

  friend bool operator==(const Census&, const Census&) = default;
};

Census crossing_census(const MultiEncoding& enc, int i, const CutSet& s);

/// A (1 +- epsilon) cut sketch of the encoded graph, seen only through its
/// answers. Answers are consistent: a repeated query gets the same value.
class CutSketchOracle {
 public:
  using Answer = std::function<double(const CutSet&)>;

  CutSketchOracle(Answer answer, double epsilon)
      : answer_(std::move(answer)), epsilon_(epsilon) {}

  double operator()(const CutSet& query) const { return answer_(query); }
  double epsilon() const { return epsilon_; }

 private:
  Answer answer_;
  double epsilon_;
};

enum class OracleMode {
  Exact,
  /// Multiplier uniform in [1 - eps, 1 + eps], a pure function of (query, seed).
  Random,
  /// (1 - eps) on queries shaped V + (W - w_i), (1 + eps) on all others.
  AdversarialCorner,
};

/// Throws std::invalid_argument unless 0 <= epsilon < 1.
CutSketchOracle noisy_oracle(const MultiEncoding& enc, double epsilon, OracleMode mode,
                             std::uint64_t seed = 0);

/// oracle(Q1) + oracle(Q2) - oracle(Q3). Within 3 * eps * |E_i| of
/// cut_{H_i}(S) for any (1 +- eps) oracle.
double recover_cut(const CutSketchOracle& oracle, const MultiEncoding& enc, int i,
                   const CutSet& s);

}  // namespace hypersparse
