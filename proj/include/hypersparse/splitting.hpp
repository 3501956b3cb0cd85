#pragma once

#include "hypersparse/cut_set.hpp"

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

namespace hypersparse {

struct SplittingClaims {
  bool submodular = false;
  bool monotone = false;
  bool symmetric = false;

  friend bool operator==(const SplittingClaims&, const SplittingClaims&) = default;
};

/// Evaluation oracle for a hyperedge's splitting function g_e : 2^e -> R>=0.
///
/// Subsets of the support are passed as local bitmasks: bit j stands for
/// support()[j]. The support is strictly ascending and has at most
/// kMaxArity vertices. Oracles must be pure so that concurrent evaluation is
/// safe.
class SplittingFunction {
 public:
  using Oracle = std::function<double(std::uint64_t local_mask)>;

  static constexpr int kMaxArity = 62;

  SplittingFunction(std::vector<VertexId> support, Oracle oracle,
                    SplittingClaims claims = {}, std::string name = {});

  /// Table-backed oracle: table[mask] for all 2^k local masks.
  static SplittingFunction from_table(std::vector<VertexId> support,
                                      std::vector<double> table,
                                      SplittingClaims claims = {},
                                      std::string name = "table");

  const std::vector<VertexId>& support() const { return support_; }
  int arity() const { return static_cast<int>(support_.size()); }
  std::uint64_t full_mask() const {
    return arity() == 0 ? 0 : (~std::uint64_t{0} >> (64 - arity()));
  }
  const SplittingClaims& claims() const { return claims_; }
  const std::string& name() const { return name_; }

  /// Raw oracle call on a local mask.
  double operator()(std::uint64_t local_mask) const { return oracle_(local_mask); }

  /// Local mask of S intersected with the support.
  std::uint64_t restrict_to_support(const CutSet& s) const;

  double evaluate(const CutSet& s) const { return oracle_(restrict_to_support(s)); }

  /// All 2^k values in local-mask order.
  std::vector<double> tabulate() const;

 private:
  std::vector<VertexId> support_;
  Oracle oracle_;
  SplittingClaims claims_;
  std::string name_;
};

struct SubmodularEdge {
  SplittingFunction function;
  /// Multiplier on the splitting function; sparsifiers reweight through it.
  double weight = 1.0;
};

struct SubmodularHypergraph {
  int n = 1;
  std::vector<SubmodularEdge> edges;

  SubmodularHypergraph() = default;
  explicit SubmodularHypergraph(int vertex_count) : n(vertex_count) {}

  SubmodularEdge& add_edge(SplittingFunction f, double weight = 1.0) {
    edges.push_back({std::move(f), weight});
    return edges.back();
  }
  std::size_t num_edges() const { return edges.size(); }
};

std::vector<std::string> validate(const SubmodularHypergraph& h);

}  // namespace hypersparse
