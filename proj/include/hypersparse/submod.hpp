#pragma once

// Monotone -> symmetric lifting of splitting functions.
//
// For f on support e, the lifted f' lives on e + {star}:
//   f'(T)          = f(T)               if star is not in T
//   f'(T + {star}) = f(e - T)
// so f'(X) = f'(complement of X) for every X. When f is monotone and
// submodular, f' is submodular as well.

#include "hypersparse/sparsify.hpp"
#include "hypersparse/splitting.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hypersparse {

/// Relative slack for floating-point comparisons in the checkers: a value
/// pair counts as violating only beyond kCheckTolerance * (1 + max |value|).
inline constexpr double kCheckTolerance = 1e-9;

/// f was found not submodular: adding `element` to `smaller` gains less than
/// adding it to `larger`, where smaller is a proper subset of larger. Masks
/// are local to the support.
struct SubmodularWitness {
  std::uint64_t smaller;
  std::uint64_t larger;
  int element;
  double gain_smaller;
  double gain_larger;
};

struct MonotoneWitness {
  std::uint64_t set;
  int element;
  double before;
  double after;
};

struct SymmetricWitness {
  std::uint64_t set;
  double value;
  double complement_value;
};

/// Exhaustive decreasing-marginals check. Returns nullopt on pass, else the
/// lexicographically first violating (smaller, larger, element) triple, with
/// smaller, then larger, then element enumerated in ascending numeric order.
std::optional<SubmodularWitness> check_submodular(const SplittingFunction& f,
                                                  double tol = kCheckTolerance);

/// First (set, element) in ascending order with f(set + element) < f(set).
std::optional<MonotoneWitness> check_monotone(const SplittingFunction& f,
                                              double tol = kCheckTolerance);

/// First set in ascending order with f(set) != f(complement).
std::optional<SymmetricWitness> check_symmetric(const SplittingFunction& f,
                                                double tol = kCheckTolerance);

std::string describe(const SplittingFunction& f, const SubmodularWitness& w);
std::string describe(const SplittingFunction& f, const MonotoneWitness& w);
std::string describe(const SplittingFunction& f, const SymmetricWitness& w);

struct LiftedSplittingFunction {
  SplittingFunction base;
  /// Support is base.support() + {star}; the star is the highest local bit.
  SplittingFunction lifted;
  VertexId star;
};

/// Total: defined for every f. Requires star > every support id.
LiftedSplittingFunction symmetrize(const SplittingFunction& f, VertexId star);
/// Star placed at max(support) + 1.
LiftedSplittingFunction symmetrize(const SplittingFunction& f);

/// H' on n + 1 vertices, vertex n being the star shared by every edge.
struct LiftedSubmodularHypergraph {
  SubmodularHypergraph graph;
  int source_n = 1;
  VertexId star() const { return source_n; }
};

/// Edge i of the result is the symmetrization of edge i of h, same weight.
/// With certify, every edge must pass check_monotone and check_submodular
/// (CertificationFailed otherwise); without it, every edge must claim both.
LiftedSubmodularHypergraph lift_monotone_hypergraph(const SubmodularHypergraph& h,
                                                    bool certify = false);

/// Sparsify H' over all of its 2^(n+1) cuts, carry the kept indices and
/// weights back to h, and verify every cut of h.
SparsifierResult sparsify_monotone(const SubmodularHypergraph& h, const SparsifyConfig& cfg,
                                   const CutSparsifierBackend& backend = sensitivity_backend(),
                                   bool certify = false);

}  // namespace hypersparse
