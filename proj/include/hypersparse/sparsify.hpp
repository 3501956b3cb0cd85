#pragma once

#include "hypersparse/evaluate.hpp"
#include "hypersparse/hypergraph.hpp"
#include "hypersparse/lift.hpp"
#include "hypersparse/splitting.hpp"

#include <Eigen/Core>

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace hypersparse {

struct SparsifyConfig {
  double epsilon = 0.1;
  double delta = 0.01;
  double oversample_c = 3.0;
  std::uint64_t seed = 0;
  int max_retries = 16;

  /// Throws std::invalid_argument unless 0 < epsilon < 1, 0 < delta < 1,
  /// oversample_c >= 1 and max_retries >= 0.
  void validate() const;
};

struct KeptEdge {
  std::size_t index;
  double weight;

  friend bool operator==(const KeptEdge&, const KeptEdge&) = default;
};

/// A reweighted sub-hypergraph of the input, by edge index. Kept indices are
/// strictly ascending and every weight is positive.
struct SparsifierResult {
  std::vector<KeptEdge> kept;
  std::optional<double> verified_max_rel_error;
  int retries_used = 0;
  std::size_t m_prime = 0;
  /// Label (bitmask) of the cut attaining the verified error.
  std::uint64_t worst_cut = 0;

  friend bool operator==(const SparsifierResult&, const SparsifierResult&) = default;
};

struct CutReport {
  double max_rel_error = 0.0;
  std::uint64_t worst_cut = 0;
  bool pass = true;
};

/// A family of 2^dimension cuts of one hypergraph, labelled by bitmask, with
/// the unit (unweighted) contribution of every edge to every cut. The cut
/// value of label s under weights w is contributions(s) . w.
class CutFamily {
 public:
  using ContributionFn = std::function<void(std::uint64_t cut, Eigen::Ref<Eigen::VectorXd> out)>;

  CutFamily(int dimension, Eigen::VectorXd weights, ContributionFn contributions);

  int dimension() const { return dimension_; }
  std::uint64_t num_cuts() const { return std::uint64_t{1} << dimension_; }
  std::size_t num_edges() const { return static_cast<std::size_t>(weights_.size()); }
  const Eigen::VectorXd& weights() const { return weights_; }

  void contributions(std::uint64_t cut, Eigen::Ref<Eigen::VectorXd> out) const {
    contributions_(cut, out);
  }

 private:
  int dimension_;
  Eigen::VectorXd weights_;
  ContributionFn contributions_;
};

/// All 2^n subsets of the vertex set.
CutFamily all_cuts(const UndirectedHypergraph<double>& h);
CutFamily all_cuts(const DirectedHypergraph<double>& h);
CutFamily all_cuts(const SubmodularHypergraph& h);
/// Only the images S' of the 2^source_n source cuts, labelled by the source
/// mask. A sparsifier of the lifted graph needs nothing else to yield a
/// directed cut sparsifier, and the family stays enumerable although the
/// lifted graph itself has n^2 + 1 vertices.
CutFamily lifted_cuts(const LiftedHypergraph<double>& lifted);

/// sigma_e = max over positive cuts of w_e * c_e(S) / cut(S).
/// Throws DegenerateInput when every cut in the family is zero.
Eigen::VectorXd compute_sensitivities(const CutFamily& family);
Eigen::VectorXd compute_sensitivities(const UndirectedHypergraph<double>& h);
Eigen::VectorXd compute_sensitivities(const SubmodularHypergraph& h);

/// Sample count ceil(c * total_sensitivity * (dimension + ln(1/delta)) / eps^2).
std::size_t sample_count(double total_sensitivity, int dimension,
                         const SparsifyConfig& cfg);

/// Importance sampling with probabilities proportional to sensitivity, then
/// exhaustive verification over the family; on failure reseeds with seed + 1
/// up to max_retries times. Throws VerificationFailed when retries run out.
SparsifierResult sensitivity_sample(const CutFamily& family, const SparsifyConfig& cfg);
SparsifierResult sensitivity_sample(const UndirectedHypergraph<double>& h,
                                    const SparsifyConfig& cfg);
SparsifierResult sensitivity_sample(const SubmodularHypergraph& h,
                                    const SparsifyConfig& cfg);

/// Checks reweighted edge weights against the family's own weights.
CutReport verify_weights(const CutFamily& family, const Eigen::VectorXd& new_weights,
                         double epsilon);

/// Entrywise check of two cut tables (index = cut label). A zero base cut
/// must stay exactly zero.
CutReport compare_cut_tables(const std::vector<double>& base,
                             const std::vector<double>& approx, double epsilon);

CutReport verify_cut_sparsifier(const UndirectedHypergraph<double>& h,
                                const UndirectedHypergraph<double>& sparse, double epsilon);
CutReport verify_cut_sparsifier(const DirectedHypergraph<double>& h,
                                const DirectedHypergraph<double>& sparse, double epsilon);
CutReport verify_cut_sparsifier(const SubmodularHypergraph& h,
                                const SubmodularHypergraph& sparse, double epsilon);

/// The sub-hypergraph a result describes, kept edges in index order.
UndirectedHypergraph<double> apply(const UndirectedHypergraph<double>& h,
                                   const SparsifierResult& r);
DirectedHypergraph<double> apply(const DirectedHypergraph<double>& h,
                                 const SparsifierResult& r);
SubmodularHypergraph apply(const SubmodularHypergraph& h, const SparsifierResult& r);

/// An undirected cut sparsifier over a cut family.
using CutSparsifierBackend =
    std::function<SparsifierResult(const CutFamily&, const SparsifyConfig&)>;

CutSparsifierBackend sensitivity_backend();
/// Keeps every positive-weight edge at its original weight.
CutSparsifierBackend identity_backend();

/// Lift, sparsify the lifted graph over the images of the source cuts,
/// unlift, then verify every directed cut of h. Edge i of the lifted graph is
/// edge i of h, so kept indices carry over unchanged.
SparsifierResult sparsify_directed(const DirectedHypergraph<double>& h,
                                   const SparsifyConfig& cfg,
                                   const CutSparsifierBackend& backend = sensitivity_backend());

struct SpectralReport {
  /// Always true: sampled vectors cannot certify a spectral sparsifier.
  bool heuristic = true;
  std::size_t gaussian_vectors = 0;
  std::size_t cut_vectors = 0;
  double max_gaussian_deviation = 0.0;
  double max_cut_deviation = 0.0;
  bool cuts_within_epsilon = true;
  double max_deviation() const { return std::max(max_gaussian_deviation, max_cut_deviation); }
};

/// Relative deviation of quadratic forms on num_vectors standard-normal
/// vectors plus all 2^n indicator vectors when n is enumerable.
SpectralReport verify_spectral_sample(const UndirectedHypergraph<double>& h,
                                      const UndirectedHypergraph<double>& sparse,
                                      double epsilon, std::size_t num_vectors,
                                      std::uint64_t seed);
SpectralReport verify_spectral_sample(const DirectedHypergraph<double>& h,
                                      const DirectedHypergraph<double>& sparse,
                                      double epsilon, std::size_t num_vectors,
                                      std::uint64_t seed);

}  // namespace hypersparse
