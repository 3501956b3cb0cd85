#pragma once

// Structured splitting-function families. All monotone submodular ones come
// with claims set; the last two are controls that are not.

#include "hypersparse/splitting.hpp"

#include <utility>
#include <vector>

namespace hypersparse::families {

/// w(S) = sum of nonnegative element weights.
SplittingFunction modular(std::vector<VertexId> support, std::vector<double> weights);

/// min(|S|, k).
SplittingFunction truncated_cardinality(std::vector<VertexId> support, int k);

/// Total weight of items covered by S; covers[j] lists the items of element j.
SplittingFunction weighted_coverage(std::vector<VertexId> support,
                                    std::vector<std::vector<int>> covers,
                                    std::vector<double> item_weights);

/// Partition matroid rank: sum over blocks b of min(|S cap b|, capacity[b]).
SplittingFunction partition_matroid_rank(std::vector<VertexId> support,
                                         std::vector<int> block_of,
                                         std::vector<int> capacity);

/// Graphic matroid rank: elements are graph edges (endpoints[j]) on the given
/// number of nodes; the rank of S is the size of a spanning forest of S.
SplittingFunction graphic_matroid_rank(std::vector<VertexId> support,
                                       std::vector<std::pair<int, int>> endpoints,
                                       int nodes);

/// sqrt(w(S)).
SplittingFunction sqrt_of_modular(std::vector<VertexId> support, std::vector<double> weights);

/// log(1 + w(S)).
SplittingFunction log_of_modular(std::vector<VertexId> support, std::vector<double> weights);

/// min(w(S), budget).
SplittingFunction budget_additive(std::vector<VertexId> support, std::vector<double> weights,
                                  double budget);

/// sum over clients c of max_{j in S} benefit[j][c] (0 for empty S).
SplittingFunction facility_location(std::vector<VertexId> support,
                                    std::vector<std::vector<double>> benefit);

/// Empirical joint entropy (bits) of the columns in S; samples[r][j] is the
/// value of variable j in observation r.
SplittingFunction empirical_entropy(std::vector<VertexId> support,
                                    std::vector<std::vector<int>> samples);

/// |S|^2: monotone, strictly supermodular. Negative control.
SplittingFunction square_cardinality(std::vector<VertexId> support);

/// 1 iff S is a nonempty proper subset: the undirected cut splitting function.
SplittingFunction cut_indicator(std::vector<VertexId> support);

}  // namespace hypersparse::families
