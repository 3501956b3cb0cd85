#include "hypersparse/families.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <memory>
#include <numeric>
#include <stdexcept>
#include <string>

namespace hypersparse::families {

namespace {

constexpr SplittingClaims kMonotoneSubmodular{true, true, false};

void require_size(std::size_t got, std::size_t want, const char* what) {
  if (got != want)
    throw std::invalid_argument(std::string(what) + ": expected " + std::to_string(want) +
                                " entries, got " + std::to_string(got));
}

void require_nonnegative(const std::vector<double>& w, const char* what) {
  for (double x : w)
    if (!(x >= 0.0) || !std::isfinite(x))
      throw std::invalid_argument(std::string(what) + ": weights must be finite and >= 0");
}

double masked_sum(const std::vector<double>& w, std::uint64_t mask) {
  double total = 0.0;
  for (std::size_t j = 0; j < w.size(); ++j)
    if ((mask >> j) & 1u) total += w[j];
  return total;
}

}  // namespace

SplittingFunction modular(std::vector<VertexId> support, std::vector<double> weights) {
  require_size(weights.size(), support.size(), "modular");
  require_nonnegative(weights, "modular");
  return SplittingFunction(
      std::move(support),
      [w = std::move(weights)](std::uint64_t m) { return masked_sum(w, m); },
      kMonotoneSubmodular, "modular");
}

SplittingFunction truncated_cardinality(std::vector<VertexId> support, int k) {
  if (k < 0) throw std::invalid_argument("truncated_cardinality: k must be >= 0");
  return SplittingFunction(
      std::move(support),
      [k](std::uint64_t m) { return static_cast<double>(std::min(std::popcount(m), k)); },
      kMonotoneSubmodular, "truncated_cardinality");
}

SplittingFunction weighted_coverage(std::vector<VertexId> support,
                                    std::vector<std::vector<int>> covers,
                                    std::vector<double> item_weights) {
  require_size(covers.size(), support.size(), "weighted_coverage");
  require_nonnegative(item_weights, "weighted_coverage");
  if (item_weights.size() > 64)
    throw std::invalid_argument("weighted_coverage: at most 64 items");
  std::vector<std::uint64_t> item_masks;
  for (const auto& items : covers) {
    std::uint64_t mask = 0;
    for (int item : items) {
      if (item < 0 || static_cast<std::size_t>(item) >= item_weights.size())
        throw std::invalid_argument("weighted_coverage: item index out of range");
      mask |= std::uint64_t{1} << item;
    }
    item_masks.push_back(mask);
  }
  return SplittingFunction(
      std::move(support),
      [masks = std::move(item_masks), w = std::move(item_weights)](std::uint64_t m) {
        std::uint64_t covered = 0;
        for (std::size_t j = 0; j < masks.size(); ++j)
          if ((m >> j) & 1u) covered |= masks[j];
        return masked_sum(w, covered);
      },
      kMonotoneSubmodular, "weighted_coverage");
}

SplittingFunction partition_matroid_rank(std::vector<VertexId> support,
                                         std::vector<int> block_of, std::vector<int> capacity) {
  require_size(block_of.size(), support.size(), "partition_matroid_rank");
  for (int b : block_of)
    if (b < 0 || static_cast<std::size_t>(b) >= capacity.size())
      throw std::invalid_argument("partition_matroid_rank: block index out of range");
  for (int c : capacity)
    if (c < 0) throw std::invalid_argument("partition_matroid_rank: negative capacity");
  return SplittingFunction(
      std::move(support),
      [blocks = std::move(block_of), cap = std::move(capacity)](std::uint64_t m) {
        std::vector<int> count(cap.size(), 0);
        for (std::size_t j = 0; j < blocks.size(); ++j)
          if ((m >> j) & 1u) ++count[static_cast<std::size_t>(blocks[j])];
        int rank = 0;
        for (std::size_t b = 0; b < cap.size(); ++b) rank += std::min(count[b], cap[b]);
        return static_cast<double>(rank);
      },
      kMonotoneSubmodular, "partition_matroid_rank");
}

SplittingFunction graphic_matroid_rank(std::vector<VertexId> support,
                                       std::vector<std::pair<int, int>> endpoints, int nodes) {
  require_size(endpoints.size(), support.size(), "graphic_matroid_rank");
  for (auto [a, b] : endpoints)
    if (a < 0 || b < 0 || a >= nodes || b >= nodes)
      throw std::invalid_argument("graphic_matroid_rank: endpoint out of range");
  return SplittingFunction(
      std::move(support),
      [ends = std::move(endpoints), nodes](std::uint64_t m) {
        std::vector<int> parent(static_cast<std::size_t>(nodes));
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int x) {
          while (parent[static_cast<std::size_t>(x)] != x)
            x = parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
          return x;
        };
        int rank = 0;
        for (std::size_t j = 0; j < ends.size(); ++j) {
          if (!((m >> j) & 1u)) continue;
          const int a = find(ends[j].first), b = find(ends[j].second);
          if (a != b) {
            parent[static_cast<std::size_t>(a)] = b;
            ++rank;
          }
        }
        return static_cast<double>(rank);
      },
      kMonotoneSubmodular, "graphic_matroid_rank");
}

SplittingFunction sqrt_of_modular(std::vector<VertexId> support, std::vector<double> weights) {
  require_size(weights.size(), support.size(), "sqrt_of_modular");
  require_nonnegative(weights, "sqrt_of_modular");
  return SplittingFunction(
      std::move(support),
      [w = std::move(weights)](std::uint64_t m) { return std::sqrt(masked_sum(w, m)); },
      kMonotoneSubmodular, "sqrt_of_modular");
}

SplittingFunction log_of_modular(std::vector<VertexId> support, std::vector<double> weights) {
  require_size(weights.size(), support.size(), "log_of_modular");
  require_nonnegative(weights, "log_of_modular");
  return SplittingFunction(
      std::move(support),
      [w = std::move(weights)](std::uint64_t m) { return std::log1p(masked_sum(w, m)); },
      kMonotoneSubmodular, "log_of_modular");
}

SplittingFunction budget_additive(std::vector<VertexId> support, std::vector<double> weights,
                                  double budget) {
  require_size(weights.size(), support.size(), "budget_additive");
  require_nonnegative(weights, "budget_additive");
  if (!(budget >= 0.0)) throw std::invalid_argument("budget_additive: budget must be >= 0");
  return SplittingFunction(
      std::move(support),
      [w = std::move(weights), budget](std::uint64_t m) {
        return std::min(masked_sum(w, m), budget);
      },
      kMonotoneSubmodular, "budget_additive");
}

SplittingFunction facility_location(std::vector<VertexId> support,
                                    std::vector<std::vector<double>> benefit) {
  require_size(benefit.size(), support.size(), "facility_location");
  const std::size_t clients = benefit.empty() ? 0 : benefit.front().size();
  for (const auto& row : benefit) {
    require_size(row.size(), clients, "facility_location row");
    require_nonnegative(row, "facility_location");
  }
  return SplittingFunction(
      std::move(support),
      [b = std::move(benefit), clients](std::uint64_t m) {
        double total = 0.0;
        for (std::size_t c = 0; c < clients; ++c) {
          double best = 0.0;
          for (std::size_t j = 0; j < b.size(); ++j)
            if ((m >> j) & 1u) best = std::max(best, b[j][c]);
          total += best;
        }
        return total;
      },
      kMonotoneSubmodular, "facility_location");
}

SplittingFunction empirical_entropy(std::vector<VertexId> support,
                                    std::vector<std::vector<int>> samples) {
  if (samples.empty()) throw std::invalid_argument("empirical_entropy: no samples");
  for (const auto& row : samples) require_size(row.size(), support.size(), "empirical_entropy row");
  return SplittingFunction(
      std::move(support),
      [rows = std::move(samples)](std::uint64_t m) {
        std::map<std::vector<int>, int> counts;
        for (const auto& row : rows) {
          std::vector<int> key;
          for (std::size_t j = 0; j < row.size(); ++j)
            if ((m >> j) & 1u) key.push_back(row[j]);
          ++counts[key];
        }
        const double total = static_cast<double>(rows.size());
        double h = 0.0;
        for (const auto& [key, c] : counts) {
          const double p = c / total;
          h -= p * std::log2(p);
        }
        return std::max(h, 0.0);
      },
      kMonotoneSubmodular, "empirical_entropy");
}

SplittingFunction square_cardinality(std::vector<VertexId> support) {
  return SplittingFunction(
      std::move(support),
      [](std::uint64_t m) {
        const double k = std::popcount(m);
        return k * k;
      },
      SplittingClaims{false, true, false}, "square_cardinality");
}

SplittingFunction cut_indicator(std::vector<VertexId> support) {
  const std::uint64_t full =
      support.empty() ? 0 : (~std::uint64_t{0} >> (64 - support.size()));
  return SplittingFunction(
      std::move(support), [full](std::uint64_t m) { return (m != 0 && m != full) ? 1.0 : 0.0; },
      SplittingClaims{true, false, true}, "cut_indicator");
}

}  // namespace hypersparse::families
