#include "hypersparse/splitting.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hypersparse {

SplittingFunction::SplittingFunction(std::vector<VertexId> support,
                                     Oracle oracle, SplittingClaims claims,
                                     std::string name)
    : support_(std::move(support)),
      oracle_(std::move(oracle)),
      claims_(claims),
      name_(std::move(name)) {
  if (!oracle_) throw std::invalid_argument("SplittingFunction: empty oracle");
  if (arity() > kMaxArity)
    throw std::invalid_argument("SplittingFunction: support larger than " +
                                std::to_string(kMaxArity));
  for (std::size_t i = 0; i < support_.size(); ++i) {
    if (support_[i] < 0)
      throw std::invalid_argument("SplittingFunction: negative vertex id");
    if (i > 0 && support_[i] <= support_[i - 1])
      throw std::invalid_argument(
          "SplittingFunction: support must be strictly ascending");
  }
}

SplittingFunction SplittingFunction::from_table(std::vector<VertexId> support,
                                                std::vector<double> table,
                                                SplittingClaims claims,
                                                std::string name) {
  if (support.size() > 24)
    throw std::invalid_argument("from_table: support too large to tabulate");
  if (table.size() != (std::size_t{1} << support.size()))
    throw std::invalid_argument("from_table: expected 2^k table entries");
  auto values = std::make_shared<const std::vector<double>>(std::move(table));
  return SplittingFunction(
      std::move(support),
      [values](std::uint64_t mask) { return (*values)[mask]; }, claims,
      std::move(name));
}

std::uint64_t SplittingFunction::restrict_to_support(const CutSet& s) const {
  std::uint64_t mask = 0;
  for (std::size_t j = 0; j < support_.size(); ++j)
    if (s.contains(support_[j])) mask |= std::uint64_t{1} << j;
  return mask;
}

std::vector<double> SplittingFunction::tabulate() const {
  if (arity() > 24)
    throw std::invalid_argument("tabulate: support too large");
  std::vector<double> out(std::size_t{1} << arity());
  for (std::uint64_t m = 0; m < out.size(); ++m) out[m] = oracle_(m);
  return out;
}

std::vector<std::string> validate(const SubmodularHypergraph& h) {
  std::vector<std::string> out;
  if (h.n < 1) out.push_back("vertex count must be >= 1");
  for (std::size_t i = 0; i < h.edges.size(); ++i) {
    const std::string prefix = "edge " + std::to_string(i) + ": ";
    const auto& f = h.edges[i].function;
    for (VertexId v : f.support())
      if (v >= h.n)
        out.push_back(prefix + "bad vertex id " + std::to_string(v) +
                      " (n = " + std::to_string(h.n) + ")");
    const double w = h.edges[i].weight;
    if (!std::isfinite(w))
      out.push_back(prefix + "non-finite weight");
    else if (w < 0)
      out.push_back(prefix + "negative weight");
  }
  return out;
}

}  // namespace hypersparse
