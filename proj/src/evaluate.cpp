#include "hypersparse/evaluate.hpp"

#include <atomic>
#include <charconv>
#include <cstdlib>
#include <cstring>

namespace hypersparse {

namespace {

std::atomic<int> limit_override{0};

double checked(const SplittingFunction& f, std::uint64_t local,
               std::size_t edge) {
  const double v = f(local);
  if (!std::isfinite(v))
    throw ContractViolation(edge, "splitting function returned a non-finite value");
  if (v < 0.0)
    throw ContractViolation(edge, "splitting function returned a negative value");
  return v;
}

}  // namespace

int enumeration_limit() {
  if (int forced = limit_override.load(); forced > 0) return forced;
  const char* env = std::getenv("HYPERSPARSE_ENUM_LIMIT");
  if (env == nullptr || *env == '\0') return kDefaultEnumerationLimit;
  int value = 0;
  const char* end = env + std::strlen(env);
  auto [ptr, ec] = std::from_chars(env, end, value);
  if (ec != std::errc() || ptr != end || value < 1)
    throw std::invalid_argument(std::string("HYPERSPARSE_ENUM_LIMIT: not a positive integer: ") + env);
  if (value > kMaxEnumerationLimit)
    throw std::invalid_argument("HYPERSPARSE_ENUM_LIMIT: exceeds hard maximum of " +
                                std::to_string(kMaxEnumerationLimit));
  return value;
}

void set_enumeration_limit(int limit) {
  if (limit < 0 || limit > kMaxEnumerationLimit)
    throw std::invalid_argument("enumeration limit must be in [0, " +
                                std::to_string(kMaxEnumerationLimit) + "]");
  limit_override.store(limit);
}

void require_enumerable(int n) {
  const int limit = enumeration_limit();
  if (n > limit) throw EnumerationLimitExceeded(n, limit);
}

double cut_value(const SubmodularHypergraph& h, const CutSet& s) {
  detail::require_same_universe(h.n, s.universe_size());
  double total = 0.0;
  for (std::size_t i = 0; i < h.edges.size(); ++i) {
    const auto& e = h.edges[i];
    total += e.weight * checked(e.function, e.function.restrict_to_support(s), i);
  }
  return total;
}

std::vector<double> all_cut_values(const SubmodularHypergraph& h) {
  require_enumerable(h.n);
  std::vector<double> out(std::size_t{1} << h.n, 0.0);
  for (std::uint64_t s = 0; s < out.size(); ++s) {
    double total = 0.0;
    for (std::size_t i = 0; i < h.edges.size(); ++i) {
      const auto& f = h.edges[i].function;
      std::uint64_t local = 0;
      for (std::size_t j = 0; j < f.support().size(); ++j)
        if ((s >> f.support()[j]) & 1u) local |= std::uint64_t{1} << j;
      total += h.edges[i].weight * checked(f, local, i);
    }
    out[s] = total;
  }
  return out;
}

}  // namespace hypersparse
