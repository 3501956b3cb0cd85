#include "hypersparse/submod.hpp"

#include "hypersparse/errors.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <sstream>

namespace hypersparse {

namespace {

constexpr int kMaxCheckedArity = 20;

void require_checkable(const SplittingFunction& f) {
  if (f.arity() > kMaxCheckedArity)
    throw std::invalid_argument("exhaustive check needs support size <= " +
                                std::to_string(kMaxCheckedArity));
}

double slack(double tol, std::initializer_list<double> values) {
  double scale = 0.0;
  for (double v : values) scale = std::max(scale, std::abs(v));
  return tol * (1.0 + scale);
}

std::uint64_t bit(int j) { return std::uint64_t{1} << j; }

std::string local_set(const SplittingFunction& f, std::uint64_t mask) {
  std::string out = "{";
  bool first = true;
  for (int j = 0; j < f.arity(); ++j) {
    if (!(mask & bit(j))) continue;
    if (!first) out += ",";
    first = false;
    out += std::to_string(f.support()[static_cast<std::size_t>(j)]);
  }
  return out + "}";
}

}  // namespace

std::optional<SubmodularWitness> check_submodular(const SplittingFunction& f, double tol) {
  require_checkable(f);
  const int k = f.arity();
  const std::vector<double> v = f.tabulate();
  const std::uint64_t full = f.full_mask();

  // Pass/fail from the local condition f(T+x) + f(T+y) >= f(T+x+y) + f(T),
  // which is equivalent to decreasing marginals and costs O(2^k k^2).
  bool violated = false;
  for (std::uint64_t t = 0; t <= full && !violated; ++t) {
    for (int x = 0; x < k && !violated; ++x) {
      if (t & bit(x)) continue;
      for (int y = x + 1; y < k; ++y) {
        if (t & bit(y)) continue;
        const double a = v[t | bit(x)], b = v[t | bit(y)], c = v[t | bit(x) | bit(y)], d = v[t];
        if ((a - d) < (c - b) - slack(tol, {a, b, c, d})) {
          violated = true;
          break;
        }
      }
    }
  }
  if (!violated) return std::nullopt;

  // Lexicographically first violating triple.
  for (std::uint64_t t = 0; t <= full; ++t) {
    for (std::uint64_t u = t + 1; u <= full; ++u) {
      if ((u & t) != t) continue;
      for (int x = 0; x < k; ++x) {
        if (u & bit(x)) continue;
        const double a = v[t | bit(x)], d = v[t], c = v[u | bit(x)], b = v[u];
        const double gain_t = a - d, gain_u = c - b;
        if (gain_t < gain_u - slack(tol, {a, b, c, d}))
          return SubmodularWitness{t, u, x, gain_t, gain_u};
      }
    }
  }
  // Unreachable: every local violation is also a triple violation.
  throw std::logic_error("check_submodular: local violation without a triple witness");
}

std::optional<MonotoneWitness> check_monotone(const SplittingFunction& f, double tol) {
  require_checkable(f);
  const std::vector<double> v = f.tabulate();
  for (std::uint64_t s = 0; s <= f.full_mask(); ++s) {
    for (int x = 0; x < f.arity(); ++x) {
      if (s & bit(x)) continue;
      const double before = v[s], after = v[s | bit(x)];
      if (after < before - slack(tol, {before, after}))
        return MonotoneWitness{s, x, before, after};
    }
  }
  return std::nullopt;
}

std::optional<SymmetricWitness> check_symmetric(const SplittingFunction& f, double tol) {
  require_checkable(f);
  const std::vector<double> v = f.tabulate();
  const std::uint64_t full = f.full_mask();
  for (std::uint64_t s = 0; s <= full; ++s) {
    const std::uint64_t c = full & ~s;
    if (c < s) continue;  // each complementary pair once
    if (std::abs(v[s] - v[c]) > slack(tol, {v[s], v[c]}))
      return SymmetricWitness{s, v[s], v[c]};
  }
  return std::nullopt;
}

std::string describe(const SplittingFunction& f, const SubmodularWitness& w) {
  std::ostringstream s;
  s << "not submodular: T=" << local_set(f, w.smaller) << " U=" << local_set(f, w.larger)
    << " x=" << f.support()[static_cast<std::size_t>(w.element)] << " (gain " << w.gain_smaller
    << " < " << w.gain_larger << ")";
  return s.str();
}

std::string describe(const SplittingFunction& f, const MonotoneWitness& w) {
  std::ostringstream s;
  s << "not monotone: S=" << local_set(f, w.set)
    << " x=" << f.support()[static_cast<std::size_t>(w.element)] << " (" << w.before << " -> "
    << w.after << ")";
  return s.str();
}

std::string describe(const SplittingFunction& f, const SymmetricWitness& w) {
  std::ostringstream s;
  s << "not symmetric: S=" << local_set(f, w.set) << " (" << w.value
    << " != " << w.complement_value << ")";
  return s.str();
}

LiftedSplittingFunction symmetrize(const SplittingFunction& f, VertexId star) {
  if (!f.support().empty() && star <= f.support().back())
    throw std::invalid_argument("symmetrize: star id must exceed every support id");
  if (f.arity() + 1 > SplittingFunction::kMaxArity)
    throw std::invalid_argument("symmetrize: support too large");
  std::vector<VertexId> support = f.support();
  support.push_back(star);
  const std::uint64_t star_bit = bit(f.arity());
  const std::uint64_t base_full = f.full_mask();
  SplittingClaims claims;
  claims.symmetric = true;
  claims.submodular = f.claims().submodular && f.claims().monotone;
  SplittingFunction base = f;
  SplittingFunction lifted(
      std::move(support),
      [base, star_bit, base_full](std::uint64_t t) {
        return (t & star_bit) ? base(base_full & ~t) : base(t);
      },
      claims, f.name().empty() ? std::string("symmetrized") : f.name() + "'");
  return {std::move(base), std::move(lifted), star};
}

LiftedSplittingFunction symmetrize(const SplittingFunction& f) {
  return symmetrize(f, f.support().empty() ? 0 : f.support().back() + 1);
}

LiftedSubmodularHypergraph lift_monotone_hypergraph(const SubmodularHypergraph& h, bool certify) {
  if (auto problems = validate(h); !problems.empty())
    throw std::invalid_argument("lift_monotone_hypergraph: " + problems.front());
  LiftedSubmodularHypergraph out{SubmodularHypergraph(h.n + 1), h.n};
  for (std::size_t i = 0; i < h.edges.size(); ++i) {
    const auto& f = h.edges[i].function;
    if (certify) {
      if (auto w = check_monotone(f)) throw CertificationFailed(i, describe(f, *w));
      if (auto w = check_submodular(f)) throw CertificationFailed(i, describe(f, *w));
    } else if (!f.claims().monotone || !f.claims().submodular) {
      throw std::invalid_argument("edge " + std::to_string(i) +
                                  ": splitting function does not claim monotone + submodular");
    }
    out.graph.add_edge(symmetrize(f, out.star()).lifted, h.edges[i].weight);
  }
  return out;
}

SparsifierResult sparsify_monotone(const SubmodularHypergraph& h, const SparsifyConfig& cfg,
                                   const CutSparsifierBackend& backend, bool certify) {
  cfg.validate();
  const LiftedSubmodularHypergraph lifted = lift_monotone_hypergraph(h, certify);
  SparsifierResult result = backend(all_cuts(lifted.graph), cfg);
  const CutReport report = verify_cut_sparsifier(h, apply(h, result), cfg.epsilon);
  if (!report.pass) {
    std::ostringstream msg;
    msg << "monotone sparsifier violates the (1 +- eps) band at cut 0x" << std::hex
        << report.worst_cut;
    throw VerificationFailed(report.worst_cut, report.max_rel_error, msg.str());
  }
  result.verified_max_rel_error = report.max_rel_error;
  result.worst_cut = report.worst_cut;
  return result;
}

}  // namespace hypersparse
