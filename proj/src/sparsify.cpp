#include "hypersparse/sparsify.hpp"

#include "hypersparse/errors.hpp"
#include "hypersparse/random.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <sstream>

namespace hypersparse {

namespace {

Eigen::VectorXd weights_of(const auto& h) {
  Eigen::VectorXd w(static_cast<Eigen::Index>(h.edges.size()));
  for (std::size_t i = 0; i < h.edges.size(); ++i) w(static_cast<Eigen::Index>(i)) = h.edges[i].weight;
  return w;
}

std::string hex(std::uint64_t v) {
  std::ostringstream s;
  s << std::hex << v;
  return s.str();
}

// Folds one cut into a running report. Relative error of a zero base cut is
// zero when the approximation is also zero and infinite otherwise.
void accumulate(CutReport& report, std::uint64_t label, double base, double approx,
                double epsilon) {
  double rel;
  bool ok;
  if (base > 0.0) {
    const double diff = std::abs(approx - base);
    rel = diff / base;
    ok = diff <= epsilon * base;
  } else {
    ok = approx == 0.0;
    rel = ok ? 0.0 : std::numeric_limits<double>::infinity();
  }
  if (!ok) report.pass = false;
  if (rel > report.max_rel_error) {
    report.max_rel_error = rel;
    report.worst_cut = label;
  }
}

}  // namespace

void SparsifyConfig::validate() const {
  if (!(epsilon > 0.0 && epsilon < 1.0))
    throw std::invalid_argument("epsilon must lie in (0, 1)");
  if (!(delta > 0.0 && delta < 1.0))
    throw std::invalid_argument("delta must lie in (0, 1)");
  if (!(oversample_c >= 1.0) || !std::isfinite(oversample_c))
    throw std::invalid_argument("oversample_c must be >= 1");
  if (max_retries < 0) throw std::invalid_argument("max_retries must be >= 0");
}

CutFamily::CutFamily(int dimension, Eigen::VectorXd weights, ContributionFn contributions)
    : dimension_(dimension),
      weights_(std::move(weights)),
      contributions_(std::move(contributions)) {
  require_enumerable(dimension_);
  if (!contributions_) throw std::invalid_argument("CutFamily: empty contribution function");
}

CutFamily all_cuts(const UndirectedHypergraph<double>& h) {
  std::vector<std::uint64_t> masks;
  for (const auto& e : h.edges) masks.push_back(detail::mask_of(e.vertices));
  return CutFamily(h.n, weights_of(h),
                   [masks = std::move(masks)](std::uint64_t s, Eigen::Ref<Eigen::VectorXd> out) {
                     for (std::size_t i = 0; i < masks.size(); ++i) {
                       const std::uint64_t inside = s & masks[i];
                       out(static_cast<Eigen::Index>(i)) =
                           (inside != 0 && inside != masks[i]) ? 1.0 : 0.0;
                     }
                   });
}

CutFamily all_cuts(const DirectedHypergraph<double>& h) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> masks;
  for (const auto& e : h.edges)
    masks.emplace_back(detail::mask_of(e.tail), detail::mask_of(e.head));
  return CutFamily(h.n, weights_of(h),
                   [masks = std::move(masks)](std::uint64_t s, Eigen::Ref<Eigen::VectorXd> out) {
                     for (std::size_t i = 0; i < masks.size(); ++i)
                       out(static_cast<Eigen::Index>(i)) =
                           ((s & masks[i].first) != 0 && (masks[i].second & ~s) != 0) ? 1.0 : 0.0;
                   });
}

CutFamily all_cuts(const SubmodularHypergraph& h) {
  // Copies of the oracles keep the family valid independently of h.
  std::vector<SplittingFunction> functions;
  for (const auto& e : h.edges) functions.push_back(e.function);
  return CutFamily(
      h.n, weights_of(h),
      [functions = std::move(functions)](std::uint64_t s, Eigen::Ref<Eigen::VectorXd> out) {
        for (std::size_t i = 0; i < functions.size(); ++i) {
          const auto& f = functions[i];
          std::uint64_t local = 0;
          for (std::size_t j = 0; j < f.support().size(); ++j)
            if ((s >> f.support()[j]) & 1u) local |= std::uint64_t{1} << j;
          const double v = f(local);
          if (!std::isfinite(v) || v < 0.0)
            throw ContractViolation(i, "splitting function returned an invalid value");
          out(static_cast<Eigen::Index>(i)) = v;
        }
      });
}

CutFamily lifted_cuts(const LiftedHypergraph<double>& lifted) {
  const int source_n = lifted.source_n;
  auto graph = std::make_shared<const UndirectedHypergraph<double>>(lifted.graph);
  return CutFamily(source_n, weights_of(lifted.graph),
                   [graph, source_n](std::uint64_t s, Eigen::Ref<Eigen::VectorXd> out) {
                     const CutSet image = lift_cut(CutSet::from_mask(source_n, s));
                     for (std::size_t i = 0; i < graph->edges.size(); ++i)
                       out(static_cast<Eigen::Index>(i)) = crosses(graph->edges[i], image) ? 1.0 : 0.0;
                   });
}

Eigen::VectorXd compute_sensitivities(const CutFamily& family) {
  const auto m = static_cast<Eigen::Index>(family.num_edges());
  const Eigen::VectorXd& w = family.weights();
  Eigen::VectorXd sigma = Eigen::VectorXd::Zero(m);
  Eigen::VectorXd c(m);
  bool any_positive = false;
  for (std::uint64_t s = 0; s < family.num_cuts(); ++s) {
    family.contributions(s, c);
    const double cut = c.dot(w);
    if (!(cut > 0.0)) continue;
    any_positive = true;
    sigma = sigma.cwiseMax(c.cwiseProduct(w) / cut);
  }
  if (!any_positive) throw DegenerateInput("every cut in the family has value zero");
  return sigma.cwiseMin(1.0);
}

Eigen::VectorXd compute_sensitivities(const UndirectedHypergraph<double>& h) {
  return compute_sensitivities(all_cuts(h));
}

Eigen::VectorXd compute_sensitivities(const SubmodularHypergraph& h) {
  return compute_sensitivities(all_cuts(h));
}

std::size_t sample_count(double total_sensitivity, int dimension, const SparsifyConfig& cfg) {
  const double raw = cfg.oversample_c * total_sensitivity *
                     (static_cast<double>(dimension) + std::log(1.0 / cfg.delta)) /
                     (cfg.epsilon * cfg.epsilon);
  if (!(raw < 1e15)) throw std::overflow_error("sample count overflow");
  return static_cast<std::size_t>(std::ceil(raw));
}

CutReport verify_weights(const CutFamily& family, const Eigen::VectorXd& new_weights,
                         double epsilon) {
  if (new_weights.size() != family.weights().size())
    throw std::invalid_argument("verify_weights: weight vector length mismatch");
  CutReport report;
  Eigen::VectorXd c(family.weights().size());
  for (std::uint64_t s = 0; s < family.num_cuts(); ++s) {
    family.contributions(s, c);
    accumulate(report, s, c.dot(family.weights()), c.dot(new_weights), epsilon);
  }
  return report;
}

SparsifierResult sensitivity_sample(const CutFamily& family, const SparsifyConfig& cfg) {
  cfg.validate();
  const Eigen::VectorXd& w = family.weights();
  const std::size_t m = family.num_edges();
  const Eigen::VectorXd sigma = compute_sensitivities(family);
  const double total = sigma.sum();
  const std::size_t draws = sample_count(total, family.dimension(), cfg);

  SparsifierResult result;
  result.m_prime = draws;
  if (draws >= m) {
    for (std::size_t i = 0; i < m; ++i)
      if (w(static_cast<Eigen::Index>(i)) > 0.0)
        result.kept.push_back({i, w(static_cast<Eigen::Index>(i))});
    result.verified_max_rel_error = 0.0;
    return result;
  }

  // Prefix sums of sensitivity; edge i owns [prefix[i], prefix[i+1]).
  std::vector<double> prefix(m + 1, 0.0);
  for (std::size_t i = 0; i < m; ++i) prefix[i + 1] = prefix[i] + sigma(static_cast<Eigen::Index>(i));

  CutReport worst;
  worst.max_rel_error = -1.0;
  for (int attempt = 0; attempt <= cfg.max_retries; ++attempt) {
    Rng rng(cfg.seed + static_cast<std::uint64_t>(attempt));
    std::map<std::size_t, double> drawn;
    for (std::size_t t = 0; t < draws; ++t) {
      const double u = rng.uniform() * prefix[m];
      auto it = std::upper_bound(prefix.begin() + 1, prefix.end(), u);
      std::size_t e = static_cast<std::size_t>(it - prefix.begin()) - 1;
      e = std::min(e, m - 1);
      while (sigma(static_cast<Eigen::Index>(e)) <= 0.0 && e > 0) --e;  // guard rounding at the top end
      const double p = sigma(static_cast<Eigen::Index>(e)) / total;
      drawn[e] += w(static_cast<Eigen::Index>(e)) / (static_cast<double>(draws) * p);
    }
    Eigen::VectorXd sampled = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(m));
    for (const auto& [e, weight] : drawn) sampled(static_cast<Eigen::Index>(e)) = weight;

    const CutReport report = verify_weights(family, sampled, cfg.epsilon);
    if (report.pass) {
      for (const auto& [e, weight] : drawn) result.kept.push_back({e, weight});
      result.verified_max_rel_error = report.max_rel_error;
      result.worst_cut = report.worst_cut;
      result.retries_used = attempt;
      return result;
    }
    if (report.max_rel_error > worst.max_rel_error) worst = report;
  }
  throw VerificationFailed(worst.worst_cut, worst.max_rel_error,
                           "sensitivity sampling failed verification after " +
                               std::to_string(cfg.max_retries) + " retries; worst cut 0x" +
                               hex(worst.worst_cut) + " with relative error " +
                               std::to_string(worst.max_rel_error));
}

SparsifierResult sensitivity_sample(const UndirectedHypergraph<double>& h,
                                    const SparsifyConfig& cfg) {
  return sensitivity_sample(all_cuts(h), cfg);
}

SparsifierResult sensitivity_sample(const SubmodularHypergraph& h, const SparsifyConfig& cfg) {
  return sensitivity_sample(all_cuts(h), cfg);
}

CutReport compare_cut_tables(const std::vector<double>& base, const std::vector<double>& approx,
                             double epsilon) {
  if (base.size() != approx.size())
    throw std::invalid_argument("compare_cut_tables: size mismatch");
  CutReport report;
  for (std::uint64_t s = 0; s < base.size(); ++s)
    accumulate(report, s, base[s], approx[s], epsilon);
  return report;
}

namespace {
template <typename Graph>
CutReport verify_pair(const Graph& h, const Graph& sparse, double epsilon) {
  if (h.n != sparse.n)
    throw std::invalid_argument("verify_cut_sparsifier: vertex counts differ (" +
                                std::to_string(h.n) + " vs " + std::to_string(sparse.n) + ")");
  return compare_cut_tables(all_cut_values(h), all_cut_values(sparse), epsilon);
}
}  // namespace

CutReport verify_cut_sparsifier(const UndirectedHypergraph<double>& h,
                                const UndirectedHypergraph<double>& sparse, double epsilon) {
  return verify_pair(h, sparse, epsilon);
}

CutReport verify_cut_sparsifier(const DirectedHypergraph<double>& h,
                                const DirectedHypergraph<double>& sparse, double epsilon) {
  return verify_pair(h, sparse, epsilon);
}

CutReport verify_cut_sparsifier(const SubmodularHypergraph& h, const SubmodularHypergraph& sparse,
                                double epsilon) {
  return verify_pair(h, sparse, epsilon);
}

namespace {
template <typename Graph>
Graph apply_result(const Graph& h, const SparsifierResult& r) {
  Graph out = h;
  out.edges.clear();
  std::size_t previous = 0;
  for (std::size_t k = 0; k < r.kept.size(); ++k) {
    const auto& kept = r.kept[k];
    if (kept.index >= h.edges.size())
      throw std::out_of_range("result keeps edge " + std::to_string(kept.index) +
                              " but the hypergraph has " + std::to_string(h.edges.size()));
    if (k > 0 && kept.index <= previous)
      throw std::invalid_argument("result indices must be strictly ascending");
    previous = kept.index;
    out.edges.push_back(h.edges[kept.index]);
    out.edges.back().weight = kept.weight;
  }
  return out;
}
}  // namespace

UndirectedHypergraph<double> apply(const UndirectedHypergraph<double>& h,
                                   const SparsifierResult& r) {
  return apply_result(h, r);
}

DirectedHypergraph<double> apply(const DirectedHypergraph<double>& h, const SparsifierResult& r) {
  return apply_result(h, r);
}

SubmodularHypergraph apply(const SubmodularHypergraph& h, const SparsifierResult& r) {
  return apply_result(h, r);
}

CutSparsifierBackend sensitivity_backend() {
  return [](const CutFamily& family, const SparsifyConfig& cfg) {
    return sensitivity_sample(family, cfg);
  };
}

CutSparsifierBackend identity_backend() {
  return [](const CutFamily& family, const SparsifyConfig&) {
    SparsifierResult r;
    const Eigen::VectorXd& w = family.weights();
    for (Eigen::Index i = 0; i < w.size(); ++i)
      if (w(i) > 0.0) r.kept.push_back({static_cast<std::size_t>(i), w(i)});
    r.m_prime = family.num_edges();
    r.verified_max_rel_error = 0.0;
    return r;
  };
}

SparsifierResult sparsify_directed(const DirectedHypergraph<double>& h, const SparsifyConfig& cfg,
                                   const CutSparsifierBackend& backend) {
  cfg.validate();
  if (auto problems = validate(h); !problems.empty())
    throw std::invalid_argument("sparsify_directed: " + problems.front());
  const LiftedHypergraph<double> lifted = lift_hypergraph(h);
  SparsifierResult result = backend(lifted_cuts(lifted), cfg);

  // Unlift the backend's sub-hypergraph of the lifted graph.
  LiftedHypergraph<double> lifted_sparse{apply(lifted.graph, result), lifted.source_n};
  const DirectedHypergraph<double> sparse = unlift_hypergraph(lifted_sparse);

  const CutReport report = verify_cut_sparsifier(h, sparse, cfg.epsilon);
  if (!report.pass)
    throw VerificationFailed(report.worst_cut, report.max_rel_error,
                             "unlifted sparsifier violates the (1 +- eps) band at cut 0x" +
                                 hex(report.worst_cut));
  result.verified_max_rel_error = report.max_rel_error;
  result.worst_cut = report.worst_cut;
  return result;
}

namespace {

double relative_deviation(double base, double approx) {
  if (base > 0.0) return std::abs(approx - base) / base;
  return approx == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
}

template <typename Graph>
SpectralReport spectral_sample(const Graph& h, const Graph& sparse, double epsilon,
                               std::size_t num_vectors, std::uint64_t seed) {
  if (h.n != sparse.n)
    throw std::invalid_argument("verify_spectral_sample: vertex counts differ");
  SpectralReport report;
  Rng rng(seed);
  Eigen::VectorXd x(h.n);
  for (std::size_t k = 0; k < num_vectors; ++k) {
    for (int v = 0; v < h.n; ++v) x(v) = rng.normal();
    report.max_gaussian_deviation =
        std::max(report.max_gaussian_deviation,
                 relative_deviation(quad_form(h, x), quad_form(sparse, x)));
    ++report.gaussian_vectors;
  }
  if (h.n <= enumeration_limit()) {
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << h.n); ++s) {
      const Eigen::VectorXd indicator = CutSet::from_mask(h.n, s).indicator();
      const double base = quad_form(h, indicator);
      const double approx = quad_form(sparse, indicator);
      report.max_cut_deviation =
          std::max(report.max_cut_deviation, relative_deviation(base, approx));
      if (std::abs(approx - base) > epsilon * base || (base == 0.0 && approx != 0.0))
        report.cuts_within_epsilon = false;
      ++report.cut_vectors;
    }
  }
  return report;
}

}  // namespace

SpectralReport verify_spectral_sample(const UndirectedHypergraph<double>& h,
                                      const UndirectedHypergraph<double>& sparse, double epsilon,
                                      std::size_t num_vectors, std::uint64_t seed) {
  return spectral_sample(h, sparse, epsilon, num_vectors, seed);
}

SpectralReport verify_spectral_sample(const DirectedHypergraph<double>& h,
                                      const DirectedHypergraph<double>& sparse, double epsilon,
                                      std::size_t num_vectors, std::uint64_t seed) {
  return spectral_sample(h, sparse, epsilon, num_vectors, seed);
}

}  // namespace hypersparse
