#include "hypersparse/sketch.hpp"

#include "hypersparse/evaluate.hpp"
#include "hypersparse/random.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace hypersparse {

namespace {

void require_index(const MultiEncoding& enc, int i) {
  if (i < 0 || i >= enc.k)
    throw std::out_of_range("hypergraph index " + std::to_string(i) + " outside [0, " +
                            std::to_string(enc.k) + ")");
}

void require_base_cut(const MultiEncoding& enc, const CutSet& s) {
  if (s.universe_size() != enc.n)
    throw std::invalid_argument("cut must be over the " + std::to_string(enc.n) +
                                " base vertices, got universe " +
                                std::to_string(s.universe_size()));
}

CutSet embed(const MultiEncoding& enc, const CutSet& s) {
  CutSet out(enc.n + enc.k);
  for (VertexId v : s.members()) out.insert(v);
  return out;
}

CutSet all_w_but(const MultiEncoding& enc, int i) {
  CutSet out(enc.n + enc.k);
  for (int j = 0; j < enc.k; ++j)
    if (j != i) out.insert(enc.w(j));
  return out;
}

// V + (W - w_i) for some i.
bool corner_shaped(const CutSet& q, int n, int k) {
  for (VertexId v = 0; v < n; ++v)
    if (!q.contains(v)) return false;
  int missing = 0;
  for (int j = 0; j < k; ++j)
    if (!q.contains(n + j)) ++missing;
  return missing == 1;
}

std::uint64_t query_hash(const CutSet& q, std::uint64_t seed) {
  std::uint64_t h = mix64(seed ^ static_cast<std::uint64_t>(q.universe_size()));
  for (std::uint64_t w : q.words()) h = mix64(h ^ w);
  return h;
}

}  // namespace

UndirectedHypergraph<double> MultiEncoding::source(int i) const {
  UndirectedHypergraph<double> out(n);
  for (std::size_t j = 0; j < graph.edges.size(); ++j)
    if (tags[j] == i) out.edges.push_back({graph.edges[j].tail, 1.0});
  return out;
}

std::size_t MultiEncoding::source_edge_count(int i) const {
  return static_cast<std::size_t>(std::count(tags.begin(), tags.end(), i));
}

MultiEncoding encode_multi(const std::vector<UndirectedHypergraph<double>>& inputs) {
  if (inputs.empty()) throw std::invalid_argument("encode_multi: no input hypergraphs");
  const int n = inputs.front().n;
  const int k = static_cast<int>(inputs.size());
  MultiEncoding enc;
  enc.n = n;
  enc.k = k;
  enc.graph = DirectedHypergraph<double>(n + k);
  for (int i = 0; i < k; ++i) {
    const auto& h = inputs[static_cast<std::size_t>(i)];
    if (h.n != n)
      throw std::invalid_argument("encode_multi: input " + std::to_string(i) + " has n = " +
                                  std::to_string(h.n) + ", expected " + std::to_string(n));
    if (auto problems = validate(h); !problems.empty())
      throw std::invalid_argument("encode_multi: input " + std::to_string(i) + ": " +
                                  problems.front());
    for (std::size_t j = 0; j < h.edges.size(); ++j) {
      if (h.edges[j].weight != 1.0)
        throw std::invalid_argument("encode_multi: input " + std::to_string(i) + " edge " +
                                    std::to_string(j) + " is weighted; inputs must be unweighted");
      enc.graph.add_edge(h.edges[j].vertices, {enc.w(i)}, 1.0);
      enc.tags.push_back(i);
    }
  }
  return enc;
}

MultiEncoding decode_encoding(DirectedHypergraph<double> graph, std::vector<int> tags) {
  if (tags.size() != graph.edges.size())
    throw std::invalid_argument("tags: " + std::to_string(tags.size()) + " tags for " +
                                std::to_string(graph.edges.size()) + " edges");
  int n = graph.n / 2;
  if (!graph.edges.empty()) {
    if (graph.edges.front().head.size() != 1)
      throw std::invalid_argument("edge 0: head must be a single W vertex");
    n = graph.edges.front().head.front() - tags.front();
  }
  if (n < 1 || n >= graph.n)
    throw std::invalid_argument("cannot infer the base vertex count");
  MultiEncoding enc;
  enc.n = n;
  enc.k = graph.n - n;
  for (std::size_t j = 0; j < graph.edges.size(); ++j) {
    const auto& e = graph.edges[j];
    const std::string where = "edge " + std::to_string(j) + ": ";
    if (tags[j] < 0 || tags[j] >= enc.k)
      throw std::invalid_argument(where + "tag out of range");
    if (e.head.size() != 1 || e.head.front() != enc.w(tags[j]))
      throw std::invalid_argument(where + "head must be {w_tag}");
    if (e.tail.empty() || e.tail.back() >= n)
      throw std::invalid_argument(where + "tail must be a nonempty subset of V");
    if (e.weight != 1.0) throw std::invalid_argument(where + "weight must be 1");
  }
  enc.graph = std::move(graph);
  enc.tags = std::move(tags);
  return enc;
}

RecoveryQueries recovery_queries(const MultiEncoding& enc, int i, const CutSet& s) {
  require_index(enc, i);
  require_base_cut(enc, s);
  const CutSet others = all_w_but(enc, i);
  return {embed(enc, s) | others, embed(enc, s.complement()) | others,
          embed(enc, CutSet::full(enc.n)) | others};
}

Census crossing_census(const MultiEncoding& enc, int i, const CutSet& s) {
  require_index(enc, i);
  require_base_cut(enc, s);
  Census c;
  for (std::size_t j = 0; j < enc.graph.edges.size(); ++j) {
    if (enc.tags[j] != i) continue;
    const auto& e = enc.graph.edges[j].tail;
    const auto inside = std::count_if(e.begin(), e.end(), [&](VertexId v) { return s.contains(v); });
    if (inside > 0) ++c.a;
    if (static_cast<std::size_t>(inside) < e.size()) ++c.b;
    ++c.t;
  }
  return c;
}

CutSketchOracle noisy_oracle(const MultiEncoding& enc, double epsilon, OracleMode mode,
                             std::uint64_t seed) {
  if (!(epsilon >= 0.0 && epsilon < 1.0))
    throw std::invalid_argument("oracle epsilon must lie in [0, 1)");
  auto graph = std::make_shared<const DirectedHypergraph<double>>(enc.graph);
  const int n = enc.n, k = enc.k;
  switch (mode) {
    case OracleMode::Exact:
      return CutSketchOracle([graph](const CutSet& q) { return cut_value(*graph, q); }, 0.0);
    case OracleMode::Random:
      return CutSketchOracle(
          [graph, epsilon, seed](const CutSet& q) {
            const double u =
                static_cast<double>(query_hash(q, seed) >> 11) * 0x1.0p-53;
            return cut_value(*graph, q) * (1.0 + epsilon * (2.0 * u - 1.0));
          },
          epsilon);
    case OracleMode::AdversarialCorner:
      return CutSketchOracle(
          [graph, epsilon, n, k](const CutSet& q) {
            const double factor = corner_shaped(q, n, k) ? 1.0 - epsilon : 1.0 + epsilon;
            return cut_value(*graph, q) * factor;
          },
          epsilon);
  }
  throw std::invalid_argument("unknown oracle mode");
}

double recover_cut(const CutSketchOracle& oracle, const MultiEncoding& enc, int i,
                   const CutSet& s) {
  const RecoveryQueries q = recovery_queries(enc, i, s);
  return oracle(q.q1) + oracle(q.q2) - oracle(q.q3);
}

}  // namespace hypersparse
