// hypersparse: command-line front end for lifting, sparsification,
// verification and multi-hypergraph cut recovery.
//
// Exit codes: 0 success / pass, 1 verification failure, 2 usage or parse
// error, 3 I/O error.

#include "hypersparse/errors.hpp"
#include "hypersparse/evaluate.hpp"
#include "hypersparse/families.hpp"
#include "hypersparse/io.hpp"
#include "hypersparse/lift.hpp"
#include "hypersparse/sketch.hpp"
#include "hypersparse/sparsify.hpp"
#include "hypersparse/submod.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace hs = hypersparse;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string hex(std::uint64_t v) {
  std::ostringstream s;
  s << "0x" << std::hex << v;
  return s.str();
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

long long to_int(const std::string& s) {
  long long v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    throw UsageError("not an integer: '" + s + "'");
  return v;
}

double to_double(const std::string& s) {
  double v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    throw UsageError("not a number: '" + s + "'");
  return v;
}

std::vector<int> int_list(const std::string& s) {
  std::vector<int> out;
  if (s.empty() || s == "none") return out;
  for (const auto& tok : split(s, ',')) out.push_back(static_cast<int>(to_int(tok)));
  return out;
}

std::vector<double> double_list(const std::string& s) {
  std::vector<double> out;
  if (s.empty()) return out;
  for (const auto& tok : split(s, ',')) out.push_back(to_double(tok));
  return out;
}

/// Comma-separated vertex list; "none" is the empty set.
hs::CutSet parse_cut(const std::string& spec, int n) {
  hs::CutSet s(n);
  for (int v : int_list(spec)) {
    if (v < 0 || v >= n)
      throw UsageError("cut vertex " + std::to_string(v) + " outside [0, " + std::to_string(n) +
                       ")");
    s.insert(v);
  }
  return s;
}

void emit_report(const std::string& text, const std::string& path) {
  if (path.empty())
    std::cout << text;
  else
    hs::write_file(path, text);
}

// ---------------------------------------------------------------------------

struct Options {
  std::string in, out, report, a, b, enc, tags, inputs, cut = "none", mode, oracle = "exact";
  std::string family, support, sets, item_weights, weights, blocks, caps;
  double eps = 0.1, delta = 0.01, oversample = 3.0;
  std::uint64_t seed = 0;
  int max_retries = 16, index = 0, k = 1;
  bool symmetrize = false;
};

int cmd_canon(const Options& o) {
  const std::string text = hs::read_file(o.in);
  std::string out;
  switch (hs::detect_kind(text)) {
    case hs::FileKind::Undirected: {
      auto parsed = hs::parse_undirected(text);
      out = hs::emit(parsed.graph, parsed.lifted_from);
      break;
    }
    case hs::FileKind::Directed:
      out = hs::emit(hs::parse_directed(text));
      break;
    case hs::FileKind::Splitting:
      out = hs::emit(hs::parse_splitting(text));
      break;
  }
  emit_report(out, o.out);
  return 0;
}

int cmd_lift(const Options& o) {
  const auto h = hs::parse_directed(hs::read_file(o.in));
  if (auto problems = hs::validate(h); !problems.empty()) throw UsageError(problems.front());
  const auto lifted = hs::lift_hypergraph(h);
  hs::write_file(o.out, hs::emit(lifted.graph, lifted.source_n));
  return 0;
}

int cmd_unlift(const Options& o) {
  auto parsed = hs::parse_undirected(hs::read_file(o.in));
  if (!parsed.lifted_from)
    throw UsageError("'" + o.in + "' lacks the '# lifted from n=<n>' line; refusing to unlift");
  const hs::LiftedHypergraph<double> lifted{std::move(parsed.graph), *parsed.lifted_from};
  hs::write_file(o.out, hs::emit(hs::unlift_hypergraph(lifted)));
  return 0;
}

std::string sparsify_report(const hs::SparsifierResult& r) {
  std::ostringstream s;
  s << "kept_edges: " << r.kept.size() << "\n"
    << "m_prime: " << r.m_prime << "\n"
    << "retries: " << r.retries_used << "\n"
    << "max_rel_error: " << hs::format_number(r.verified_max_rel_error.value_or(0.0)) << "\n"
    << "worst_cut: " << hex(r.worst_cut) << "\n";
  return s.str();
}

int cmd_sparsify(const Options& o) {
  hs::SparsifyConfig cfg;
  cfg.epsilon = o.eps;
  cfg.delta = o.delta;
  cfg.oversample_c = o.oversample;
  cfg.seed = o.seed;
  cfg.max_retries = o.max_retries;
  cfg.validate();
  const std::string text = hs::read_file(o.in);
  hs::SparsifierResult r;
  std::string out;
  if (o.mode == "undirected-cut") {
    const auto h = hs::parse_undirected(text).graph;
    r = hs::sensitivity_sample(h, cfg);
    const auto report = hs::verify_cut_sparsifier(h, hs::apply(h, r), cfg.epsilon);
    r.verified_max_rel_error = report.max_rel_error;
    r.worst_cut = report.worst_cut;
    out = hs::emit(hs::apply(h, r));
  } else if (o.mode == "directed-cut") {
    const auto h = hs::parse_directed(text);
    r = hs::sparsify_directed(h, cfg);
    out = hs::emit(hs::apply(h, r));
  } else if (o.mode == "monotone") {
    // Table-backed functions carry no claims, so they are certified first.
    const auto h = hs::parse_splitting(text);
    r = hs::sparsify_monotone(h, cfg, hs::sensitivity_backend(), /*certify=*/true);
    out = hs::emit(hs::apply(h, r));
  } else {
    throw UsageError("unknown mode '" + o.mode + "'");
  }
  hs::write_file(o.out, out);
  emit_report(sparsify_report(r), o.report);
  return 0;
}

int cmd_verify(const Options& o) {
  const std::string ta = hs::read_file(o.a), tb = hs::read_file(o.b);
  const auto kind = hs::detect_kind(ta);
  if (hs::detect_kind(tb) != kind) throw UsageError("files are of different kinds");
  hs::CutReport report;
  switch (kind) {
    case hs::FileKind::Undirected:
      report = hs::verify_cut_sparsifier(hs::parse_undirected(ta).graph,
                                         hs::parse_undirected(tb).graph, o.eps);
      break;
    case hs::FileKind::Directed:
      report = hs::verify_cut_sparsifier(hs::parse_directed(ta), hs::parse_directed(tb), o.eps);
      break;
    case hs::FileKind::Splitting:
      report = hs::verify_cut_sparsifier(hs::parse_splitting(ta), hs::parse_splitting(tb), o.eps);
      break;
  }
  std::ostringstream s;
  s << "pass: " << (report.pass ? "true" : "false") << "\n"
    << "max_rel_error: " << hs::format_number(report.max_rel_error) << "\n"
    << "worst_cut: " << hex(report.worst_cut) << "\n";
  emit_report(s.str(), o.report);
  return report.pass ? 0 : kExitFail;
}

int cmd_stats(const Options& o) {
  const std::string text = hs::read_file(o.in);
  std::ostringstream s;
  switch (hs::detect_kind(text)) {
    case hs::FileKind::Undirected: {
      const auto h = hs::parse_undirected(text).graph;
      double total = 0;
      std::size_t r = 0;
      for (const auto& e : h.edges) {
        total += e.weight;
        r = std::max(r, e.vertices.size());
      }
      s << "kind: undirected\nn: " << h.n << "\nm: " << h.edges.size()
        << "\ntotal_weight: " << hs::format_number(total) << "\nr: " << r << "\n";
      break;
    }
    case hs::FileKind::Directed: {
      const auto h = hs::parse_directed(text);
      double total = 0;
      std::size_t r = 0, lifted = 0;
      for (const auto& e : h.edges) {
        total += e.weight;
        std::vector<int> both = e.tail;
        both.insert(both.end(), e.head.begin(), e.head.end());
        std::sort(both.begin(), both.end());
        both.erase(std::unique(both.begin(), both.end()), both.end());
        r = std::max(r, both.size());
        lifted += e.tail.size() * e.head.size() + 1;
      }
      s << "kind: directed\nn: " << h.n << "\nm: " << h.edges.size()
        << "\ntotal_weight: " << hs::format_number(total) << "\nr: " << r
        << "\nlifted_edges_size: " << lifted << "\n";
      break;
    }
    case hs::FileKind::Splitting: {
      const auto h = hs::parse_splitting(text);
      double total = 0;
      int r = 0;
      for (const auto& e : h.edges) {
        total += e.weight;
        r = std::max(r, e.function.arity());
      }
      s << "kind: splitting\nn: " << h.n << "\nm: " << h.edges.size()
        << "\ntotal_weight: " << hs::format_number(total) << "\nr: " << r << "\n";
      break;
    }
  }
  std::cout << s.str();
  return 0;
}

int cmd_encode(const Options& o) {
  std::vector<hs::UndirectedHypergraph<double>> inputs;
  for (const auto& path : split(o.inputs, ','))
    inputs.push_back(hs::parse_undirected(hs::read_file(path)).graph);
  const auto enc = hs::encode_multi(inputs);
  hs::write_file(o.out, hs::emit(enc.graph));
  hs::write_file(o.tags, hs::emit_tags(enc.tags));
  return 0;
}

int cmd_recover(const Options& o) {
  auto enc = hs::decode_encoding(hs::parse_directed(hs::read_file(o.enc)),
                                 hs::parse_tags(hs::read_file(o.tags)));
  if (o.index < 0 || o.index >= enc.k)
    throw UsageError("index " + std::to_string(o.index) + " outside [0, " +
                     std::to_string(enc.k) + ")");
  const hs::CutSet s = parse_cut(o.cut, enc.n);
  hs::OracleMode mode;
  if (o.oracle == "exact")
    mode = hs::OracleMode::Exact;
  else if (o.oracle == "random")
    mode = hs::OracleMode::Random;
  else if (o.oracle == "adversarial-corner")
    mode = hs::OracleMode::AdversarialCorner;
  else
    throw UsageError("unknown oracle '" + o.oracle + "'");
  const double eps = mode == hs::OracleMode::Exact ? 0.0 : o.eps;
  const auto oracle = hs::noisy_oracle(enc, eps, mode, o.seed);
  const double estimate = hs::recover_cut(oracle, enc, o.index, s);
  const double truth = hs::cut_value(enc.source(o.index), s);
  const double bound = 3.0 * eps * static_cast<double>(enc.source_edge_count(o.index));
  std::cout << "estimate: " << hs::format_number(estimate) << "\n"
            << "truth: " << hs::format_number(truth) << "\n"
            << "error: " << hs::format_number(std::abs(estimate - truth)) << "\n"
            << "bound: " << hs::format_number(bound) << "\n";
  return 0;
}

hs::SplittingFunction family_function(const Options& o) {
  std::vector<int> support = int_list(o.support);
  const std::size_t k = support.size();
  auto weights_or_ones = [&] {
    auto w = double_list(o.weights);
    if (w.empty()) w.assign(k, 1.0);
    return w;
  };
  if (o.family == "coverage") {
    std::vector<std::vector<int>> covers;
    int items = 0;
    for (const auto& part : split(o.sets, ';')) {
      covers.push_back(int_list(part));
      for (int item : covers.back()) items = std::max(items, item + 1);
    }
    auto iw = double_list(o.item_weights);
    if (iw.empty()) iw.assign(static_cast<std::size_t>(items), 1.0);
    return hs::families::weighted_coverage(support, covers, iw);
  }
  if (o.family == "truncated") return hs::families::truncated_cardinality(support, o.k);
  if (o.family == "modular") return hs::families::modular(support, weights_or_ones());
  if (o.family == "sqrt") return hs::families::sqrt_of_modular(support, weights_or_ones());
  if (o.family == "log") return hs::families::log_of_modular(support, weights_or_ones());
  if (o.family == "partition") {
    auto caps = int_list(o.caps);
    return hs::families::partition_matroid_rank(support, int_list(o.blocks), caps);
  }
  if (o.family == "cut") return hs::families::cut_indicator(support);
  if (o.family == "square") return hs::families::square_cardinality(support);
  throw UsageError("unknown family '" + o.family + "'");
}

int cmd_sfn(const Options& o) {
  auto f = family_function(o);
  const int n = f.support().empty() ? 1 : f.support().back() + 1;
  hs::SubmodularHypergraph h(n);
  h.add_edge(std::move(f));
  emit_report(hs::emit(h), o.out);
  return 0;
}

int cmd_check(const Options& o) {
  const auto h = hs::parse_splitting(hs::read_file(o.in));
  std::ostringstream s;
  bool all_pass = true;
  for (std::size_t i = 0; i < h.edges.size(); ++i) {
    const hs::SplittingFunction f =
        o.symmetrize ? hs::symmetrize(h.edges[i].function, h.n).lifted : h.edges[i].function;
    // Plain functions must be monotone submodular; symmetrized ones must be
    // symmetric submodular. The remaining property is reported only.
    auto line = [&](const char* what, const auto& witness, bool required) {
      s << "edge " << i << " " << what << ": ";
      if (witness) {
        s << hs::describe(f, *witness) << "\n";
        if (required) all_pass = false;
      } else {
        s << "pass\n";
      }
    };
    line("monotone", hs::check_monotone(f), !o.symmetrize);
    line("submodular", hs::check_submodular(f), true);
    line("symmetric", hs::check_symmetric(f), o.symmetrize);
  }
  std::cout << s.str();
  return all_pass ? 0 : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hypersparse: hypergraph cut sparsification toolkit"};
  app.require_subcommand(1);
  Options o;
  int enum_limit = 0;
  app.add_option("--enum-limit", enum_limit, "Override the 2^n enumeration cap (max 24)");

  auto* canon = app.add_subcommand("canon", "Parse a file and write its canonical form");
  canon->add_option("--in", o.in)->required();
  canon->add_option("--out", o.out);

  auto* lift = app.add_subcommand("lift", "Lift a DHG file to a UHG file on n^2 + 1 vertices");
  lift->add_option("--in", o.in)->required();
  lift->add_option("--out", o.out)->required();

  auto* unlift = app.add_subcommand("unlift", "Invert lift on a lifted UHG file");
  unlift->add_option("--in", o.in)->required();
  unlift->add_option("--out", o.out)->required();

  auto* sparsify = app.add_subcommand("sparsify", "Sparsify and verify all cuts");
  sparsify->add_option("--mode", o.mode)
      ->required()
      ->check(CLI::IsMember({"undirected-cut", "directed-cut", "monotone"}));
  sparsify->add_option("--eps", o.eps)->required();
  sparsify->add_option("--delta", o.delta);
  sparsify->add_option("--seed", o.seed);
  sparsify->add_option("--oversample", o.oversample);
  sparsify->add_option("--max-retries", o.max_retries);
  sparsify->add_option("--in", o.in)->required();
  sparsify->add_option("--out", o.out)->required();
  sparsify->add_option("--report", o.report);

  auto* verify = app.add_subcommand("verify", "Check that B is a (1 +- eps) cut sparsifier of A");
  verify->add_option("a", o.a)->required();
  verify->add_option("b", o.b)->required();
  verify->add_option("--eps", o.eps)->required();
  verify->add_option("--report", o.report);

  auto* stats = app.add_subcommand("stats", "Print size statistics");
  stats->add_option("in", o.in)->required();

  auto* encode = app.add_subcommand("encode", "Pack undirected hypergraphs into one directed one");
  encode->add_option("--inputs", o.inputs, "Comma-separated UHG files")->required();
  encode->add_option("--out", o.out)->required();
  encode->add_option("--tags", o.tags)->required();

  auto* recover = app.add_subcommand("recover", "Recover one packed cut from three queries");
  recover->add_option("--enc", o.enc)->required();
  recover->add_option("--tags", o.tags)->required();
  recover->add_option("--index", o.index)->required();
  recover->add_option("--cut", o.cut, "Comma-separated vertices, or 'none'");
  recover->add_option("--oracle", o.oracle)
      ->check(CLI::IsMember({"exact", "random", "adversarial-corner"}));
  recover->add_option("--eps", o.eps);
  recover->add_option("--seed", o.seed);

  auto* sfn = app.add_subcommand("sfn", "Tabulate a structured splitting function as SFN");
  sfn->add_option("--family", o.family, "coverage|truncated|modular|sqrt|log|partition|cut|square")
      ->required();
  sfn->add_option("--support", o.support, "Comma-separated ascending vertex ids")->required();
  sfn->add_option("--sets", o.sets, "coverage: ';'-separated item lists per element");
  sfn->add_option("--item-weights", o.item_weights, "coverage: item weights (default 1)");
  sfn->add_option("--weights", o.weights, "modular, sqrt, log: element weights (default 1)");
  sfn->add_option("--k", o.k, "truncated: cap on |S|");
  sfn->add_option("--blocks", o.blocks, "partition: block id per element");
  sfn->add_option("--caps", o.caps, "partition: capacity per block");
  sfn->add_option("--out", o.out);

  auto* check = app.add_subcommand("check", "Exhaustively check splitting-function properties");
  check->add_option("--in", o.in)->required();
  check->add_flag("--symmetrize", o.symmetrize, "Check the symmetrized functions instead");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (enum_limit != 0) hs::set_enumeration_limit(enum_limit);
    if (*canon) return cmd_canon(o);
    if (*lift) return cmd_lift(o);
    if (*unlift) return cmd_unlift(o);
    if (*sparsify) return cmd_sparsify(o);
    if (*verify) return cmd_verify(o);
    if (*stats) return cmd_stats(o);
    if (*encode) return cmd_encode(o);
    if (*recover) return cmd_recover(o);
    if (*sfn) return cmd_sfn(o);
    if (*check) return cmd_check(o);
  } catch (const hs::IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const hs::VerificationFailed& e) {
    std::cerr << "verification failed: " << e.what() << "\n";
    return kExitFail;
  } catch (const hs::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
