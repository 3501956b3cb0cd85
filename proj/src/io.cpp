#include "hypersparse/io.hpp"

#include "hypersparse/errors.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace hypersparse {

namespace {

struct Line {
  std::size_t number;
  std::string_view text;
  std::vector<std::string_view> tokens;
};

std::vector<std::string_view> split(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

// Non-blank lines, comments included (callers decide what a comment means).
std::vector<Line> lines_of(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0, pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    std::string_view line = text.substr(pos, end - pos);
    if (!line.empty() && line.back() == '\r')
      throw ParseError(number, "CR line endings are not accepted");
    auto tokens = split(line);
    if (!tokens.empty()) out.push_back({number, line, std::move(tokens)});
    pos = end + 1;
  }
  return out;
}

bool is_comment(const Line& l) { return l.tokens.front().front() == '#'; }

long long parse_int(const Line& l, std::string_view tok, const char* what) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw ParseError(l.number, std::string("expected integer ") + what +
                                   ", got '" + std::string(tok) + "'");
  return value;
}

double parse_weight(const Line& l, std::string_view tok, const char* what) {
  double value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size() || !std::isfinite(value))
    throw ParseError(l.number, std::string("expected number ") + what + ", got '" +
                                   std::string(tok) + "'");
  if (value < 0)
    throw ParseError(l.number, std::string("negative ") + what);
  return value;
}

class Cursor {
 public:
  explicit Cursor(const Line& l) : line_(l) {}
  std::string_view next(const char* what) {
    if (pos_ >= line_.tokens.size())
      throw ParseError(line_.number, std::string("missing ") + what);
    return line_.tokens[pos_++];
  }
  void keyword(std::string_view kw) {
    auto tok = next(std::string(kw).c_str());
    if (tok != kw)
      throw ParseError(line_.number, "expected '" + std::string(kw) + "', got '" +
                                         std::string(tok) + "'");
  }
  long long integer(const char* what) { return parse_int(line_, next(what), what); }
  double weight(const char* what) { return parse_weight(line_, next(what), what); }
  void finish() {
    if (pos_ != line_.tokens.size())
      throw ParseError(line_.number, "unexpected trailing token '" +
                                         std::string(line_.tokens[pos_]) + "'");
  }
  const Line& line() const { return line_; }

 private:
  const Line& line_;
  std::size_t pos_ = 0;
};

std::vector<VertexId> vertex_list(Cursor& c, int n, const char* what) {
  const long long k = c.integer("vertex count");
  if (k < 1) throw ParseError(c.line().number, std::string("empty ") + what);
  if (k > n)
    throw ParseError(c.line().number, std::string(what) + " larger than n");
  std::vector<VertexId> out;
  out.reserve(static_cast<std::size_t>(k));
  for (long long j = 0; j < k; ++j) {
    const long long v = c.integer("vertex id");
    if (v < 0 || v >= n)
      throw ParseError(c.line().number, "vertex id " + std::to_string(v) +
                                            " outside [0, " + std::to_string(n) + ")");
    out.push_back(static_cast<VertexId>(v));
  }
  std::sort(out.begin(), out.end());
  if (std::adjacent_find(out.begin(), out.end()) != out.end())
    throw ParseError(c.line().number, std::string("duplicate vertex in ") + what);
  return out;
}

void expect_header(const std::vector<Line>& lines, std::string_view magic) {
  if (lines.empty()) throw ParseError(1, "empty input");
  const Line& h = lines.front();
  if (h.tokens.size() != 2 || h.tokens[0] != magic)
    throw ParseError(h.number, "expected header '" + std::string(magic) + " 1'");
  if (h.tokens[1] != "1")
    throw ParseError(h.number, "unsupported format version '" +
                                   std::string(h.tokens[1]) + "'");
}

int vertex_count_line(const Line& l) {
  Cursor c(l);
  c.keyword("n");
  const long long n = c.integer("vertex count");
  c.finish();
  if (n < 1 || n > (1 << 24))
    throw ParseError(l.number, "vertex count out of range");
  return static_cast<int>(n);
}

// Header, then comments, then "n <n>". Returns index of the first body line.
std::size_t read_preamble(const std::vector<Line>& lines, std::string_view magic,
                          int& n, std::optional<int>* lifted_from) {
  expect_header(lines, magic);
  std::size_t i = 1;
  for (; i < lines.size() && is_comment(lines[i]); ++i) {
    if (lifted_from == nullptr) continue;
    const auto& t = lines[i].tokens;
    if (t.size() == 4 && t[0] == "#" && t[1] == "lifted" && t[2] == "from" &&
        t[3].substr(0, 2) == "n=") {
      const long long src = parse_int(lines[i], t[3].substr(2), "source n");
      if (src < 1) throw ParseError(lines[i].number, "source n must be >= 1");
      *lifted_from = static_cast<int>(src);
    }
  }
  if (i == lines.size())
    throw ParseError(lines.back().number + 1, "missing 'n <n>' line");
  n = vertex_count_line(lines[i]);
  return i + 1;
}

void append_list(std::string& out, const std::vector<VertexId>& ids) {
  out += std::to_string(ids.size());
  for (VertexId v : ids) {
    out += ' ';
    out += std::to_string(v);
  }
}

std::vector<VertexId> sorted_copy(std::vector<VertexId> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

std::string format_number(double value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  if (ec != std::errc()) throw std::runtime_error("format_number failed");
  return std::string(buf, ptr);
}

FileKind detect_kind(std::string_view text) {
  auto lines = lines_of(text);
  if (lines.empty()) throw ParseError(1, "empty input");
  const auto magic = lines.front().tokens.front();
  if (magic == "UHG") return FileKind::Undirected;
  if (magic == "DHG") return FileKind::Directed;
  if (magic == "SFN") return FileKind::Splitting;
  throw ParseError(lines.front().number,
                   "unknown header '" + std::string(magic) + "'");
}

ParsedUndirected parse_undirected(std::string_view text) {
  const auto lines = lines_of(text);
  ParsedUndirected out;
  int n = 0;
  std::size_t i = read_preamble(lines, "UHG", n, &out.lifted_from);
  out.graph.n = n;
  for (; i < lines.size(); ++i) {
    if (is_comment(lines[i])) continue;
    Cursor c(lines[i]);
    c.keyword("e");
    const double w = c.weight("weight");
    auto vertices = vertex_list(c, n, "vertex set");
    c.finish();
    out.graph.edges.push_back({std::move(vertices), w});
  }
  if (out.lifted_from &&
      static_cast<long long>(*out.lifted_from) * *out.lifted_from + 1 != n)
    throw ParseError(lines.front().number,
                     "lifted comment names n=" + std::to_string(*out.lifted_from) +
                         " but the file has " + std::to_string(n) + " vertices");
  return out;
}

DirectedHypergraph<double> parse_directed(std::string_view text) {
  const auto lines = lines_of(text);
  int n = 0;
  std::size_t i = read_preamble(lines, "DHG", n, nullptr);
  DirectedHypergraph<double> out(n);
  for (; i < lines.size(); ++i) {
    if (is_comment(lines[i])) continue;
    Cursor c(lines[i]);
    c.keyword("e");
    const double w = c.weight("weight");
    c.keyword("t");
    auto tail = vertex_list(c, n, "tail");
    c.keyword("h");
    auto head = vertex_list(c, n, "head");
    c.finish();
    out.edges.push_back({std::move(tail), std::move(head), w});
  }
  return out;
}

SubmodularHypergraph parse_splitting(std::string_view text) {
  const auto lines = lines_of(text);
  expect_header(lines, "SFN");
  std::size_t i = 1;
  while (i < lines.size() && is_comment(lines[i])) ++i;
  std::optional<int> declared_n;
  if (i < lines.size() && lines[i].tokens.front() == "n") {
    declared_n = vertex_count_line(lines[i]);
    ++i;
  }

  struct Block {
    std::size_t line;
    std::vector<VertexId> support;
    double weight = 1.0;
    std::vector<double> table;
    std::vector<bool> seen;
  };
  std::vector<Block> blocks;
  for (; i < lines.size(); ++i) {
    if (is_comment(lines[i])) continue;
    Cursor c(lines[i]);
    const auto kw = c.next("keyword");
    if (kw == "support") {
      const long long k = c.integer("support size");
      if (k < 0 || k > 24)
        throw ParseError(c.line().number, "support size must be in [0, 24]");
      Block b;
      b.line = c.line().number;
      for (long long j = 0; j < k; ++j) {
        const long long v = c.integer("vertex id");
        if (v < 0 || v >= (1 << 24))
          throw ParseError(c.line().number, "vertex id out of range");
        b.support.push_back(static_cast<VertexId>(v));
      }
      c.finish();
      if (!std::is_sorted(b.support.begin(), b.support.end()) ||
          std::adjacent_find(b.support.begin(), b.support.end()) != b.support.end())
        throw ParseError(c.line().number, "support must be strictly ascending");
      if (declared_n) {
        for (VertexId v : b.support)
          if (v >= *declared_n)
            throw ParseError(c.line().number, "vertex id " + std::to_string(v) +
                                                  " outside [0, n)");
      }
      b.table.assign(std::size_t{1} << k, 0.0);
      b.seen.assign(std::size_t{1} << k, false);
      blocks.push_back(std::move(b));
      continue;
    }
    if (blocks.empty())
      throw ParseError(c.line().number, "'" + std::string(kw) + "' before any support line");
    Block& b = blocks.back();
    if (kw == "weight") {
      b.weight = c.weight("weight");
      c.finish();
    } else if (kw == "v") {
      const auto hex = c.next("subset mask");
      std::uint64_t mask = 0;
      auto [ptr, ec] = std::from_chars(hex.data(), hex.data() + hex.size(), mask, 16);
      if (ec != std::errc() || ptr != hex.data() + hex.size())
        throw ParseError(c.line().number, "bad hex mask '" + std::string(hex) + "'");
      if (mask >= b.table.size())
        throw ParseError(c.line().number, "mask outside the support");
      if (b.seen[mask])
        throw ParseError(c.line().number, "duplicate value for mask " + std::string(hex));
      b.table[mask] = c.weight("value");
      b.seen[mask] = true;
      c.finish();
    } else {
      throw ParseError(c.line().number, "unknown keyword '" + std::string(kw) + "'");
    }
  }
  if (blocks.empty())
    throw ParseError(lines.back().number, "no splitting functions");

  int n = declared_n.value_or(1);
  if (!declared_n)
    for (const auto& b : blocks)
      if (!b.support.empty()) n = std::max(n, b.support.back() + 1);
  SubmodularHypergraph out(n);
  for (auto& b : blocks) {
    if (std::find(b.seen.begin(), b.seen.end(), false) != b.seen.end())
      throw ParseError(b.line, "support block is missing value lines");
    out.add_edge(SplittingFunction::from_table(std::move(b.support), std::move(b.table)),
                 b.weight);
  }
  return out;
}

std::string emit(const UndirectedHypergraph<double>& h, std::optional<int> lifted_from) {
  std::string out = "UHG 1\n";
  if (lifted_from) out += "# lifted from n=" + std::to_string(*lifted_from) + "\n";
  out += "n " + std::to_string(h.n) + "\n";
  for (const auto& e : h.edges) {
    out += "e " + format_number(e.weight) + " ";
    append_list(out, sorted_copy(e.vertices));
    out += '\n';
  }
  return out;
}

std::string emit(const DirectedHypergraph<double>& h) {
  std::string out = "DHG 1\nn " + std::to_string(h.n) + "\n";
  for (const auto& e : h.edges) {
    out += "e " + format_number(e.weight) + " t ";
    append_list(out, sorted_copy(e.tail));
    out += " h ";
    append_list(out, sorted_copy(e.head));
    out += '\n';
  }
  return out;
}

std::string emit(const SubmodularHypergraph& h) {
  std::string out = "SFN 1\nn " + std::to_string(h.n) + "\n";
  for (const auto& e : h.edges) {
    out += "support ";
    append_list(out, e.function.support());
    out += '\n';
    if (e.weight != 1.0) out += "weight " + format_number(e.weight) + "\n";
    const auto table = e.function.tabulate();
    char buf[32];
    for (std::size_t m = 0; m < table.size(); ++m) {
      auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, m, 16);
      out += "v ";
      out.append(buf, ptr);
      out += ' ';
      out += format_number(table[m]);
      out += '\n';
    }
  }
  return out;
}

std::vector<int> parse_tags(std::string_view text) {
  std::vector<int> out;
  for (const auto& l : lines_of(text)) {
    if (is_comment(l)) continue;
    Cursor c(l);
    const long long t = c.integer("tag");
    c.finish();
    if (t < 0 || t > (1 << 24)) throw ParseError(l.number, "tag out of range");
    out.push_back(static_cast<int>(t));
  }
  return out;
}

std::string emit_tags(const std::vector<int>& tags) {
  std::string out;
  for (int t : tags) out += std::to_string(t) + "\n";
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("read error on '" + path + "'");
  return buf.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) throw IoError("write error on '" + path + "'");
}

}  // namespace hypersparse
