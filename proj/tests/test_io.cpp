#include "hypersparse/errors.hpp"
#include "hypersparse/evaluate.hpp"
#include "hypersparse/families.hpp"
#include "hypersparse/io.hpp"
#include "hypersparse/lift.hpp"
#include "support/instances.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>

namespace hs = hypersparse;

namespace {

std::size_t parse_error_line(auto&& fn) {
  try {
    fn();
  } catch (const hs::ParseError& e) {
    return e.line();
  }
  return 0;
}

}  // namespace

TEST(FormatNumber, ShortestRoundTrip) {
  EXPECT_EQ(hs::format_number(1.0), "1");
  EXPECT_EQ(hs::format_number(0.1), "0.1");
  EXPECT_EQ(hs::format_number(2.5), "2.5");
  EXPECT_EQ(hs::format_number(1e-300), "1e-300");
  hstest::Engine g(1);
  for (int i = 0; i < 1000; ++i) {
    const double x = std::ldexp(hstest::uniform_real(g, 0.5, 1.0), hstest::uniform_int(g, -40, 40));
    EXPECT_EQ(std::stod(hs::format_number(x)), x);
  }
}

TEST(Uhg, ParseAndEmit) {
  const std::string text = "UHG 1\nn 3\ne 1 2 0 1\ne 2.5 3 0 1 2\n";
  const auto parsed = hs::parse_undirected(text);
  EXPECT_FALSE(parsed.lifted_from.has_value());
  ASSERT_EQ(parsed.graph.edges.size(), 2u);
  EXPECT_EQ(parsed.graph.edges[1].weight, 2.5);
  EXPECT_EQ(hs::emit(parsed.graph), text);
}

TEST(Uhg, AcceptsCommentsBlankLinesAndUnsortedLists) {
  const auto parsed = hs::parse_undirected("UHG 1\n# hello\n\nn 3\n# edge\ne 1.0 2 2 0\n");
  EXPECT_EQ(hs::emit(parsed.graph), "UHG 1\nn 3\ne 1 2 0 2\n");
}

TEST(Uhg, LiftedComment) {
  hs::DirectedHypergraph<double> h(2);
  h.add_edge({0}, {1});
  const auto l = hs::lift_hypergraph(h);
  const std::string text = hs::emit(l.graph, l.source_n);
  EXPECT_EQ(text, "UHG 1\n# lifted from n=2\nn 5\ne 1 2 1 4\n");
  const auto back = hs::parse_undirected(text);
  EXPECT_EQ(back.lifted_from, 2);
  EXPECT_EQ(back.graph, l.graph);
  EXPECT_THROW(hs::parse_undirected("UHG 1\n# lifted from n=3\nn 5\n"), hs::ParseError);
}

TEST(Uhg, RejectsMalformedWithLineNumbers) {
  EXPECT_EQ(parse_error_line([] { hs::parse_undirected("UHG 1\nn 3\ne 1 2 0 3\n"); }), 3u);
  EXPECT_EQ(parse_error_line([] { hs::parse_undirected("UHG 1\nn 3\ne -1 2 0 1\n"); }), 3u);
  EXPECT_EQ(parse_error_line([] { hs::parse_undirected("UHG 1\nn 3\ne 1 2 0 0\n"); }), 3u);
  EXPECT_EQ(parse_error_line([] { hs::parse_undirected("UHG 1\nn 3\ne 1 2 0\n"); }), 3u);
  EXPECT_EQ(parse_error_line([] { hs::parse_undirected("UHG 1\nn 3\ne 1 1 0 2\n"); }), 3u);
  EXPECT_EQ(parse_error_line([] { hs::parse_undirected("UHG 1\nn 3\ne x 1 0\n"); }), 3u);
  EXPECT_EQ(parse_error_line([] { hs::parse_undirected("UHG 2\nn 3\n"); }), 1u);
  EXPECT_EQ(parse_error_line([] { hs::parse_undirected("DHG 1\nn 3\n"); }), 1u);
  EXPECT_EQ(parse_error_line([] { hs::parse_undirected("UHG 1\nn 3\r\n"); }), 2u);
  EXPECT_EQ(parse_error_line([] { hs::parse_undirected("UHG 1\nn 0\n"); }), 2u);
  EXPECT_EQ(parse_error_line([] { hs::parse_undirected(""); }), 1u);
}

TEST(Dhg, ParseAndEmit) {
  const std::string text = "DHG 1\nn 3\ne 1 t 2 0 1 h 1 2\ne 0.5 t 1 1 h 2 0 1\n";
  const auto h = hs::parse_directed(text);
  ASSERT_EQ(h.edges.size(), 2u);
  EXPECT_EQ(h.edges[1].head, (std::vector<int>{0, 1}));
  EXPECT_EQ(hs::emit(h), text);
  EXPECT_EQ(parse_error_line([] { hs::parse_directed("DHG 1\nn 3\ne 1 t 1 0 x 1 2\n"); }), 3u);
  EXPECT_EQ(parse_error_line([] { hs::parse_directed("DHG 1\nn 3\ne 1 t 0 h 1 2\n"); }), 3u);
  EXPECT_EQ(parse_error_line([] { hs::parse_directed("DHG 1\nn 3\ne 1 t 1 0 h 1 2 extra\n"); }),
            3u);
}

TEST(Sfn, ParseAndEmit) {
  hs::SubmodularHypergraph h(4);
  h.add_edge(hs::families::truncated_cardinality({0, 2}, 1));
  h.add_edge(hs::families::modular({1, 3}, {0.5, 2.0}), 3.0);
  const std::string text = hs::emit(h);
  EXPECT_EQ(text,
            "SFN 1\nn 4\n"
            "support 2 0 2\nv 0 0\nv 1 1\nv 2 1\nv 3 1\n"
            "support 2 1 3\nweight 3\nv 0 0\nv 1 0.5\nv 2 2\nv 3 2.5\n");
  const auto back = hs::parse_splitting(text);
  EXPECT_EQ(back.n, 4);
  ASSERT_EQ(back.edges.size(), 2u);
  EXPECT_EQ(back.edges[1].weight, 3.0);
  EXPECT_EQ(back.edges[1].function.tabulate(), (std::vector<double>{0, 0.5, 2, 2.5}));
  EXPECT_EQ(hs::emit(back), text);
}

TEST(Sfn, OptionalVertexCountAndErrors) {
  const auto h = hs::parse_splitting("SFN 1\nsupport 1 4\nv 0 0\nv 1 1\n");
  EXPECT_EQ(h.n, 5);
  EXPECT_EQ(parse_error_line([] { hs::parse_splitting("SFN 1\nsupport 1 0\nv 0 0\n"); }), 2u);
  EXPECT_EQ(parse_error_line([] { hs::parse_splitting("SFN 1\nsupport 1 0\nv 0 0\nv 2 1\n"); }),
            4u);
  EXPECT_EQ(parse_error_line([] { hs::parse_splitting("SFN 1\nsupport 2 1 0\n"); }), 2u);
  EXPECT_EQ(parse_error_line([] { hs::parse_splitting("SFN 1\nv 0 0\n"); }), 2u);
}

TEST(Tags, RoundTrip) {
  const std::vector<int> tags{0, 0, 1, 2, 2, 2};
  EXPECT_EQ(hs::emit_tags(tags), "0\n0\n1\n2\n2\n2\n");
  EXPECT_EQ(hs::parse_tags(hs::emit_tags(tags)), tags);
  EXPECT_EQ(parse_error_line([] { hs::parse_tags("0\nx\n"); }), 2u);
}

TEST(DetectKind, FromHeader) {
  EXPECT_EQ(hs::detect_kind("UHG 1\n"), hs::FileKind::Undirected);
  EXPECT_EQ(hs::detect_kind("DHG 1\n"), hs::FileKind::Directed);
  // The header must be the first line.
  EXPECT_THROW(hs::detect_kind("# c\nDHG 1\n"), hs::ParseError);
  EXPECT_EQ(hs::detect_kind("SFN 1\n"), hs::FileKind::Splitting);
  EXPECT_THROW(hs::detect_kind("XYZ 1\n"), hs::ParseError);
}

TEST(Files, ReadWriteAndErrors) {
  const auto path = std::filesystem::temp_directory_path() / "hypersparse_io_test.txt";
  hs::write_file(path.string(), "UHG 1\nn 1\n");
  EXPECT_EQ(hs::read_file(path.string()), "UHG 1\nn 1\n");
  std::filesystem::remove(path);
  EXPECT_THROW(hs::read_file(path.string()), hs::IoError);
  EXPECT_THROW(hs::write_file("/nonexistent-dir/x", "y"), hs::IoError);
}

TEST(IoProperties, EmitParseRoundTrips) {
  hstest::Engine g(3);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = hstest::uniform_int(g, 1, 12);
    const auto d = hstest::random_directed(g, n, hstest::uniform_int(g, 0, 30));
    const auto u = hstest::random_undirected(g, n, hstest::uniform_int(g, 0, 30));
    EXPECT_EQ(hs::parse_directed(hs::emit(d)), d);
    EXPECT_EQ(hs::parse_undirected(hs::emit(u)).graph, u);
    const std::string canonical = hs::emit(d);
    EXPECT_EQ(hs::emit(hs::parse_directed(canonical)), canonical);
  }
}
