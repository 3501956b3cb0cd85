#pragma once

// Line-oriented ASCII formats. Vertices are 0-indexed; numbers use the
// shortest decimal form that round-trips; lines end in LF.
//
//   UHG 1                      DHG 1
//   n <n>                      n <n>
//   e <w> <k> <v1> .. <vk>     e <w> t <kt> <t1> .. h <kh> <h1> ..
//
// A lifted hypergraph carries "# lifted from n=<n>" right after the header.
//
//   SFN 1
//   n <n>                      (optional; defaults to max support id + 1)
//   support <k> <ids>          one block per splitting function
//   weight <w>                 (optional; default 1)
//   v <mask-hex> <value>       2^k lines, one per local subset mask
//
// Emission is canonical: edges in input order, vertex lists ascending, value
// lines in mask order.

#include "hypersparse/hypergraph.hpp"
#include "hypersparse/splitting.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hypersparse {

enum class FileKind { Undirected, Directed, Splitting };

/// Kind named by the header line; throws ParseError on anything else.
FileKind detect_kind(std::string_view text);

struct ParsedUndirected {
  UndirectedHypergraph<double> graph;
  std::optional<int> lifted_from;
};

ParsedUndirected parse_undirected(std::string_view text);
DirectedHypergraph<double> parse_directed(std::string_view text);
SubmodularHypergraph parse_splitting(std::string_view text);

std::string emit(const UndirectedHypergraph<double>& h,
                 std::optional<int> lifted_from = std::nullopt);
std::string emit(const DirectedHypergraph<double>& h);
/// Tabulates every oracle; supports must be small enough to tabulate.
std::string emit(const SubmodularHypergraph& h);

std::vector<int> parse_tags(std::string_view text);
std::string emit_tags(const std::vector<int>& tags);

/// Shortest round-trip decimal form.
std::string format_number(double value);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace hypersparse
