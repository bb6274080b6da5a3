#ifndef KEC_GRAPH_IO_HPP
#define KEC_GRAPH_IO_HPP

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "kec/graph.hpp"

namespace kec {

enum class GraphFormat { kEdgeList, kGraph6 };

// Parse failure annotated with a 1-based line and column.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line, int column);
  int line() const { return line_; }
  int column() const { return column_; }
  const std::string& message() const { return message_; }

 private:
  std::string message_;
  int line_;
  int column_;
};

// Native edge-list text:
//
//   n m
//   u v        (m lines, 0-based; parallel edges repeat the line)
//
// Lines whose first non-blank character is '#' are comments. Several records
// may follow one another in one stream.
std::vector<MultiGraph> parse_edge_lists(std::string_view text);
MultiGraph parse_edge_list(std::string_view text);

// Canonical edge-list text: edges sorted by (min endpoint, max endpoint),
// parallel copies in id order, each written "min max".
std::string write_edge_list(const MultiGraph& g);

// Only kEdgeList is writable; graph6 is an ingestion format here and throws
// std::invalid_argument.
std::string write_graph(const MultiGraph& g, GraphFormat format = GraphFormat::kEdgeList);

// Edge-list text in EdgeId order, for records whose ids must be preserved.
std::string write_edge_list_in_id_order(const MultiGraph& g);

// Standard graph6 (simple graphs). An optional ">>graph6<<" header is
// accepted; blank lines are skipped.
std::vector<MultiGraph> parse_graph6_lines(std::string_view text);
MultiGraph parse_graph6(std::string_view line);

std::vector<MultiGraph> read_graphs(const std::filesystem::path& path, GraphFormat format);
MultiGraph read_graph(const std::filesystem::path& path, GraphFormat format);

}  // namespace kec

#endif  // KEC_GRAPH_IO_HPP
