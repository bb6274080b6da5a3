#include "kec/graph_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

namespace kec {

ParseError::ParseError(const std::string& what, int line, int column)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
      message_(what),
      line_(line),
      column_(column) {}

namespace {

struct Token {
  long long value;
  int column;
};

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    if (end == text.size()) break;
    start = end + 1;
  }
  return lines;
}

bool is_blank(char c) { return c == ' ' || c == '\t'; }

bool skippable(std::string_view line) {
  auto it = std::find_if_not(line.begin(), line.end(), is_blank);
  return it == line.end() || *it == '#';
}

std::vector<Token> tokenize(std::string_view line, int line_no) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (is_blank(line[i])) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < line.size() && !is_blank(line[j])) ++j;
    std::string_view word = line.substr(i, j - i);
    long long value = 0;
    auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
    if (ec != std::errc() || ptr != word.data() + word.size() || value < 0) {
      throw ParseError("expected a non-negative integer, got '" + std::string(word) + "'", line_no,
                       static_cast<int>(i) + 1);
    }
    out.push_back({value, static_cast<int>(i) + 1});
    i = j;
  }
  return out;
}

std::vector<Token> expect_pair(std::string_view line, int line_no, const char* what) {
  auto tokens = tokenize(line, line_no);
  if (tokens.size() != 2) {
    int col = tokens.size() > 2 ? tokens[2].column : static_cast<int>(line.size()) + 1;
    throw ParseError(std::string("expected exactly two integers (") + what + ")", line_no, col);
  }
  return tokens;
}

void append_edges(std::string& out, const MultiGraph& g, const std::vector<Endpoints>& edges) {
  out += std::to_string(g.num_vertices());
  out += ' ';
  out += std::to_string(g.num_edges());
  out += '\n';
  for (const auto& [u, v] : edges) {
    out += std::to_string(u);
    out += ' ';
    out += std::to_string(v);
    out += '\n';
  }
}

constexpr std::string_view kGraph6Header = ">>graph6<<";

}  // namespace

std::vector<MultiGraph> parse_edge_lists(std::string_view text) {
  const auto lines = split_lines(text);
  std::vector<MultiGraph> graphs;
  std::size_t i = 0;
  auto next_line = [&]() -> long {
    while (i < lines.size() && skippable(lines[i])) ++i;
    return i < lines.size() ? static_cast<long>(i++) : -1;
  };
  for (;;) {
    long header = next_line();
    if (header < 0) break;
    const int header_no = static_cast<int>(header) + 1;
    auto hdr = expect_pair(lines[static_cast<std::size_t>(header)], header_no, "header 'n m'");
    const long long n = hdr[0].value;
    const long long m = hdr[1].value;
    if (n > 1'000'000 || m > 10'000'000) throw ParseError("graph too large", header_no, hdr[0].column);
    std::vector<Endpoints> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (long long k = 0; k < m; ++k) {
      long idx = next_line();
      if (idx < 0) {
        throw ParseError("expected " + std::to_string(m) + " edge lines, found " + std::to_string(k),
                         static_cast<int>(lines.size()), 1);
      }
      const int line_no = static_cast<int>(idx) + 1;
      auto tok = expect_pair(lines[static_cast<std::size_t>(idx)], line_no, "edge 'u v'");
      for (const auto& t : tok)
        if (t.value >= n) throw ParseError("endpoint " + std::to_string(t.value) + " out of range", line_no, t.column);
      if (tok[0].value == tok[1].value) {
        throw ParseError("loop edge (" + std::to_string(tok[0].value) + "," + std::to_string(tok[1].value) + ")",
                         line_no, tok[0].column);
      }
      edges.push_back({static_cast<VertexId>(tok[0].value), static_cast<VertexId>(tok[1].value)});
    }
    graphs.push_back(MultiGraph::build(static_cast<int>(n), edges));
  }
  return graphs;
}

MultiGraph parse_edge_list(std::string_view text) {
  auto graphs = parse_edge_lists(text);
  if (graphs.empty()) throw ParseError("no graph record found", 1, 1);
  if (graphs.size() > 1) throw ParseError("expected a single graph record, found " + std::to_string(graphs.size()), 1, 1);
  return std::move(graphs.front());
}

std::string write_edge_list(const MultiGraph& g) {
  std::string out;
  append_edges(out, g, canonical_edge_order(g).edge_list());
  return out;
}

std::string write_graph(const MultiGraph& g, GraphFormat format) {
  if (format != GraphFormat::kEdgeList) throw std::invalid_argument("graph6 output is not supported");
  return write_edge_list(g);
}

std::string write_edge_list_in_id_order(const MultiGraph& g) {
  std::string out;
  append_edges(out, g, g.edge_list());
  return out;
}

MultiGraph parse_graph6(std::string_view line) {
  std::size_t pos = 0;
  if (line.starts_with(kGraph6Header)) pos = kGraph6Header.size();
  auto byte_at = [&](std::size_t p) -> int {
    if (p >= line.size()) throw ParseError("graph6 string truncated", 1, static_cast<int>(p) + 1);
    int c = static_cast<unsigned char>(line[p]);
    if (c < 63 || c > 126) throw ParseError("byte outside graph6 range 63..126", 1, static_cast<int>(p) + 1);
    return c - 63;
  };
  long long n = 0;
  int first = byte_at(pos);
  if (first < 63) {
    n = first;
    pos += 1;
  } else if (byte_at(pos + 1) < 63) {
    for (int k = 1; k <= 3; ++k) n = (n << 6) | byte_at(pos + static_cast<std::size_t>(k));
    pos += 4;
  } else {
    for (int k = 2; k <= 7; ++k) n = (n << 6) | byte_at(pos + static_cast<std::size_t>(k));
    pos += 8;
  }
  if (n > 100'000) throw ParseError("graph6 order too large", 1, 1);
  const long long bits = n * (n - 1) / 2;
  const std::size_t bytes = static_cast<std::size_t>((bits + 5) / 6);
  if (line.size() - pos != bytes) {
    throw ParseError("graph6 body has " + std::to_string(line.size() - pos) + " bytes, expected " +
                         std::to_string(bytes),
                     1, static_cast<int>(pos) + 1);
  }
  std::vector<Endpoints> edges;
  long long k = 0;
  for (VertexId j = 1; j < n; ++j) {
    for (VertexId i = 0; i < j; ++i, ++k) {
      int byte = byte_at(pos + static_cast<std::size_t>(k / 6));
      if ((byte >> (5 - k % 6)) & 1) edges.push_back({i, j});
    }
  }
  return MultiGraph::build(static_cast<int>(n), edges);
}

std::vector<MultiGraph> parse_graph6_lines(std::string_view text) {
  std::vector<MultiGraph> graphs;
  const auto lines = split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    std::string_view line = lines[i];
    while (!line.empty() && is_blank(line.back())) line.remove_suffix(1);
    if (line.empty()) continue;
    try {
      graphs.push_back(parse_graph6(line));
    } catch (const ParseError& err) {
      throw ParseError(err.message(), static_cast<int>(i) + 1, err.column());
    }
  }
  return graphs;
}

std::vector<MultiGraph> read_graphs(const std::filesystem::path& path, GraphFormat format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  return format == GraphFormat::kGraph6 ? parse_graph6_lines(text) : parse_edge_lists(text);
}

MultiGraph read_graph(const std::filesystem::path& path, GraphFormat format) {
  auto graphs = read_graphs(path, format);
  if (graphs.size() != 1)
    throw std::runtime_error(path.string() + ": expected one graph, found " + std::to_string(graphs.size()));
  return std::move(graphs.front());
}

}  // namespace kec
