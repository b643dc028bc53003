#include "fewpaths/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "fewpaths/errors.hpp"

namespace fewpaths {

DirectedGraph::DirectedGraph(std::size_t n) : adjacency_(n) {
  if (n == 0) {
    throw std::invalid_argument("DirectedGraph: node count must be positive");
  }
}

DirectedGraph::DirectedGraph(std::size_t n, std::span<const Edge> edges) : DirectedGraph(n) {
  for (const auto &e : edges) {
    add_edge(e.from, e.to);
  }
}

bool DirectedGraph::add_edge(Node from, Node to) {
  if (from >= size() || to >= size()) {
    throw std::out_of_range("DirectedGraph: edge (" + std::to_string(from) + ", " +
                            std::to_string(to) + ") outside 0.." +
                            std::to_string(size() - 1));
  }
  auto &succ = adjacency_[from];
  auto it = std::lower_bound(succ.begin(), succ.end(), to);
  if (it != succ.end() && *it == to) {
    return false;
  }
  succ.insert(it, to);
  ++edge_count_;
  return true;
}

bool DirectedGraph::has_edge(Node from, Node to) const {
  const auto &succ = adjacency_.at(from);
  return std::binary_search(succ.begin(), succ.end(), to);
}

std::vector<Edge> DirectedGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Node u = 0; u < size(); ++u) {
    for (Node v : adjacency_[u]) {
      out.push_back({u, v});
    }
  }
  return out;
}

namespace {

// Next non-empty line with comments stripped; false at end of input.
bool next_content_line(std::istream &in, std::string &line, std::size_t &line_no) {
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    if (line.find_first_not_of(" \t\r") != std::string::npos) {
      return true;
    }
  }
  return false;
}

// Parses exactly two non-negative integers from the line.
std::pair<std::size_t, std::size_t> parse_pair(const std::string &line, std::size_t line_no) {
  std::istringstream ss(line);
  long long a = -1;
  long long b = -1;
  std::string trailing;
  if (!(ss >> a >> b) || (ss >> trailing) || a < 0 || b < 0) {
    throw ParseError("edge list line " + std::to_string(line_no) +
                     ": expected two non-negative integers");
  }
  return {static_cast<std::size_t>(a), static_cast<std::size_t>(b)};
}

} // namespace

DirectedGraph read_edge_list(std::istream &in) {
  std::string line;
  std::size_t line_no = 0;
  if (!next_content_line(in, line, line_no)) {
    throw ParseError("edge list: missing header line \"n m\"");
  }
  auto [n, m] = parse_pair(line, line_no);
  if (n == 0) {
    throw ParseError("edge list line " + std::to_string(line_no) + ": node count must be positive");
  }
  DirectedGraph g(n);
  for (std::size_t i = 0; i < m; ++i) {
    if (!next_content_line(in, line, line_no)) {
      throw ParseError("edge list: expected " + std::to_string(m) + " edges, found " +
                       std::to_string(i));
    }
    auto [u, v] = parse_pair(line, line_no);
    if (u >= n || v >= n) {
      throw ParseError("edge list line " + std::to_string(line_no) + ": node id out of range");
    }
    if (!g.add_edge(u, v)) {
      throw ParseError("edge list line " + std::to_string(line_no) + ": duplicate edge");
    }
  }
  if (next_content_line(in, line, line_no)) {
    throw ParseError("edge list line " + std::to_string(line_no) + ": content after last edge");
  }
  return g;
}

void write_edge_list(std::ostream &out, const DirectedGraph &g) {
  out << g.size() << ' ' << g.edge_count() << '\n';
  for (const auto &e : g.edges()) {
    out << e.from << ' ' << e.to << '\n';
  }
}

DirectedGraph load_edge_list(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in) {
    throw IOFailure("cannot open " + path.string());
  }
  return read_edge_list(in);
}

void save_edge_list(const std::filesystem::path &path, const DirectedGraph &g) {
  std::ofstream out(path);
  if (!out) {
    throw IOFailure("cannot write " + path.string());
  }
  write_edge_list(out, g);
  if (!out) {
    throw IOFailure("write failed for " + path.string());
  }
}

} // namespace fewpaths
