#include "fdg3/graph.hpp"

#include <algorithm>
#include <sstream>

#include "fdg3/errors.hpp"

namespace fdg3 {

size_t UndirectedGraph::edge_count() const {
  size_t twice = 0;
  for (const auto& row : adj) twice += row.count();
  return twice / 2;
}

void SimpleGraph::add_edge(int u, int v) {
  if (u == v) throw DataError("loop edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
  if (u < 1 || v < 1 || u > n || v > n)
    throw DataError("edge endpoint out of range: (" + std::to_string(u) + "," +
                    std::to_string(v) + ") with n=" + std::to_string(n));
  if (u > v) std::swap(u, v);
  if (has_edge(u, v)) return;
  edges.emplace_back(u, v);
}

bool SimpleGraph::has_edge(int u, int v) const {
  if (u > v) std::swap(u, v);
  return std::find(edges.begin(), edges.end(), std::make_pair(u, v)) != edges.end();
}

UndirectedGraph SimpleGraph::to_undirected() const {
  UndirectedGraph g(static_cast<size_t>(n));
  for (auto [u, v] : edges) g.add_edge(static_cast<size_t>(u - 1), static_cast<size_t>(v - 1));
  return g;
}

SimpleGraph parse_dimacs(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  SimpleGraph g;
  bool got_header = false;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == 'c') continue;
    std::istringstream ls(line);
    if (!got_header) {
      std::string p, fmt;
      long n = 0, m = 0;
      ls >> p >> fmt >> n >> m;
      if (!ls || p != "p" || (fmt != "edge" && fmt != "edges" && fmt != "col") || n < 0)
        throw DataError("dimacs: bad header at line " + std::to_string(line_no));
      g.n = static_cast<int>(n);
      (void)m;  // declared edge count is informational; duplicates are folded
      got_header = true;
      continue;
    }
    std::string e;
    int u = 0, v = 0;
    ls >> e >> u >> v;
    if (!ls || e != "e") throw DataError("dimacs: bad edge at line " + std::to_string(line_no));
    g.add_edge(u, v);
  }
  if (!got_header) throw DataError("dimacs: missing 'p edge' header");
  return g;
}

std::string to_dimacs(const SimpleGraph& g) {
  std::string out = "p edge " + std::to_string(g.n) + " " + std::to_string(g.m()) + "\n";
  for (auto [u, v] : g.edges) out += "e " + std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

}  // namespace fdg3
