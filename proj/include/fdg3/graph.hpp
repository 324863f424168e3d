#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "fdg3/bitset.hpp"

namespace fdg3 {

// Loopless undirected graph on vertices 0..n-1 with bitset adjacency rows.
struct UndirectedGraph {
  size_t n = 0;
  std::vector<DynBitset> adj;

  UndirectedGraph() = default;
  explicit UndirectedGraph(size_t n_) : n(n_), adj(n_, DynBitset(n_)) {}

  void add_edge(size_t u, size_t v) {
    if (u == v) return;
    adj[u].set(v);
    adj[v].set(u);
  }
  bool has_edge(size_t u, size_t v) const { return adj[u].test(v); }
  size_t degree(size_t v) const { return adj[v].count(); }
  size_t edge_count() const;
};

// Edge-list graph on vertices 1..n, matching the DIMACS convention. Edge
// endpoints are stored sorted (u < v); input order is preserved and
// duplicates are dropped, so edge indices e_1..e_m are reproducible.
struct SimpleGraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;

  void add_edge(int u, int v);  // rejects loops and out-of-range endpoints
  bool has_edge(int u, int v) const;
  int m() const { return static_cast<int>(edges.size()); }

  UndirectedGraph to_undirected() const;  // shifts to 0-based
};

// DIMACS edge format: optional c-comment lines, one "p edge n m" header,
// then "e u v" lines with 1-based endpoints.
SimpleGraph parse_dimacs(const std::string& text);
std::string to_dimacs(const SimpleGraph& g);

}  // namespace fdg3
