#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fdg3/conflict_graph.hpp"
#include "fdg3/graph.hpp"

namespace fdg3 {

struct MisResult {
  size_t size = 0;
  std::vector<uint32_t> vertices;  // sorted witness
};

// Maximum independent set by cotree recursion: a singleton scores 1, a
// disconnected graph sums its components, a co-disconnected graph takes the
// best co-component. Throws NotCographError (carrying an induced P4) when
// neither decomposition applies.
MisResult mis_cograph(const UndirectedGraph& g);

inline constexpr size_t kDefaultMisCap = 5000;

// Exact branch and bound: branch on a maximum-degree vertex (include it and
// delete its closed neighborhood, or exclude it), prune with a greedy lower
// bound and a matching-based upper bound. Ties break to the smallest index,
// so the result is deterministic. Throws CapacityError above vertex_cap.
MisResult mis_exact(const UndirectedGraph& g, size_t vertex_cap = kDefaultMisCap);

// Min-degree greedy heuristic; |result| <= MIS, equality not guaranteed.
MisResult greedy_independent_set(const UndirectedGraph& g);

struct PartialOrderCheck {
  bool ok = true;
  std::string violation;  // "irreflexive" | "antisymmetric" | "transitive"
  std::vector<uint32_t> witness;
};

// Verifies the arc relation of a stripped conflict graph is a strict partial
// order: irreflexive (no self-violating vertices), antisymmetric,
// transitively closed.
PartialOrderCheck check_strict_partial_order(const ConflictGraph& g);

// Maximum antichain of the strict order given by the arcs, which is the MIS
// of the underlying comparability graph: n minus a maximum matching of the
// split bipartite graph (Dilworth via Koenig), matching by Hopcroft-Karp.
// The witness is recovered from the minimum vertex cover. Asserts the
// partial-order properties first and throws NotPartialOrderError otherwise.
MisResult mis_comparability(const ConflictGraph& stripped);

}  // namespace fdg3
