#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "fdg3/graph.hpp"
#include "fdg3/predicates.hpp"
#include "fdg3/relation.hpp"

namespace fdg3 {

// Directed graph on tuple slots whose arcs are the ordered counterexamples
// to X -> A under the predicate set. Loops are not stored as arcs: a tuple t
// with (t, t) a counterexample is flagged self-violating instead, keeping
// the graph simple. original_index maps local slots back to source rows so
// the g3 denominator survives stripping.
struct ConflictGraph {
  size_t n = 0;
  std::vector<DynBitset> out;         // out[i] = { j != i : (t_i, t_j) counterexample }
  DynBitset self_violating;
  bool symmetric = false;
  std::vector<uint32_t> original_index;
  size_t original_size = 0;

  ConflictGraph() = default;
  explicit ConflictGraph(size_t n_)
      : n(n_), out(n_, DynBitset(n_)), self_violating(n_), original_index(n_), original_size(n_) {
    for (size_t i = 0; i < n_; ++i) original_index[i] = static_cast<uint32_t>(i);
  }

  bool has_arc(size_t i, size_t j) const { return out[i].test(j); }
  size_t arc_count() const;
  bool scan_symmetric() const;  // recomputes the flag from the arc set
};

// True iff the tuples at i and j match on every X predicate but fail the A
// predicate, in that order. i == j probes self-violation.
bool is_counterexample(const Relation& r, const PredicateSet& phi, const FunctionalDependency& fd,
                       size_t i, size_t j);

// Exhaustive O(n^2) ordered-pair scan. When assume_symmetric is set (sound
// once every predicate on X and A reported symmetric on its active domain)
// only i < j pairs are evaluated and arcs are mirrored; the arc set is
// identical to the full scan either way.
ConflictGraph build_conflict_graph(const Relation& r, const PredicateSet& phi,
                                   const FunctionalDependency& fd, bool assume_symmetric = false);

// Induced subgraph on the vertices that are not self-violating. Original row
// indices are carried through; original_size is unchanged.
ConflictGraph strip_self_violations(const ConflictGraph& g);

// Undirected shadow: edge {i, j} iff (i, j) or (j, i) is an arc.
UndirectedGraph underlying_undirected(const ConflictGraph& g);

// Some induced path on four vertices, as an ordered quadruple, or nullopt.
// Naive O(n^4) subset scan; diagnostic use only.
std::optional<std::array<uint32_t, 4>> find_induced_p4(const UndirectedGraph& g);

}  // namespace fdg3
