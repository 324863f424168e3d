#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "fdg3/g3.hpp"
#include "fdg3/graph.hpp"
#include "fdg3/predicates.hpp"
#include "fdg3/rational.hpp"
#include "fdg3/relation.hpp"

namespace fdg3 {

struct InstanceMeta {
  std::string construction;               // "clique" | "subdivision"
  int graph_n = 0;
  int graph_m = 0;
  std::optional<int64_t> k;               // clique size / independent-set size target
  std::optional<int64_t> expected_optimum;  // max satisfying subrelation size, when an oracle ran
  std::optional<Rational> expected_g3;
  std::string oracle;                     // oracle that produced the expected values, if any
};

// A self-contained g3 decision instance: running the engine on it needs
// nothing from the source graph.
struct EvppInstance {
  Relation relation;
  PredicateSet predicates;
  FunctionalDependency fd;
  Rational k_prime;
  InstanceMeta meta;
};

// Max-clique hardness instance: one attribute B_j per edge with the
// symmetric non-transitive table (x = y or x + y < 3) over {0,1,2}, equality
// on A, one tuple per vertex, threshold k' = 1 - k/n. Tuples agree on every
// B_j exactly when their vertices are non-adjacent, so satisfying
// subrelations are cliques. Requires 1 <= k <= n and at least one edge.
EvppInstance clique_reduction(const SimpleGraph& g, int64_t k);

// Replace every edge (u_i, u_j) by the 3-edge path u_i - v^i - v^j - u_j.
// Originals keep 1..n; subdivision vertices are appended in edge order,
// lower endpoint first. Rejects isolated vertices.
SimpleGraph two_subdivision(const SimpleGraph& g);

// Independent-set hardness instance over the 2-subdivision: a single
// antecedent attribute B of symbol pairs with the reflexive, transitive,
// antisymmetric (not symmetric) containment table, equality on A. When k is
// given, k' = 1 - (k + m)/(n + 2m); otherwise alpha(g) is brute-forced to
// pin k' at the optimum (source graph must fit the oracle guard).
EvppInstance subdivision_reduction(const SimpleGraph& g, std::optional<int64_t> k = std::nullopt);

inline constexpr int kBruteForceGraphCap = 24;
inline constexpr size_t kBruteForceRelationCap = 20;

// Exhaustive subset enumeration, n <= 24.
size_t brute_force_mis(const SimpleGraph& g);
size_t brute_force_max_clique(const SimpleGraph& g);

// Master oracle: enumerate all subrelations, test satisfies_subset, keep the
// maximum. |r| <= 20.
G3Result brute_force_g3(const Relation& r, const PredicateSet& phi,
                        const FunctionalDependency& fd);

}  // namespace fdg3
