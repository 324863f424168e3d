#include "fdg3/reductions.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

#include "fdg3/errors.hpp"

namespace fdg3 {

namespace {

std::string symbol_pair(int i, int j) { return "a" + std::to_string(i) + "|a" + std::to_string(j); }

void check_graph_cap(const SimpleGraph& g, const char* what) {
  if (g.n > kBruteForceGraphCap)
    throw CapacityError(std::string(what) + " is limited to " +
                        std::to_string(kBruteForceGraphCap) + " vertices, got " +
                        std::to_string(g.n));
}

std::vector<uint32_t> adjacency_masks(const SimpleGraph& g) {
  std::vector<uint32_t> adj(static_cast<size_t>(g.n), 0);
  for (auto [u, v] : g.edges) {
    adj[u - 1] |= uint32_t(1) << (v - 1);
    adj[v - 1] |= uint32_t(1) << (u - 1);
  }
  return adj;
}

}  // namespace

EvppInstance clique_reduction(const SimpleGraph& g, int64_t k) {
  if (k < 1 || k > g.n)
    throw UsageError("clique target k must satisfy 1 <= k <= n, got k=" + std::to_string(k) +
                     ", n=" + std::to_string(g.n));
  const int m = g.m();
  if (m == 0) throw UsageError("clique reduction needs at least one edge");

  EvppInstance inst;
  Scheme scheme;
  for (int j = 1; j <= m; ++j)
    scheme.attributes.push_back({"B" + std::to_string(j), ValueType::Integer});
  scheme.attributes.push_back({"A", ValueType::Integer});
  inst.relation.scheme = scheme;

  for (int i = 1; i <= g.n; ++i) {
    Tuple t;
    t.index = static_cast<size_t>(i - 1);
    for (int j = 0; j < m; ++j) {
      auto [u, v] = g.edges[static_cast<size_t>(j)];  // u < v
      int64_t cell = 0;
      if (i == u) cell = 1;
      else if (i == v) cell = 2;
      t.values.push_back(Value::integer(cell));
    }
    t.values.push_back(Value::integer(i));
    inst.relation.tuples.push_back(std::move(t));
  }

  // x = y or x + y < 3, over {0,1,2}: symmetric and reflexive, and not
  // transitive once a column carries both 1 and 2.
  std::vector<std::pair<Value, Value>> pairs;
  for (int64_t x = 0; x <= 2; ++x)
    for (int64_t y = 0; y <= 2; ++y)
      if (x != y && x + y < 3) pairs.emplace_back(Value::integer(x), Value::integer(y));
  auto edge_spec = PredicateSpec::table(std::move(pairs), /*reflexive_closure=*/true);

  std::vector<std::string> lhs;
  for (int j = 1; j <= m; ++j) {
    lhs.push_back("B" + std::to_string(j));
    inst.predicates.by_attribute["B" + std::to_string(j)] = edge_spec;
  }
  inst.predicates.by_attribute["A"] = PredicateSpec::equality();
  inst.fd = FunctionalDependency(std::move(lhs), "A");
  inst.k_prime = Rational(g.n - k, g.n);

  inst.meta.construction = "clique";
  inst.meta.graph_n = g.n;
  inst.meta.graph_m = m;
  inst.meta.k = k;
  if (g.n <= 20) {
    size_t omega = brute_force_max_clique(g);
    inst.meta.expected_optimum = static_cast<int64_t>(omega);
    inst.meta.expected_g3 = Rational(g.n - static_cast<int64_t>(omega), g.n);
    inst.meta.oracle = "brute_force_max_clique";
  }
  inst.relation.validate();
  return inst;
}

SimpleGraph two_subdivision(const SimpleGraph& g) {
  std::vector<int> degree(static_cast<size_t>(g.n) + 1, 0);
  for (auto [u, v] : g.edges) {
    ++degree[u];
    ++degree[v];
  }
  for (int v = 1; v <= g.n; ++v)
    if (degree[v] == 0)
      throw UsageError("vertex " + std::to_string(v) + " is isolated; every vertex must lie on an edge");

  SimpleGraph out;
  out.n = g.n + 2 * g.m();
  for (int k = 0; k < g.m(); ++k) {
    auto [u, v] = g.edges[static_cast<size_t>(k)];  // u < v
    int a = g.n + 2 * k + 1;                        // subdivision vertex on the u side
    int b = g.n + 2 * k + 2;                        // subdivision vertex on the v side
    out.add_edge(u, a);
    out.add_edge(a, b);
    out.add_edge(b, v);
  }
  return out;
}

EvppInstance subdivision_reduction(const SimpleGraph& g, std::optional<int64_t> k) {
  two_subdivision(g);  // validates the no-isolated-vertex precondition
  const int n = g.n;
  const int m = g.m();

  EvppInstance inst;
  inst.relation.scheme.attributes = {{"B", ValueType::Text}, {"A", ValueType::Integer}};

  for (int i = 1; i <= n; ++i) {
    Tuple t;
    t.index = inst.relation.tuples.size();
    t.values = {Value::text(symbol_pair(i, i)), Value::integer(i)};
    inst.relation.tuples.push_back(std::move(t));
  }
  for (int e = 0; e < m; ++e) {
    auto [u, v] = g.edges[static_cast<size_t>(e)];  // u < v
    for (int side = 0; side < 2; ++side) {
      Tuple t;
      t.index = inst.relation.tuples.size();
      // Both subdivision tuples of edge (u, v) share B = a_u a_v; A names
      // the opposite endpoint.
      t.values = {Value::text(symbol_pair(u, v)), Value::integer(side == 0 ? v : u)};
      inst.relation.tuples.push_back(std::move(t));
    }
  }

  // x != y, x of the form a_i a_i, and a_i an endpoint of y: reflexive (by
  // closure), transitive and antisymmetric, not symmetric.
  std::vector<std::pair<Value, Value>> pairs;
  for (auto [u, v] : g.edges) {
    pairs.emplace_back(Value::text(symbol_pair(u, u)), Value::text(symbol_pair(u, v)));
    pairs.emplace_back(Value::text(symbol_pair(v, v)), Value::text(symbol_pair(u, v)));
  }
  inst.predicates.by_attribute["B"] = PredicateSpec::table(std::move(pairs), true);
  inst.predicates.by_attribute["A"] = PredicateSpec::equality();
  inst.fd = FunctionalDependency({"B"}, "A");

  inst.meta.construction = "subdivision";
  inst.meta.graph_n = n;
  inst.meta.graph_m = m;

  std::optional<int64_t> alpha;
  if (n <= 20) alpha = static_cast<int64_t>(brute_force_mis(g));
  if (k) {
    if (*k < 1 || *k > n)
      throw UsageError("independent-set target k must satisfy 1 <= k <= n, got k=" +
                       std::to_string(*k) + ", n=" + std::to_string(n));
  } else {
    if (!alpha)
      throw CapacityError("subdivision reduction without k needs the MIS oracle, which is "
                          "limited to 20 vertices; pass k explicitly");
    k = alpha;
  }
  inst.meta.k = *k;
  // alpha(G_2) = alpha(G) + m, so "IS of size k in G" maps to threshold
  // 1 - (k + m) / (n + 2m).
  inst.k_prime = Rational(n + m - *k, n + 2 * m);
  if (alpha) {
    inst.meta.expected_optimum = *alpha + m;
    inst.meta.expected_g3 = Rational(n + m - *alpha, n + 2 * m);
    inst.meta.oracle = "brute_force_mis";
  }
  inst.relation.validate();
  return inst;
}

size_t brute_force_mis(const SimpleGraph& g) {
  check_graph_cap(g, "brute_force_mis");
  auto adj = adjacency_masks(g);
  const uint32_t full = (uint32_t(1) << g.n) - 1;
  size_t best = 0;
  for (uint32_t s = 1; g.n > 0 && s <= full; ++s) {
    if (static_cast<size_t>(std::popcount(s)) <= best) continue;
    bool ok = true;
    for (uint32_t rest = s; rest; rest &= rest - 1) {
      int v = std::countr_zero(rest);
      if (adj[static_cast<size_t>(v)] & s) {
        ok = false;
        break;
      }
    }
    if (ok) best = static_cast<size_t>(std::popcount(s));
  }
  return best;
}

size_t brute_force_max_clique(const SimpleGraph& g) {
  check_graph_cap(g, "brute_force_max_clique");
  auto adj = adjacency_masks(g);
  const uint32_t full = (uint32_t(1) << g.n) - 1;
  size_t best = 0;
  for (uint32_t s = 1; g.n > 0 && s <= full; ++s) {
    if (static_cast<size_t>(std::popcount(s)) <= best) continue;
    bool ok = true;
    for (uint32_t rest = s; rest; rest &= rest - 1) {
      int v = std::countr_zero(rest);
      uint32_t others = s & ~(uint32_t(1) << v);
      if ((adj[static_cast<size_t>(v)] & others) != others) {
        ok = false;
        break;
      }
    }
    if (ok) best = static_cast<size_t>(std::popcount(s));
  }
  return best;
}

G3Result brute_force_g3(const Relation& r, const PredicateSet& phi,
                        const FunctionalDependency& fd) {
  fd.validate(r.scheme);
  phi.validate(r.scheme);
  const size_t n = r.size();
  if (n > kBruteForceRelationCap)
    throw CapacityError("brute_force_g3 is limited to " +
                        std::to_string(kBruteForceRelationCap) + " tuples, got " +
                        std::to_string(n));

  size_t kept = 0;
  std::vector<uint32_t> witness;
  const uint64_t full = (uint64_t(1) << n) - 1;
  std::vector<uint32_t> rows;
  for (uint64_t s = 1; n > 0 && s <= full; ++s) {
    if (static_cast<size_t>(std::popcount(s)) <= kept) continue;
    rows.clear();
    for (uint64_t rest = s; rest; rest &= rest - 1)
      rows.push_back(static_cast<uint32_t>(std::countr_zero(rest)));
    if (satisfies_subset(r, phi, fd, rows)) {
      kept = rows.size();
      witness = rows;
    }
  }

  G3Result res;
  res.kept = kept;
  res.g3 = n == 0 ? Rational(0, 1)
                  : Rational(static_cast<int64_t>(n - kept), static_cast<int64_t>(n));
  res.witness = std::move(witness);
  res.method = Method::BruteForce;
  res.exact = true;
  return res;
}

}  // namespace fdg3
