#include "fdg3/mis.hpp"

#include <algorithm>
#include <limits>

#include "fdg3/errors.hpp"

namespace fdg3 {

namespace {

// Connected component of seed within the subgraph induced by active.
DynBitset component_of(const UndirectedGraph& g, const DynBitset& active, size_t seed) {
  DynBitset comp(g.n), frontier(g.n);
  comp.set(seed);
  frontier.set(seed);
  while (frontier.any()) {
    DynBitset next(g.n);
    frontier.for_each([&](size_t v) {
      DynBitset nb = g.adj[v];
      nb &= active;
      nb.subtract(comp);
      next |= nb;
    });
    comp |= next;
    frontier = std::move(next);
  }
  return comp;
}

// Same in the complement graph; the complement is never materialized.
DynBitset co_component_of(const UndirectedGraph& g, const DynBitset& active, size_t seed) {
  DynBitset comp(g.n), frontier(g.n);
  comp.set(seed);
  frontier.set(seed);
  while (frontier.any()) {
    DynBitset next(g.n);
    frontier.for_each([&](size_t v) {
      DynBitset nb = active;
      nb.subtract(g.adj[v]);
      nb.reset(v);
      nb.subtract(comp);
      next |= nb;
    });
    comp |= next;
    frontier = std::move(next);
  }
  return comp;
}

std::array<uint32_t, 4> p4_within(const UndirectedGraph& g, const DynBitset& active) {
  auto verts = active.to_vector();
  UndirectedGraph sub(verts.size());
  for (size_t a = 0; a < verts.size(); ++a)
    for (size_t b = a + 1; b < verts.size(); ++b)
      if (g.has_edge(verts[a], verts[b])) sub.add_edge(a, b);
  auto p4 = find_induced_p4(sub);
  if (!p4) throw NotCographError("cotree decomposition failed but no induced P4 was found",
                                 {0, 0, 0, 0});
  return {verts[(*p4)[0]], verts[(*p4)[1]], verts[(*p4)[2]], verts[(*p4)[3]]};
}

MisResult cograph_rec(const UndirectedGraph& g, const DynBitset& active) {
  size_t cnt = active.count();
  if (cnt == 0) return {};
  if (cnt == 1) {
    MisResult r;
    r.size = 1;
    r.vertices.push_back(static_cast<uint32_t>(active.find_first()));
    return r;
  }

  size_t seed = active.find_first();
  DynBitset comp = component_of(g, active, seed);
  if (comp.count() < cnt) {
    MisResult total;
    DynBitset rest = active;
    while (rest.any()) {
      DynBitset c = component_of(g, rest, rest.find_first());
      MisResult sub = cograph_rec(g, c);
      total.size += sub.size;
      total.vertices.insert(total.vertices.end(), sub.vertices.begin(), sub.vertices.end());
      rest.subtract(c);
    }
    std::sort(total.vertices.begin(), total.vertices.end());
    return total;
  }

  DynBitset cocomp = co_component_of(g, active, seed);
  if (cocomp.count() < cnt) {
    MisResult best;
    bool have = false;
    DynBitset rest = active;
    while (rest.any()) {
      DynBitset c = co_component_of(g, rest, rest.find_first());
      MisResult sub = cograph_rec(g, c);
      if (!have || sub.size > best.size) {
        best = std::move(sub);
        have = true;
      }
      rest.subtract(c);
    }
    return best;
  }

  auto p4 = p4_within(g, active);
  throw NotCographError("graph is not a co-graph: induced P4 on vertices " +
                            std::to_string(p4[0]) + "," + std::to_string(p4[1]) + "," +
                            std::to_string(p4[2]) + "," + std::to_string(p4[3]),
                        p4);
}

}  // namespace

MisResult mis_cograph(const UndirectedGraph& g) {
  DynBitset all(g.n);
  all.set_all();
  return cograph_rec(g, all);
}

MisResult greedy_independent_set(const UndirectedGraph& g) {
  DynBitset active(g.n);
  active.set_all();
  MisResult res;
  while (active.any()) {
    size_t best = g.n, best_deg = std::numeric_limits<size_t>::max();
    for (size_t v = active.find_first(); v < g.n; v = active.find_next(v + 1)) {
      size_t deg = (g.adj[v] & active).count();
      if (deg < best_deg) {
        best_deg = deg;
        best = v;
      }
    }
    res.vertices.push_back(static_cast<uint32_t>(best));
    active.subtract(g.adj[best]);
    active.reset(best);
  }
  std::sort(res.vertices.begin(), res.vertices.end());
  res.size = res.vertices.size();
  return res;
}

namespace {

// Any matching bounds the MIS from above by |active| - |matching|; a greedy
// maximal matching is enough for pruning.
size_t matching_upper_bound(const UndirectedGraph& g, const DynBitset& active) {
  DynBitset um = active;
  size_t matched = 0;
  for (size_t v = um.find_first(); v < g.n; v = um.find_next(v + 1)) {
    um.reset(v);
    DynBitset nb = g.adj[v];
    nb &= um;
    size_t w = nb.find_first();
    if (w < g.n) {
      um.reset(w);
      ++matched;
    }
  }
  return active.count() - matched;
}

// Greedy inside an induced subgraph, as the branch-and-bound lower bound.
DynBitset greedy_within(const UndirectedGraph& g, const DynBitset& active) {
  DynBitset rest = active, taken(g.n);
  while (rest.any()) {
    size_t best = g.n, best_deg = std::numeric_limits<size_t>::max();
    for (size_t v = rest.find_first(); v < g.n; v = rest.find_next(v + 1)) {
      size_t deg = (g.adj[v] & rest).count();
      if (deg < best_deg) {
        best_deg = deg;
        best = v;
      }
    }
    taken.set(best);
    rest.subtract(g.adj[best]);
    rest.reset(best);
  }
  return taken;
}

// Exact MIS of an induced subgraph. Independent components are solved
// separately (their optima add up), which keeps unions of dense blocks from
// multiplying the search tree.
struct ExactSolver {
  const UndirectedGraph& g;

  DynBitset solve_set(const DynBitset& active) {
    DynBitset result(g.n);
    DynBitset rest = active;
    while (rest.any()) {
      DynBitset comp = component_of(g, rest, rest.find_first());
      result |= solve_component(comp);
      rest.subtract(comp);
    }
    return result;
  }

  DynBitset solve_component(const DynBitset& comp) {
    DynBitset best = greedy_within(g, comp);
    size_t best_size = best.count();
    branch(comp, 0, DynBitset(g.n), best, best_size);
    return best;
  }

  void branch(DynBitset active, size_t count, DynBitset chosen, DynBitset& best,
              size_t& best_size) {
    if (count + matching_upper_bound(g, active) <= best_size) return;

    size_t pick = g.n, pick_deg = 0;
    for (size_t v = active.find_first(); v < g.n; v = active.find_next(v + 1)) {
      size_t deg = (g.adj[v] & active).count();
      if (pick == g.n || deg > pick_deg) {
        pick = v;
        pick_deg = deg;
      }
    }
    if (pick == g.n || pick_deg == 0) {
      // active is independent; take it whole
      size_t total = count + active.count();
      if (total > best_size) {
        chosen |= active;
        best = std::move(chosen);
        best_size = total;
      }
      return;
    }

    // branching disconnected the subgraph: recurse per component, exactly
    DynBitset comp = component_of(g, active, active.find_first());
    if (comp != active) {
      DynBitset sub = solve_set(active);
      size_t total = count + sub.count();
      if (total > best_size) {
        chosen |= sub;
        best = std::move(chosen);
        best_size = total;
      }
      return;
    }

    DynBitset inc_active = active;
    inc_active.subtract(g.adj[pick]);
    inc_active.reset(pick);
    DynBitset inc_chosen = chosen;
    inc_chosen.set(pick);
    branch(std::move(inc_active), count + 1, std::move(inc_chosen), best, best_size);

    active.reset(pick);
    branch(std::move(active), count, std::move(chosen), best, best_size);
  }
};

}  // namespace

MisResult mis_exact(const UndirectedGraph& g, size_t vertex_cap) {
  if (g.n > vertex_cap)
    throw CapacityError("graph has " + std::to_string(g.n) +
                        " vertices, above the exact MIS cap of " + std::to_string(vertex_cap));
  ExactSolver solver{g};
  DynBitset all(g.n);
  all.set_all();
  DynBitset best = solver.solve_set(all);
  MisResult res;
  res.vertices = best.to_vector();
  res.size = res.vertices.size();
  return res;
}

PartialOrderCheck check_strict_partial_order(const ConflictGraph& g) {
  PartialOrderCheck chk;
  size_t self = g.self_violating.find_first();
  if (self < g.n) {
    chk.ok = false;
    chk.violation = "irreflexive";
    chk.witness = {static_cast<uint32_t>(self)};
    return chk;
  }
  for (size_t i = 0; i < g.n; ++i) {
    for (size_t j = g.out[i].find_first(); j < g.n; j = g.out[i].find_next(j + 1)) {
      if (j > i && g.out[j].test(i)) {
        chk.ok = false;
        chk.violation = "antisymmetric";
        chk.witness = {static_cast<uint32_t>(i), static_cast<uint32_t>(j)};
        return chk;
      }
    }
  }
  for (size_t i = 0; i < g.n; ++i) {
    for (size_t j = g.out[i].find_first(); j < g.n; j = g.out[i].find_next(j + 1)) {
      DynBitset missing = g.out[j];
      missing.subtract(g.out[i]);
      missing.reset(i);
      size_t k = missing.find_first();
      if (k < g.n) {
        chk.ok = false;
        chk.violation = "transitive";
        chk.witness = {static_cast<uint32_t>(i), static_cast<uint32_t>(j),
                       static_cast<uint32_t>(k)};
        return chk;
      }
    }
  }
  return chk;
}

namespace {

constexpr int kNil = -1;

// Hopcroft-Karp over the split bipartite graph: left copy of every vertex,
// right copy of every vertex, edge (L_u, R_v) iff arc u -> v.
struct HopcroftKarp {
  const ConflictGraph& g;
  std::vector<int> match_left, match_right, dist;

  explicit HopcroftKarp(const ConflictGraph& g_)
      : g(g_), match_left(g_.n, kNil), match_right(g_.n, kNil), dist(g_.n, 0) {}

  bool bfs() {
    std::vector<size_t> queue;
    queue.reserve(g.n);
    const int inf = std::numeric_limits<int>::max();
    for (size_t u = 0; u < g.n; ++u) {
      if (match_left[u] == kNil) {
        dist[u] = 0;
        queue.push_back(u);
      } else {
        dist[u] = inf;
      }
    }
    bool found = false;
    for (size_t head = 0; head < queue.size(); ++head) {
      size_t u = queue[head];
      for (size_t v = g.out[u].find_first(); v < g.n; v = g.out[u].find_next(v + 1)) {
        int w = match_right[v];
        if (w == kNil) {
          found = true;
        } else if (dist[w] == inf) {
          dist[w] = dist[u] + 1;
          queue.push_back(static_cast<size_t>(w));
        }
      }
    }
    return found;
  }

  bool dfs(size_t u) {
    for (size_t v = g.out[u].find_first(); v < g.n; v = g.out[u].find_next(v + 1)) {
      int w = match_right[v];
      if (w == kNil || (dist[w] == dist[u] + 1 && dfs(static_cast<size_t>(w)))) {
        match_left[u] = static_cast<int>(v);
        match_right[v] = static_cast<int>(u);
        return true;
      }
    }
    dist[u] = std::numeric_limits<int>::max();
    return false;
  }

  size_t solve() {
    size_t matching = 0;
    while (bfs()) {
      for (size_t u = 0; u < g.n; ++u)
        if (match_left[u] == kNil && dfs(u)) ++matching;
    }
    return matching;
  }
};

}  // namespace

MisResult mis_comparability(const ConflictGraph& stripped) {
  auto chk = check_strict_partial_order(stripped);
  if (!chk.ok) {
    std::string w;
    for (size_t i = 0; i < chk.witness.size(); ++i)
      w += (i ? "," : "") + std::to_string(chk.witness[i]);
    throw NotPartialOrderError("stripped conflict graph violates the " + chk.violation +
                               " property (vertices " + w + ")");
  }

  HopcroftKarp hk(stripped);
  size_t matching = hk.solve();

  // Koenig alternating reachability from the unmatched left copies. The
  // minimum vertex cover is (L \ Z_L) + Z_R; vertices covered on neither
  // side form a maximum antichain of size n - matching.
  const size_t n = stripped.n;
  DynBitset zl(n), zr(n);
  std::vector<size_t> queue;
  for (size_t u = 0; u < n; ++u)
    if (hk.match_left[u] == kNil) {
      zl.set(u);
      queue.push_back(u);
    }
  for (size_t head = 0; head < queue.size(); ++head) {
    size_t u = queue[head];
    for (size_t v = stripped.out[u].find_first(); v < n; v = stripped.out[u].find_next(v + 1)) {
      if (static_cast<int>(v) == hk.match_left[u] || zr.test(v)) continue;
      zr.set(v);
      int w = hk.match_right[v];
      if (w != kNil && !zl.test(static_cast<size_t>(w))) {
        zl.set(static_cast<size_t>(w));
        queue.push_back(static_cast<size_t>(w));
      }
    }
  }

  MisResult res;
  for (size_t u = 0; u < n; ++u)
    if (zl.test(u) && !zr.test(u)) res.vertices.push_back(static_cast<uint32_t>(u));
  res.size = res.vertices.size();
  if (res.size != n - matching)
    throw NotPartialOrderError("antichain recovery mismatch: " + std::to_string(res.size) +
                               " vs " + std::to_string(n - matching));
  return res;
}

}  // namespace fdg3
