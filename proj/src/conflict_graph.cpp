#include "fdg3/conflict_graph.hpp"

#include <algorithm>

#include "fdg3/errors.hpp"

namespace fdg3 {

size_t ConflictGraph::arc_count() const {
  size_t c = 0;
  for (const auto& row : out) c += row.count();
  return c;
}

bool ConflictGraph::scan_symmetric() const {
  for (size_t i = 0; i < n; ++i) {
    bool bad = false;
    out[i].for_each([&](size_t j) {
      if (!out[j].test(i)) bad = true;
    });
    if (bad) return false;
  }
  return true;
}

namespace {

// Resolved column/predicate bindings for one FD, shared by the pair scans.
struct FdBinding {
  std::vector<size_t> x_cols;
  std::vector<const PredicateSpec*> x_specs;
  size_t a_col = 0;
  const PredicateSpec* a_spec = nullptr;

  FdBinding(const Relation& r, const PredicateSet& phi, const FunctionalDependency& fd) {
    for (const auto& name : fd.lhs) {
      x_cols.push_back(r.scheme.require(name));
      x_specs.push_back(&phi.for_attribute(name));
    }
    a_col = r.scheme.require(fd.rhs);
    a_spec = &phi.for_attribute(fd.rhs);
  }

  bool counterexample(const Relation& r, size_t i, size_t j) const {
    const Tuple& ti = r.tuples[i];
    const Tuple& tj = r.tuples[j];
    for (size_t c = 0; c < x_cols.size(); ++c)
      if (!eval_predicate(*x_specs[c], ti.values[x_cols[c]], tj.values[x_cols[c]])) return false;
    return !eval_predicate(*a_spec, ti.values[a_col], tj.values[a_col]);
  }
};

}  // namespace

bool is_counterexample(const Relation& r, const PredicateSet& phi, const FunctionalDependency& fd,
                       size_t i, size_t j) {
  fd.validate(r.scheme);
  return FdBinding(r, phi, fd).counterexample(r, i, j);
}

ConflictGraph build_conflict_graph(const Relation& r, const PredicateSet& phi,
                                   const FunctionalDependency& fd, bool assume_symmetric) {
  fd.validate(r.scheme);
  phi.validate(r.scheme);
  FdBinding bind(r, phi, fd);

  const size_t n = r.size();
  ConflictGraph g(n);
  for (size_t i = 0; i < n; ++i)
    if (bind.counterexample(r, i, i)) g.self_violating.set(i);

  if (assume_symmetric) {
    for (size_t i = 0; i < n; ++i)
      for (size_t j = i + 1; j < n; ++j)
        if (bind.counterexample(r, i, j)) {
          g.out[i].set(j);
          g.out[j].set(i);
        }
    g.symmetric = true;
  } else {
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j)
        if (i != j && bind.counterexample(r, i, j)) g.out[i].set(j);
    g.symmetric = g.scan_symmetric();
  }
  return g;
}

ConflictGraph strip_self_violations(const ConflictGraph& g) {
  if (g.self_violating.none()) return g;

  std::vector<uint32_t> keep;
  keep.reserve(g.n);
  std::vector<size_t> local(g.n, g.n);
  for (size_t i = 0; i < g.n; ++i)
    if (!g.self_violating.test(i)) {
      local[i] = keep.size();
      keep.push_back(static_cast<uint32_t>(i));
    }

  ConflictGraph out(keep.size());
  out.original_size = g.original_size;
  for (size_t a = 0; a < keep.size(); ++a) {
    size_t i = keep[a];
    out.original_index[a] = g.original_index[i];
    g.out[i].for_each([&](size_t j) {
      if (local[j] != g.n) out.out[a].set(local[j]);
    });
  }
  out.symmetric = g.symmetric || out.scan_symmetric();
  return out;
}

UndirectedGraph underlying_undirected(const ConflictGraph& g) {
  UndirectedGraph u(g.n);
  for (size_t i = 0; i < g.n; ++i)
    g.out[i].for_each([&](size_t j) { u.add_edge(i, j); });
  return u;
}

std::optional<std::array<uint32_t, 4>> find_induced_p4(const UndirectedGraph& g) {
  const size_t n = g.n;
  auto edge = [&](size_t a, size_t b) { return g.has_edge(a, b); };
  for (size_t a = 0; a + 3 < n; ++a)
    for (size_t b = a + 1; b < n; ++b)
      for (size_t c = b + 1; c < n; ++c)
        for (size_t d = c + 1; d < n; ++d) {
          size_t v[4] = {a, b, c, d};
          int deg[4] = {0, 0, 0, 0};
          int edges = 0;
          for (int p = 0; p < 4; ++p)
            for (int q = p + 1; q < 4; ++q)
              if (edge(v[p], v[q])) {
                ++deg[p];
                ++deg[q];
                ++edges;
              }
          if (edges != 3) continue;
          // Three edges over four vertices form an induced P4 exactly when
          // the degrees are 1,1,2,2 (no star, no triangle + isolated).
          bool path = true;
          int ends[2], nends = 0;
          for (int p = 0; p < 4; ++p) {
            if (deg[p] == 0 || deg[p] == 3) path = false;
            if (deg[p] == 1 && nends < 2) ends[nends++] = p;
          }
          if (!path || nends != 2) continue;
          // Walk from the smaller endpoint.
          int s = v[ends[0]] < v[ends[1]] ? ends[0] : ends[1];
          std::array<uint32_t, 4> order{};
          bool used[4] = {false, false, false, false};
          int cur = s;
          for (int step = 0; step < 4; ++step) {
            order[step] = static_cast<uint32_t>(v[cur]);
            used[cur] = true;
            for (int q = 0; q < 4; ++q)
              if (!used[q] && edge(v[cur], v[q])) {
                cur = q;
                break;
              }
          }
          return order;
        }
  return std::nullopt;
}

}  // namespace fdg3
