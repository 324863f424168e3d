#include "fdg3/g3.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "fdg3/conflict_graph.hpp"
#include "fdg3/errors.hpp"
#include "fdg3/reductions.hpp"

namespace fdg3 {

const char* method_name(Method m) {
  switch (m) {
    case Method::FastpathEquality: return "fastpath_equality";
    case Method::Cograph: return "cograph";
    case Method::Comparability: return "comparability";
    case Method::ExactMis: return "exact_mis";
    case Method::BruteForce: return "brute_force";
    case Method::GreedyBound: return "greedy_bound";
  }
  return "?";
}

const char* strategy_name(Strategy s) {
  switch (s) {
    case Strategy::Auto: return "auto";
    case Strategy::Fastpath: return "fastpath";
    case Strategy::Cograph: return "cograph";
    case Strategy::Comparability: return "comparability";
    case Strategy::Exact: return "exact";
    case Strategy::Brute: return "brute";
    case Strategy::Greedy: return "greedy";
  }
  return "?";
}

Strategy strategy_from_name(const std::string& name) {
  for (Strategy s : {Strategy::Auto, Strategy::Fastpath, Strategy::Cograph,
                     Strategy::Comparability, Strategy::Exact, Strategy::Brute, Strategy::Greedy})
    if (name == strategy_name(s)) return s;
  throw UsageError("unknown strategy '" + name + "'");
}

namespace {

struct PairScan {
  std::vector<size_t> x_cols;
  std::vector<const PredicateSpec*> x_specs;
  size_t a_col;
  const PredicateSpec* a_spec;

  PairScan(const Relation& r, const PredicateSet& phi, const FunctionalDependency& fd) {
    for (const auto& name : fd.lhs) {
      x_cols.push_back(r.scheme.require(name));
      x_specs.push_back(&phi.for_attribute(name));
    }
    a_col = r.scheme.require(fd.rhs);
    a_spec = &phi.for_attribute(fd.rhs);
  }

  bool counterexample(const Relation& r, size_t i, size_t j) const {
    const auto& vi = r.tuples[i].values;
    const auto& vj = r.tuples[j].values;
    for (size_t c = 0; c < x_cols.size(); ++c)
      if (!eval_predicate(*x_specs[c], vi[x_cols[c]], vj[x_cols[c]])) return false;
    return !eval_predicate(*a_spec, vi[a_col], vj[a_col]);
  }
};

}  // namespace

SatisfiesResult satisfies(const Relation& r, const PredicateSet& phi,
                          const FunctionalDependency& fd) {
  fd.validate(r.scheme);
  phi.validate(r.scheme);
  PairScan scan(r, phi, fd);
  for (size_t i = 0; i < r.size(); ++i)
    for (size_t j = 0; j < r.size(); ++j)
      if (scan.counterexample(r, i, j)) return {false, i, j};
  return {};
}

bool satisfies_subset(const Relation& r, const PredicateSet& phi, const FunctionalDependency& fd,
                      const std::vector<uint32_t>& rows) {
  PairScan scan(r, phi, fd);
  for (uint32_t i : rows)
    for (uint32_t j : rows)
      if (scan.counterexample(r, i, j)) return false;
  return true;
}

namespace {

std::vector<size_t> fd_columns(const Relation& r, const FunctionalDependency& fd) {
  std::set<size_t> cols;
  for (const auto& name : fd.lhs) cols.insert(r.scheme.require(name));
  cols.insert(r.scheme.require(fd.rhs));
  return {cols.begin(), cols.end()};
}

bool has_null_in(const Relation& r, const std::vector<size_t>& cols) {
  for (const auto& t : r.tuples)
    for (size_t c : cols)
      if (t.values[c].is_null()) return true;
  return false;
}

G3Result finish(size_t total, size_t kept, std::vector<uint32_t> witness, Method method,
                bool exact) {
  G3Result res;
  res.kept = kept;
  res.g3 = total == 0 ? Rational(0, 1)
                      : Rational(static_cast<int64_t>(total - kept), static_cast<int64_t>(total));
  std::sort(witness.begin(), witness.end());
  res.witness = std::move(witness);
  res.method = method;
  res.exact = exact;
  return res;
}

std::vector<uint32_t> to_original(const MisResult& mis, const ConflictGraph& stripped) {
  std::vector<uint32_t> out;
  out.reserve(mis.vertices.size());
  for (uint32_t v : mis.vertices) out.push_back(stripped.original_index[v]);
  return out;
}

std::string witness_text(const std::vector<Value>& w) {
  std::string out = "(";
  for (size_t i = 0; i < w.size(); ++i) out += (i ? ", " : "") + w[i].repr();
  return out + ")";
}

}  // namespace

G3Result g3_equality_fastpath(const Relation& r, const FunctionalDependency& fd) {
  fd.validate(r.scheme);
  auto cols = fd_columns(r, fd);
  if (has_null_in(r, cols))
    throw UsageError("equality fastpath requires null-free columns on " + fd.display());

  std::vector<size_t> x_cols;
  for (const auto& name : fd.lhs) x_cols.push_back(r.scheme.require(name));
  std::sort(x_cols.begin(), x_cols.end());
  size_t a_col = r.scheme.require(fd.rhs);

  // X projection -> A value -> row indices, all in deterministic order.
  std::map<std::vector<Value>, std::map<Value, std::vector<uint32_t>>> groups;
  for (size_t i = 0; i < r.size(); ++i) {
    std::vector<Value> key;
    key.reserve(x_cols.size());
    for (size_t c : x_cols) key.push_back(r.tuples[i].values[c]);
    groups[std::move(key)][r.tuples[i].values[a_col]].push_back(static_cast<uint32_t>(i));
  }

  size_t kept = 0;
  std::vector<uint32_t> witness;
  for (const auto& [key, by_a] : groups) {
    const std::vector<uint32_t>* best = nullptr;
    for (const auto& [a, rows] : by_a)
      if (!best || rows.size() > best->size() ||
          (rows.size() == best->size() && rows.front() < best->front()))
        best = &rows;
    kept += best->size();
    witness.insert(witness.end(), best->begin(), best->end());
  }
  return finish(r.size(), kept, std::move(witness), Method::FastpathEquality, true);
}

G3Result compute_g3(const Relation& r, const PredicateSet& phi, const FunctionalDependency& fd,
                    const EngineOptions& opts) {
  fd.validate(r.scheme);
  phi.validate(r.scheme);
  const Strategy strategy = opts.strategy;
  const size_t n = r.size();

  if (strategy == Strategy::Brute) return brute_force_g3(r, phi, fd);

  auto cols = fd_columns(r, fd);

  if (strategy == Strategy::Auto || strategy == Strategy::Fastpath) {
    bool all_eq = true;
    std::string blocker;
    for (size_t c : cols)
      if (!phi.for_attribute(r.scheme.attributes[c].name).is_equality_kind()) {
        all_eq = false;
        blocker = "attribute '" + r.scheme.attributes[c].name + "' uses " +
                  predicate_kind_name(phi.for_attribute(r.scheme.attributes[c].name).kind);
        break;
      }
    if (all_eq && has_null_in(r, cols)) {
      all_eq = false;
      blocker = "null values present on " + fd.display();
    }
    if (all_eq) return g3_equality_fastpath(r, fd);
    if (strategy == Strategy::Fastpath)
      throw UsageError("strategy fastpath requires equality predicates and null-free columns: " +
                       blocker);
  }

  if (strategy == Strategy::Greedy) {
    auto g = build_conflict_graph(r, phi, fd);
    auto stripped = strip_self_violations(g);
    auto mis = greedy_independent_set(underlying_undirected(stripped));
    return finish(n, mis.size, to_original(mis, stripped), Method::GreedyBound, false);
  }

  // Property reports over active domains drive the polynomial-path checks.
  std::map<size_t, PropertyReport> reports;
  if (strategy == Strategy::Auto || strategy == Strategy::Cograph ||
      strategy == Strategy::Comparability) {
    for (size_t c : cols)
      reports.emplace(c, analyze_properties(phi.for_attribute(r.scheme.attributes[c].name),
                                            active_domain(r, c)));
  }

  auto property_failure = [&](size_t col, const char* property) -> std::string {
    const auto& rep = reports.at(col);
    auto it = rep.witnesses.find(property);
    std::string msg = "predicate on '" + r.scheme.attributes[col].name + "' (" +
                      predicate_kind_name(phi.for_attribute(r.scheme.attributes[col].name).kind) +
                      ") is not " + property;
    if (it != rep.witnesses.end()) msg += ": witness " + witness_text(it->second);
    return msg;
  };

  if (strategy == Strategy::Auto || strategy == Strategy::Cograph) {
    std::string blocker;
    for (size_t c : cols) {
      const auto& rep = reports.at(c);
      if (!rep.symmetric) {
        blocker = property_failure(c, "symmetric");
        break;
      }
      if (!rep.transitive) {
        blocker = property_failure(c, "transitive");
        break;
      }
    }
    if (blocker.empty()) {
      auto g = build_conflict_graph(r, phi, fd, /*assume_symmetric=*/true);
      auto stripped = strip_self_violations(g);
      try {
        auto mis = mis_cograph(underlying_undirected(stripped));
        return finish(n, mis.size, to_original(mis, stripped), Method::Cograph, true);
      } catch (const NotCographError& e) {
        if (strategy == Strategy::Cograph) throw UsageError(e.what());
        // auto mode falls through to the exact solver
      }
    } else if (strategy == Strategy::Cograph) {
      throw UsageError("strategy cograph requires symmetric+transitive predicates on " +
                       fd.display() + ": " + blocker);
    }
  }

  if (strategy == Strategy::Auto || strategy == Strategy::Comparability) {
    std::string blocker;
    for (const auto& name : fd.lhs) {
      size_t c = r.scheme.require(name);
      if (!reports.at(c).transitive) {
        blocker = property_failure(c, "transitive");
        break;
      }
    }
    if (blocker.empty() && !reports.at(r.scheme.require(fd.rhs)).total)
      blocker = property_failure(r.scheme.require(fd.rhs), "total");
    if (blocker.empty()) {
      auto g = build_conflict_graph(r, phi, fd);
      auto stripped = strip_self_violations(g);
      try {
        auto mis = mis_comparability(stripped);
        return finish(n, mis.size, to_original(mis, stripped), Method::Comparability, true);
      } catch (const NotPartialOrderError& e) {
        if (strategy == Strategy::Comparability) throw UsageError(e.what());
      }
    } else if (strategy == Strategy::Comparability) {
      throw UsageError("strategy comparability requires transitive antecedent predicates and a "
                       "total-order consequent predicate on " +
                       fd.display() + ": " + blocker);
    }
  }

  auto g = build_conflict_graph(r, phi, fd);
  auto stripped = strip_self_violations(g);
  auto mis = mis_exact(underlying_undirected(stripped), opts.mis_cap);
  return finish(n, mis.size, to_original(mis, stripped), Method::ExactMis, true);
}

bool decide_evpp(const Relation& r, const PredicateSet& phi, const FunctionalDependency& fd,
                 const Rational& k, const EngineOptions& opts) {
  if (k < Rational(0, 1) || k > Rational(1, 1))
    throw UsageError("EVPP threshold k must lie in [0, 1], got " + k.str());
  return compute_g3(r, phi, fd, opts).g3 <= k;
}

}  // namespace fdg3
