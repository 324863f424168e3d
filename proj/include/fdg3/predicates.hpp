#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "fdg3/relation.hpp"
#include "fdg3/value.hpp"

namespace fdg3 {

enum class PredicateKind {
  Equality,            // equal and non-null (null never matches, even null/null)
  AbsDiffLeq,          // both numeric and |x - y| <= epsilon
  Leq,                 // numeric or lexicographic order; mixed types / null -> false
  Geq,                 // mirror of Leq
  Table,               // (x, y) in pairs, or x == y under reflexive_closure
  NullStrictEquality,  // named alias of Equality for config readability
};

const char* predicate_kind_name(PredicateKind kind);

struct PredicateSpec {
  PredicateKind kind = PredicateKind::Equality;
  double epsilon = 0.0;                          // AbsDiffLeq; >= 0
  std::vector<std::pair<Value, Value>> pairs;    // Table; sorted, deduplicated
  bool reflexive_closure = false;                // Table

  static PredicateSpec equality() { return {}; }
  static PredicateSpec null_strict_equality();
  static PredicateSpec abs_diff_leq(double epsilon);
  static PredicateSpec leq();
  static PredicateSpec geq();
  static PredicateSpec table(std::vector<std::pair<Value, Value>> pairs, bool reflexive_closure);

  bool is_equality_kind() const {
    return kind == PredicateKind::Equality || kind == PredicateKind::NullStrictEquality;
  }
};

// Per-attribute predicate configuration; attributes absent from the map
// compare with equality.
struct PredicateSet {
  std::map<std::string, PredicateSpec> by_attribute;

  const PredicateSpec& for_attribute(const std::string& name) const;
  void validate(const Scheme& scheme) const;
};

// Property flags of one predicate over one active domain, with one concrete
// violating witness per false flag ("reflexive" -> [x], "symmetric" /
// "antisymmetric" / "total" -> [x, y], "transitive" -> [x, y, z]).
// total is the total-order flag: reflexive, transitive, antisymmetric, and
// every pair comparable.
struct PropertyReport {
  bool reflexive = false;
  bool symmetric = false;
  bool transitive = false;
  bool antisymmetric = false;
  bool total = false;
  std::map<std::string, std::vector<Value>> witnesses;

  bool symmetric_and_transitive() const { return symmetric && transitive; }
};

// Total and deterministic on all Value pairs; type mismatches yield false.
bool eval_predicate(const PredicateSpec& spec, const Value& x, const Value& y);

// Exhaustive check over the active domain: reflexivity O(d), symmetry and
// antisymmetry O(d^2), transitivity and totality O(d^3). Witnesses are the
// first violation in sorted value order.
PropertyReport analyze_properties(const PredicateSpec& spec, std::vector<Value> active_domain);

// Sorted distinct values of one column (nulls included when present).
std::vector<Value> active_domain(const Relation& r, size_t column);

}  // namespace fdg3
