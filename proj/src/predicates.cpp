#include "fdg3/predicates.hpp"

#include <algorithm>
#include <cmath>

#include "fdg3/errors.hpp"

namespace fdg3 {

const char* predicate_kind_name(PredicateKind kind) {
  switch (kind) {
    case PredicateKind::Equality: return "equality";
    case PredicateKind::AbsDiffLeq: return "abs_diff_leq";
    case PredicateKind::Leq: return "leq";
    case PredicateKind::Geq: return "geq";
    case PredicateKind::Table: return "table";
    case PredicateKind::NullStrictEquality: return "null_strict_equality";
  }
  return "?";
}

PredicateSpec PredicateSpec::null_strict_equality() {
  PredicateSpec s;
  s.kind = PredicateKind::NullStrictEquality;
  return s;
}

PredicateSpec PredicateSpec::abs_diff_leq(double epsilon) {
  if (!(epsilon >= 0)) throw ConfigError("abs_diff_leq epsilon must be >= 0");
  PredicateSpec s;
  s.kind = PredicateKind::AbsDiffLeq;
  s.epsilon = epsilon;
  return s;
}

PredicateSpec PredicateSpec::leq() {
  PredicateSpec s;
  s.kind = PredicateKind::Leq;
  return s;
}

PredicateSpec PredicateSpec::geq() {
  PredicateSpec s;
  s.kind = PredicateKind::Geq;
  return s;
}

PredicateSpec PredicateSpec::table(std::vector<std::pair<Value, Value>> pairs,
                                   bool reflexive_closure) {
  PredicateSpec s;
  s.kind = PredicateKind::Table;
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  s.pairs = std::move(pairs);
  s.reflexive_closure = reflexive_closure;
  return s;
}

const PredicateSpec& PredicateSet::for_attribute(const std::string& name) const {
  static const PredicateSpec kEquality{};
  auto it = by_attribute.find(name);
  return it == by_attribute.end() ? kEquality : it->second;
}

void PredicateSet::validate(const Scheme& scheme) const {
  for (const auto& [name, spec] : by_attribute) {
    if (!scheme.index_of(name))
      throw ConfigError("predicate configured for unknown attribute '" + name + "'");
    if (spec.kind == PredicateKind::AbsDiffLeq && !(spec.epsilon >= 0))
      throw ConfigError("abs_diff_leq epsilon must be >= 0 (attribute '" + name + "')");
  }
}

namespace {

bool numeric_leq(const Value& x, const Value& y) {
  if (x.is_integer() && y.is_integer()) return x.as_integer() <= y.as_integer();
  return x.numeric() <= y.numeric();
}

bool leq_impl(const Value& x, const Value& y) {
  if (x.is_null() || y.is_null()) return false;
  if (x.is_numeric() && y.is_numeric()) return numeric_leq(x, y);
  if (x.is_text() && y.is_text()) return x.as_text() <= y.as_text();
  return false;
}

// |x - y| <= eps, exact for the all-integer case.
bool abs_diff_leq_impl(const Value& x, const Value& y, double eps) {
  if (!x.is_numeric() || !y.is_numeric()) return false;
  if (x.is_integer() && y.is_integer()) {
    int64_t a = x.as_integer(), b = y.as_integer();
    uint64_t mag = a >= b ? static_cast<uint64_t>(a) - static_cast<uint64_t>(b)
                          : static_cast<uint64_t>(b) - static_cast<uint64_t>(a);
    return static_cast<long double>(mag) <= static_cast<long double>(eps);
  }
  long double d = x.numeric() - y.numeric();
  if (d < 0) d = -d;
  return d <= static_cast<long double>(eps);
}

}  // namespace

bool eval_predicate(const PredicateSpec& spec, const Value& x, const Value& y) {
  switch (spec.kind) {
    case PredicateKind::Equality:
    case PredicateKind::NullStrictEquality:
      return !x.is_null() && !y.is_null() && x == y;
    case PredicateKind::AbsDiffLeq:
      return abs_diff_leq_impl(x, y, spec.epsilon);
    case PredicateKind::Leq:
      return leq_impl(x, y);
    case PredicateKind::Geq:
      return leq_impl(y, x);
    case PredicateKind::Table: {
      if (spec.reflexive_closure && x == y) return true;
      auto key = std::make_pair(x, y);
      return std::binary_search(spec.pairs.begin(), spec.pairs.end(), key);
    }
  }
  return false;
}

PropertyReport analyze_properties(const PredicateSpec& spec, std::vector<Value> domain) {
  std::sort(domain.begin(), domain.end());
  domain.erase(std::unique(domain.begin(), domain.end()), domain.end());
  const size_t d = domain.size();

  PropertyReport rep;
  auto phi = [&](size_t i, size_t j) { return eval_predicate(spec, domain[i], domain[j]); };

  rep.reflexive = true;
  for (size_t i = 0; i < d; ++i) {
    if (!phi(i, i)) {
      rep.reflexive = false;
      rep.witnesses["reflexive"] = {domain[i]};
      break;
    }
  }

  rep.symmetric = true;
  for (size_t i = 0; i < d && rep.symmetric; ++i)
    for (size_t j = i + 1; j < d; ++j)
      if (phi(i, j) != phi(j, i)) {
        rep.symmetric = false;
        rep.witnesses["symmetric"] = {domain[i], domain[j]};
        break;
      }

  rep.antisymmetric = true;
  for (size_t i = 0; i < d && rep.antisymmetric; ++i)
    for (size_t j = i + 1; j < d; ++j)
      if (phi(i, j) && phi(j, i)) {
        rep.antisymmetric = false;
        rep.witnesses["antisymmetric"] = {domain[i], domain[j]};
        break;
      }

  rep.transitive = true;
  for (size_t i = 0; i < d && rep.transitive; ++i)
    for (size_t j = 0; j < d && rep.transitive; ++j) {
      if (!phi(i, j)) continue;
      for (size_t k = 0; k < d; ++k)
        if (phi(j, k) && !phi(i, k)) {
          rep.transitive = false;
          rep.witnesses["transitive"] = {domain[i], domain[j], domain[k]};
          break;
        }
    }

  // Total order: reflexive + transitive + antisymmetric and every pair
  // comparable. The witness is the first incomparable pair when one exists,
  // otherwise the witness of the first failed prerequisite.
  bool comparable = true;
  std::vector<Value> incomparable;
  for (size_t i = 0; i < d && comparable; ++i)
    for (size_t j = i + 1; j < d; ++j)
      if (!phi(i, j) && !phi(j, i)) {
        comparable = false;
        incomparable = {domain[i], domain[j]};
        break;
      }
  rep.total = rep.reflexive && rep.transitive && rep.antisymmetric && comparable;
  if (!rep.total) {
    if (!comparable)
      rep.witnesses["total"] = incomparable;
    else if (!rep.reflexive)
      rep.witnesses["total"] = rep.witnesses["reflexive"];
    else if (!rep.transitive)
      rep.witnesses["total"] = rep.witnesses["transitive"];
    else
      rep.witnesses["total"] = rep.witnesses["antisymmetric"];
  }
  return rep;
}

std::vector<Value> active_domain(const Relation& r, size_t column) {
  std::vector<Value> out;
  out.reserve(r.size());
  for (const auto& t : r.tuples) out.push_back(t.values[column]);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace fdg3
