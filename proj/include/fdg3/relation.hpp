#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fdg3/value.hpp"

namespace fdg3 {

struct Attribute {
  std::string name;
  ValueType type = ValueType::Text;
};

// Ordered list of typed attributes. Names are unique and nonempty.
struct Scheme {
  std::vector<Attribute> attributes;

  std::optional<size_t> index_of(std::string_view name) const;
  // index_of or ConfigError("unknown attribute ...").
  size_t require(std::string_view name) const;
  void validate() const;
};

// Row values positionally aligned with the scheme; index is the ordinal of
// the row in its source relation.
struct Tuple {
  std::vector<Value> values;
  size_t index = 0;
};

// Physical rows: duplicates are kept and counted separately. dedup() gives
// the set-semantics reading.
struct Relation {
  Scheme scheme;
  std::vector<Tuple> tuples;

  size_t size() const { return tuples.size(); }
  const Value& at(size_t row, size_t col) const { return tuples[row].values[col]; }
  void validate() const;  // index order, arity, column types
};

struct FunctionalDependency {
  std::vector<std::string> lhs;  // kept sorted, duplicates removed
  std::string rhs;

  FunctionalDependency() = default;
  FunctionalDependency(std::vector<std::string> lhs_, std::string rhs_);
  // lhs nonempty, all names in the scheme (rhs may repeat an lhs attribute).
  void validate(const Scheme& scheme) const;
  std::string display() const;  // "B,C -> A"
};

// Restriction of a tuple to a set of attributes, in scheme order.
std::vector<std::pair<std::string, Value>> project(const Scheme& scheme, const Tuple& t,
                                                   const std::vector<std::string>& attrs);

// CSV ingestion. First line is the header; cells parse by precedence
// integer -> decimal -> text; the unquoted literal NULL is the missing
// marker; quoted cells are always text. Column types are unified to the
// widest cell type (integer < decimal < text) unless a scheme hint pins
// them, in which case cells must coerce to the declared types.
Relation parse_relation_csv(std::string_view text,
                            const std::optional<Scheme>& scheme_hint = std::nullopt);

// RFC-4180 output; inverse of parse_relation_csv on well-formed relations.
std::string serialize_relation_csv(const Relation& r);

// Set-semantics copy: the first occurrence of each distinct row is kept and
// rows are re-indexed 0..n-1.
Relation dedup_relation(const Relation& r);

}  // namespace fdg3
