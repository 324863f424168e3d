#pragma once

#include <string>

#include <json.hpp>

#include "fdg3/g3.hpp"
#include "fdg3/predicates.hpp"
#include "fdg3/reductions.hpp"
#include "fdg3/relation.hpp"

namespace fdg3 {

using OrderedJson = nlohmann::ordered_json;

// CLI configuration document:
//   {"fd": {"lhs": ["B","C"], "rhs": "A"},
//    "predicates": {"B": {"kind": "abs_diff_leq", "epsilon": 1}, ...}}
// Attributes missing from "predicates" default to equality; unknown kinds
// are config errors.
struct JobConfig {
  FunctionalDependency fd;
  PredicateSet predicates;
};

JobConfig parse_config_json(const std::string& text);
OrderedJson config_to_json(const FunctionalDependency& fd, const PredicateSet& phi);

Value value_from_json(const nlohmann::json& j);   // null / integer / decimal / text
OrderedJson value_to_json(const Value& v);

OrderedJson predicate_spec_to_json(const PredicateSpec& spec);
PredicateSpec predicate_spec_from_json(const nlohmann::json& j);

OrderedJson report_to_json(const PropertyReport& report);

// CliOutput document: g3 as "p/q" in lowest terms, g3_decimal rounded to six
// places, kept/total counts, method, exactness, optional sorted witness.
OrderedJson result_to_json(const G3Result& res, size_t total, bool include_witness);

// Writes relation.csv, config.json and meta.json under dir (created if
// missing). Returns the meta document.
OrderedJson write_instance(const EvppInstance& inst, const std::string& dir);

}  // namespace fdg3
