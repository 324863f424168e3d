#include "fdg3/config_io.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>

#include "fdg3/errors.hpp"

namespace fdg3 {

Value value_from_json(const nlohmann::json& j) {
  if (j.is_null()) return Value::null();
  if (j.is_number_integer()) return Value::integer(j.get<int64_t>());
  if (j.is_number_unsigned()) {
    uint64_t u = j.get<uint64_t>();
    if (u > static_cast<uint64_t>(INT64_MAX)) throw ConfigError("integer value out of range");
    return Value::integer(static_cast<int64_t>(u));
  }
  if (j.is_number_float()) return Value::decimal(j.get<double>());
  if (j.is_string()) return Value::text(j.get<std::string>());
  throw ConfigError("unsupported value in config: " + j.dump());
}

OrderedJson value_to_json(const Value& v) {
  if (v.is_null()) return nullptr;
  if (v.is_integer()) return v.as_integer();
  if (v.is_decimal()) return v.as_decimal();
  return v.as_text();
}

PredicateSpec predicate_spec_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
    throw ConfigError("predicate spec must be an object with a \"kind\" string");
  const std::string kind = j["kind"].get<std::string>();
  if (kind == "equality") return PredicateSpec::equality();
  if (kind == "null_strict_equality") return PredicateSpec::null_strict_equality();
  if (kind == "leq") return PredicateSpec::leq();
  if (kind == "geq") return PredicateSpec::geq();
  if (kind == "abs_diff_leq") {
    if (!j.contains("epsilon") || !j["epsilon"].is_number())
      throw ConfigError("abs_diff_leq needs a numeric \"epsilon\"");
    double eps = j["epsilon"].get<double>();
    if (!(eps >= 0) || !std::isfinite(eps)) throw ConfigError("abs_diff_leq epsilon must be >= 0");
    return PredicateSpec::abs_diff_leq(eps);
  }
  if (kind == "table") {
    if (!j.contains("pairs") || !j["pairs"].is_array())
      throw ConfigError("table predicate needs a \"pairs\" array");
    std::vector<std::pair<Value, Value>> pairs;
    for (const auto& p : j["pairs"]) {
      if (!p.is_array() || p.size() != 2)
        throw ConfigError("table pairs must be two-element arrays");
      pairs.emplace_back(value_from_json(p[0]), value_from_json(p[1]));
    }
    bool refl = false;
    if (j.contains("reflexive_closure")) {
      if (!j["reflexive_closure"].is_boolean())
        throw ConfigError("reflexive_closure must be a boolean");
      refl = j["reflexive_closure"].get<bool>();
    }
    return PredicateSpec::table(std::move(pairs), refl);
  }
  throw ConfigError("unknown predicate kind '" + kind + "'");
}

OrderedJson predicate_spec_to_json(const PredicateSpec& spec) {
  OrderedJson j;
  j["kind"] = predicate_kind_name(spec.kind);
  switch (spec.kind) {
    case PredicateKind::AbsDiffLeq:
      j["epsilon"] = spec.epsilon;
      break;
    case PredicateKind::Table: {
      OrderedJson pairs = OrderedJson::array();
      for (const auto& [x, y] : spec.pairs)
        pairs.push_back(OrderedJson::array({value_to_json(x), value_to_json(y)}));
      j["pairs"] = std::move(pairs);
      j["reflexive_closure"] = spec.reflexive_closure;
      break;
    }
    default:
      break;
  }
  return j;
}

JobConfig parse_config_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ConfigError("config must be a JSON object");
  if (!doc.contains("fd") || !doc["fd"].is_object())
    throw ConfigError("config needs an \"fd\" object");
  const auto& fd = doc["fd"];
  if (!fd.contains("lhs") || !fd["lhs"].is_array() || !fd.contains("rhs") ||
      !fd["rhs"].is_string())
    throw ConfigError("\"fd\" needs a \"lhs\" array and a \"rhs\" string");

  JobConfig cfg;
  std::vector<std::string> lhs;
  for (const auto& a : fd["lhs"]) {
    if (!a.is_string()) throw ConfigError("\"lhs\" entries must be attribute names");
    lhs.push_back(a.get<std::string>());
  }
  cfg.fd = FunctionalDependency(std::move(lhs), fd["rhs"].get<std::string>());
  if (cfg.fd.lhs.empty()) throw ConfigError("functional dependency needs a nonempty lhs");

  if (doc.contains("predicates")) {
    if (!doc["predicates"].is_object()) throw ConfigError("\"predicates\" must be an object");
    for (const auto& [name, spec] : doc["predicates"].items())
      cfg.predicates.by_attribute[name] = predicate_spec_from_json(spec);
  }
  return cfg;
}

OrderedJson config_to_json(const FunctionalDependency& fd, const PredicateSet& phi) {
  OrderedJson j;
  j["fd"]["lhs"] = fd.lhs;
  j["fd"]["rhs"] = fd.rhs;
  OrderedJson preds = OrderedJson::object();
  for (const auto& [name, spec] : phi.by_attribute) preds[name] = predicate_spec_to_json(spec);
  j["predicates"] = std::move(preds);
  return j;
}

OrderedJson report_to_json(const PropertyReport& report) {
  OrderedJson j;
  j["reflexive"] = report.reflexive;
  j["symmetric"] = report.symmetric;
  j["transitive"] = report.transitive;
  j["antisymmetric"] = report.antisymmetric;
  j["total"] = report.total;
  OrderedJson w = OrderedJson::object();
  for (const auto& [prop, values] : report.witnesses) {
    OrderedJson arr = OrderedJson::array();
    for (const auto& v : values) arr.push_back(value_to_json(v));
    w[prop] = std::move(arr);
  }
  j["witnesses"] = std::move(w);
  return j;
}

OrderedJson result_to_json(const G3Result& res, size_t total, bool include_witness) {
  OrderedJson j;
  j["g3"] = res.g3.str();
  j["g3_decimal"] = std::round(res.g3.to_double() * 1e6) / 1e6;
  j["kept"] = res.kept;
  j["total"] = total;
  j["method"] = method_name(res.method);
  j["exact"] = res.exact;
  if (include_witness) j["witness"] = res.witness;
  return j;
}

OrderedJson write_instance(const EvppInstance& inst, const std::string& dir) {
  namespace fs = std::filesystem;
  fs::create_directories(dir);

  std::ofstream csv(fs::path(dir) / "relation.csv", std::ios::binary);
  csv << serialize_relation_csv(inst.relation);
  if (!csv) throw DataError("cannot write " + (fs::path(dir) / "relation.csv").string());
  csv.close();

  std::ofstream cfg(fs::path(dir) / "config.json", std::ios::binary);
  cfg << config_to_json(inst.fd, inst.predicates).dump(2) << "\n";
  cfg.close();

  OrderedJson meta;
  meta["construction"] = inst.meta.construction;
  meta["graph"]["n"] = inst.meta.graph_n;
  meta["graph"]["m"] = inst.meta.graph_m;
  if (inst.meta.k) meta["k"] = *inst.meta.k;
  else meta["k"] = nullptr;
  meta["k_prime"] = inst.k_prime.str();
  if (inst.meta.expected_g3) {
    meta["expected"]["optimum"] = *inst.meta.expected_optimum;
    meta["expected"]["g3"] = inst.meta.expected_g3->str();
    meta["expected"]["oracle"] = inst.meta.oracle;
  } else {
    meta["expected"] = nullptr;
  }
  std::ofstream mf(fs::path(dir) / "meta.json", std::ios::binary);
  mf << meta.dump(2) << "\n";
  mf.close();
  return meta;
}

}  // namespace fdg3
