#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "fdg3/config_io.hpp"
#include "fdg3/conflict_graph.hpp"
#include "fdg3/errors.hpp"
#include "fdg3/g3.hpp"
#include "fdg3/graph.hpp"
#include "fdg3/reductions.hpp"

namespace {

using namespace fdg3;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct JobInputs {
  Relation relation;
  JobConfig config;
};

JobInputs load_job(const std::string& data_path, const std::string& config_path, bool dedup) {
  JobInputs job;
  job.relation = parse_relation_csv(read_file(data_path));
  job.config = parse_config_json(read_file(config_path));
  job.config.fd.validate(job.relation.scheme);
  job.config.predicates.validate(job.relation.scheme);
  if (dedup) job.relation = dedup_relation(job.relation);
  return job;
}

OrderedJson tuple_to_json(const Relation& r, size_t row) {
  OrderedJson j = OrderedJson::object();
  for (size_t c = 0; c < r.scheme.attributes.size(); ++c)
    j[r.scheme.attributes[c].name] = value_to_json(r.at(row, c));
  return j;
}

void emit(const OrderedJson& doc) { std::cout << doc.dump() << "\n"; }

int cmd_g3(const std::string& data, const std::string& config, const std::string& strategy,
           bool witness, bool dedup, size_t mis_cap) {
  auto job = load_job(data, config, dedup);
  EngineOptions opts;
  opts.strategy = strategy_from_name(strategy);
  opts.mis_cap = mis_cap;
  G3Result res = compute_g3(job.relation, job.config.predicates, job.config.fd, opts);
  emit(result_to_json(res, job.relation.size(), witness));
  return 0;
}

int cmd_check(const std::string& data, const std::string& config) {
  auto job = load_job(data, config, false);
  auto sat = satisfies(job.relation, job.config.predicates, job.config.fd);
  OrderedJson out;
  out["satisfied"] = sat.satisfied;
  if (sat.satisfied) {
    emit(out);
    return 0;
  }
  OrderedJson ce;
  ce["i"] = sat.i;
  ce["j"] = sat.j;
  ce["row_i"] = tuple_to_json(job.relation, sat.i);
  ce["row_j"] = tuple_to_json(job.relation, sat.j);
  out["counterexample"] = std::move(ce);
  emit(out);
  return 1;
}

int cmd_analyze(const std::string& data, const std::string& config) {
  auto job = load_job(data, config, false);
  OrderedJson out = OrderedJson::object();
  for (size_t c = 0; c < job.relation.scheme.attributes.size(); ++c) {
    const auto& attr = job.relation.scheme.attributes[c];
    const auto& spec = job.config.predicates.for_attribute(attr.name);
    auto report = analyze_properties(spec, active_domain(job.relation, c));
    OrderedJson entry;
    entry["kind"] = predicate_kind_name(spec.kind);
    entry["properties"] = report_to_json(report);
    out[attr.name] = std::move(entry);
  }
  emit(out);
  return 0;
}

int cmd_gen(const std::string& construction, const std::string& graph_path, int64_t k, bool has_k,
            const std::string& out_dir) {
  SimpleGraph g = parse_dimacs(read_file(graph_path));
  EvppInstance inst;
  if (construction == "clique") {
    if (!has_k) throw UsageError("gen clique requires --k (clique size target)");
    inst = clique_reduction(g, k);
  } else if (construction == "subdivision") {
    inst = subdivision_reduction(g, has_k ? std::optional<int64_t>(k) : std::nullopt);
  } else {
    throw UsageError("unknown construction '" + construction + "' (expected clique|subdivision)");
  }
  OrderedJson meta = write_instance(inst, out_dir);
  OrderedJson out;
  out["out"] = out_dir;
  out["files"] = {"relation.csv", "config.json", "meta.json"};
  out["meta"] = std::move(meta);
  emit(out);
  return 0;
}

int cmd_oracle(const std::string& data, const std::string& config, bool witness) {
  auto job = load_job(data, config, false);
  G3Result res = brute_force_g3(job.relation, job.config.predicates, job.config.fd);
  emit(result_to_json(res, job.relation.size(), witness));
  return 0;
}

int cmd_export_graph(const std::string& data, const std::string& config,
                     const std::string& out_path) {
  auto job = load_job(data, config, false);
  auto g = build_conflict_graph(job.relation, job.config.predicates, job.config.fd);
  auto und = underlying_undirected(g);

  size_t loops = g.self_violating.count();
  std::string text;
  text += "c conflict graph of " + job.config.fd.display() + "\n";
  text += "c self-violating tuples appear as loops\n";
  text += "p edge " + std::to_string(g.n) + " " + std::to_string(und.edge_count() + loops) + "\n";
  for (size_t i = 0; i < g.n; ++i) {
    if (g.self_violating.test(i))
      text += "e " + std::to_string(i + 1) + " " + std::to_string(i + 1) + "\n";
    for (size_t j = und.adj[i].find_next(i + 1); j < g.n; j = und.adj[i].find_next(j + 1))
      text += "e " + std::to_string(i + 1) + " " + std::to_string(j + 1) + "\n";
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw DataError("cannot write '" + out_path + "'");
  out << text;
  out.close();

  OrderedJson doc;
  doc["out"] = out_path;
  doc["vertices"] = g.n;
  doc["edges"] = und.edge_count();
  doc["self_violating"] = loops;
  doc["symmetric"] = g.symmetric;
  emit(doc);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fdg3: g3-error of functional dependencies under per-attribute predicates"};
  app.require_subcommand(1);

  size_t mis_cap = kDefaultMisCap;
  if (const char* env = std::getenv("FDG3_MIS_CAP")) mis_cap = std::strtoull(env, nullptr, 10);

  std::string data, config, strategy = "auto", out_path, graph_path, construction;
  bool witness = false, dedup = false;
  int64_t k = 0;

  auto* g3_cmd = app.add_subcommand("g3", "compute the g3-error");
  g3_cmd->add_option("--data", data, "relation CSV")->required();
  g3_cmd->add_option("--config", config, "FD + predicate config JSON")->required();
  g3_cmd->add_option("--strategy", strategy,
                     "auto|fastpath|cograph|comparability|exact|brute|greedy");
  g3_cmd->add_flag("--witness", witness, "include a maximum satisfying row set");
  g3_cmd->add_flag("--dedup", dedup, "drop duplicate rows first (set semantics)");
  g3_cmd->add_option("--mis-cap", mis_cap, "exact-solver vertex cap (env FDG3_MIS_CAP)");

  auto* check_cmd = app.add_subcommand("check", "test exact satisfaction");
  check_cmd->add_option("--data", data, "relation CSV")->required();
  check_cmd->add_option("--config", config, "config JSON")->required();

  auto* analyze_cmd = app.add_subcommand("analyze", "predicate property report per attribute");
  analyze_cmd->add_option("--data", data, "relation CSV")->required();
  analyze_cmd->add_option("--config", config, "config JSON")->required();

  auto* gen_cmd = app.add_subcommand("gen", "generate a hardness-reduction instance");
  gen_cmd->add_option("construction", construction, "clique|subdivision")->required();
  gen_cmd->add_option("--graph", graph_path, "source graph (DIMACS)")->required();
  auto* k_opt = gen_cmd->add_option("--k", k, "target clique / independent-set size");
  gen_cmd->add_option("--out", out_path, "output directory")->required();

  auto* oracle_cmd = app.add_subcommand("oracle", "brute-force g3 (small relations)");
  oracle_cmd->add_option("--data", data, "relation CSV")->required();
  oracle_cmd->add_option("--config", config, "config JSON")->required();
  oracle_cmd->add_flag("--witness", witness, "include the witness row set");

  auto* export_cmd = app.add_subcommand("export-graph", "write the conflict graph as DIMACS");
  export_cmd->add_option("--data", data, "relation CSV")->required();
  export_cmd->add_option("--config", config, "config JSON")->required();
  export_cmd->add_option("--out", out_path, "output DIMACS file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (g3_cmd->parsed()) return cmd_g3(data, config, strategy, witness, dedup, mis_cap);
    if (check_cmd->parsed()) return cmd_check(data, config);
    if (analyze_cmd->parsed()) return cmd_analyze(data, config);
    if (gen_cmd->parsed())
      return cmd_gen(construction, graph_path, k, k_opt->count() > 0, out_path);
    if (oracle_cmd->parsed()) return cmd_oracle(data, config, witness);
    if (export_cmd->parsed()) return cmd_export_graph(data, config, out_path);
  } catch (const CapacityError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const NotPartialOrderError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const NotCographError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const DataError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 70;
  }
  return 2;
}
