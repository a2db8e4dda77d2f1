// stclab: generate, audit, and solve spanning-tree-congestion instances
// derived from 3-Partition, plus a desk-scale exact STC solver.
//
// Reports are JSON on stdout, diagnostics on stderr. Exit codes:
//   0  command ran and every checked property held (a correctly answered
//      "no" still exits 0);
//   1  a checked property failed;
//   2  usage or input error, including desk-scale refusals.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <iostream>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "stclab/classify.hpp"
#include "stclab/io.hpp"
#include "stclab/reduction.hpp"
#include "stclab/stc.hpp"
#include "stclab/threepart.hpp"

using nlohmann::json;
using namespace stclab;

namespace {

constexpr long long kDefaultSeed = 20250810;

json input_info(const std::string& path) {
  return json{{"path", path}, {"fnv1a64", file_digest(path)}};
}

void emit_report(const std::string& command, const json& flags, bool pass,
                 const json& payload, std::chrono::steady_clock::time_point start) {
  const double ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - start)
                        .count();
  json report{{"command", command},
              {"flags", flags},
              {"status", pass ? "pass" : "fail"},
              {"payload", payload},
              {"timing_ms", ms}};
  std::cout << report.dump(2) << "\n";
}

NormalizedInstance load_normalized(const std::string& path, bool no_normalize,
                                   json* payload) {
  RawInstance raw = read_instance_json(path);
  if (raw.m < 0 || raw.m > 1'000'000) throw IoError(path + ": m out of range");
  ValidationResult check =
      validate_instance(static_cast<int>(raw.m), raw.B, raw.a);
  if (!check.ok()) {
    std::string msg = path + ": invalid instance:";
    for (const InstanceViolation& v : check.violations)
      msg += "\n  " + v.constraint +
             (v.index >= 0 ? "[" + std::to_string(v.index) + "]" : "") + ": " +
             v.detail;
    throw IoError(msg);
  }
  if (no_normalize) {
    const auto& a = check.instance->a;
    if (!std::is_sorted(a.begin(), a.end()) || a.front() < 8LL * check.instance->m)
      throw IoError(path +
                    ": --no-normalize requires values sorted ascending with "
                    "a_min >= 8m");
    NormalizedInstance ni;
    ni.base = *check.instance;
    ni.scale = 1;
    ni.perm.resize(a.size());
    for (size_t i = 0; i < a.size(); ++i) ni.perm[i] = static_cast<int>(i);
    if (payload) (*payload)["scale"] = 1;
    return ni;
  }
  NormalizedInstance ni = normalize_instance(*check.instance);
  if (payload) (*payload)["scale"] = ni.scale;
  return ni;
}

ReductionArtifact load_artifact(const std::string& graph_path,
                                const std::string& labels_path, json* payload) {
  Graph g = read_graph_file(graph_path);
  LabelsFile labels = read_labels_file(labels_path);
  if (payload) {
    (*payload)["inputs"]["graph"] = input_info(graph_path);
    (*payload)["inputs"]["labels"] = input_info(labels_path);
  }
  return assemble_artifact(std::move(g), labels.k, labels.roles);
}

json edge_json(Edge e) { return json::array({e.u + 1, e.v + 1}); }

json congestion_json(const CongestionReport& rep) {
  json per_edge = json::array();
  for (const auto& [e, value] : rep.per_edge)
    per_edge.push_back(json::array({e.u + 1, e.v + 1, value}));
  json out{{"max", rep.max}, {"per_edge", per_edge}};
  if (rep.argmax_edge) out["argmax_edge"] = edge_json(*rep.argmax_edge);
  return out;
}

struct CheckList {
  json items = json::array();
  bool all_pass = true;

  void add(const std::string& name, bool pass, const std::string& detail = "") {
    items.push_back(json{{"name", name}, {"pass", pass}, {"detail", detail}});
    all_pass = all_pass && pass;
  }
  void absorb(const AuditReport& report) {
    for (const AuditItem& item : report.items) add(item.name, item.pass, item.detail);
  }
};

// Audit plus the proper-interval certificates, shared by audit/roundtrip.
void classify_checks(const ReductionArtifact& art, CheckList& checks) {
  checks.add("proper-interval-ordering",
             is_proper_interval_ordering(art.graph, art.canonical_order).valid);
  auto claw = find_claw(art.graph);
  checks.add("claw-free", !claw.has_value(),
             claw ? "claw at center " + std::to_string(claw->center + 1) : "");
  checks.add("clique-cover-3", clique_cover_3(art.graph, {art.xs, art.ys, art.zs}));
}

Partition canonical_partition(Partition p) {
  for (auto& g : p.groups) std::sort(g.begin(), g.end());
  std::sort(p.groups.begin(), p.groups.end());
  return p;
}

long long uniform_below(std::mt19937_64& rng, long long n) {
  return static_cast<long long>(rng() % static_cast<std::uint64_t>(n));
}

// All partitions of {0..n-1} into unordered triples, canonical order.
void triple_splits(int n, std::vector<char>& used,
                   std::vector<std::vector<int>>& current,
                   std::vector<std::vector<std::vector<int>>>& out) {
  int first = -1;
  for (int i = 0; i < n; ++i)
    if (!used[i]) {
      first = i;
      break;
    }
  if (first < 0) {
    out.push_back(current);
    return;
  }
  used[first] = 1;
  for (int j = first + 1; j < n; ++j) {
    if (used[j]) continue;
    used[j] = 1;
    for (int l = j + 1; l < n; ++l) {
      if (used[l]) continue;
      used[l] = 1;
      current.push_back({first, j, l});
      triple_splits(n, used, current, out);
      current.pop_back();
      used[l] = 0;
    }
    used[j] = 0;
  }
  used[first] = 0;
}

// The star-family suite that replaces exhaustive solving on no-instances:
// every split into triples, then `samples` random assignments, must all
// push some {z_1, y_i} edge past k (checked by closed form and by direct
// cut evaluation).
void no_instance_suite(const ReductionArtifact& art, long long samples,
                       long long seed, CheckList& checks) {
  std::vector<char> used(art.x_count(), 0);
  std::vector<std::vector<int>> current;
  std::vector<std::vector<std::vector<int>>> splits;
  triple_splits(art.x_count(), used, current, splits);

  bool splits_exceed = true;
  std::string split_detail;
  for (const auto& split : splits) {
    std::map<long long, long long> assign;
    for (size_t gi = 0; gi < split.size(); ++gi)
      for (int idx : split[gi]) assign[idx + 1] = static_cast<long long>(gi) + 1;
    StarFamilyReport report = star_family_congestion(art, assign);
    bool closed = report.max_y_congestion > art.k;
    bool direct = report.tree && tree_congestion(*report.tree).max > art.k;
    if (!closed || !direct) {
      splits_exceed = false;
      split_detail = "a triple split stayed within k";
      break;
    }
  }
  checks.add("star-family-splits-exceed-k", splits_exceed,
             splits_exceed ? std::to_string(splits.size()) + " splits" : split_detail);

  std::mt19937_64 rng(static_cast<std::uint64_t>(seed));
  bool random_exceed = true;
  std::string random_detail;
  for (long long round = 0; round < samples; ++round) {
    std::map<long long, long long> assign;
    const bool groups_only = round % 2 == 0;
    for (long long j = 1; j <= art.x_count(); ++j) {
      long long limit = groups_only ? art.m() : art.instance.base.a[j - 1];
      assign[j] = 1 + uniform_below(rng, limit);
    }
    StarFamilyReport report = star_family_congestion(art, assign);
    long long direct_max = report.tree ? tree_congestion(*report.tree).max : -1;
    if (report.max_y_congestion <= art.k || direct_max <= art.k ||
        direct_max != report.max_y_congestion) {
      random_exceed = false;
      random_detail = "sample " + std::to_string(round) + " reached max " +
                      std::to_string(direct_max);
      break;
    }
  }
  checks.add("star-family-random-exceed-k", random_exceed,
             random_exceed ? std::to_string(samples) + " samples" : random_detail);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spanning tree congestion lab"};
  app.require_subcommand(1);

  std::string instance_path, graph_path, labels_path, tree_path, order_path;
  std::string partition_path, out_path, out_labels;
  bool no_normalize = false;
  long long budget = kDefaultTreeBudget;
  long long k = 0;
  long long seed = kDefaultSeed;
  long long samples = 200;

  CLI::App* gen = app.add_subcommand("gen", "build a graph from an instance");
  gen->add_option("--instance", instance_path, "instance JSON")->required();
  gen->add_option("--out", out_path, "output graph file")->required();
  gen->add_option("--labels", out_labels, "output labels file")->required();
  gen->add_flag("--no-normalize", no_normalize,
                "require an already-normalized instance");

  CLI::App* audit = app.add_subcommand("audit", "audit a generated graph");
  audit->add_option("--graph", graph_path)->required();
  audit->add_option("--labels", labels_path)->required();
  audit->add_option("--instance", instance_path)->required();

  CLI::App* witness = app.add_subcommand("witness", "build the witness tree");
  witness->add_option("--graph", graph_path)->required();
  witness->add_option("--labels", labels_path)->required();
  witness->add_option("--partition", partition_path)->required();
  witness->add_option("--out", out_path, "output tree file")->required();

  CLI::App* extract = app.add_subcommand("extract", "extract a partition from a tree");
  extract->add_option("--graph", graph_path)->required();
  extract->add_option("--labels", labels_path)->required();
  extract->add_option("--tree", tree_path)->required();
  extract->add_option("--out", out_path, "optional partition JSON output");

  CLI::App* eval_tree = app.add_subcommand("eval-tree", "congestion report of a tree");
  eval_tree->add_option("--graph", graph_path)->required();
  eval_tree->add_option("--tree", tree_path)->required();

  CLI::App* solve = app.add_subcommand("solve", "exact stc by enumeration");
  solve->add_option("--graph", graph_path)->required();
  solve->add_option("--budget", budget, "max spanning trees")
      ->envname("STC_LAB_BUDGET");

  CLI::App* decide = app.add_subcommand("decide", "is stc(G) <= k?");
  decide->add_option("--graph", graph_path)->required();
  decide->add_option("-k,--target", k, "congestion target")->required();
  decide->add_option("--budget", budget, "max spanning trees")
      ->envname("STC_LAB_BUDGET");

  CLI::App* check_pio = app.add_subcommand("check-pio", "verify a proper interval order");
  check_pio->add_option("--graph", graph_path)->required();
  check_pio->add_option("--order", order_path)->required();

  CLI::App* threepart = app.add_subcommand("3part", "brute-force 3-partition");
  threepart->add_option("--instance", instance_path)->required();

  CLI::App* roundtrip = app.add_subcommand("roundtrip", "full pipeline on an instance");
  roundtrip->add_option("--instance", instance_path)->required();
  roundtrip->add_option("--seed", seed, "seed for the star-family samples");
  roundtrip->add_option("--samples", samples, "random star-family samples");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  const auto start = std::chrono::steady_clock::now();
  try {
    if (app.got_subcommand(gen)) {
      json flags{{"instance", instance_path},
                 {"out", out_path},
                 {"labels", out_labels},
                 {"no_normalize", no_normalize}};
      json payload;
      payload["inputs"]["instance"] = input_info(instance_path);
      NormalizedInstance ni = load_normalized(instance_path, no_normalize, &payload);
      ReductionArtifact art = build_reduction(ni);
      write_graph_file(out_path, art.graph, {"stclab reduction graph"});
      write_labels_file(out_labels, art, instance_path);
      payload["n"] = art.graph.vertex_count();
      payload["edges"] = art.graph.edge_count();
      payload["k"] = art.k;
      payload["x"] = art.x_count();
      payload["y"] = art.y_count();
      payload["z"] = art.z_count();
      payload["outputs"]["graph"] = input_info(out_path);
      payload["outputs"]["labels"] = input_info(out_labels);
      emit_report("gen", flags, true, payload, start);
      return 0;
    }

    if (app.got_subcommand(audit)) {
      json flags{{"graph", graph_path},
                 {"labels", labels_path},
                 {"instance", instance_path}};
      json payload;
      ReductionArtifact art = load_artifact(graph_path, labels_path, &payload);
      payload["inputs"]["instance"] = input_info(instance_path);

      CheckList checks;
      NormalizedInstance ni = load_normalized(instance_path, false, nullptr);
      checks.add("instance-matches-labels",
                 ni.base.m == art.instance.base.m &&
                     ni.base.B == art.instance.base.B &&
                     ni.base.a == art.instance.base.a,
                 "labels k = " + std::to_string(art.k));
      checks.absorb(audit_construction(art));
      classify_checks(art, checks);
      payload["checks"] = checks.items;
      emit_report("audit", flags, checks.all_pass, payload, start);
      return checks.all_pass ? 0 : 1;
    }

    if (app.got_subcommand(witness)) {
      json flags{{"graph", graph_path},
                 {"labels", labels_path},
                 {"partition", partition_path},
                 {"out", out_path}};
      json payload;
      ReductionArtifact art = load_artifact(graph_path, labels_path, &payload);
      payload["inputs"]["partition"] = input_info(partition_path);
      Partition p = read_partition_json(partition_path);
      SpanningTree t = build_witness_tree(art, p);
      write_tree_file(out_path, t);
      CongestionReport rep = tree_congestion(t);
      payload["k"] = art.k;
      payload["max_congestion"] = rep.max;
      payload["equals_k"] = rep.max == art.k;
      payload["outputs"]["tree"] = input_info(out_path);
      const bool pass = rep.max == art.k;
      emit_report("witness", flags, pass, payload, start);
      return pass ? 0 : 1;
    }

    if (app.got_subcommand(extract)) {
      json flags{{"graph", graph_path}, {"labels", labels_path}, {"tree", tree_path}};
      json payload;
      ReductionArtifact art = load_artifact(graph_path, labels_path, &payload);
      payload["inputs"]["tree"] = input_info(tree_path);
      SpanningTree t = read_tree_file(tree_path, art.graph);
      Partition p = extract_partition(art, t);
      payload["groups"] = p.groups;
      if (!out_path.empty()) {
        write_partition_json(out_path, p);
        payload["outputs"]["partition"] = input_info(out_path);
      }
      emit_report("extract", flags, true, payload, start);
      return 0;
    }

    if (app.got_subcommand(eval_tree)) {
      json flags{{"graph", graph_path}, {"tree", tree_path}};
      json payload;
      Graph g = read_graph_file(graph_path);
      payload["inputs"]["graph"] = input_info(graph_path);
      payload["inputs"]["tree"] = input_info(tree_path);
      SpanningTree t = read_tree_file(tree_path, g);
      payload["congestion"] = congestion_json(tree_congestion(t));
      emit_report("eval-tree", flags, true, payload, start);
      return 0;
    }

    if (app.got_subcommand(solve)) {
      json flags{{"graph", graph_path}, {"budget", budget}};
      json payload;
      Graph g = read_graph_file(graph_path);
      payload["inputs"]["graph"] = input_info(graph_path);
      StcResult res = stc_exact(g, budget);
      payload["stc"] = res.value;
      payload["trees_examined"] = res.trees_examined;
      json witness_edges = json::array();
      for (const Edge& e : res.witness.edges()) witness_edges.push_back(edge_json(e));
      payload["witness"] = witness_edges;
      emit_report("solve", flags, true, payload, start);
      return 0;
    }

    if (app.got_subcommand(decide)) {
      json flags{{"graph", graph_path}, {"k", k}, {"budget", budget}};
      json payload;
      Graph g = read_graph_file(graph_path);
      payload["inputs"]["graph"] = input_info(graph_path);
      DecideResult res = stc_decide(g, k, budget);
      payload["answer"] = res.answer;
      payload["trees_examined"] = res.trees_examined;
      if (res.witness) {
        json witness_edges = json::array();
        for (const Edge& e : res.witness->edges())
          witness_edges.push_back(edge_json(e));
        payload["witness"] = witness_edges;
      }
      emit_report("decide", flags, true, payload, start);
      return 0;
    }

    if (app.got_subcommand(check_pio)) {
      json flags{{"graph", graph_path}, {"order", order_path}};
      json payload;
      Graph g = read_graph_file(graph_path);
      payload["inputs"]["graph"] = input_info(graph_path);
      payload["inputs"]["order"] = input_info(order_path);
      OrderingWitness w = is_proper_interval_ordering(g, read_order_file(order_path));
      payload["valid"] = w.valid;
      if (w.violation)
        payload["violation"] = json::array(
            {(*w.violation)[0] + 1, (*w.violation)[1] + 1, (*w.violation)[2] + 1});
      emit_report("check-pio", flags, w.valid, payload, start);
      return w.valid ? 0 : 1;
    }

    if (app.got_subcommand(threepart)) {
      json flags{{"instance", instance_path}};
      json payload;
      payload["inputs"]["instance"] = input_info(instance_path);
      RawInstance raw = read_instance_json(instance_path);
      ValidationResult check =
          validate_instance(static_cast<int>(raw.m), raw.B, raw.a);
      if (!check.ok()) {
        std::string msg = instance_path + ": invalid instance:";
        for (const InstanceViolation& v : check.violations)
          msg += " " + v.constraint;
        throw IoError(msg);
      }
      auto solved = solve_3partition_bruteforce(*check.instance);
      payload["solvable"] = solved.has_value();
      if (solved) payload["groups"] = solved->groups;
      emit_report("3part", flags, true, payload, start);
      return 0;
    }

    if (app.got_subcommand(roundtrip)) {
      json flags{{"instance", instance_path}, {"seed", seed}, {"samples", samples}};
      json payload;
      payload["inputs"]["instance"] = input_info(instance_path);
      CheckList checks;

      NormalizedInstance ni = load_normalized(instance_path, false, &payload);
      ReductionArtifact art = build_reduction(ni);
      payload["k"] = art.k;
      payload["n"] = art.graph.vertex_count();
      checks.absorb(audit_construction(art));
      classify_checks(art, checks);

      auto solved = solve_3partition_bruteforce(ni.base);
      payload["solvable"] = solved.has_value();
      if (solved) {
        checks.add("solver-verifies", verify_partition(ni.base, *solved).ok);
        SpanningTree t = build_witness_tree(art, *solved);
        CongestionReport rep = tree_congestion(t);
        checks.add("witness-congestion-is-k", rep.max == art.k,
                   "max = " + std::to_string(rep.max));
        Partition extracted = extract_partition(art, t);
        checks.add("extraction-roundtrip",
                   canonical_partition(extracted).groups ==
                       canonical_partition(*solved).groups);
        payload["groups"] = solved->groups;
      } else {
        no_instance_suite(art, samples, seed, checks);
      }
      payload["checks"] = checks.items;
      emit_report("roundtrip", flags, checks.all_pass, payload, start);
      return checks.all_pass ? 0 : 1;
    }
  } catch (const HypothesisViolationError& e) {
    std::cerr << "check failed: " << e.what() << "\n";
    return 1;
  } catch (const LemmaContradictionError& e) {
    std::cerr << "LEMMA CONTRADICTION (implementation bug): " << e.what() << "\n";
    return 1;
  } catch (const BudgetExceededError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const IoError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
