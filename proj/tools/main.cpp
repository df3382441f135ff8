// Command line front end: label, verify, estimate, oracle, audit, chi-la,
// bench, k2n. JSON is the machine interface; text output is formatted from
// the same records. Exit codes: 0 ok, 1 usage or input error, 2 graph not
// labellable, 3 round budget exhausted, 4 internal verification failure.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "antimagic/antimagic.hpp"

using nlohmann::json;
using namespace antimagic;

namespace {

constexpr std::uint64_t kDefaultSeed = 1;

struct CommonOptions {
  std::string in_path;
  std::string generate_spec;
  std::uint64_t seed = kDefaultSeed;
  bool seed_given = false;
  std::int64_t k = 1;
  std::string format = "text";
};

void add_common(CLI::App* cmd, CommonOptions& opts, bool with_graph = true,
                bool with_k = true) {
  if (with_graph) {
    cmd->add_option("--in", opts.in_path, "graph edge-list file");
    cmd->add_option("--generate", opts.generate_spec,
                    "graph family spec, e.g. path:10 or complete_bipartite:2,4");
  }
  cmd->add_option("--seed", opts.seed, "random seed (default 1)")
      ->each([&opts](const std::string&) { opts.seed_given = true; });
  if (with_k)
    cmd->add_option("--k", opts.k, "smallest label (default 1)")
        ->check(CLI::PositiveNumber);
  cmd->add_option("--format", opts.format, "output format")
      ->check(CLI::IsMember({"json", "csv", "text"}));
}

ParseResult load_graph(const CommonOptions& opts) {
  if (!opts.in_path.empty() && !opts.generate_spec.empty())
    throw CLI::ValidationError("--in and --generate are mutually exclusive");
  if (!opts.in_path.empty()) {
    std::ifstream in(opts.in_path);
    if (!in) throw std::runtime_error("cannot open " + opts.in_path);
    return parse_edge_list(in);
  }
  if (!opts.generate_spec.empty()) {
    Graph g = generate(opts.generate_spec, opts.seed);
    std::vector<std::uint64_t> ids(g.vertex_count());
    for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = i;
    return ParseResult{std::move(g), std::move(ids)};
  }
  throw CLI::ValidationError("need --in FILE or --generate FAMILY:ARGS");
}

json graph_record(const CommonOptions& opts, const Graph& g) {
  return json{{"source", opts.in_path.empty() ? opts.generate_spec : opts.in_path},
              {"vertices", g.vertex_count()},
              {"edges", g.edge_count()}};
}

json seed_record(const CommonOptions& opts) {
  return json{{"seed", opts.seed}, {"seed_default", !opts.seed_given}};
}

json labelling_record(const Graph& g, const Labelling& l,
                      const std::vector<std::uint64_t>& ids) {
  json out = json::array();
  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    const Edge& e = g.edges()[i];
    out.push_back({ids[e.u], ids[e.v], l.labels[i]});
  }
  return out;
}

json conflict_record(const ConflictReport& report) {
  json conflicts = json::array();
  for (const auto& [v, w] : report.conflicts) conflicts.push_back({v, w});
  return json{{"holds", report.holds}, {"conflicts", conflicts}};
}

json estimate_record(const Estimate& e) {
  return json{{"p_hat", e.p_hat},
              {"ci_low", e.ci_low},
              {"ci_high", e.ci_high},
              {"trials", e.trials}};
}

void print_seed_line(const CommonOptions& opts) {
  std::cout << "seed: " << opts.seed << (opts.seed_given ? "" : " (default)")
            << "\n";
}

// ---------------------------------------------------------------- label ---

int cmd_label(const CommonOptions& opts, const std::string& out_path,
              std::optional<std::uint64_t> max_rounds) {
  const ParseResult parsed = load_graph(opts);
  RngStream rng(opts.seed, 0);
  const LasVegasResult result = las_vegas_label(parsed.graph, opts.k, rng, max_rounds);

  // contract: re-verify through the public checks before any output
  const VertexSums sums = vertex_sums(parsed.graph, result.labelling);
  if (!check_local_antimagic(parsed.graph, sums).holds)
    throw std::logic_error("labelling failed re-verification");

  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot write " + out_path);
    write_labelling(out, parsed.graph, result.labelling, parsed.vertex_ids);
  }

  json record{{"command", "label"},
              {"k", opts.k},
              {"graph", graph_record(opts, parsed.graph)},
              {"rounds", result.stats.rounds},
              {"wall_time", result.stats.wall_time},
              {"verified", true},
              {"labelling", labelling_record(parsed.graph, result.labelling,
                                             parsed.vertex_ids)},
              {"out", out_path.empty() ? json(nullptr) : json(out_path)}};
  record.update(seed_record(opts));

  if (opts.format == "json") {
    std::cout << record.dump(2) << "\n";
  } else {
    print_seed_line(opts);
    std::cout << "graph: " << record["graph"]["source"].get<std::string>() << " ("
              << parsed.graph.vertex_count() << " vertices, "
              << parsed.graph.edge_count() << " edges)\n"
              << "rounds: " << result.stats.rounds << "\n"
              << "verified: local antimagic\n";
    if (out_path.empty()) {
      std::ostringstream text;
      write_labelling(text, parsed.graph, result.labelling, parsed.vertex_ids);
      std::cout << text.str();
    } else {
      std::cout << "labelling written to " << out_path << "\n";
    }
  }
  return 0;
}

// --------------------------------------------------------------- verify ---

int cmd_verify(const CommonOptions& opts, const std::string& labelling_path) {
  const ParseResult parsed = load_graph(opts);
  std::ifstream in(labelling_path);
  if (!in) throw std::runtime_error("cannot open " + labelling_path);
  const Labelling l = read_labelling(in, parsed.graph, parsed.vertex_ids);
  const VertexSums sums = vertex_sums(parsed.graph, l);

  const ConflictReport local = check_local_antimagic(parsed.graph, sums);
  const ConflictReport dist2 = check_distance2(parsed.graph, sums);
  const ConflictReport global = check_global_antimagic(parsed.graph, sums);

  json record{{"command", "verify"},
              {"graph", graph_record(opts, parsed.graph)},
              {"k", l.offset_k},
              {"sums", sums.sums},
              {"predicates",
               {{"local", conflict_record(local)},
                {"distance2", conflict_record(dist2)},
                {"global", conflict_record(global)}}}};

  if (opts.format == "json") {
    std::cout << record.dump(2) << "\n";
  } else {
    for (const ConflictReport* r : {&local, &dist2, &global}) {
      std::cout << predicate_name(r->predicate) << ": "
                << (r->holds ? "holds" : "fails");
      if (!r->holds) {
        std::cout << " (";
        for (std::size_t i = 0; i < r->conflicts.size(); ++i)
          std::cout << (i ? " " : "") << parsed.vertex_ids[r->conflicts[i].first]
                    << "=" << parsed.vertex_ids[r->conflicts[i].second];
        std::cout << ")";
      }
      std::cout << "\n";
    }
  }
  return 0;
}

// ------------------------------------------------------------- estimate ---

int cmd_estimate(const CommonOptions& opts, std::uint64_t trials, unsigned workers) {
  const ParseResult parsed = load_graph(opts);
  const Graph& g = parsed.graph;
  if (!validate(g).is_labellable)
    throw NotLabellableError("graph is not labellable");
  const RunStats stats = collision_trials_parallel(g, opts.k, trials, opts.seed, workers);
  const Estimate success = wilson_estimate(stats.successes, stats.trials);

  json edges = json::array();
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    json e = estimate_record(wilson_estimate(stats.per_edge_collisions[i], stats.trials));
    e["index"] = i;
    e["u"] = parsed.vertex_ids[g.edges()[i].u];
    e["v"] = parsed.vertex_ids[g.edges()[i].v];
    e["collisions"] = stats.per_edge_collisions[i];
    edges.push_back(std::move(e));
  }
  json record{{"command", "estimate"},
              {"k", opts.k},
              {"trials", stats.trials},
              {"workers", workers},
              {"graph", graph_record(opts, g)},
              {"success", estimate_record(success)},
              {"successes", stats.successes},
              {"edges", edges},
              {"wall_time", stats.wall_time}};
  record.update(seed_record(opts));

  if (opts.format == "json") {
    std::cout << record.dump(2) << "\n";
  } else if (opts.format == "csv") {
    std::cout << "kind,index,u,v,collisions,trials,p_hat,ci_low,ci_high\n";
    std::cout << "success,,,," << stats.successes << "," << stats.trials << ","
              << success.p_hat << "," << success.ci_low << "," << success.ci_high
              << "\n";
    for (const auto& e : edges)
      std::cout << "edge," << e["index"] << "," << e["u"] << "," << e["v"] << ","
                << e["collisions"] << "," << stats.trials << "," << e["p_hat"]
                << "," << e["ci_low"] << "," << e["ci_high"] << "\n";
  } else {
    print_seed_line(opts);
    std::cout << "trials: " << stats.trials << "\n"
              << "success: p_hat=" << success.p_hat << " ci=[" << success.ci_low
              << ", " << success.ci_high << "]\n";
    for (const auto& e : edges)
      std::cout << "edge " << e["u"] << "-" << e["v"] << ": p_hat=" << e["p_hat"]
                << " ci=[" << e["ci_low"] << ", " << e["ci_high"] << "]\n";
  }
  return 0;
}

// --------------------------------------------------------------- oracle ---

int cmd_oracle(const CommonOptions& opts, int n, int a, int b,
               std::optional<std::int64_t> t, std::optional<std::int64_t> modulus,
               std::optional<std::int64_t> residue, std::uint64_t cap) {
  const DistributionTable table = exact_distribution(n, a, b, opts.k, cap);
  json record{{"command", "oracle"}, {"n", n},         {"a", a},
              {"b", b},              {"k", opts.k},    {"pair_count", table.pair_count.str()},
              {"t_min", table.t_min}, {"t_max", table.t_max}};

  auto prob_json = [](const Rational& p) {
    return json{{"p", rational_str(p)}, {"approx", rational_approx(p)}};
  };

  if (t.has_value()) {
    record["t"] = *t;
    record.update(prob_json(table.p(*t)));
  } else if (modulus.has_value()) {
    record["modulus"] = *modulus;
    json rows = json::array();
    for (std::int64_t r = 0; r < *modulus; ++r) {
      if (residue.has_value() && r != *residue) continue;
      json row = prob_json(table.p_mod(r, *modulus));
      row["residue"] = r;
      rows.push_back(std::move(row));
    }
    record["residues"] = rows;
  } else {
    json rows = json::array();
    for (const auto& [target, p] : table.probabilities) {
      json row = prob_json(p);
      row["t"] = target;
      rows.push_back(std::move(row));
    }
    record["distribution"] = rows;
  }

  if (opts.format == "json") {
    std::cout << record.dump(2) << "\n";
  } else if (opts.format == "csv") {
    if (record.contains("distribution")) {
      std::cout << "t,p,approx\n";
      for (const auto& row : record["distribution"])
        std::cout << row["t"] << "," << row["p"].get<std::string>() << ","
                  << row["approx"] << "\n";
    } else if (record.contains("residues")) {
      std::cout << "residue,p,approx\n";
      for (const auto& row : record["residues"])
        std::cout << row["residue"] << "," << row["p"].get<std::string>() << ","
                  << row["approx"] << "\n";
    } else {
      std::cout << "t,p,approx\n"
                << *t << "," << record["p"].get<std::string>() << ","
                << record["approx"] << "\n";
    }
  } else {
    std::cout << "p_{" << n << ";" << a << "," << b << "} over {" << opts.k
              << ",...," << n + opts.k - 1 << "}  (" << table.pair_count.str()
              << " subset pairs)\n";
    if (record.contains("distribution")) {
      for (const auto& row : record["distribution"])
        std::cout << "t=" << row["t"] << "  " << row["p"].get<std::string>()
                  << "  ~" << row["approx"] << "\n";
    } else if (record.contains("residues")) {
      for (const auto& row : record["residues"])
        std::cout << "r=" << row["residue"] << " (mod " << *modulus << ")  "
                  << row["p"].get<std::string>() << "  ~" << row["approx"] << "\n";
    } else {
      std::cout << "t=" << *t << "  " << record["p"].get<std::string>() << "  ~"
                << record["approx"] << "\n";
    }
  }
  return 0;
}

// ---------------------------------------------------------------- audit ---

json audit_check_record(const BoundCheck& check) {
  json row{{"statement", check.statement}, {"n", check.n},
           {"k", check.k},                 {"target", check.target},
           {"bound", rational_str(check.bound)},
           {"exact", rational_str(check.exact)},
           {"equality", check.equality},   {"holds", check.holds},
           {"strict", check.strict}};
  if (check.a >= 0) row["a"] = check.a;
  if (check.b >= 0) row["b"] = check.b;
  if (check.c >= 0) row["c"] = check.c;
  return row;
}

int cmd_audit(const CommonOptions& opts, int n_max, std::vector<std::int64_t> k_set,
              std::uint64_t cap) {
  if (k_set.empty()) k_set = {1};
  const AuditReport report = audit_bounds(n_max, k_set, cap);

  json record{{"command", "audit"},
              {"n_max", n_max},
              {"k_set", k_set},
              {"checked", report.checked.size()},
              {"failures", json::array()}};
  for (const BoundCheck& check : report.failures)
    record["failures"].push_back(audit_check_record(check));
  json non_strict = json::array();
  for (const BoundCheck& check : report.checked)
    if (check.statement == "collision_bound" && check.holds && !check.strict)
      non_strict.push_back(audit_check_record(check));
  record["non_strict_collisions"] = non_strict;

  if (opts.format == "json") {
    json records = json::array();
    for (const BoundCheck& check : report.checked)
      records.push_back(audit_check_record(check));
    record["records"] = std::move(records);
    std::cout << record.dump(2) << "\n";
  } else if (opts.format == "csv") {
    std::cout << "statement,n,a,b,c,k,target,bound,exact,equality,holds,strict\n";
    for (const BoundCheck& c : report.checked)
      std::cout << c.statement << "," << c.n << "," << c.a << "," << c.b << ","
                << c.c << "," << c.k << "," << c.target << ","
                << rational_str(c.bound) << "," << rational_str(c.exact) << ","
                << c.equality << "," << c.holds << "," << c.strict << "\n";
  } else {
    std::cout << "audited " << report.checked.size() << " statement instances up to n="
              << n_max << "\nfailures: " << report.failures.size() << "\n";
    for (const BoundCheck& check : report.failures)
      std::cout << "FAIL " << check.statement << " n=" << check.n
                << " a=" << check.a << " b=" << check.b << " c=" << check.c
                << " k=" << check.k << " target=" << check.target
                << " exact=" << rational_str(check.exact)
                << " bound=" << rational_str(check.bound) << "\n";
  }
  return report.failures.empty() ? 0 : 4;
}

// --------------------------------------------------------------- chi-la ---

int cmd_chi_la(const CommonOptions& opts, std::size_t m_cap) {
  if (m_cap > 11)
    throw CLI::ValidationError("--m-cap is limited to 11");
  if (m_cap > 9)
    std::cerr << "warning: exhaustive scan over " << m_cap
              << "! labellings may take a while\n";
  const ParseResult parsed = load_graph(opts);
  const ChiLaResult result = chi_la_exhaustive(parsed.graph, opts.k, m_cap);

  json record{{"command", "chi-la"},
              {"graph", graph_record(opts, parsed.graph)},
              {"k", opts.k},
              {"chi_la", result.chi_la},
              {"local_antimagic_count", result.local_antimagic_count},
              {"total_labellings", result.total_labellings},
              {"witness", labelling_record(parsed.graph, result.witness,
                                           parsed.vertex_ids)}};

  if (opts.format == "json") {
    std::cout << record.dump(2) << "\n";
  } else {
    std::cout << "chi_la: " << result.chi_la << "\n"
              << "local antimagic labellings: " << result.local_antimagic_count
              << " of " << result.total_labellings << "\n"
              << "witness:\n";
    std::ostringstream text;
    write_labelling(text, parsed.graph, result.witness, parsed.vertex_ids);
    std::cout << text.str();
  }
  return 0;
}

// ---------------------------------------------------------------- bench ---

int cmd_bench(const CommonOptions& opts, std::vector<std::string> specs,
              std::uint64_t repeats) {
  if (specs.empty())
    specs = {"path:11", "path:51", "path:101", "complete_bipartite:2,5",
             "complete_bipartite:2,10"};
  std::vector<std::pair<std::string, Graph>> graphs;
  graphs.reserve(specs.size());
  for (const std::string& spec : specs)
    graphs.emplace_back(spec, generate(spec, opts.seed));
  const auto results = bench_rounds(graphs, repeats, opts.seed, opts.k);

  json rows = json::array();
  for (const BenchEntry& entry : results)
    rows.push_back({{"spec", entry.spec},
                    {"m", entry.m},
                    {"repeats", entry.repeats},
                    {"mean_rounds", entry.mean_rounds},
                    {"max_rounds", entry.max_rounds},
                    {"total_rounds", entry.total_rounds},
                    {"wall_time", entry.wall_time}});
  json record{{"command", "bench"}, {"k", opts.k}, {"repeats", repeats},
              {"results", rows}};
  record.update(seed_record(opts));

  if (opts.format == "json") {
    std::cout << record.dump(2) << "\n";
  } else if (opts.format == "csv") {
    std::cout << "spec,m,repeats,mean_rounds,max_rounds,wall_time\n";
    for (const BenchEntry& e : results)
      std::cout << e.spec << "," << e.m << "," << e.repeats << ","
                << e.mean_rounds << "," << e.max_rounds << "," << e.wall_time
                << "\n";
  } else {
    print_seed_line(opts);
    std::printf("%-26s %6s %12s %6s %10s\n", "graph", "m", "mean rounds", "max",
                "wall(s)");
    for (const BenchEntry& e : results)
      std::printf("%-26s %6zu %12.2f %6llu %10.4f\n", e.spec.c_str(), e.m,
                  e.mean_rounds, static_cast<unsigned long long>(e.max_rounds),
                  e.wall_time);
  }
  return 0;
}

// ------------------------------------------------------------------ k2n ---

int cmd_k2n(const CommonOptions& opts, std::vector<int> n_list,
            std::uint64_t trials, unsigned workers) {
  if (n_list.empty()) n_list = {8, 16, 32};
  json points = json::array();
  for (const int n : n_list) {
    if (n < 2) throw CLI::ValidationError("k2n needs n >= 2");
    const Graph g = generate("complete_bipartite:2," + std::to_string(n), opts.seed);
    // the two tracked degree-2 vertices are the first two of the large part
    const VertexId v = 2, w = 3;

    std::uint64_t hits = 0;
    if (workers <= 1) {
      RngStream rng(opts.seed, 0);
      hits = pair_collision_hits(g, v, w, 1, trials, rng);
    } else {
      std::vector<std::uint64_t> parts(workers, 0);
      std::vector<std::thread> pool;
      for (unsigned i = 0; i < workers; ++i) {
        const std::uint64_t share = trials / workers + (i < trials % workers ? 1 : 0);
        pool.emplace_back([&, i, share] {
          if (share == 0) return;
          RngStream rng(opts.seed, i);
          parts[i] = pair_collision_hits(g, v, w, 1, share, rng);
        });
      }
      for (auto& th : pool) th.join();
      for (auto h : parts) hits += h;
    }
    const Estimate est = wilson_estimate(hits, trials);

    json point{{"n", n},
               {"m", g.edge_count()},
               {"collisions", hits},
               {"p_hat", est.p_hat},
               {"ci_low", est.ci_low},
               {"ci_high", est.ci_high},
               {"p_times_n", est.p_hat * n},
               {"pair_sum", est.p_hat * (n * (n - 1) / 2.0)}};
    // exact value: the two vertices see disjoint pairs of labels, so their
    // sum difference is the two-block statistic over 2n labels (the oracle
    // needs a + b < n, so n = 2 is covered by enumeration below instead)
    if (n >= 3) {
      const Rational exact = exact_p({2 * n, 2, 2, 1, 0});
      point["exact"] = rational_str(exact);
      point["exact_approx"] = rational_approx(exact);
    }
    if (n == 2) {
      // cross-check by enumerating all 24 labellings of K_{2,2}
      std::vector<std::int64_t> labels{1, 2, 3, 4};
      std::uint64_t equal = 0, total = 0;
      const auto inc = incident_edges(g);
      do {
        std::int64_t sv = 0, sw = 0;
        for (std::size_t i : inc[v]) sv += labels[i];
        for (std::size_t i : inc[w]) sw += labels[i];
        equal += sv == sw ? 1 : 0;
        ++total;
      } while (std::next_permutation(labels.begin(), labels.end()));
      point["exact_enumeration"] =
          std::to_string(equal) + "/" + std::to_string(total);
    }
    points.push_back(std::move(point));
  }

  json record{{"command", "k2n"}, {"trials", trials}, {"points", points}};
  record.update(seed_record(opts));

  if (opts.format == "json") {
    std::cout << record.dump(2) << "\n";
  } else if (opts.format == "csv") {
    std::cout << "n,m,collisions,trials,p_hat,ci_low,ci_high,p_times_n,exact,pair_sum\n";
    for (const auto& p : points)
      std::cout << p["n"] << "," << p["m"] << "," << p["collisions"] << ","
                << trials << "," << p["p_hat"] << "," << p["ci_low"] << ","
                << p["ci_high"] << "," << p["p_times_n"] << ","
                << (p.contains("exact") ? p["exact"].get<std::string>() : "")
                << "," << p["pair_sum"] << "\n";
  } else {
    print_seed_line(opts);
    std::cout << "collision probability of two fixed degree-2 vertices of K_{2,n}\n";
    for (const auto& p : points) {
      std::cout << "n=" << p["n"] << "  p_hat=" << p["p_hat"] << "  ci=["
                << p["ci_low"] << ", " << p["ci_high"] << "]  p*n="
                << p["p_times_n"];
      if (p.contains("exact"))
        std::cout << "  exact=" << p["exact"].get<std::string>();
      std::cout << "  sum over pairs=" << p["pair_sum"] << "\n";
      if (p.contains("exact_enumeration"))
        std::cout << "      exhaustive check: " <<
            p["exact_enumeration"].get<std::string>() << "\n";
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"local antimagic labelling toolkit"};
  app.require_subcommand(1);

  CommonOptions label_opts, verify_opts, estimate_opts, oracle_opts, audit_opts,
      chi_opts, bench_opts, k2n_opts;

  auto* label = app.add_subcommand("label", "find a local antimagic labelling");
  add_common(label, label_opts);
  std::string label_out;
  std::uint64_t label_max_rounds = 0;
  label->add_option("--out", label_out, "write the labelling to this file");
  auto* max_rounds_opt =
      label->add_option("--max-rounds", label_max_rounds, "round budget (default 1000*m)");

  auto* verify = app.add_subcommand("verify", "check a labelling file");
  add_common(verify, verify_opts);
  std::string verify_labelling;
  verify->add_option("--labelling", verify_labelling, "labelling file")->required();

  auto* estimate =
      app.add_subcommand("estimate", "Monte Carlo collision and success estimates");
  add_common(estimate, estimate_opts);
  std::uint64_t estimate_trials = 100000;
  unsigned estimate_workers = 1;
  estimate->add_option("--trials", estimate_trials, "trial count");
  estimate->add_option("--workers", estimate_workers, "worker threads");

  auto* oracle = app.add_subcommand("oracle", "exact block-difference probabilities");
  add_common(oracle, oracle_opts, false);
  int oracle_n = 0, oracle_a = 0, oracle_b = 0;
  std::int64_t oracle_t = 0, oracle_mod = 0, oracle_res = 0;
  std::uint64_t oracle_cap = kDefaultPairCap;
  oracle->add_option("--n", oracle_n, "label count")->required();
  oracle->add_option("--a", oracle_a, "first block size")->required();
  oracle->add_option("--b", oracle_b, "second block size")->required();
  auto* oracle_t_opt = oracle->add_option("--t", oracle_t, "single target");
  auto* oracle_mod_opt = oracle->add_option("--mod", oracle_mod, "residue modulus");
  auto* oracle_res_opt = oracle->add_option("--residue", oracle_res, "single residue");
  oracle->add_option("--cap", oracle_cap, "subset pair cap");

  auto* audit = app.add_subcommand("audit", "exact audit of all probability bounds");
  add_common(audit, audit_opts, false, false);
  int audit_n_max = 10;
  std::vector<std::int64_t> audit_k_set;
  std::uint64_t audit_cap = kDefaultPairCap;
  audit->add_option("--n-max", audit_n_max, "largest n to audit");
  audit->add_option("--k", audit_k_set, "offsets to audit (repeatable)");
  audit->add_option("--cap", audit_cap, "subset pair cap");

  auto* chi = app.add_subcommand("chi-la", "exhaustive local antimagic chromatic number");
  add_common(chi, chi_opts);
  std::size_t chi_m_cap = 9;
  chi->add_option("--m-cap", chi_m_cap, "largest edge count to exhaust (max 11)");

  auto* bench = app.add_subcommand("bench", "Las Vegas round statistics over a sweep");
  add_common(bench, bench_opts, false);
  std::vector<std::string> bench_specs;
  std::uint64_t bench_repeats = 50;
  bench->add_option("--graph", bench_specs, "graph spec (repeatable)");
  bench->add_option("--repeats", bench_repeats, "runs per graph");

  auto* k2n = app.add_subcommand("k2n", "distance-2 collision scaling on K_{2,n}");
  add_common(k2n, k2n_opts, false, false);  // the experiment labels from 1
  std::vector<int> k2n_n_list;
  std::uint64_t k2n_trials = 100000;
  unsigned k2n_workers = 1;
  k2n->add_option("--n", k2n_n_list, "part sizes to test (repeatable)");
  k2n->add_option("--trials", k2n_trials, "trials per point");
  k2n->add_option("--workers", k2n_workers, "worker threads");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);  // prints help or the error message
    return code == 0 ? 0 : 1;
  }

  try {
    if (label->parsed())
      return cmd_label(label_opts, label_out,
                       max_rounds_opt->count()
                           ? std::optional<std::uint64_t>(label_max_rounds)
                           : std::nullopt);
    if (verify->parsed()) return cmd_verify(verify_opts, verify_labelling);
    if (estimate->parsed())
      return cmd_estimate(estimate_opts, estimate_trials, estimate_workers);
    if (oracle->parsed())
      return cmd_oracle(oracle_opts, oracle_n, oracle_a, oracle_b,
                        oracle_t_opt->count() ? std::optional<std::int64_t>(oracle_t)
                                              : std::nullopt,
                        oracle_mod_opt->count() ? std::optional<std::int64_t>(oracle_mod)
                                                : std::nullopt,
                        oracle_res_opt->count() ? std::optional<std::int64_t>(oracle_res)
                                                : std::nullopt,
                        oracle_cap);
    if (audit->parsed()) return cmd_audit(audit_opts, audit_n_max, audit_k_set, audit_cap);
    if (chi->parsed()) return cmd_chi_la(chi_opts, chi_m_cap);
    if (bench->parsed()) return cmd_bench(bench_opts, bench_specs, bench_repeats);
    if (k2n->parsed()) return cmd_k2n(k2n_opts, k2n_n_list, k2n_trials, k2n_workers);
  } catch (const NotLabellableError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const BudgetExhaustedError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::logic_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
