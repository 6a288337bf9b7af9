// corecut: k-core decomposition and budgeted k-core minimization toolkit.
//
// Subcommands: decompose, minimize, profile, gadget. All randomness flows
// from --seed, so any invocation repeated with the same flags produces
// byte-identical artifacts regardless of --threads.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "corecut/core.hpp"
#include "corecut/gadget.hpp"
#include "corecut/graph.hpp"
#include "corecut/oracle.hpp"
#include "corecut/profile.hpp"
#include "corecut/serialize.hpp"
#include "corecut/solver.hpp"

namespace {

using corecut::Json;

int log_level() {
  static const int level = [] {
    const char* env = std::getenv("KCM_LOG");
    if (env == nullptr) return 2;
    const std::string v(env);
    if (v == "quiet") return 0;
    if (v == "error") return 1;
    if (v == "info") return 2;
    if (v == "debug") return 3;
    return 2;
  }();
  return level;
}

void log_info(const std::string& message) {
  if (log_level() >= 2) std::cerr << "[corecut] " << message << "\n";
}

class PhaseTimer {
 public:
  explicit PhaseTimer(std::string name) : name_(std::move(name)), start_(Clock::now()) {}
  ~PhaseTimer() {
    const double ms = std::chrono::duration<double, std::milli>(Clock::now() - start_).count();
    log_info(name_ + ": " + std::to_string(ms) + " ms");
  }

 private:
  using Clock = std::chrono::steady_clock;
  std::string name_;
  Clock::time_point start_;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << content;
  if (!out) throw std::runtime_error("failed while writing '" + path + "'");
}

// Budget/core lists for `profile`: "5", "2,4,6", or "lo:hi[:step]" inclusive.
std::vector<std::int64_t> parse_int_list(const std::string& text) {
  std::vector<std::int64_t> out;
  if (text.find(':') != std::string::npos) {
    std::int64_t lo = 0, hi = 0, step = 1;
    char c1 = 0, c2 = 0;
    std::istringstream in(text);
    if (!(in >> lo >> c1 >> hi) || c1 != ':') {
      throw std::runtime_error("cannot parse range '" + text + "'");
    }
    if (in >> c2 >> step) {
      if (c2 != ':' || step < 1) throw std::runtime_error("cannot parse range '" + text + "'");
    }
    for (std::int64_t v = lo; v <= hi; v += step) out.push_back(v);
    return out;
  }
  std::istringstream in(text);
  std::string token;
  while (std::getline(in, token, ',')) {
    if (token.empty()) continue;
    out.push_back(std::stoll(token));
  }
  if (out.empty()) throw std::runtime_error("empty list '" + text + "'");
  return out;
}

struct CommonOptions {
  std::string input;
  std::string out;
  std::string format = "json";
  int k = 0;
  std::int64_t b = 0;
  std::string algorithm;
  double epsilon = 0.05;
  int ell = 1;
  std::int64_t samples = 0;
  std::uint64_t seed = 42;
  bool prune = true;
  std::string candidates;
  int threads = 0;
  bool timings = false;
};

Json config_json(const std::string& command, const CommonOptions& opt, bool solver_fields) {
  Json j;
  j["command"] = command;
  j["input"] = opt.input;
  if (solver_fields) {
    j["k"] = opt.k;
    j["b"] = opt.b;
    j["algorithm"] = opt.algorithm;
    j["epsilon"] = opt.epsilon;
    j["ell"] = opt.ell;
    j["samples"] = opt.samples;
    j["seed"] = opt.seed;
    j["prune"] = opt.prune;
    j["candidates"] = opt.candidates.empty() ? Json(nullptr) : Json(opt.candidates);
  }
  j["out"] = opt.out.empty() ? Json(nullptr) : Json(opt.out);
  j["format"] = opt.format;
  return j;
}

int resolve_threads(int requested) {
  if (requested > 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

// Candidate edges from a "u v" per line file in original identifiers.
corecut::CandidateSet load_candidates(const corecut::Graph& g,
                                      const corecut::CoreDecomposition& cores, int k,
                                      const std::string& path) {
  const auto [pair_graph, report] = corecut::parse_edge_list(read_file(path));
  std::vector<corecut::Edge> pairs;
  for (const corecut::Edge& e : pair_graph.edges()) {
    const auto u = g.find_node(pair_graph.original_id(e.u));
    const auto v = g.find_node(pair_graph.original_id(e.v));
    if (!u || !v) {
      throw std::runtime_error("candidate edge (" + std::to_string(pair_graph.original_id(e.u)) +
                               ", " + std::to_string(pair_graph.original_id(e.v)) +
                               ") references a node that is not in the graph");
    }
    pairs.push_back(corecut::make_edge(*u, *v));
  }
  return corecut::CandidateSet::from_pairs(g, cores, k, pairs);
}

void emit(const CommonOptions& opt, const std::string& json_text, const std::string& csv_text) {
  if (!opt.out.empty()) {
    write_file(opt.out + ".json", json_text);
    if (!csv_text.empty()) write_file(opt.out + ".csv", csv_text);
    log_info("wrote " + opt.out + ".json" + (csv_text.empty() ? "" : " and " + opt.out + ".csv"));
  } else {
    std::cout << (opt.format == "csv" && !csv_text.empty() ? csv_text : json_text);
  }
}

int cmd_decompose(const CommonOptions& opt) {
  corecut::Graph g;
  {
    PhaseTimer t("parse");
    auto [graph, report] = corecut::parse_edge_list(read_file(opt.input));
    g = std::move(graph);
    if (report.duplicate_edges > 0 || report.self_loops > 0) {
      log_info("dropped " + std::to_string(report.duplicate_edges) + " duplicate edge(s) and " +
               std::to_string(report.self_loops) + " self-loop(s)");
    }
  }
  corecut::CoreDecomposition cores;
  {
    PhaseTimer t("decompose");
    cores = corecut::kcore_decompose(g);
  }
  Json summary = corecut::decomposition_summary(g, cores);
  summary["config"] = config_json("decompose", opt, false);
  emit(opt, summary.dump(2) + "\n", corecut::decomposition_to_csv(g, cores));
  return 0;
}

int cmd_minimize(const CommonOptions& opt) {
  if (opt.k < 1) throw std::runtime_error("--k must be >= 1");
  if (opt.b < 1) throw std::runtime_error("--b must be >= 1");

  corecut::Graph g;
  {
    PhaseTimer t("parse");
    g = corecut::parse_edge_list(read_file(opt.input)).first;
  }
  corecut::CoreDecomposition cores;
  {
    PhaseTimer t("decompose");
    cores = corecut::kcore_decompose(g);
  }
  const corecut::CandidateSet candidates =
      opt.candidates.empty()
          ? corecut::CandidateSet::all_core_edges(g, cores, opt.k)
          : load_candidates(g, cores, opt.k, opt.candidates);

  corecut::Solution solution;
  {
    PhaseTimer t("solve");
    const int threads = resolve_threads(opt.threads);
    if (opt.algorithm == "sv") {
      corecut::SamplingPlan plan;
      plan.epsilon = opt.epsilon;
      plan.ell = opt.ell;
      plan.samples = opt.samples;
      plan.seed = opt.seed;
      solution = corecut::shapley_cut(g, opt.k, opt.b, candidates, plan, opt.prune, threads);
    } else if (opt.algorithm == "gc") {
      solution = corecut::greedy_cut(g, opt.k, opt.b, candidates, opt.prune);
    } else if (opt.algorithm == "ld") {
      solution = corecut::baseline_ld(g, opt.k, opt.b, candidates);
    } else if (opt.algorithm == "jd") {
      solution = corecut::baseline_jd(g, opt.k, opt.b, candidates);
    } else if (opt.algorithm == "rd") {
      solution = corecut::baseline_rd(g, opt.k, opt.b, candidates, opt.seed);
    } else if (opt.algorithm == "opt") {
      solution = corecut::exact_kcm(g, opt.k, opt.b, candidates);
    } else if (opt.algorithm == "exact-sv") {
      solution = corecut::exact_shapley_cut(g, opt.k, opt.b, candidates);
    } else {
      throw std::runtime_error("unknown algorithm '" + opt.algorithm + "'");
    }
  }

  Json j = corecut::solution_to_json(solution, g, opt.timings);
  j["config"] = config_json("minimize", opt, true);
  emit(opt, j.dump(2) + "\n",
       opt.format == "csv" || !opt.out.empty() ? corecut::solution_to_csv(solution, g) : "");
  return 0;
}

int cmd_profile(const CommonOptions& opt, const std::string& k_list, const std::string& b_list) {
  corecut::Graph g;
  {
    PhaseTimer t("parse");
    g = corecut::parse_edge_list(read_file(opt.input)).first;
  }
  std::vector<int> k_values;
  for (std::int64_t k : parse_int_list(k_list)) k_values.push_back(static_cast<int>(k));
  const std::vector<std::int64_t> b_values = parse_int_list(b_list);

  corecut::ProfileParams params;
  params.seed = opt.seed;
  params.epsilon = opt.epsilon;
  params.ell = opt.ell;
  params.samples = opt.samples;
  params.prune = opt.prune;
  params.threads = resolve_threads(opt.threads);

  corecut::ProfileGrid grid;
  {
    PhaseTimer t("profile");
    grid = corecut::resilience_profile(g, k_values, b_values,
                                       corecut::parse_profile_algorithm(opt.algorithm), params);
  }
  Json j = corecut::profile_to_json(grid);
  j["config"] = config_json("profile", opt, true);
  emit(opt, j.dump(2) + "\n", corecut::profile_to_csv(grid));
  return 0;
}

int cmd_gadget(const CommonOptions& opt) {
  if (opt.out.empty()) throw std::runtime_error("gadget requires --out");
  const Json instance = Json::parse(read_file(opt.input));
  const std::string type = instance.at("type").get<std::string>();

  // Subset contents are 1-based item indices in the instance file.
  std::vector<std::vector<std::int32_t>> subsets;
  for (const auto& s : instance.at("subsets")) {
    std::vector<std::int32_t> subset;
    for (const auto& u : s) subset.push_back(u.get<std::int32_t>() - 1);
    subsets.push_back(std::move(subset));
  }
  const auto n_items = instance.at("n_items").get<std::int32_t>();

  corecut::GadgetGraph gadget;
  if (type == "sk") {
    corecut::SkInstance inst{n_items, std::move(subsets)};
    const auto block = instance.value("x_block_size", 4);
    gadget = corecut::build_sk_gadget(inst, block);
  } else if (type == "set-cover") {
    corecut::ScInstance inst{n_items, std::move(subsets)};
    gadget = corecut::build_setcover_gadget(inst);
  } else {
    throw std::runtime_error("unknown gadget type '" + type + "' (expected sk or set-cover)");
  }

  Json sidecar = corecut::gadget_sidecar(gadget, instance, type);
  sidecar["config"] = config_json("gadget", opt, false);
  write_file(opt.out + ".edges", gadget.graph.to_edge_list());
  write_file(opt.out + ".json", sidecar.dump(2) + "\n");
  log_info("wrote " + opt.out + ".edges and " + opt.out + ".json");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"k-core decomposition and budgeted k-core minimization"};
  app.require_subcommand(1);

  CommonOptions opt;
  std::string k_list, b_list;

  auto* decompose = app.add_subcommand("decompose", "core numbers and k-core sizes");
  decompose->add_option("--input", opt.input, "edge list file")->required();
  decompose->add_option("--out", opt.out, "output path prefix (.csv and .json)");
  decompose->add_option("--format", opt.format, "stdout format: json|csv")
      ->check(CLI::IsMember({"json", "csv"}));

  auto* minimize = app.add_subcommand("minimize", "pick b edges that shrink the k-core most");
  minimize->add_option("--input", opt.input, "edge list file")->required();
  minimize->add_option("--k", opt.k, "core parameter")->required();
  minimize->add_option("--b", opt.b, "edge deletion budget")->required();
  minimize->add_option("--algo", opt.algorithm, "sv|gc|ld|jd|rd|opt|exact-sv")
      ->required()
      ->check(CLI::IsMember({"sv", "gc", "ld", "jd", "rd", "opt", "exact-sv"}));
  minimize->add_option("--epsilon", opt.epsilon, "sampling error (sv)");
  minimize->add_option("--ell", opt.ell, "confidence exponent (sv)");
  minimize->add_option("--samples", opt.samples, "override the derived sample count (sv)");
  minimize->add_option("--seed", opt.seed, "random seed");
  minimize->add_flag("--prune,!--no-prune", opt.prune, "dominance pruning (default on)");
  minimize->add_option("--candidates", opt.candidates, "candidate edge list file");
  minimize->add_option("--threads", opt.threads, "worker threads (0 = hardware)");
  minimize->add_flag("--timings", opt.timings, "include wall_time_ms in the artifact");
  minimize->add_option("--out", opt.out, "output path (.json, plus .csv)");
  minimize->add_option("--format", opt.format, "stdout format: json|csv")
      ->check(CLI::IsMember({"json", "csv"}));

  auto* profile = app.add_subcommand("profile", "DN(%) resilience grid over (k, budget)");
  profile->add_option("--input", opt.input, "edge list file")->required();
  profile->add_option("--k", k_list, "k values: list or lo:hi[:step]")->required();
  profile->add_option("--b", b_list, "budgets: list or lo:hi[:step]")->required();
  profile->add_option("--algo", opt.algorithm, "sv|gc|ld|jd|rd")
      ->required()
      ->check(CLI::IsMember({"sv", "gc", "ld", "jd", "rd"}));
  profile->add_option("--epsilon", opt.epsilon, "sampling error (sv)");
  profile->add_option("--ell", opt.ell, "confidence exponent (sv)");
  profile->add_option("--samples", opt.samples, "override the derived sample count (sv)");
  profile->add_option("--seed", opt.seed, "random seed");
  profile->add_flag("--prune,!--no-prune", opt.prune, "dominance pruning (default on)");
  profile->add_option("--threads", opt.threads, "worker threads (0 = hardware)");
  profile->add_option("--out", opt.out, "output path prefix (.csv and .json)");
  profile->add_option("--format", opt.format, "stdout format: json|csv")
      ->check(CLI::IsMember({"json", "csv"}));

  auto* gadget = app.add_subcommand("gadget", "hardness-reduction test graphs");
  gadget->add_option("--input", opt.input, "instance JSON file")->required();
  gadget->add_option("--out", opt.out, "output path prefix (.edges and .json)")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (decompose->parsed()) return cmd_decompose(opt);
    if (minimize->parsed()) return cmd_minimize(opt);
    if (profile->parsed()) return cmd_profile(opt, k_list, b_list);
    if (gadget->parsed()) return cmd_gadget(opt);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
