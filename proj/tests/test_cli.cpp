#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "corecut/core.hpp"
#include "corecut/graph.hpp"
#include "corecut/solver.hpp"

namespace fs = std::filesystem;
using Json = nlohmann::json;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

const std::string& cli_path() {
  static const std::string path = [] {
    const char* env = std::getenv("CORECUT_CLI_BIN");
    REQUIRE_MESSAGE(env != nullptr, "CORECUT_CLI_BIN must point at the CLI binary");
    return std::string(env);
  }();
  return path;
}

fs::path temp_dir() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / "corecut_cli_test";
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE_MESSAGE(in.good(), "missing file: ", path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void spit(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
}

RunResult run(const std::string& args) {
  const fs::path out_file = temp_dir() / "stdout.txt";
  const std::string command =
      "KCM_LOG=quiet " + cli_path() + " " + args + " > " + out_file.string() + " 2>/dev/null";
  const int status = std::system(command.c_str());
  RunResult result;
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  result.out = slurp(out_file);
  return result;
}

}  // namespace

TEST_CASE("decompose reports the triangle summary") {
  const fs::path input = temp_dir() / "triangle.txt";
  spit(input, "0 1\n1 2\n2 0\n");
  const RunResult r = run("decompose --input " + input.string());
  REQUIRE(r.exit_code == 0);
  const Json j = Json::parse(r.out);
  CHECK(j["n"] == 3);
  CHECK(j["m"] == 3);
  CHECK(j["k_max"] == 2);
  CHECK(j["config"]["command"] == "decompose");
}

TEST_CASE("decompose of an empty file succeeds with zeros") {
  const fs::path input = temp_dir() / "empty.txt";
  spit(input, "");
  const RunResult r = run("decompose --input " + input.string());
  REQUIRE(r.exit_code == 0);
  const Json j = Json::parse(r.out);
  CHECK(j["n"] == 0);
  CHECK(j["m"] == 0);
  CHECK(j["k_max"] == 0);
}

TEST_CASE("decompose writes a CSV of original ids and core numbers") {
  const fs::path input = temp_dir() / "k4.txt";
  spit(input, "10 20\n10 30\n10 40\n20 30\n20 40\n30 40\n");
  const fs::path base = temp_dir() / "k4_out";
  const RunResult r = run("decompose --input " + input.string() + " --out " + base.string());
  REQUIRE(r.exit_code == 0);
  CHECK(slurp(base.string() + ".csv") ==
        "node,core_number\n10,3\n20,3\n30,3\n40,3\n");
  const Json j = Json::parse(slurp(base.string() + ".json"));
  CHECK(j["k_max"] == 3);
}

TEST_CASE("missing input fails with a nonzero exit") {
  const RunResult r = run("decompose --input " + (temp_dir() / "nope.txt").string());
  CHECK(r.exit_code != 0);
}

TEST_CASE("minimize artifacts are byte-identical across reruns and thread counts") {
  const fs::path input = temp_dir() / "grid.txt";
  std::string edges;
  // 6x6 torus grid: a solid 4-core-free 2-core playground.
  for (int r = 0; r < 6; ++r) {
    for (int c = 0; c < 6; ++c) {
      const int v = r * 6 + c;
      edges += std::to_string(v) + " " + std::to_string(r * 6 + (c + 1) % 6) + "\n";
      edges += std::to_string(v) + " " + std::to_string(((r + 1) % 6) * 6 + c) + "\n";
    }
  }
  spit(input, edges);
  const std::string base =
      "minimize --input " + input.string() + " --k 3 --b 4 --algo sv --seed 7 --epsilon 0.2";
  const RunResult a = run(base + " --threads 1");
  const RunResult b = run(base + " --threads 1");
  const RunResult c = run(base + " --threads 3");
  REQUIRE(a.exit_code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out == c.out);
  const Json j = Json::parse(a.out);
  CHECK(j["algorithm"] == "SV");
  CHECK(j["config"]["seed"] == 7);
}

TEST_CASE("opt dominates sv on the same instance") {
  const fs::path input = temp_dir() / "quads.txt";
  spit(input,
       "0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n4 5\n4 6\n4 7\n5 6\n5 7\n6 7\n2 4\n3 5\n");
  const std::string tail = " --input " + input.string() + " --k 3 --b 2 --seed 3";
  const RunResult opt = run("minimize --algo opt" + tail);
  const RunResult sv = run("minimize --algo sv" + tail);
  REQUIRE(opt.exit_code == 0);
  REQUIRE(sv.exit_code == 0);
  const auto opt_objective = Json::parse(opt.out)["objective"].get<std::int64_t>();
  const auto sv_objective = Json::parse(sv.out)["objective"].get<std::int64_t>();
  CHECK(opt_objective >= sv_objective);
  CHECK(opt_objective == 8);
}

TEST_CASE("sv derives the documented sample count for 100 candidates") {
  // A 100-cycle: its 2-core holds exactly 100 candidate edges.
  std::string edges;
  for (int v = 0; v < 100; ++v) {
    edges += std::to_string(v) + " " + std::to_string((v + 1) % 100) + "\n";
  }
  const fs::path input = temp_dir() / "cycle100.txt";
  spit(input, edges);
  const std::string tail = " --input " + input.string() + " --k 2 --b 1 --algo sv";
  const RunResult derived = run("minimize" + tail + " --epsilon 0.05 --ell 1");
  REQUIRE(derived.exit_code == 0);
  CHECK(Json::parse(derived.out)["s"] == 1843);
  const RunResult overridden = run("minimize" + tail + " --samples 9");
  CHECK(Json::parse(overridden.out)["s"] == 9);
}

TEST_CASE("an empty k-core minimizes to a warned zero solution") {
  const fs::path input = temp_dir() / "star.txt";
  spit(input, "0 1\n0 2\n0 3\n0 4\n");
  const RunResult r = run("minimize --input " + input.string() + " --k 2 --b 1 --algo gc");
  REQUIRE(r.exit_code == 0);
  const Json j = Json::parse(r.out);
  CHECK(j["objective"] == 0);
  CHECK(j["warning"] == "k-core is empty");
  CHECK(j["edges"].empty());
}

TEST_CASE("candidate files restrict the search and validate membership") {
  const fs::path input = temp_dir() / "quads2.txt";
  spit(input,
       "0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n4 5\n4 6\n4 7\n5 6\n5 7\n6 7\n2 4\n3 5\n");
  const fs::path good = temp_dir() / "cand_good.txt";
  spit(good, "6 7\n");
  const RunResult r = run("minimize --input " + input.string() +
                          " --k 3 --b 1 --algo gc --candidates " + good.string());
  REQUIRE(r.exit_code == 0);
  const Json j = Json::parse(r.out);
  CHECK(j["edges"].size() == 1);
  CHECK(j["edges"][0][0] == 6);
  CHECK(j["edges"][0][1] == 7);

  const fs::path bad = temp_dir() / "cand_bad.txt";
  spit(bad, "0 7\n");
  const RunResult rejected = run("minimize --input " + input.string() +
                                 " --k 3 --b 1 --algo gc --candidates " + bad.string());
  CHECK(rejected.exit_code != 0);
}

TEST_CASE("profile emits the CSV grid with telescoping deltas") {
  const fs::path input = temp_dir() / "quads3.txt";
  spit(input,
       "0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n4 5\n4 6\n4 7\n5 6\n5 7\n6 7\n2 4\n3 5\n");
  const fs::path base = temp_dir() / "profile_out";
  const std::string cmd = "profile --input " + input.string() +
                          " --k 2,3 --b 0:2 --algo gc --out " + base.string();
  const RunResult r = run(cmd);
  REQUIRE(r.exit_code == 0);
  const std::string csv = slurp(base.string() + ".csv");
  CHECK(csv.substr(0, 24) == "k,b,dn_percent,delta_dn\n");
  const Json j = Json::parse(slurp(base.string() + ".json"));
  REQUIRE(j["cells"].size() == 2);
  for (std::size_t row = 0; row < 2; ++row) {
    double sum = 0.0;
    for (const auto& d : j["deltas"][row]) sum += d.get<double>();
    CHECK(sum == doctest::Approx(j["cells"][row].back().get<double>()));
  }
  // Byte-determinism of the artifact files.
  const RunResult again = run(cmd);
  REQUIRE(again.exit_code == 0);
  CHECK(slurp(base.string() + ".csv") == csv);
}

TEST_CASE("profile with a single k and budget 0 is a zero row") {
  const fs::path input = temp_dir() / "tri2.txt";
  spit(input, "0 1\n1 2\n2 0\n");
  const fs::path base = temp_dir() / "profile_zero";
  const RunResult r =
      run("profile --input " + input.string() + " --k 2 --b 0 --algo rd --out " + base.string());
  REQUIRE(r.exit_code == 0);
  CHECK(slurp(base.string() + ".csv") == "k,b,dn_percent,delta_dn\n2,0,0.0,0.0\n");
}

TEST_CASE("gadget generation round-trips through the parser") {
  const fs::path instance = temp_dir() / "cover.json";
  spit(instance, R"({"type": "set-cover", "n_items": 4,
                     "subsets": [[1], [1, 2, 4], [3]]})");
  const fs::path base = temp_dir() / "cover_gadget";
  const RunResult r =
      run("gadget --input " + instance.string() + " --out " + base.string());
  REQUIRE(r.exit_code == 0);

  const auto [g, report] = corecut::parse_edge_list(slurp(base.string() + ".edges"));
  const corecut::CoreDecomposition cores = corecut::kcore_decompose(g);
  for (int c : cores.core_number) CHECK(c >= 3);

  const Json sidecar = Json::parse(slurp(base.string() + ".json"));
  CHECK(sidecar["gamma"].size() == 3);
  CHECK(sidecar["type"] == "set-cover");
  CHECK(sidecar["roles"].size() == g.node_count());
}

TEST_CASE("invalid gadget instances exit nonzero") {
  const fs::path instance = temp_dir() / "invalid.json";
  spit(instance, R"({"type": "set-cover", "n_items": 4, "subsets": [[1], [2], [3]]})");
  const RunResult r = run("gadget --input " + instance.string() + " --out " +
                          (temp_dir() / "invalid_gadget").string());
  CHECK(r.exit_code != 0);
}

TEST_CASE("sk gadget instances build through the CLI") {
  const fs::path instance = temp_dir() / "sk.json";
  spit(instance, R"({"type": "sk", "n_items": 3, "subsets": [[1, 2], [1, 3], [2]]})");
  const fs::path base = temp_dir() / "sk_gadget";
  const RunResult r = run("gadget --input " + instance.string() + " --out " + base.string());
  REQUIRE(r.exit_code == 0);
  const auto [g, report] = corecut::parse_edge_list(slurp(base.string() + ".edges"));
  const corecut::CoreDecomposition cores = corecut::kcore_decompose(g);
  for (int c : cores.core_number) CHECK(c >= 3);
  const Json sidecar = Json::parse(slurp(base.string() + ".json"));
  CHECK(sidecar["gamma"].size() == 3);
}
