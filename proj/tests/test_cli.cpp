#include "nilext/catalog.hpp"
#include "nilext_cli/cli.hpp"

#include <doctest.h>
#include <nlohmann/json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = nilext::cli::dispatch(args, out, err);
  return {code, out.str(), err.str()};
}

json run_json(std::vector<std::string> args) {
  args.insert(args.begin(), {"--format", "json"});
  Run r = run(args);
  REQUIRE(r.code == nilext::cli::kOk);
  return json::parse(r.out);
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("nilext_cli_" + name);
}

}  // namespace

TEST_CASE("info and der on catalog entries") {
  json j = run_json({"info", "filiform:4"});
  CHECK(j["values"]["lower_central"] == json::array({4, 2, 1, 0}));
  CHECK(j["inputs"][0] == "catalog:filiform:4");
  CHECK(j["ok"] == true);

  json d = run_json({"der", "heisenberg:3"});
  CHECK(d["values"]["dim"] == 6);
  CHECK(d["values"]["basis_matrices"].size() == 6);
  CHECK(d["certificates"]["basis_are_derivations"] == true);
}

TEST_CASE("nilradical of r2") {
  json j = run_json({"nilradical", "r2"});
  CHECK(j["values"]["nilradical"]["dim"] == 1);
  CHECK(j["values"]["nilradical"]["basis"][0] == "y");
}

TEST_CASE("JSON output is byte-identical across runs") {
  for (std::vector<std::string> args : {std::vector<std::string>{"cartan", "sl2_natural"},
                                        {"torus", "heisenberg:5"},
                                        {"fingerprint", "so2_torus_extension"},
                                        {"extend", "--standard", "heisenberg:3"}}) {
    args.insert(args.begin(), {"--format", "json", "--seed", "7"});
    Run a = run(args), b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.find("time") == std::string::npos);
  }
}

TEST_CASE("text output") {
  Run r = run({"info", "sl2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("[h,e]=2*e") != std::string::npos);
  CHECK(r.out.find("time: ") != std::string::npos);
  CHECK(r.out.find("ok: true") != std::string::npos);
}

TEST_CASE("verify subcommands") {
  json rb = run_json({"verify", "rank-bound", "so2_torus_extension"});
  CHECK(rb["values"]["toric_rank"] == 2);
  CHECK(rb["values"]["generators"] == 2);
  json t = run_json({"verify", "togo", "k", "heisenberg:3"});
  CHECK(t["values"]["der_sum"] == 10);
  CHECK(t["certificates"]["decomposition"] == true);
}

TEST_CASE("files as sources and --output") {
  auto entry = temp_path("h5.json");
  nilext::store(nilext::get_by_spec("heisenberg:5"), entry);
  json j = run_json({"info", entry.string()});
  CHECK(j["values"]["dim"] == 5);
  CHECK(j["inputs"][0].get<std::string>().rfind("file:fnv1a64:", 0) == 0);

  auto out = temp_path("report.json");
  std::filesystem::remove(out);
  Run r = run({"--format", "json", "--output", out.string(), "split", "r2"});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream f(out);
  json s = json::parse(f);
  CHECK(s["values"]["splitting_dim"] == 2);
}

TEST_CASE("extend --by a matrix file") {
  auto mats = temp_path("torus.json");
  std::ofstream(mats) << R"({"matrices": [[["1","0","0"],["0","0","0"],["0","0","1"]]]})";
  json j = run_json({"extend", "--by", mats.string(), "heisenberg:3"});
  CHECK(j["values"]["dim"] == 4);
  CHECK(j["certificates"]["nilradical_matches"] == true);

  auto bad = temp_path("bad.json");
  std::ofstream(bad) << R"({"matrices": [[["1","0","0"],["0","1","0"],["0","0","1"]]]})";
  CHECK(run({"extend", "--by", bad.string(), "heisenberg:3"}).code == nilext::cli::kInputError);
}

TEST_CASE("input errors exit with 2") {
  CHECK(run({"frobnicate"}).code == nilext::cli::kInputError);
  CHECK(run({"info"}).code == nilext::cli::kInputError);
  CHECK(run({"info", "no_such_entry"}).code == nilext::cli::kInputError);
  CHECK(run({"info", "heisenberg:4"}).code == nilext::cli::kInputError);
  CHECK(run({"info", "/nonexistent/file.json"}).code == nilext::cli::kInputError);
  CHECK(run({"--format", "yaml", "info", "sl2"}).code == nilext::cli::kInputError);
  CHECK(run({"extend", "heisenberg:3"}).code == nilext::cli::kInputError);
  CHECK(run({"split", "sl2"}).code == nilext::cli::kInputError);

  auto broken = temp_path("broken.json");
  std::ofstream(broken) << "{\"name\": \"x\",\n \"dim\": }";
  Run r = run({"info", broken.string()});
  CHECK(r.code == nilext::cli::kInputError);
  CHECK(r.err.find("line 2") != std::string::npos);
}

TEST_CASE("help exits cleanly") {
  Run r = run({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("demo") != std::string::npos);
}
