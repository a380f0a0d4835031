#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"

namespace fs = std::filesystem;
using diffgraph::cli::run;

namespace {

const fs::path kSource = DIFFGRAPH_SOURCE_DIR;

struct Result {
  int status;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int status = run(args, out, err);
  return {status, out.str(), err.str()};
}

std::string graph(const char* name) { return (kSource / "graphs" / name).string(); }

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("diffgraph_cli_" + std::to_string(std::random_device{}()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST_CASE("check-total on the single-changed-exposure graph succeeds") {
  const auto r = invoke({"check-total", "--graph", graph("fig1h.dg"), "--exposure", "X", "--outcome", "Y",
                         "--shared-order"});
  CHECK(r.status == 0);
  CHECK(r.out.find("adjust for {W1}") != std::string::npos);
  CHECK(r.out.find("A.2") != std::string::npos);
}

TEST_CASE("check-direct on the same graph exits with the not-identifiable status") {
  const auto r = invoke({"check-direct", "--graph", graph("fig1h.dg"), "--exposure", "X", "--outcome", "Y",
                         "--shared-order"});
  CHECK(r.status == 2);
  CHECK(r.out.find("not identifiable") != std::string::npos);
}

TEST_CASE("JSON verdicts use the fixed key names") {
  const auto r = invoke({"check-direct", "--graph", graph("fig1m.dg"), "--exposure", "X", "--outcome", "Y",
                         "--shared-order", "--json"});
  REQUIRE(r.status == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["kind"] == "AdjustmentIdentifiable");
  CHECK(j["condition"] == "C.2");
  CHECK(j["adjustment_set"] == nlohmann::json::array({"W1", "W2"}));
  CHECK(j["formula"] == "r_{Y,X.{W1,W2}}");
}

TEST_CASE("figures output matches the golden file byte for byte") {
  const auto first = invoke({"figures"});
  const auto second = invoke({"figures"});
  CHECK(first.status == 0);
  CHECK(first.out == second.out);
  CHECK(first.out == slurp(kSource / "tests" / "golden" / "figures.txt"));
}

TEST_CASE("oracle commands print witnesses") {
  const auto r = invoke({"oracle-direct", "--graph", graph("fig1h.dg"), "--exposure", "X", "--outcome", "Y",
                         "--shared-order", "--json"});
  CHECK(r.status == 2);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["kind"] == "NotIdentifiable");
  CHECK(j["witness"].size() >= 1);

  const auto ok = invoke({"oracle-total", "--graph", graph("fig1h.dg"), "--exposure", "X", "--outcome", "Y",
                          "--shared-order"});
  CHECK(ok.status == 0);
}

TEST_CASE("usage, file and parse errors exit with status 1") {
  CHECK(invoke({}).status == 1);
  CHECK(invoke({"no-such-command"}).status == 1);
  CHECK(invoke({"check-total", "--graph", graph("fig1h.dg")}).status == 1);
  CHECK(invoke({"check-total", "--graph", "/nonexistent.dg", "--exposure", "X", "--outcome", "Y"}).status == 1);
  CHECK(invoke({"check-total", "--graph", graph("fig1h.dg"), "--exposure", "X", "--outcome", "Nope"}).status == 1);
  CHECK(invoke({"check-total", "--graph", graph("fig2c.dg"), "--exposure", "X", "--outcome", "Y",
                "--shared-order"})
            .status == 1);

  TempDir tmp;
  const auto bad = tmp.path / "bad.dg";
  std::ofstream(bad) << "X -> Y\nX => W\n";
  const auto r = invoke({"check-total", "--graph", bad.string(), "--exposure", "X", "--outcome", "Y"});
  CHECK(r.status == 1);
  CHECK(r.err.find("line 2") != std::string::npos);
}

TEST_CASE("help exits cleanly") { CHECK(invoke({"--help"}).status == 0); }

TEST_CASE("simulate then estimate a direct change") {
  TempDir tmp;
  const auto sim = invoke({"simulate", "--graph", graph("fig1m.dg"), "--shared-order", "--seed", "3", "--n",
                           "20000", "--out-dir", tmp.path.string()});
  REQUIRE(sim.status == 0);
  REQUIRE(fs::exists(tmp.path / "population1.csv"));
  REQUIRE(fs::exists(tmp.path / "population2.csv"));
  const auto manifest = nlohmann::json::parse(slurp(tmp.path / "manifest.json"));
  CHECK(manifest["seed"] == 3);
  CHECK(manifest["rows"] == 20000);

  const auto again = invoke({"simulate", "--graph", graph("fig1m.dg"), "--shared-order", "--seed", "3", "--n",
                             "20000", "--out-dir", (tmp.path / "again").string()});
  REQUIRE(again.status == 0);
  CHECK(slurp(tmp.path / "population1.csv") == slurp(tmp.path / "again" / "population1.csv"));

  const auto est = invoke({"estimate-direct", "--graph", graph("fig1m.dg"), "--exposure", "X", "--outcome", "Y",
                           "--shared-order", "--continuous", "--data1", (tmp.path / "population1.csv").string(),
                           "--json"});
  CHECK(est.status == 0);
  CHECK(nlohmann::json::parse(est.out)["estimate"].is_number());

  const auto change = invoke({"change", "--graph", graph("fig1m.dg"), "--exposure", "X", "--outcome", "Y",
                              "--shared-order", "--continuous", "--data1", (tmp.path / "population1.csv").string(),
                              "--data2", (tmp.path / "population2.csv").string(), "--json"});
  CHECK(change.status == 0);
  const auto report = nlohmann::json::parse(change.out)["report"];
  CHECK(report["quantity"] == "direct");
  CHECK(report["change"].get<double>() ==
        doctest::Approx(report["population1"].get<double>() - report["population2"].get<double>()));

  const auto refused = invoke({"change", "--graph", graph("fig1m.dg"), "--exposure", "X", "--outcome", "Y",
                               "--shared-order", "--discrete", "--data1", (tmp.path / "population1.csv").string(),
                               "--data2", (tmp.path / "population2.csv").string()});
  CHECK(refused.status == 2);  // the total effect is not identifiable on this graph
}

TEST_CASE("discrete estimation from CSV") {
  TempDir tmp;
  const auto csv = tmp.path / "d.csv";
  std::ofstream(csv) << "X,Y,W1,W2\n0,0,0,0\n0,1,0,1\n1,1,0,0\n1,0,1,1\n0,1,1,0\n1,1,1,1\n";
  const auto r = invoke({"estimate-total", "--graph", graph("fig1h.dg"), "--exposure", "X", "--outcome", "Y",
                         "--shared-order", "--discrete", "--data1", csv.string(), "--json"});
  CHECK(r.status == 0);
  const auto j = nlohmann::json::parse(r.out);
  for (const auto& row : j["estimate"]["probabilities"]) {
    CHECK(row[0].get<double>() + row[1].get<double>() == doctest::Approx(1.0));
  }

  const auto sparse = tmp.path / "sparse.csv";
  std::ofstream(sparse) << "X,Y,W1,W2\n0,0,0,0\n1,1,0,0\n0,1,1,0\n";
  const auto fail = invoke({"estimate-total", "--graph", graph("fig1h.dg"), "--exposure", "X", "--outcome", "Y",
                            "--shared-order", "--discrete", "--data1", sparse.string()});
  CHECK(fail.status == 1);
  CHECK(fail.err.find("positivity") != std::string::npos);
  const auto smooth = invoke({"estimate-total", "--graph", graph("fig1h.dg"), "--exposure", "X", "--outcome", "Y",
                              "--shared-order", "--discrete", "--laplace", "1", "--data1", sparse.string()});
  CHECK(smooth.status == 0);
}
