#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <sys/wait.h>

#include "kclique/cli.hpp"
#include "kclique/generators.hpp"
#include "kclique/graph.hpp"
#include "kclique/oracle.hpp"

namespace kclique {
namespace {

namespace fs = std::filesystem;
using json = nlohmann::json;

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("kclique_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const Graph& g) {
    const auto path = (dir_ / name).string();
    std::ofstream out(path);
    write_edge_list(g, out);
    return path;
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

TEST_F(CliTest, CountGoldenGraph) {
  const auto file = write("fig.txt", gen::k6_minus_edge());
  const auto r = cli({"count", file, "-k", "5", "--order", "degeneracy"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto doc = json::parse(r.out);
  EXPECT_EQ(doc["count"], 2);
  EXPECT_EQ(doc["order"], "degeneracy");
  EXPECT_EQ(doc["s"], 4);
  EXPECT_TRUE(doc["verified"].is_null());
  for (const char* key : {"k", "n", "m", "recursive_calls", "edge_probes", "intersections",
                          "listed_cliques", "max_depth", "elapsed_ms"})
    EXPECT_TRUE(doc.contains(key)) << key;
}

TEST_F(CliTest, CountEdges) {
  const auto g = gen::gnp(40, 0.2, 5);
  const auto file = write("g.txt", g);
  for (const char* order : {"degeneracy", "approx-degeneracy", "hybrid", "commdeg", "approx-commdeg"}) {
    const auto r = cli({"count", file, "-k", "2", "--order", order});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    EXPECT_EQ(json::parse(r.out)["count"], g.num_edges()) << order;
  }
}

TEST_F(CliTest, VerifyAgainstOracle) {
  const auto g = gen::gnp(20, 0.4, 3);
  const auto file = write("g.txt", g);
  const auto r = cli({"count", file, "-k", "4", "--order", "commdeg", "--verify"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto doc = json::parse(r.out);
  EXPECT_EQ(doc["verified"], true);
  EXPECT_EQ(doc["count"], doc["oracle_count"]);
  EXPECT_EQ(doc["count"], oracle::brute_force_cliques(g, 4).size());
  EXPECT_FALSE(doc["sigma"].is_null());
}

TEST_F(CliTest, VerifyRefusesLargeGraphs) {
  const auto file = write("big.txt", gen::gnp(31, 0.2, 1));
  const auto r = cli({"count", file, "-k", "3", "--verify"});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_NE(r.err.find("--verify"), std::string::npos);
}

TEST_F(CliTest, ListModeWritesOriginalIds) {
  const auto file = path("sparse.txt");
  std::ofstream(file) << "10 20\n20 30\n10 30\n30 40\n";
  const auto out = path("cliques.txt");
  const auto r = cli({"count", file, "-k", "3", "--mode", "list", "-o", out});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  std::ifstream in(out);
  std::stringstream text;
  text << in.rdbuf();
  EXPECT_EQ(text.str(), "10 20 30\n");
  EXPECT_EQ(cli({"count", file, "-k", "3", "--mode", "list"}).code, kExitUsage);
}

TEST_F(CliTest, Stats) {
  auto stats = [&](const Graph& g) {
    const auto r = cli({"stats", write("s.txt", g)});
    EXPECT_EQ(r.code, kExitOk) << r.err;
    return json::parse(r.out);
  };
  const auto q3 = stats(gen::hypercube(3));
  EXPECT_EQ(q3["n"], 8);
  EXPECT_EQ(q3["m"], 12);
  EXPECT_EQ(q3["T"], 0);
  EXPECT_EQ(q3["s"], 3);
  EXPECT_EQ(q3["sigma"], 0);
  const auto k6 = stats(gen::complete(6));
  EXPECT_EQ(k6["T"], 20);
  EXPECT_EQ(k6["s"], 5);
  EXPECT_EQ(k6["sigma"], 4);
  EXPECT_EQ(k6["max_community"], 4);
  const auto fig = stats(gen::k6_minus_edge());
  EXPECT_EQ(fig["T"], 16);
  EXPECT_EQ(fig["s"], 4);
  EXPECT_EQ(fig["sigma"], 3);
}

std::vector<std::vector<std::string>> csv_rows(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::istringstream cells_in(line);
    std::string cell;
    while (std::getline(cells_in, cell, ',')) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

TEST_F(CliTest, BenchRows) {
  const auto file = write("g.txt", gen::gnp(30, 0.4, 2));
  const auto r = cli({"bench", file, "-k", "4,5", "--threads", "1,2", "--repetitions", "1"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto rows = csv_rows(r.out);
  ASSERT_EQ(rows.size(), 5u);
  EXPECT_EQ(rows[0], (std::vector<std::string>{"graph", "order", "k", "threads", "count",
                                               "elapsed_ms", "recursive_calls", "probes",
                                               "prune"}));
  EXPECT_EQ(rows[1][2], "4");
  EXPECT_EQ(rows[1][4], rows[2][4]);
  EXPECT_EQ(rows[3][2], "5");
  EXPECT_EQ(rows[3][4], rows[4][4]);
}

TEST_F(CliTest, BenchPruningReducesProbes) {
  const auto file = write("g.txt", gen::gnp(30, 0.5, 6));
  const auto csv = path("bench.csv");
  const auto r =
      cli({"bench", file, "-k", "6", "--prune", "both", "--repetitions", "2", "-o", csv});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  std::ifstream in(csv);
  std::stringstream text;
  text << in.rdbuf();
  const auto rows = csv_rows(text.str());
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_EQ(rows[1][8], "on");
  EXPECT_EQ(rows[2][8], "off");
  EXPECT_EQ(rows[1][4], rows[2][4]);
  EXPECT_LE(std::stoull(rows[1][7]), std::stoull(rows[2][7]));
}

TEST_F(CliTest, UsageErrors) {
  const auto file = write("g.txt", gen::complete(4));
  EXPECT_EQ(cli({"count", path("missing.txt"), "-k", "3"}).code, kExitUsage);
  EXPECT_EQ(cli({"count", file, "-k", "0"}).code, kExitUsage);
  EXPECT_EQ(cli({"count", file, "-k", "3", "--order", "nope"}).code, kExitUsage);
  EXPECT_EQ(cli({"count", file, "-k", "3", "--epsilon", "0"}).code, kExitUsage);
  EXPECT_EQ(cli({"count", file}).code, kExitUsage);
  EXPECT_EQ(cli({}).code, kExitUsage);
  const auto bad = path("bad.txt");
  std::ofstream(bad) << "0 1\n1 two\n";
  const auto r = cli({"stats", bad});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_NE(r.err.find("line 2"), std::string::npos);
}

TEST_F(CliTest, GenerateAndConvert) {
  const auto edges = path("q4.txt");
  ASSERT_EQ(cli({"generate", "hypercube", "-n", "4", "-o", edges}).code, kExitOk);
  const auto bin = path("q4.bin");
  ASSERT_EQ(cli({"convert", edges, bin}).code, kExitOk);
  const auto r = cli({"stats", bin});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(json::parse(r.out)["m"], 32);
  EXPECT_EQ(json::parse(r.out)["s"], 4);
}

TEST_F(CliTest, BinaryExitCodes) {
  const auto file = write("fig.txt", gen::k6_minus_edge());
  const std::string exe = KCLIQUE_CLI_PATH;
  auto status = [](const std::string& cmd) {
    const int raw = std::system((cmd + " >/dev/null 2>&1").c_str());
    return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  };
  EXPECT_EQ(status(exe + " count " + file + " -k 5 --verify"), 0);
  EXPECT_EQ(status(exe + " count " + file + " -k 5 --order bogus"), 2);
  EXPECT_EQ(status(exe + " --help"), 0);
}

}  // namespace
}  // namespace kclique
