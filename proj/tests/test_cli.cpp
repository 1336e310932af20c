// Runs the chromzeta executable and checks output and exit codes.
#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <numbers>

#include "json.hpp"

using nlohmann::json;

namespace {

struct Outcome {
  int code = -1;
  std::string out;
};

Outcome run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " + CHROMZETA_CLI + " " + args + " 2>/dev/null";
  Outcome r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

json run_json(const std::string& args) {
  const Outcome r = run(args + " --format json");
  EXPECT_EQ(r.code, 0) << args;
  return json::parse(r.out);
}

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

}  // namespace

TEST(Cli, Poly) {
  Outcome r = run("poly --family cycle:4");
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "polynomial: x^4 - 4x^3 + 6x^2 - 3x\n"));
  EXPECT_TRUE(contains(r.out, "coefficients: [0, -3, 6, -4, 1]\n"));
  EXPECT_TRUE(contains(r.out, "closed_form: (x-1)^4 + (x-1)\n"));
  EXPECT_TRUE(contains(r.out, "# command: poly\n"));

  EXPECT_TRUE(contains(run("poly --family empty:2").out, "polynomial: x^2\n"));

  const std::string path = testing::TempDir() + "triangle.txt";
  std::ofstream(path) << "# triangle\n3\n1 2\n2 3\n1 3\n";
  const json doc = run_json("poly --file " + path);
  EXPECT_EQ(doc["result"]["polynomial"], "x^3 - 3x^2 + 2x");
  EXPECT_EQ(doc["result"]["coefficients"], json::array({"0", "2", "-3", "1"}));
  EXPECT_EQ(doc["config"]["graph"], "file " + path);
}

TEST(Cli, Zeta) {
  const json path2 = run_json("zeta --family path:2 --s 2");
  const double v = path2["result"]["value"];
  EXPECT_NEAR(v, 6 / (std::numbers::pi * std::numbers::pi), 1e-12);
  EXPECT_LE(path2["result"]["lower"].get<double>(), v);
  EXPECT_GE(path2["result"]["upper"].get<double>(), v);
  EXPECT_EQ(path2["config"]["target_tail"].get<double>(), 1e-10);
  EXPECT_EQ(path2["config"]["s"].get<double>(), 2.0);

  EXPECT_EQ(run_json("zeta --family complete:5 --s 2")["result"]["exact_zero"], true);
  const json empty = run_json("zeta --family empty:3 --s 2");
  EXPECT_EQ(empty["result"]["value"].get<double>(), 1.0);

  const json given = run_json("zeta --family cycle:3 --given-family cycle:3");
  EXPECT_LE(given["result"]["lower"].get<double>(), 1.0);
  EXPECT_GE(given["result"]["upper"].get<double>(), 1.0);
}

TEST(Cli, Simulate) {
  const json doc = run_json("simulate --family path:2 --n 2 --s 2 --trials 100000 --seed 1");
  EXPECT_NEAR(doc["result"]["point"].get<double>(), 0.75, 0.01);
  EXPECT_EQ(doc["config"]["seed"], 1);
  EXPECT_EQ(doc["config"]["trials"], 100000);
  EXPECT_EQ(run("simulate --family path:2 --n 2 --trials 0").code, 2);
}

TEST(Cli, ByteReproducibleAcrossRunsAndWorkers) {
  const std::string args = "simulate --family cycle:3 --n 1000 --s 2 --trials 50000 --seed 9";
  const Outcome a = run(args + " --workers 1"), b = run(args + " --workers 1"), c = run(args + " --workers 3");
  EXPECT_EQ(a.out, b.out);
  // Only the echoed worker count may differ.
  const auto strip = [](std::string s) { return s.erase(s.find("# workers"), s.find('\n', s.find("# workers")) - s.find("# workers")); };
  EXPECT_EQ(strip(a.out), strip(c.out));
}

TEST(Cli, Sweep) {
  const Outcome r = run("sweep --family cycle:3 --s 2 --n 100,10000,1000000 --trials 20000");
  EXPECT_EQ(r.code, 0);
  std::stringstream ss(r.out);
  std::string line;
  std::vector<std::string> rows;
  bool header = false;
  while (std::getline(ss, line)) {
    if (line.starts_with("#")) continue;
    if (!header) {
      EXPECT_EQ(line, "n,trials,successes,point,ci_low,ci_high,limit_value,limit_lower,limit_upper,deviation");
      header = true;
      continue;
    }
    rows.push_back(line);
  }
  ASSERT_EQ(rows.size(), 3u);
  const auto limit_column = [](const std::string& row) {
    std::stringstream rs(row);
    std::string cell;
    for (int i = 0; i <= 6; ++i) std::getline(rs, cell, ',');
    return cell;
  };
  EXPECT_EQ(limit_column(rows[0]), limit_column(rows[1]));
  EXPECT_EQ(limit_column(rows[1]), limit_column(rows[2]));

  const json doc = run_json("sweep --family path:2 --s 2 --n 10,100 --trials 1000");
  EXPECT_EQ(doc["rows"].size(), 2u);
  EXPECT_EQ(doc["config"]["n"], "10,100");
}

TEST(Cli, EnumerateResiduesSelftest) {
  const Outcome e = run("enumerate --family path:2 --n 2 --s 2");
  EXPECT_EQ(e.code, 0);
  EXPECT_TRUE(contains(e.out, "probability: 3/4\n"));
  const Outcome r = run("residues --family cycle:3 --p 2 --s 2");
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "count: 24 == P_H(4)\n"));
  const Outcome s = run("selftest");
  EXPECT_EQ(s.code, 0);
  EXPECT_TRUE(contains(s.out, "0 failed"));
}

TEST(Cli, ClosedFormAndRearick) {
  const json c = run_json("closed-form --k 3 --s 2");
  EXPECT_NEAR(c["result"]["value"].get<double>(), 0.196138, 1e-6);
  EXPECT_EQ(run_json("rearick --m 4 --s 2")["result"]["exact_zero"], true);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
  EXPECT_EQ(run("poly").code, 2);
  EXPECT_EQ(run("poly --family cycle:2").code, 2);
  EXPECT_EQ(run("poly --family path:3 --file x.txt").code, 2);
  EXPECT_EQ(run("poly --file /nonexistent/graph.txt").code, 2);
  EXPECT_EQ(run("zeta --family path:2 --s 1").code, 2);
  EXPECT_EQ(run("poly --family path:3 --format csv").code, 2);
  EXPECT_EQ(run("zeta --family path:2 --tail-mode truncated").code, 3);
  EXPECT_EQ(run("enumerate --family cycle:4 --n 30 --s 2 --budget 1000").code, 3);
  EXPECT_EQ(run("enumerate --family cycle:4 --n 30 --s 2", "CHROMZETA_ENUM_BUDGET=1000").code, 3);
  EXPECT_EQ(run("enumerate --family path:2 --n 2 --s 2", "CHROMZETA_ENUM_BUDGET=abc").code, 2);
  EXPECT_EQ(run("zeta --family path:2 --max-prime 1000").code, 0);
  EXPECT_EQ(run("zeta --family path:2 --max-prime 1000 --tail-mode truncated").code, 3);
  EXPECT_EQ(run("--help").code, 0);
}

TEST(Cli, EnvBudgetIsEchoed) {
  const json doc = json::parse(run("enumerate --family path:2 --n 2 --s 2 --format json", "CHROMZETA_ENUM_BUDGET=5000").out);
  EXPECT_EQ(doc["config"]["budget"], 5000);
  EXPECT_EQ(doc["result"]["fraction"], "3/4");
}
