#include <sstream>

#include <gtest/gtest.h>

#include "fibmod/json_io.hpp"
#include "fibmod_cli/cli.hpp"
#include "oracle.hpp"

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "fibmod");
  std::ostringstream out, err;
  const int code = fibmod::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(FIBMOD_TEST_DATA_DIR) + "/" + name; }

}  // namespace

TEST(Cli, Term) {
  auto r = run({"term", "--spec", data("grid_s1.json"), "--index", "3,3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "17\n");
  EXPECT_EQ(run({"term", "--spec", data("grid_s1.json"), "--index", "0,0"}).out, "1\n");
  EXPECT_EQ(run({"--spec", data("grid_s1.json"), "term", "--index", "3,3", "--fast"}).out, "17\n");
}

TEST(Cli, InputErrorsExitTwo) {
  auto r = run({"term", "--spec", data("malformed.json"), "--index", "0"});
  EXPECT_EQ(r.code, 2);
  EXPECT_TRUE(r.out.empty());
  EXPECT_NE(r.err.find("line"), std::string::npos) << r.err;
  EXPECT_EQ(run({"term", "--spec", data("grid_s1.json"), "--index", "3,x"}).code, 2);
  EXPECT_EQ(run({"term", "--spec", data("grid_s1.json"), "--index", "3"}).code, 2);
  EXPECT_EQ(run({"term", "--spec", data("missing.json"), "--index", "3"}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"term", "--index", "1,1"}).code, 2);
}

TEST(Cli, WindowGrid) {
  auto r = run({"window", "--spec", data("grid_s1.json"), "--origin", "0,0", "--shape", "4,4"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "3 7 10 17\n3 4  7 11\n0 1  1  2\n1 1  2  3\n");
  EXPECT_EQ(run({"window", "--spec", data("grid_s1.json"), "--origin", "3,3", "--shape", "1,1"}).out, "17\n");
}

TEST(Cli, WindowCsvMatchesOracle) {
  auto r = run({"window", "--spec", data("fib_tensor_fib.json"), "--shape", "3,3", "--format", "csv"});
  ASSERT_EQ(r.code, 0);
  const auto g = oracle::fill2(1, 1, 1, 1, {0, 0, 0, 1}, 3, 3);
  std::string expected = "n1,n2,value\n";
  for (std::size_t k = 0; k < 3; ++k)
    for (std::size_t n = 0; n < 3; ++n)
      expected += std::to_string(n) + "," + std::to_string(k) + "," + g.at(n, k).get_str() + "\n";
  EXPECT_EQ(r.out, expected);
}

TEST(Cli, WindowJsonRoundTrips) {
  auto r = run({"window", "--spec", data("grid_s1.json"), "--origin", "2,1", "--shape", "2,2", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  auto spec = fibmod::load_spec_file(data("grid_s1.json"));
  const auto block = fibmod::block_from_json(spec.sequence.ring(), 1, fibmod::json::parse(r.out));
  const fibmod::MultiSequence shifted(spec.sequence.spec(), block);
  for (std::uint64_t n = 0; n < 5; ++n)
    for (std::uint64_t k = 0; k < 5; ++k) EXPECT_EQ(shifted.term({n, k}), spec.sequence.term({n + 2, k + 1}));
}

TEST(Cli, Genfun) {
  EXPECT_EQ(run({"genfun", "--spec", data("fibonacci.json")}).out, "t / (1 - t - t^2)\n");
  EXPECT_EQ(run({"genfun", "--spec", data("grid_s1.json")}).out, "(1 - s + t*s) / (1 - t - t^2)(1 - s - 3s^2)\n");
  EXPECT_EQ(run({"genfun", "--spec", data("roots_1_2.json")}).out, "t / (1 - t)(1 - 2t)\n");
  EXPECT_EQ(run({"genfun", "--spec", data("roots_1_2.json"), "--roots", "1,2"}).out, "t / (1 - t)(1 - 2t)\n");
  auto bad = run({"genfun", "--spec", data("roots_1_2.json"), "--roots", "1,zz"});
  EXPECT_EQ(bad.code, 2);
  EXPECT_NE(bad.err.find("'zz'"), std::string::npos);
  EXPECT_EQ(run({"genfun", "--spec", data("fibonacci.json"), "--roots", "1,2"}).code, 3);
  auto j = run({"genfun", "--spec", data("fibonacci.json"), "--format", "json"});
  EXPECT_EQ(fibmod::json::parse(j.out)["text"], "t / (1 - t - t^2)");
}

TEST(Cli, Basis) {
  EXPECT_EQ(run({"basis", "--spec", data("fibonacci.json"), "--n", "6"}).out, "P_0^[6] = 5\nP_1^[6] = 8\n");
  EXPECT_EQ(run({"basis", "--symbolic", "--n", "3"}).out, "P_0^[3] = a1*a2\nP_1^[3] = a2 + a1^2\n");
}

TEST(Cli, DiagCheck) {
  auto r = run({"diag-check", "--spec", data("diagonal_d2.json"), "--max", "10"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "OK (121 checks)\n");
  auto v = run({"diag-check", "--spec", data("hypothesis_violated.json")});
  EXPECT_EQ(v.code, 3);
  EXPECT_EQ(v.out, "HYPOTHESIS VIOLATED\n");
  EXPECT_EQ(run({"diag-check", "--spec", data("fibonacci.json")}).code, 2);
}

TEST(Cli, Orbits) {
  auto r = run({"orbits"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("5 primitive orbits\n", 0), 0U);
  EXPECT_NE(r.out.find("B_1 (size 9)"), std::string::npos);
  EXPECT_NE(r.out.find("H^2V^2(B_1): 1 1 / 1 1"), std::string::npos);
  EXPECT_NE(r.out.find("det = 1"), std::string::npos);
  auto j = fibmod::json::parse(run({"orbits", "--format", "json"}).out);
  EXPECT_EQ(j.size(), 5U);
}

TEST(Cli, Determine) {
  EXPECT_EQ(run({"determine", "--positions", "(0,0);(1,1);(2,2);(3,3)"}).out, "NOT DETERMINING\n");
  EXPECT_EQ(run({"determine", "--positions", "(0,0); (1,0); (0,1); (2,2)"}).out, "DETERMINING\n");
  EXPECT_EQ(run({"determine", "--positions", "(0,0);(1,0"}).code, 2);
}

TEST(Cli, Bench) {
  auto r = run({"bench", "--spec", data("fibonacci_mod_m61.json"), "--n", "1000000"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "value = " + std::to_string(oracle::fib_mod_m61(1000000)));
  EXPECT_NE(r.out.find("elapsed_ms = "), std::string::npos);
}
