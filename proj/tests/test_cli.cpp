#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "cli.hpp"

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = lnd::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, ExpPrintsByParameter) {
  const auto r = run({"exp", "--ring", "x,s,t,u,v", "--derivation", "builtin:D", "--poly", "u", "--param", "r"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "u + r*t + 1/2*r^2*s + 1/6*r^3*x^3\n");
}

TEST(Cli, RingMustMatchDerivation) {
  const auto r = run({"exp", "--ring", "x,s,t", "--derivation", "builtin:D", "--poly", "u"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("--ring"), std::string::npos);
}

TEST(Cli, KernelComputeReportsRoundOne) {
  const auto r = run({"kernel-compute", "--derivation", "builtin:D", "--loc", "x", "--rounds", "3"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.rfind("NonStabilized", 0), 0u);
  EXPECT_NE(r.out.find("2*x^2*t + x*v^2 - 2*s*v"), std::string::npos);
  EXPECT_NE(r.out.find("generator counts: 4 6 7 8"), std::string::npos);
}

TEST(Cli, KernelComputeStabilizes) {
  const auto r = run({"--output", "json", "kernel-compute", "--derivation", "builtin:Delta", "--loc", "s"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = lnd::json::parse(r.out);
  EXPECT_EQ(j["status"], "Stabilized");
  EXPECT_EQ(j["rounds"], 1);
}

TEST(Cli, KernelCheckWithExplicitSlice) {
  const auto r = run({"kernel-check", "--derivation", "builtin:DeltaPrime", "--loc", "x", "--slice", "v", "--slice-power",
                      "2", "--candidate", "x", "--candidate", "2*x*t - v^2", "--candidate", "3*x^3*u - 3*x*v*t + v^3",
                      "--candidate", "8*x*t^3 + 9*x^4*u^2 - 18*x^2*t*u*v - 3*t^2*v^2 + 6*x*u*v^3"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.rfind("Confirmed\n", 0), 0u);
  EXPECT_NE(r.out.find("X2^3 + X3^2"), std::string::npos);
}

TEST(Cli, KernelCheckRejectsBadSlice) {
  const auto r = run({"kernel-check", "--derivation", "builtin:DeltaPrime", "--loc", "x", "--slice", "v",
                      "--slice-power", "1", "--candidate", "x"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("slice"), std::string::npos);
}

TEST(Cli, SmallCommands) {
  EXPECT_EQ(run({"eval", "--ring", "x,s,t,u,v", "--poly", "2*x^3*t - s^2", "--point", "1,1,1,1,1"}).out, "1\n");
  EXPECT_EQ(run({"derive", "--derivation", "builtin:D", "--poly", "t", "--times", "2"}).out, "x^3\n");
  EXPECT_EQ(run({"act", "--derivation", "builtin:D", "--point", "1,0,0,0,0", "--by", "1"}).out, "(1, 1, 1/2, 1/6, 1)\n");
  EXPECT_EQ(run({"invariant", "--derivation", "builtin:D", "--poly", "x*v - s"}).out, "true\n");
  const auto not_inv = run({"invariant", "--derivation", "builtin:D", "--poly", "s"});
  EXPECT_EQ(not_inv.out, "false: d(f) = x^3\n");
  EXPECT_EQ(not_inv.code, 1);
  const auto gb = run({"groebner", "--ring", "x,y,z", "--gen", "y - x^2", "--gen", "z - x^3", "--order", "lex"});
  EXPECT_NE(gb.out.find("y^3 - z^2\n"), std::string::npos);
  EXPECT_EQ(run({"relations", "--ring", "v,t", "--image", "0", "--image", "-t^2", "--image", "v"}).out, "X1\n");
  EXPECT_EQ(run({"member", "--ring", "x,y", "--poly", "x*y", "--gen", "x", "--gen", "y^2"}).out, "member\n");
  EXPECT_EQ(run({"member", "--ring", "x,y", "--mode", "subalgebra", "--poly", "x*y", "--gen", "x", "--gen", "y^2"}).out,
            "not member\n");
  EXPECT_EQ(run({"member", "--ring", "x,y", "--mode", "subalgebra", "--poly", "x^2*y^2", "--gen", "x", "--gen", "y^2"}).out,
            "X1^2*X2\n");
}

TEST(Cli, JsonOutput) {
  const auto r = run({"--output", "json", "act", "--derivation", "builtin:D", "--point", "1,0,0,0,0", "--by", "1"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(lnd::json::parse(r.out)["point"][3], "1/6");
}

TEST(Cli, ParseErrorsShowFlagAndPosition) {
  const auto r = run({"eval", "--ring", "x,y", "--poly", "x^2 + * y", "--point", "1,2"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("--poly"), std::string::npos);
  EXPECT_NE(r.err.find("position 6"), std::string::npos);
  EXPECT_NE(r.err.find("\n        ^"), std::string::npos);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"exp", "--poly", "u"}).code, 2);
  EXPECT_EQ(run({"--output", "xml", "paper", "verify"}).code, 2);
  EXPECT_EQ(run({"paper", "random", "--samples", "0"}).code, 2);
  EXPECT_EQ(run({"derive", "--derivation", "builtin:Q", "--poly", "x"}).code, 2);
  EXPECT_EQ(run({"derive", "--derivation", "/nonexistent.json", "--poly", "x"}).code, 2);
}

TEST(Cli, DerivationFile) {
  const std::string path = ::testing::TempDir() + "lnd_cli_deriv.json";
  {
    std::ofstream f(path);
    f << R"({"ring": {"vars": ["x", "s"]}, "derivation": {"s": "x^3"}})";
  }
  EXPECT_EQ(run({"derive", "--derivation", path, "--poly", "s^2"}).out, "2*x^3*s\n");
  {
    std::ofstream f(path);
    f << R"({"ring": {"vars": ["x", "s"]}, "derivation": {"s": "w"}})";
  }
  const auto bad = run({"derive", "--derivation", path, "--poly", "s"});
  EXPECT_EQ(bad.code, 2);
  EXPECT_NE(bad.err.find("w"), std::string::npos);
  std::remove(path.c_str());
}

TEST(Cli, BuiltinSuitesAreDeterministic) {
  const auto v1 = run({"paper", "verify"}), v2 = run({"paper", "verify"});
  EXPECT_EQ(v1.code, 0);
  EXPECT_EQ(v1.out, v2.out);
  const auto r1 = run({"paper", "random", "--seed", "5", "--samples", "100"});
  EXPECT_EQ(r1.code, 0);
  EXPECT_EQ(r1.out, run({"paper", "random", "--seed", "5", "--samples", "100"}).out);
  const auto j = lnd::json::parse(run({"--output", "json", "paper", "verify"}).out);
  EXPECT_TRUE(j.is_array());
}

#ifdef LND_TOOL_PATH
TEST(Cli, BinaryExitCodes) {
  const std::string tool = LND_TOOL_PATH;
  auto status = [](const std::string& cmd) {
    const int raw = std::system((cmd + " > /dev/null 2>&1").c_str());
    return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  };
  EXPECT_EQ(status(tool + " paper verify"), 0);
  EXPECT_EQ(status(tool + " invariant --derivation builtin:D --poly s"), 1);
  EXPECT_EQ(status(tool + " eval --ring x --poly 'x^' --point 1"), 2);
  EXPECT_EQ(status(tool + " --help"), 0);
}
#endif
