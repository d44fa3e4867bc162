#include <gtest/gtest.h>
#include <json.hpp>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

namespace {

struct Output {
  int code = -1;
  std::string out;
};

Output cli(const std::string& args) {
  std::string cmd = std::string(POLYLOG_CLI_PATH) + " " + args + " 2>/dev/null";
  Output r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  std::array<char, 4096> buf;
  while (std::size_t n = fread(buf.data(), 1, buf.size(), p)) r.out.append(buf.data(), n);
  int st = pclose(p);
  r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

}  // namespace

TEST(Cli, VerifyGoncharov22) {
  Output r = cli("verify --equation goncharov22 --mode both --seed 7");
  EXPECT_EQ(r.code, 0) << r.out;
}

TEST(Cli, EvalClCatalan) {
  Output r = cli("eval-cl --m 2 --z 0+1i --precision 50");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("0.91596559417721901505", 0), 0u) << r.out;
}

TEST(Cli, ComplexLiterals) {
  // CL_2(conj z) = -CL_2(z)
  Output a = cli("eval-cl --m 2 --z 1.5-2i --precision 30");
  Output b = cli("eval-cl --m 2 --z 1.5+2e0i --precision 30");
  ASSERT_EQ(a.code, 0);
  ASSERT_EQ(b.code, 0);
  EXPECT_EQ("-" + b.out, a.out);
  EXPECT_EQ(cli("eval-cl --m 3 --z inf").out, "0\n");
  EXPECT_EQ(cli("eval-cl --m 2 --z -i --precision 20").code, 0);
  EXPECT_EQ(cli("eval-cl --m 2 --z 1+x").code, 2);
}

TEST(Cli, CheckTermCount) {
  Output r = cli("check --name xi7-term-count");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("274\n", 0), 0u) << r.out;
  EXPECT_EQ(cli("check --name no-such-check").code, 2);
}

TEST(Cli, Roots) {
  Output r = cli("roots --coeffs=-1,0,1 --precision 30");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "-1\n1\n");
}

TEST(Cli, JsonEnvelopeIsDeterministic) {
  Output a = cli("verify --equation five-term --mode numeric --points 4 --seed 3 --json");
  Output b = cli("verify --equation five-term --mode numeric --points 4 --seed 3 --json");
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  auto j = nlohmann::json::parse(a.out);
  EXPECT_EQ(j["schema"], "polylog-report/1");
  EXPECT_EQ(j["seed"], 3);
  EXPECT_EQ(j["precision"]["digits"], 50);
  EXPECT_EQ(j["status"], "pass");
}

TEST(Cli, FailingEquationExitsOne) {
  Output r = cli("verify --equation gamma21-rhs --mode symbolic --trials 2 --functionals 2");
  EXPECT_EQ(r.code, 1) << r.out;
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(cli("").code, 2);
  EXPECT_EQ(cli("verify --equation nope").code, 2);
  EXPECT_EQ(cli("verify --equation five-term --mode sideways").code, 2);
  EXPECT_EQ(cli("report").code, 2);
}

TEST(Cli, ExportRoundTrip) {
  Output e = cli("export --name goncharov22");
  ASSERT_EQ(e.code, 0);
  auto j = nlohmann::json::parse(e.out);
  EXPECT_EQ(j["name"], "goncharov22");
  Output l = cli("list --json");
  ASSERT_EQ(l.code, 0);
  EXPECT_FALSE(nlohmann::json::parse(l.out)["equations"].empty());
}

TEST(Cli, FourlogRoutes) {
  Output r = cli("verify --equation fourlog-n2 --points 3 --json");
  ASSERT_EQ(r.code, 0) << r.out;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["symbolic"]["status"], "pass");
  EXPECT_EQ(j["numeric"]["status"], "pass");
}
