#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "hcs/session.hpp"

using namespace hcs;

namespace {

namespace fs = std::filesystem;

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

struct Run {
  int status;
  std::string out;
};

Run run_cli(const std::string& args) {
  std::string cmd = std::string(HCSTRATA_BIN) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  std::string out;
  std::array<char, 4096> buf;
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  int raw = pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

SessionResult plain(std::string_view text) { return run_session_text(text, {.headers = false}); }

}  // namespace

TEST(Session, CoheightOfDeclaredPrime) {
  auto r = plain("ring t1, t2\nprime p = (t1 - 1) cert=principal-irreducible\ncoheight p\n");
  EXPECT_EQ(r.exit_code, kOk);
  EXPECT_EQ(r.report, "coheight = 1\n");
}

TEST(Session, GroebnerBasis) {
  auto r = plain("ring x, y\ngb (x + y, x - y)\n");
  EXPECT_EQ(r.report, "gb = {x, y}\n");
}

TEST(Session, EmptySession) {
  auto r = run_session_text("");
  EXPECT_EQ(r.exit_code, kOk);
  EXPECT_EQ(r.report, "");
  auto only_decls = run_session_text("# nothing to do\nring x\nideal I = (x)\n");
  EXPECT_EQ(only_decls.exit_code, kOk);
  EXPECT_EQ(only_decls.report, "");
}

TEST(Session, Headers) {
  auto r = run_session_text("ring x\n\ndim (x)  # trailing comment\n");
  EXPECT_EQ(r.report, "[3] dim (x)\ndim = 0\n\n");
}

TEST(Session, SemanticErrorsContinue) {
  auto r = plain("ring x\ndim J\ndim (x)\n");
  EXPECT_EQ(r.exit_code, kSemanticError);
  EXPECT_EQ(r.report, "error: line 2: unknown ideal 'J'\ndim = 0\n");
}

TEST(Session, ParseErrorsStop) {
  auto r = plain("ring x\nmember (x) \"x +\"\ndim (x)\n");
  EXPECT_EQ(r.exit_code, kParseError);
  EXPECT_NE(r.report.find("parse error: line 2:"), std::string::npos);
  EXPECT_EQ(r.report.find("dim ="), std::string::npos);
}

TEST(Session, ParseErrorWinsOverEarlierSemanticError) {
  auto r = plain("ring x\ndim J\nfrobnicate\n");
  EXPECT_EQ(r.exit_code, kParseError);
}

TEST(Session, DeclarationErrors) {
  EXPECT_EQ(plain("ideal I = (x)\n").exit_code, kSemanticError);  // no ring
  EXPECT_EQ(plain("ring x\nring y\n").exit_code, kSemanticError);
  EXPECT_EQ(plain("ring x\nideal x = (x)\n").exit_code, kSemanticError);
  EXPECT_EQ(plain("ring x\nprime p = (x)\n").exit_code, kParseError);  // missing cert
  EXPECT_EQ(plain("ring x\nprime p = (x) cert=sure\n").exit_code, kParseError);
  EXPECT_EQ(plain("ring x\nprime p = (x^2) cert=monomial\n").exit_code, kSemanticError);
  EXPECT_EQ(plain("ring t1\nweyl n=2\n").exit_code, kSemanticError);
  EXPECT_EQ(plain("ring t\ngenerator U = {t -> t + 1} inverse {t -> t + 1}\n").exit_code, kSemanticError);
}

TEST(Session, NamesAreResolvedInOrder) {
  auto r = plain("ring x, y\ndim I\nideal I = (x)\ndim I\n");
  EXPECT_EQ(r.report, "error: line 2: unknown ideal 'I'\ndim = 1\n");
}

TEST(Session, WeylOneShotEquivalent) {
  auto r = plain("weyl n=2\nhc-equiv \"t1-2\" \"t1-1\" via Y1\n");
  EXPECT_EQ(r.exit_code, kOk);
  EXPECT_EQ(r.report, "related = true\n");
}

TEST(Session, DeclaredPrimesAreFlagged) {
  auto r = plain("ring x, y\nprime c = (x - y) cert=declared\nheight c\n");
  EXPECT_EQ(r.report, "height = 1\nnote: conditional on declared primality of {x - y}\n");
}

TEST(Golden, SessionsMatchAndAreDeterministic) {
  const std::map<std::string, int> expected_exit = {{"errors", kSemanticError}, {"parse_error", kParseError}};
  std::size_t checked = 0;
  for (const auto& entry : fs::directory_iterator(SESSIONS_DIR)) {
    if (entry.path().extension() != ".hcs") continue;
    const std::string name = entry.path().stem().string();
    const fs::path golden = fs::path(GOLDEN_DIR) / (name + ".out");
    ASSERT_TRUE(fs::exists(golden)) << name;
    auto first = run_session_file(entry.path());
    auto second = run_session_file(entry.path());
    EXPECT_EQ(first.report, second.report) << name;
    EXPECT_EQ(first.report, slurp(golden)) << name;
    auto it = expected_exit.find(name);
    EXPECT_EQ(first.exit_code, it == expected_exit.end() ? kOk : it->second) << name;
    ++checked;
  }
  EXPECT_GE(checked, 6u);
}

TEST(Golden, SessionsCoverEveryCommand) {
  const std::vector<std::string> commands = {
      "gb",        "nf",     "member", "dim",    "coheight", "height",   "intersect", "quotient",  "saturate",
      "sum",       "product", "comaximal", "radmember", "ass", "minsupp", "torsion", "strata", "pcomp",
      "decompose", "homzero", "regseq", "mul", "lt", "shift", "min", "in-z", "hc-equiv", "hc-reach", "ass-bound",
      "hc-matrix"};
  std::string all;
  for (const auto& entry : fs::directory_iterator(SESSIONS_DIR)) all += "\n" + slurp(entry.path());
  for (const auto& c : commands) EXPECT_NE(all.find("\n" + c + " "), std::string::npos) << c;
}

TEST(Cli, SessionFileMatchesGolden) {
  auto r = run_cli(std::string(SESSIONS_DIR) + "/weyl.hcs");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, slurp(fs::path(GOLDEN_DIR) / "weyl.out"));
  EXPECT_EQ(run_cli(std::string(SESSIONS_DIR) + "/errors.hcs").status, 1);
  EXPECT_EQ(run_cli(std::string(SESSIONS_DIR) + "/parse_error.hcs").status, 2);
}

TEST(Cli, OneShotDimension) {
  auto r = run_cli("--ring t1,t2 --dim \"ideal(t1)\"");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "dim = 1\n");
}

TEST(Cli, OneShotHcEquiv) {
  auto r = run_cli("--weyl 2 --hc-equiv \"t1-2\" \"t1-1\" --via Y1");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "related = true\n");
}

TEST(Cli, OneShotGroebnerWithOrder) {
  auto r = run_cli("--ring x,y --gb \"(x^2 - y, x*y - y)\" --order lex");
  EXPECT_EQ(r.out, "gb = {x^2 - y, x*y - y, y^2 - y}\n");
}

TEST(Cli, MalformedPolynomialExitsTwo) {
  EXPECT_EQ(run_cli("--ring x,y --member \"(x)\" \"x + * y\"").status, 2);
  EXPECT_EQ(run_cli("--ring x,y --dim \"(x^)\"").status, 2);
}

TEST(Cli, SemanticErrorExitsOne) {
  EXPECT_EQ(run_cli("--ring x --quotient \"(x)\" 0").status, 1);
}

TEST(Cli, BadUsage) {
  EXPECT_NE(run_cli("").status, 0);
  EXPECT_NE(run_cli("--ring x --dim \"(x)\" --gb \"(x)\"").status, 0);
  EXPECT_NE(run_cli("--weyl 1 --hc-equiv t1 t1").status, 0);
}
