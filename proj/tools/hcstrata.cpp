// hcstrata: run a session file, or a single command given as flags.
//
//   hcstrata session.hcs
//   hcstrata --ring t1,t2 --dim "ideal(t1)"
//   hcstrata --weyl 2 --hc-equiv "t1-2" "t1-1" --via Y1

#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "hcs/session.hpp"

namespace {

struct OneShot {
  const char* flag;
  const char* command;
  int nargs;
  const char* help;
  std::vector<std::string> values;
};

std::string quote(const std::string& s) { return "\"" + s + "\""; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Torsion strata and Harish-Chandra prime relations over polynomial rings"};

  std::string session_path;
  bool no_headers = false;
  std::string ring;
  int weyl = 0;
  std::string order;
  std::string via;

  app.add_option("session", session_path, "Session file to execute");
  app.add_flag("--no-headers", no_headers, "Omit the per-command header lines");
  app.add_option("--ring", ring, "Ring variables, comma separated (one-shot mode)");
  app.add_option("--weyl", weyl, "Use the Weyl datum of rank n (one-shot mode)");
  app.add_option("--order", order, "Monomial order for --gb: lex, grevlex, block(k)");
  app.add_option("--via", via, "Generator for --hc-equiv");

  std::vector<OneShot> shots = {
      {"--gb", "gb", 1, "Reduced Groebner basis of IDEAL", {}},
      {"--nf", "nf", 2, "Normal form of POLY modulo IDEAL", {}},
      {"--member", "member", 2, "Membership of POLY in IDEAL", {}},
      {"--dim", "dim", 1, "Krull dimension of the quotient by IDEAL", {}},
      {"--coheight", "coheight", 1, "Coheight of PRIME", {}},
      {"--height", "height", 1, "Height of PRIME", {}},
      {"--intersect", "intersect", 2, "Intersection of two ideals", {}},
      {"--quotient", "quotient", 2, "Colon ideal I : f or I : J", {}},
      {"--saturate", "saturate", 2, "Saturation I : J^inf", {}},
      {"--comaximal", "comaximal", 2, "Whether I + J is the unit ideal", {}},
      {"--radmember", "radmember", 2, "Membership of POLY in the radical of IDEAL", {}},
      {"--homzero", "homzero", 2, "Whether Hom(R/I, R/J) vanishes", {}},
      {"--regseq", "regseq", -1, "Whether the polynomials form a regular sequence", {}},
      {"--hc-equiv", "hc-equiv", 2, "Whether Q and P are related via --via", {}},
  };
  for (auto& s : shots) {
    auto* opt = app.add_option(s.flag, s.values, s.help);
    if (s.nargs > 0) {
      opt->expected(s.nargs);
    } else {
      opt->expected(1, -1);
    }
  }

  CLI11_PARSE(app, argc, argv);

  std::vector<const OneShot*> chosen;
  for (const auto& s : shots)
    if (!s.values.empty()) chosen.push_back(&s);

  hcs::SessionResult result;
  if (!session_path.empty()) {
    if (!chosen.empty() || !ring.empty() || weyl) {
      std::cerr << "error: a session file cannot be combined with one-shot flags\n";
      return hcs::kParseError;
    }
    result = hcs::run_session_file(session_path, {.headers = !no_headers});
  } else {
    if (chosen.size() != 1) {
      std::cerr << "error: give a session file or exactly one command flag\n" << app.help();
      return hcs::kParseError;
    }
    const OneShot& s = *chosen.front();
    std::string text;
    if (!ring.empty()) text += "ring " + ring + "\n";
    if (weyl) text += "weyl n=" + std::to_string(weyl) + "\n";
    text += s.command;
    for (const auto& v : s.values) text += " " + quote(v);
    if (s.command == std::string("gb") && !order.empty()) text += " " + order;
    if (s.command == std::string("hc-equiv")) {
      if (via.empty()) {
        std::cerr << "error: --hc-equiv needs --via <generator>\n";
        return hcs::kParseError;
      }
      text += " via " + via;
    }
    text += "\n";
    result = hcs::run_session_text(text, {.headers = false});
  }

  std::cout << result.report;
  return result.exit_code;
}
