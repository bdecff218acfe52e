#pragma once

// Line-oriented session files driving the library.
//
//   # comment
//   ring x, y
//   weyl n=2
//   generator U = {t1 -> t1 + 1} inverse {t1 -> t1 - 1}
//   ideal I = (x^2, x*y)
//   prime p = (x) cert=monomial
//   module M = quotient(I) decomp: (Q1, p1); (Q2, p2)
//   gb I
//   torsion M Z<=0
//
// Declarations print nothing; each command prints one result block.
// Arguments are whitespace separated; quote them ("x + y") or write them
// without spaces. Ideal arguments are names or inline `(f, g)` /
// `ideal(f, g)`; prime arguments are names or a single inline polynomial
// (a principal prime).

#include <filesystem>
#include <string>
#include <string_view>

namespace hcs {

enum ExitCode : int { kOk = 0, kSemanticError = 1, kParseError = 2 };

struct SessionResult {
  int exit_code = kOk;
  std::string report;
};

struct SessionOptions {
  // Prefix every result block with "[<line>] <command>" and end it with a
  // blank line. One-shot runs switch this off.
  bool headers = true;
};

SessionResult run_session_text(std::string_view text, const SessionOptions& options = {});
SessionResult run_session_file(const std::filesystem::path& path, const SessionOptions& options = {});

}  // namespace hcs
