#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace planarcut {

/// Entry point for the command-line tool (subcommands: solve, oracle, verify,
/// gen, render, bench). Exit codes: 0 ok, 1 invalid cut or failed oracle
/// cross-check, 2 usage, 3 input or precondition error, 4 budget exceeded
/// without an exactness certificate.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace planarcut
