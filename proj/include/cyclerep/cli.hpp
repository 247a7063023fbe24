#ifndef CYCLEREP_CLI_HPP
#define CYCLEREP_CLI_HPP

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "cyclerep/cycle.hpp"

namespace cyclerep::cli {

/// Process exit codes; stable across releases.
enum ExitCode : int {
  kOk = 0,          // valid / isomorphic / equivalent
  kFalse = 1,       // not isomorphic / not equivalent / witness rejected
  kInvalid = 2,     // unreadable or malformed input, bad flags
  kInternal = 3,    // an internal invariant failed
  kUndecided = 4,   // topological comparison reduced to an operator pair
};

/// Runs one command line (argv[0] is the program name). Reports go to out,
/// diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Parses "l:j:mult,l:j:mult,..."; mult defaults to 1 when omitted.
std::vector<ChainSummand> parse_chain_list(const std::string& text, std::size_t t);

}  // namespace cyclerep::cli

#endif  // CYCLEREP_CLI_HPP
