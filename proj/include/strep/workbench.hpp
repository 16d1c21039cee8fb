#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "strep/enumerate.hpp"
#include "strep/rules.hpp"

namespace strep {

// Process exit codes shared by every command.
inline constexpr int kExitSuccess = 0;
inline constexpr int kExitInvalidInput = 2;
inline constexpr int kExitBudgetExceeded = 3;
inline constexpr int kExitMismatch = 4;

// Everything a single run needs, mirroring the command-line flags one to
// one (field `at_least` <-> flag `--at-least`, etc.).  The same key=value
// text form serves as the config-file format.
struct RunConfig {
  std::string command;  // enumerate|capacity|table1|automaton|membership|construct

  // System description.
  std::string rule;  // end|tan|rt|gap
  std::string seed;
  int alphabet = 0;  // 0: infer from the seed text
  std::size_t k = 1;
  std::size_t kprime = 0;
  bool at_least = false;

  // Budget and output routing.
  std::size_t max_len = 0;  // 0: default |seed| + 8k
  std::size_t max_states = 1'000'000;
  bool witnesses = false;
  bool traces = false;
  std::string out;  // path base for file output

  // Command-specific parameters.
  std::string target;     // membership: queried word; construct: suffix word
  std::string procedure;  // construct: which procedure to run
  std::string symbol;     // construct: single symbol to push to the end
  std::size_t delta = 0;  // automaton: growth automaton for this diversity
  std::size_t sigma = 0;  // automaton: sliding-window graph alphabet size
  std::size_t d = 0;      // automaton: window order / residue modulus
  std::string allowed_residues;  // automaton: comma-separated kept residues (flag --D)
  std::size_t rounds = 7;        // capacity: measured-bound replication rounds
  bool estimate = false;         // capacity: always append the measured rate

  // One "key=value" line per non-default field, fixed order, so that
  // format(parse(c)) == c for canonical text.  parse accepts blank lines,
  // '#' comments, and spaces around keys and values.
  static RunConfig parse(std::string_view text);
  std::string format() const;

  // The system named by rule/seed/alphabet/k/kprime/at_least.
  SystemDescriptor descriptor() const;

  // Budget resolved against a seed length (applies the max_len default).
  EnumerationBudget budget(std::size_t seed_length) const;
};

// Outcome of one command: the process exit code, the bytes for stdout, and
// diagnostics for stderr.  File side effects (profile/witness/trace/DOT
// files) happen during the run when `out` is set.
struct RunOutcome {
  int exit_code = kExitSuccess;
  std::string output;
  std::string error;
};

// Executes config.command.  All failure modes are folded into the exit
// code: malformed input gives kExitInvalidInput, blown budgets give
// kExitBudgetExceeded, and reference-value mismatches give kExitMismatch.
RunOutcome run_command(const RunConfig& config);

// The bundled reference table: three reversed-tandem systems with their
// expected closure counts at each replication depth.
struct ReferenceRow {
  std::string seed;
  std::size_t k;
  std::vector<std::uint64_t> expected;  // counts at lengths k, 2k, ..., 7k
};
const std::vector<ReferenceRow>& reference_table();

}  // namespace strep
