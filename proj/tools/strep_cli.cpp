#include <cstdio>

#include "CLI11.hpp"
#include "strep/workbench.hpp"

int main(int argc, char** argv) {
  strep::RunConfig config;
  CLI::App app{"Workbench for string-replication systems: enumerate closures, "
               "compute capacity reports, check the bundled reference table, "
               "export growth automata, decide membership, and run the "
               "constructive procedures."};
  app.set_config("--config", "", "Load options from a key=value file");
  app.add_option("command", config.command,
                 "enumerate | capacity | table1 | automaton | membership | "
                 "construct");
  app.add_option("--rule", config.rule, "Replication variant: end, tan, rt, gap");
  app.add_option("--seed", config.seed, "Seed word (e.g. 0110 or TCATGC)");
  app.add_option("--alphabet", config.alphabet,
                 "Alphabet size (default: inferred from the seed)");
  app.add_option("--k", config.k, "Block length (default 1)");
  app.add_option("--kprime", config.kprime, "Skipped length for the gap rule");
  app.add_flag("--at-least", config.at_least,
               "Allow any block length >= k (end and tan only)");
  app.add_option("--max-len", config.max_len,
                 "Longest word enumerated (default: seed length + 8k)");
  app.add_option("--max-states", config.max_states,
                 "Word-count budget for enumeration (default 1000000)");
  app.add_flag("--witnesses", config.witnesses,
               "Also write every reachable word (needs --out)");
  app.add_flag("--traces", config.traces,
               "Also write a derivation per word (needs --out)");
  app.add_option("--out", config.out, "Output file path (base name)");
  app.add_option("--target", config.target,
                 "Queried word (membership) or wanted suffix (construct)");
  app.add_option("--procedure", config.procedure,
                 "Constructive procedure: end-force-suffix, tandem-compact, "
                 "tandem-seed-prep, rt-push, rt-embed, gap-push, "
                 "gap-distinct-round");
  app.add_option("--symbol", config.symbol,
                 "Single symbol to push to the end (construct)");
  app.add_option("--delta", config.delta,
                 "Growth automaton for this symbol diversity (automaton)");
  app.add_option("--sigma", config.sigma,
                 "Sliding-window graph alphabet size (automaton)");
  app.add_option("--d", config.d,
                 "Window order / residue modulus (automaton)");
  app.add_option("--D", config.allowed_residues,
                 "Comma-separated residues to keep when pruning (automaton)");
  app.add_option("--rounds", config.rounds,
                 "Replication rounds for measured capacity bounds (default 7)");
  app.add_flag("--estimate", config.estimate,
               "Always append the measured growth rate (capacity)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : strep::kExitInvalidInput;
  }

  strep::RunOutcome outcome = strep::run_command(config);
  std::fputs(outcome.output.c_str(), stdout);
  std::fputs(outcome.error.c_str(), stderr);
  return outcome.exit_code;
}
