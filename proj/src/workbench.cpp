#include "strep/workbench.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>

#include "strep/capacity.hpp"
#include "strep/constructions.hpp"
#include "strep/spectral.hpp"

namespace strep {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

std::size_t parse_size(std::string_view key, std::string_view value) {
  if (value.empty())
    throw std::invalid_argument("config: empty value for '" + std::string(key) + "'");
  for (char ch : value)
    if (!std::isdigit(static_cast<unsigned char>(ch)))
      throw std::invalid_argument("config: '" + std::string(key) +
                                  "' expects a non-negative integer, got '" +
                                  std::string(value) + "'");
  return static_cast<std::size_t>(std::stoull(std::string(value)));
}

bool parse_bool(std::string_view key, std::string_view value) {
  if (value == "true") return true;
  if (value == "false") return false;
  throw std::invalid_argument("config: '" + std::string(key) +
                              "' expects true or false, got '" +
                              std::string(value) + "'");
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open output file: " + path);
  file << content;
  if (!file) throw std::runtime_error("write failed: " + path);
}

Symbol parse_symbol(const Alphabet& alphabet, const std::string& text) {
  Word w = alphabet.parse(text);
  if (w.size() != 1)
    throw std::invalid_argument("expected a single symbol, got '" + text + "'");
  return w[0];
}

}  // namespace

RunConfig RunConfig::parse(std::string_view text) {
  RunConfig config;
  std::istringstream in{std::string(text)};
  std::string raw_line;
  while (std::getline(in, raw_line)) {
    std::string_view line = trim(raw_line);
    if (line.empty() || line.front() == '#') continue;
    auto eq = line.find('=');
    if (eq == std::string_view::npos)
      throw std::invalid_argument("config: expected key=value, got '" +
                                  std::string(line) + "'");
    std::string key{trim(line.substr(0, eq))};
    std::string value{trim(line.substr(eq + 1))};
    if (key == "command") config.command = value;
    else if (key == "rule") config.rule = value;
    else if (key == "seed") config.seed = value;
    else if (key == "alphabet") config.alphabet = static_cast<int>(parse_size(key, value));
    else if (key == "k") config.k = parse_size(key, value);
    else if (key == "kprime") config.kprime = parse_size(key, value);
    else if (key == "at-least") config.at_least = parse_bool(key, value);
    else if (key == "max-len") config.max_len = parse_size(key, value);
    else if (key == "max-states") config.max_states = parse_size(key, value);
    else if (key == "witnesses") config.witnesses = parse_bool(key, value);
    else if (key == "traces") config.traces = parse_bool(key, value);
    else if (key == "out") config.out = value;
    else if (key == "target") config.target = value;
    else if (key == "procedure") config.procedure = value;
    else if (key == "symbol") config.symbol = value;
    else if (key == "delta") config.delta = parse_size(key, value);
    else if (key == "sigma") config.sigma = parse_size(key, value);
    else if (key == "d") config.d = parse_size(key, value);
    else if (key == "D") config.allowed_residues = value;
    else if (key == "rounds") config.rounds = parse_size(key, value);
    else if (key == "estimate") config.estimate = parse_bool(key, value);
    else
      throw std::invalid_argument("config: unknown key '" + key + "'");
  }
  return config;
}

std::string RunConfig::format() const {
  std::string text = "command=" + command + "\n";
  auto emit = [&text](const char* key, const std::string& value) {
    if (!value.empty()) text += std::string(key) + "=" + value + "\n";
  };
  auto emit_size = [&text](const char* key, std::size_t value, std::size_t dflt) {
    if (value != dflt) text += std::string(key) + "=" + std::to_string(value) + "\n";
  };
  auto emit_bool = [&text](const char* key, bool value) {
    if (value) text += std::string(key) + "=true\n";
  };
  emit("rule", rule);
  emit("seed", seed);
  emit_size("alphabet", static_cast<std::size_t>(alphabet), 0);
  emit_size("k", k, 1);
  emit_size("kprime", kprime, 0);
  emit_bool("at-least", at_least);
  emit_size("max-len", max_len, 0);
  emit_size("max-states", max_states, 1'000'000);
  emit_bool("witnesses", witnesses);
  emit_bool("traces", traces);
  emit("out", out);
  emit("target", target);
  emit("procedure", procedure);
  emit("symbol", symbol);
  emit_size("delta", delta, 0);
  emit_size("sigma", sigma, 0);
  emit_size("d", d, 0);
  emit("D", allowed_residues);
  emit_size("rounds", rounds, 7);
  emit_bool("estimate", estimate);
  return text;
}

SystemDescriptor RunConfig::descriptor() const {
  if (rule.empty()) throw std::invalid_argument("a rule is required (--rule)");
  if (seed.empty()) throw std::invalid_argument("a seed is required (--seed)");
  SystemDescriptor desc;
  if (rule == "end") desc.variant = Variant::End;
  else if (rule == "tan") desc.variant = Variant::Tandem;
  else if (rule == "rt") desc.variant = Variant::ReversedTandem;
  else if (rule == "gap") desc.variant = Variant::Gap;
  else
    throw std::invalid_argument("unknown rule '" + rule +
                                "' (expected end, tan, rt, or gap)");
  desc.mode = at_least ? Mode::AtLeastK : Mode::FixedK;
  desc.k = k;
  desc.kprime = kprime;
  desc.seed_text = seed;
  desc.alphabet_size = alphabet;
  return desc;
}

EnumerationBudget RunConfig::budget(std::size_t seed_length) const {
  EnumerationBudget budget;
  budget.max_length =
      max_len != 0 ? max_len : seed_length + 8 * std::max<std::size_t>(k, 1);
  budget.max_states = max_states;
  budget.store_witnesses = witnesses;
  budget.store_traces = traces;
  return budget;
}

const std::vector<ReferenceRow>& reference_table() {
  static const std::vector<ReferenceRow> rows = {
      {"01", 2, {1, 1, 3, 10, 37, 145, 584}},
      {"010", 3, {1, 1, 3, 14, 78, 467, 2894}},
      {"012", 3, {1, 1, 4, 25, 182, 1423, 11577}},
  };
  return rows;
}

namespace {

RunOutcome cmd_enumerate(const RunConfig& config) {
  RunOutcome outcome;
  if ((config.witnesses || config.traces) && config.out.empty())
    throw std::invalid_argument("--witnesses and --traces require --out");
  StringSystem system = config.descriptor().instantiate();
  LevelProfile profile =
      enumerate_closure(system, config.budget(system.seed.size()));
  std::string tsv = profile_to_tsv(profile);
  outcome.output = tsv;
  if (!config.out.empty()) {
    write_file(config.out, tsv);
    if (config.witnesses)
      write_file(config.out + ".witnesses",
                 witnesses_to_text(profile, system.alphabet));
    if (config.traces)
      write_file(config.out + ".traces", traces_to_text(profile, system.alphabet));
  }
  return outcome;
}

RunOutcome cmd_capacity(const RunConfig& config) {
  RunOutcome outcome;
  CapacityOptions options;
  options.include_estimate = config.estimate;
  options.empirical_rounds = config.rounds;
  options.max_states = config.max_states;
  options.max_length = config.max_len;
  for (const CapacityReport& report :
       capacity_reports(config.descriptor(), options))
    outcome.output += format_report(report) + "\n";
  return outcome;
}

RunOutcome cmd_table1(const RunConfig&) {
  RunOutcome outcome;
  outcome.output = "seed\tk\tn\tcomputed\texpected\tstatus\n";
  bool all_pass = true;
  for (const ReferenceRow& row : reference_table()) {
    SystemDescriptor desc;
    desc.variant = Variant::ReversedTandem;
    desc.mode = Mode::FixedK;
    desc.k = row.k;
    desc.seed_text = row.seed;
    StringSystem system = desc.instantiate();
    EnumerationBudget budget;
    budget.max_length = row.k * row.expected.size();
    LevelProfile profile = enumerate_closure(system, budget);
    for (std::size_t j = 0; j < row.expected.size(); ++j) {
      std::size_t n = row.k * (j + 1);
      std::uint64_t computed = profile.count_at(n);
      bool pass = computed == row.expected[j];
      all_pass = all_pass && pass;
      outcome.output += row.seed + "\t" + std::to_string(row.k) + "\t" +
                        std::to_string(n) + "\t" + std::to_string(computed) +
                        "\t" + std::to_string(row.expected[j]) + "\t" +
                        (pass ? "PASS" : "FAIL") + "\n";
    }
  }
  if (!all_pass) {
    outcome.exit_code = kExitMismatch;
    outcome.error = "reference table mismatch\n";
  }
  return outcome;
}

RunOutcome cmd_automaton(const RunConfig& config) {
  RunOutcome outcome;
  LabeledGraph graph;
  Alphabet alphabet(1);
  if (config.delta > 0) {
    int diversity = static_cast<int>(config.delta);
    graph = tandem_atleast1_automaton(diversity);
    alphabet = Alphabet(diversity);
  } else if (config.sigma > 0 || config.d > 0) {
    if (config.sigma < 1 || config.d < 1)
      throw std::invalid_argument(
          "sliding-window graphs need both --sigma and --d");
    graph = debruijn_graph(static_cast<int>(config.sigma),
                           static_cast<int>(config.d));
    alphabet = Alphabet(static_cast<int>(config.sigma));
    if (!config.allowed_residues.empty()) {
      std::set<std::size_t> allowed;
      std::istringstream in(config.allowed_residues);
      std::string token;
      while (std::getline(in, token, ','))
        allowed.insert(parse_size("D", trim(token)));
      graph = prune_debruijn(graph, allowed, config.d);
    }
  } else {
    throw std::invalid_argument(
        "automaton needs --delta, or --sigma with --d (and optional --D)");
  }
  double lambda = spectral_radius(adjacency_matrix(graph));
  std::string record = "vertices=" + std::to_string(graph.vertex_count) +
                       " edges=" + std::to_string(graph.edges.size()) +
                       " lambda=" + fmt6(lambda);
  if (lambda > 0.0) record += " log2lambda=" + fmt6(std::log2(lambda));
  record += "\n";
  std::string dot = graph_to_dot(graph, alphabet);
  if (!config.out.empty()) {
    write_file(config.out, dot);
    outcome.output = record;
  } else {
    outcome.output = dot + record;
  }
  return outcome;
}

RunOutcome cmd_membership(const RunConfig& config) {
  RunOutcome outcome;
  if (config.target.empty())
    throw std::invalid_argument("membership needs --target");
  StringSystem system = config.descriptor().instantiate();
  Word target = system.alphabet.parse(config.target);
  MembershipResult result = membership(system, target, config.max_states);
  switch (result.outcome) {
    case Membership::Present:
      outcome.output = "outcome=present states=" +
                       std::to_string(result.states_seen) +
                       " trace=" + trace_to_string(result.trace) + "\n";
      if (trace_replay(system.seed, result.trace) != target)
        throw std::logic_error("membership: trace does not replay to target");
      break;
    case Membership::Absent:
      outcome.output =
          "outcome=absent states=" + std::to_string(result.states_seen) + "\n";
      break;
    case Membership::Inconclusive:
      outcome.output = "outcome=inconclusive states=" +
                       std::to_string(result.states_seen) + "\n";
      outcome.exit_code = kExitBudgetExceeded;
      break;
  }
  return outcome;
}

// Formats the shared part of a construction run and re-verifies the trace.
std::string construction_lines(const Alphabet& alphabet, const Word& input,
                               const ConstructionResult& result) {
  if (trace_replay(input, result.trace) != result.output)
    throw std::logic_error("construction trace does not replay to its output");
  return "input=" + alphabet.format(input) +
         "\noutput=" + alphabet.format(result.output) +
         "\nsteps=" + std::to_string(result.steps()) +
         "\ntrace=" + trace_to_string(result.trace) + "\n";
}

RunOutcome cmd_construct(const RunConfig& config) {
  RunOutcome outcome;
  if (config.procedure.empty())
    throw std::invalid_argument("construct needs --procedure");
  if (config.seed.empty()) throw std::invalid_argument("a seed is required (--seed)");
  SystemDescriptor shape;  // alphabet/seed holder; the variant is irrelevant here
  shape.seed_text = config.seed;
  shape.alphabet_size = config.alphabet;
  Alphabet alphabet = shape.make_alphabet();
  Word seed = alphabet.parse(config.seed);
  const std::string& name = config.procedure;
  outcome.output = "procedure=" + name + "\n";

  if (name == "end-force-suffix") {
    if (config.target.empty())
      throw std::invalid_argument(name + " needs --target (the wanted suffix)");
    Word suffix = alphabet.parse(config.target);
    ConstructionResult result = end_force_suffix(seed, config.k, suffix);
    if (result.output.suffix(suffix.size()) != suffix)
      throw std::logic_error(name + ": output does not end with the target");
    outcome.output += "target=" + alphabet.format(suffix) + "\n" +
                      construction_lines(alphabet, seed, result);
  } else if (name == "tandem-compact") {
    CompactDistinctResult result = tandem_compact_distinct(seed);
    std::size_t d = static_cast<std::size_t>(alpha_diversity(seed));
    Word window = result.construction.output.substr(result.window_pos, d);
    if (alpha_representation(window) != alpha_representation(seed))
      throw std::logic_error(name + ": window misses some seed symbol");
    outcome.output += "window=" + std::to_string(result.window_pos + 1) + "\n" +
                      construction_lines(alphabet, seed, result.construction);
  } else if (name == "tandem-seed-prep") {
    SeedPrepResult result = tandem_atleast_seed_prep(seed, config.k);
    const Word& word = result.construction.output;
    for (std::size_t i = 0; i < config.k; ++i) {
      std::size_t run_pos = result.pattern_pos + (result.run_first ? 0 : 1) + i;
      if (word[run_pos] != result.run_symbol)
        throw std::logic_error(name + ": reported run does not hold");
    }
    std::size_t boundary_pos =
        result.pattern_pos + (result.run_first ? config.k : 0);
    if (word[boundary_pos] != result.boundary_symbol)
      throw std::logic_error(name + ": reported boundary does not hold");
    outcome.output += "pattern=" + std::to_string(result.pattern_pos + 1) +
                      "\nrun-first=" + (result.run_first ? "true" : "false") +
                      "\nrun-symbol=" +
                      std::string(1, alphabet.display_char(result.run_symbol)) +
                      "\nboundary-symbol=" +
                      std::string(1, alphabet.display_char(result.boundary_symbol)) +
                      "\n" + construction_lines(alphabet, seed, result.construction);
  } else if (name == "rt-push" || name == "gap-push") {
    if (config.symbol.empty())
      throw std::invalid_argument(name + " needs --symbol");
    Symbol a = parse_symbol(alphabet, config.symbol);
    ConstructionResult result =
        name == "rt-push"
            ? rt_push_to_end(seed, config.k, a)
            : gap_push_to_end(seed, config.k, config.kprime, a);
    if (result.output.back() != a)
      throw std::logic_error(name + ": output does not end with the symbol");
    outcome.output += "symbol=" + std::string(1, alphabet.display_char(a)) +
                      "\n" + construction_lines(alphabet, seed, result);
  } else if (name == "rt-embed") {
    if (config.target.empty())
      throw std::invalid_argument(name + " needs --target (the wanted suffix)");
    Word suffix = alphabet.parse(config.target);
    ConstructionResult result = rt_embed_as_suffix(seed, config.k, suffix);
    if (result.output.suffix(suffix.size()) != suffix)
      throw std::logic_error(name + ": output does not end with the target");
    outcome.output += "target=" + alphabet.format(suffix) + "\n" +
                      construction_lines(alphabet, seed, result);
  } else if (name == "gap-distinct-round") {
    DistinctRoundResult result =
        gap_distinct_round(seed, config.k, config.kprime);
    outcome.output += "first=" + to_string(result.first) + "\nintermediate=" +
                      alphabet.format(result.intermediate) + "\ncount=" +
                      std::to_string(result.count()) + "\n";
    for (std::size_t i = 0; i < result.words.size(); ++i) {
      if (apply(result.second[i], result.intermediate) != result.words[i])
        throw std::logic_error(name + ": recorded rule does not reproduce word");
      outcome.output += "word=" + alphabet.format(result.words[i]) +
                        " rule=" + to_string(result.second[i]) + "\n";
    }
  } else {
    throw std::invalid_argument(
        "unknown procedure '" + name +
        "' (expected end-force-suffix, tandem-compact, tandem-seed-prep, "
        "rt-push, rt-embed, gap-push, or gap-distinct-round)");
  }
  return outcome;
}

}  // namespace

RunOutcome run_command(const RunConfig& config) {
  RunOutcome outcome;
  try {
    if (config.command == "enumerate") return cmd_enumerate(config);
    if (config.command == "capacity") return cmd_capacity(config);
    if (config.command == "table1") return cmd_table1(config);
    if (config.command == "automaton") return cmd_automaton(config);
    if (config.command == "membership") return cmd_membership(config);
    if (config.command == "construct") return cmd_construct(config);
    throw std::invalid_argument(
        "unknown command '" + config.command +
        "' (expected enumerate, capacity, table1, automaton, membership, or "
        "construct)");
  } catch (const BudgetExceededError& e) {
    outcome.exit_code = kExitBudgetExceeded;
    outcome.error = std::string(e.what()) + "\n";
  } catch (const std::overflow_error& e) {
    outcome.exit_code = kExitBudgetExceeded;
    outcome.error = std::string(e.what()) + "\n";
  } catch (const std::invalid_argument& e) {
    outcome.exit_code = kExitInvalidInput;
    outcome.error = std::string(e.what()) + "\n";
  } catch (const std::logic_error& e) {
    outcome.exit_code = kExitMismatch;
    outcome.error = std::string(e.what()) + "\n";
  } catch (const std::exception& e) {
    outcome.exit_code = kExitInvalidInput;
    outcome.error = std::string(e.what()) + "\n";
  }
  return outcome;
}

}  // namespace strep
