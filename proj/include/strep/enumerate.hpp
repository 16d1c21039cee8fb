#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "strep/rules.hpp"
#include "strep/word.hpp"

namespace strep {

// Exploration limits for closure enumeration.  `max_length` bounds the word
// lengths visited (inclusive); `max_states` bounds the total number of
// distinct words stored across all lengths.
struct EnumerationBudget {
  std::size_t max_length = 0;
  std::size_t max_states = 1'000'000;
  bool store_witnesses = false;
  bool store_traces = false;
};

// Thrown when enumeration exceeds `max_states`.  Length-budget exhaustion is
// not an error: the closure is simply reported up to `max_length`.
class BudgetExceededError : public std::runtime_error {
 public:
  explicit BudgetExceededError(std::size_t states_seen)
      : std::runtime_error("enumeration state budget exceeded after " +
                           std::to_string(states_seen) + " words"),
        states_seen_(states_seen) {}
  std::size_t states_seen() const { return states_seen_; }

 private:
  std::size_t states_seen_;
};

// A derivation recorded during enumeration: the rule applications that take
// the seed to `word`, in order.
struct DerivedWord {
  Word word;
  std::vector<ReplicationRule> trace;
};

// Census of the closure by word length.  Only lengths with at least one
// reachable word appear in `counts`.  When witnesses were requested,
// `witnesses[n]` lists every reachable word of length n in lexicographic
// order; when traces were requested each witness carries its derivation.
struct LevelProfile {
  std::size_t seed_length = 0;
  std::size_t max_length = 0;
  std::map<std::size_t, std::uint64_t> counts;
  std::map<std::size_t, std::vector<Word>> witnesses;
  std::map<std::size_t, std::vector<std::vector<ReplicationRule>>> traces;
  bool has_witnesses = false;
  bool has_traces = false;

  // Count of reachable words of length n inside the explored range; zero for
  // unreachable lengths, error beyond the explored range.
  std::uint64_t count_at(std::size_t n) const;
};

// Breadth-first closure of `system` under its rule family, stratified by
// length.  Every rule strictly lengthens a word it changes, so each stratum
// is final once all shorter strata have been expanded.  Deterministic: levels
// ascend by length, words within a level are visited in lexicographic order,
// and rule applications are tried in a fixed order, so recorded traces are
// reproducible run to run.
LevelProfile enumerate_closure(const StringSystem& system, const EnumerationBudget& budget);

// Result of a membership query.  `Inconclusive` means the state budget was
// exhausted before the target's length stratum was completed.
enum class Membership { Present, Absent, Inconclusive };

struct MembershipResult {
  Membership outcome = Membership::Absent;
  std::vector<ReplicationRule> trace;  // seed-to-target derivation when present
  std::size_t states_seen = 0;
};

// Decides whether `target` is reachable from the seed, enumerating strata up
// to |target| only.
MembershipResult membership(const StringSystem& system, const Word& target,
                            std::size_t max_states = 1'000'000);

// Number of words a duplication system with `bins` independent growth sites
// reaches after distributing `rounds` indistinguishable insertions among
// them: the multiset coefficient C(bins + rounds - 1, bins - 1).  Exact;
// throws std::overflow_error if the value does not fit in 64 bits.
std::uint64_t multiset_count(std::uint64_t bins, std::uint64_t rounds);

// Census exporters.  The TSV form lists one `length<TAB>count` row per
// reachable length, preceded by a header row.
std::string profile_to_tsv(const LevelProfile& profile);
std::string witnesses_to_text(const LevelProfile& profile, const Alphabet& alphabet);
std::string traces_to_text(const LevelProfile& profile, const Alphabet& alphabet);

}  // namespace strep
