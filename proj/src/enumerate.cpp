#include "strep/enumerate.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <unordered_map>
#include <utility>

namespace strep {

namespace {

// Parent link for trace reconstruction: the rule applied and the word it was
// applied to.  Keyed by the child's raw bytes.
using ParentMap = std::unordered_map<std::string, std::pair<ReplicationRule, Word>>;

struct BfsState {
  std::map<std::size_t, std::set<Word>> levels;
  ParentMap parents;
  std::size_t states = 0;
};

// Expands strata in ascending length order.  Inserting a word never touches
// its own or a shorter stratum (every genuine rewrite strictly lengthens the
// word), so iterating `levels` by key while inserting larger keys is safe and
// each stratum is final by the time it is expanded.
BfsState run_bfs(const StringSystem& system, std::size_t max_length,
                 std::size_t max_states, bool track_parents) {
  BfsState st;
  if (system.seed.size() <= max_length) {
    st.levels[system.seed.size()].insert(system.seed);
    st.states = 1;
    if (st.states > max_states) throw BudgetExceededError(st.states);
  }
  for (auto it = st.levels.begin(); it != st.levels.end(); ++it) {
    for (const Word& x : it->second) {
      for_each_application(system.family, x,
                          [&](const ReplicationRule& rule, const Word& y) {
        if (y.size() > max_length) return;
        auto [pos, inserted] = st.levels[y.size()].insert(y);
        if (!inserted) return;
        ++st.states;
        if (st.states > max_states) throw BudgetExceededError(st.states);
        if (track_parents) st.parents.emplace(y.raw(), std::make_pair(rule, x));
      });
    }
  }
  return st;
}

std::vector<ReplicationRule> reconstruct_trace(const ParentMap& parents,
                                               const Word& seed, const Word& target) {
  std::vector<ReplicationRule> trace;
  Word cur = target;
  while (!(cur == seed)) {
    auto it = parents.find(cur.raw());
    if (it == parents.end())
      throw std::logic_error("enumeration: broken parent chain");
    trace.push_back(it->second.first);
    cur = it->second.second;
  }
  std::reverse(trace.begin(), trace.end());
  return trace;
}

}  // namespace

std::uint64_t LevelProfile::count_at(std::size_t n) const {
  if (n > max_length)
    throw std::out_of_range("profile: length beyond the explored range");
  auto it = counts.find(n);
  return it == counts.end() ? 0 : it->second;
}

LevelProfile enumerate_closure(const StringSystem& system, const EnumerationBudget& budget) {
  bool witnesses = budget.store_witnesses || budget.store_traces;
  BfsState st = run_bfs(system, budget.max_length, budget.max_states, budget.store_traces);

  LevelProfile profile;
  profile.seed_length = system.seed.size();
  profile.max_length = budget.max_length;
  profile.has_witnesses = witnesses;
  profile.has_traces = budget.store_traces;
  for (const auto& [n, words] : st.levels) {
    profile.counts[n] = static_cast<std::uint64_t>(words.size());
    if (!witnesses) continue;
    auto& level_witnesses = profile.witnesses[n];
    level_witnesses.assign(words.begin(), words.end());
    if (!budget.store_traces) continue;
    auto& level_traces = profile.traces[n];
    level_traces.reserve(level_witnesses.size());
    for (const Word& w : level_witnesses)
      level_traces.push_back(reconstruct_trace(st.parents, system.seed, w));
  }
  return profile;
}

MembershipResult membership(const StringSystem& system, const Word& target,
                            std::size_t max_states) {
  MembershipResult result;
  if (target == system.seed) {
    result.outcome = Membership::Present;
    result.states_seen = 1;
    return result;
  }
  if (target.size() < system.seed.size()) {
    result.outcome = Membership::Absent;
    return result;
  }
  try {
    BfsState st = run_bfs(system, target.size(), max_states, true);
    result.states_seen = st.states;
    auto level = st.levels.find(target.size());
    if (level != st.levels.end() && level->second.count(target)) {
      result.outcome = Membership::Present;
      result.trace = reconstruct_trace(st.parents, system.seed, target);
    } else {
      result.outcome = Membership::Absent;
    }
  } catch (const BudgetExceededError& e) {
    result.outcome = Membership::Inconclusive;
    result.states_seen = e.states_seen();
  }
  return result;
}

std::uint64_t multiset_count(std::uint64_t bins, std::uint64_t rounds) {
  if (bins == 0) throw std::invalid_argument("multiset_count: need at least one bin");
  // C(bins + rounds - 1, rounds), computed as a running exact product.  Each
  // prefix product is itself a binomial coefficient, hence divisible.
  std::uint64_t n = bins + rounds - 1;
  std::uint64_t r = std::min(rounds, n - rounds);
  unsigned __int128 acc = 1;
  constexpr unsigned __int128 kLimit = ~std::uint64_t{0};
  for (std::uint64_t i = 1; i <= r; ++i) {
    acc = acc * (n - r + i) / i;
    if (acc > kLimit) throw std::overflow_error("multiset_count: result exceeds 64 bits");
  }
  return static_cast<std::uint64_t>(acc);
}

std::string profile_to_tsv(const LevelProfile& profile) {
  std::ostringstream out;
  out << "length\tcount\n";
  for (const auto& [n, c] : profile.counts) out << n << '\t' << c << '\n';
  return out.str();
}

std::string witnesses_to_text(const LevelProfile& profile, const Alphabet& alphabet) {
  if (!profile.has_witnesses)
    throw std::logic_error("profile: witnesses were not recorded");
  std::ostringstream out;
  for (const auto& [n, words] : profile.witnesses)
    for (const Word& w : words) out << n << '\t' << alphabet.format(w) << '\n';
  return out.str();
}

std::string traces_to_text(const LevelProfile& profile, const Alphabet& alphabet) {
  if (!profile.has_traces)
    throw std::logic_error("profile: traces were not recorded");
  std::ostringstream out;
  for (const auto& [n, words] : profile.witnesses) {
    auto traces_it = profile.traces.find(n);
    for (std::size_t i = 0; i < words.size(); ++i)
      out << n << '\t' << alphabet.format(words[i]) << '\t'
          << trace_to_string(traces_it->second[i]) << '\n';
  }
  return out.str();
}

}  // namespace strep
