#include <cstdint>

#include "doctest.h"
#include "strep/enumerate.hpp"

using namespace strep;

namespace {

StringSystem make_system(std::string_view descriptor) {
  return SystemDescriptor::parse(descriptor).instantiate();
}

}  // namespace

TEST_CASE("closure census matches hand-computed counts") {
  // Unit-block appends from a binary seed double the census every level.
  StringSystem ends = make_system("variant:end;k=1;mode=fixed;seed=01;alphabet=0");
  LevelProfile p = enumerate_closure(ends, {.max_length = 8});
  for (std::size_t t = 0; t <= 6; ++t)
    CHECK(p.count_at(2 + t) == std::uint64_t{1} << t);

  // Reversed-block insertion, block length 2, seed 01: strata grow in steps
  // of two and the first few counts are known exactly.
  StringSystem rt = make_system("variant:rt;k=2;mode=fixed;seed=01;alphabet=0");
  LevelProfile q = enumerate_closure(rt, {.max_length = 10});
  CHECK(q.count_at(2) == 1);
  CHECK(q.count_at(4) == 1);
  CHECK(q.count_at(6) == 3);
  CHECK(q.count_at(8) == 10);
  CHECK(q.count_at(10) == 37);

  // Adjacent-copy insertion with block 2 from 0011: counts follow the
  // stars-and-bars formula with three insertion sites.
  StringSystem tan = make_system("variant:tan;k=2;mode=fixed;seed=0011;alphabet=0");
  LevelProfile r = enumerate_closure(tan, {.max_length = 12});
  for (std::uint64_t m = 0; m <= 4; ++m)
    CHECK(r.count_at(4 + 2 * m) == multiset_count(3, m));
}

TEST_CASE("count_at distinguishes unreachable from unexplored") {
  StringSystem rt = make_system("variant:rt;k=2;mode=fixed;seed=01;alphabet=0");
  LevelProfile p = enumerate_closure(rt, {.max_length = 6});
  CHECK(p.count_at(1) == 0);
  CHECK(p.count_at(3) == 0);  // in range but no odd-length word is reachable
  CHECK(p.count_at(5) == 0);
  CHECK_THROWS_AS(p.count_at(7), std::out_of_range);
}

TEST_CASE("state budget exhaustion raises with the observed state count") {
  StringSystem ends = make_system("variant:end;k=1;mode=fixed;seed=01;alphabet=0");
  CHECK_THROWS_AS(enumerate_closure(ends, {.max_length = 30, .max_states = 100}),
                  BudgetExceededError);
  try {
    enumerate_closure(ends, {.max_length = 30, .max_states = 100});
  } catch (const BudgetExceededError& e) {
    CHECK(e.states_seen() > 100);
    CHECK(std::string(e.what()).find("state budget exceeded") != std::string::npos);
  }
}

TEST_CASE("enumeration is deterministic, witnesses sorted, traces replay") {
  StringSystem rt = make_system("variant:rt;k=2;mode=fixed;seed=012;alphabet=0");
  EnumerationBudget budget{.max_length = 8, .store_witnesses = true, .store_traces = true};
  LevelProfile a = enumerate_closure(rt, budget);
  LevelProfile b = enumerate_closure(rt, budget);

  CHECK(profile_to_tsv(a) == profile_to_tsv(b));
  CHECK(witnesses_to_text(a, rt.alphabet) == witnesses_to_text(b, rt.alphabet));
  CHECK(traces_to_text(a, rt.alphabet) == traces_to_text(b, rt.alphabet));

  for (const auto& [n, words] : a.witnesses) {
    CHECK(std::is_sorted(words.begin(), words.end()));
    CHECK(words.size() == a.count_at(n));
    const auto& traces = a.traces.at(n);
    REQUIRE(traces.size() == words.size());
    for (std::size_t i = 0; i < words.size(); ++i)
      CHECK(trace_replay(rt.seed, traces[i]) == words[i]);
  }
}

TEST_CASE("census exporters emit tab-separated rows") {
  StringSystem unary = make_system("variant:end;k=1;mode=fixed;seed=0;alphabet=1");
  EnumerationBudget budget{.max_length = 3, .store_witnesses = true, .store_traces = true};
  LevelProfile p = enumerate_closure(unary, budget);
  CHECK(profile_to_tsv(p) == "length\tcount\n1\t1\n2\t1\n3\t1\n");
  CHECK(witnesses_to_text(p, unary.alphabet) == "1\t0\n2\t00\n3\t000\n");
  CHECK(traces_to_text(p, unary.alphabet) ==
        "1\t0\t\n2\t00\tend(0,1)\n3\t000\tend(0,1);end(0,1)\n");

  LevelProfile bare = enumerate_closure(unary, {.max_length = 2});
  CHECK_THROWS_AS(witnesses_to_text(bare, unary.alphabet), std::logic_error);
  CHECK_THROWS_AS(traces_to_text(bare, unary.alphabet), std::logic_error);
}

TEST_CASE("membership finds words, rejects strangers, respects budgets") {
  StringSystem rt = make_system("variant:rt;k=2;mode=fixed;seed=01;alphabet=0");
  Alphabet binary = rt.alphabet;

  MembershipResult hit = membership(rt, binary.parse("011001"));
  REQUIRE(hit.outcome == Membership::Present);
  CHECK(trace_replay(rt.seed, hit.trace) == binary.parse("011001"));
  CHECK(hit.states_seen > 0);

  MembershipResult self = membership(rt, rt.seed);
  REQUIRE(self.outcome == Membership::Present);
  CHECK(self.trace.empty());

  MembershipResult miss = membership(rt, binary.parse("0111"));
  CHECK(miss.outcome == Membership::Absent);
  CHECK(miss.trace.empty());

  MembershipResult wrong_parity = membership(rt, binary.parse("01100"));
  CHECK(wrong_parity.outcome == Membership::Absent);

  StringSystem ends = make_system("variant:end;k=1;mode=fixed;seed=01;alphabet=0");
  MembershipResult starved = membership(ends, binary.parse("0110011001"), 10);
  CHECK(starved.outcome == Membership::Inconclusive);
}

TEST_CASE("multiset coefficients are exact and guard overflow") {
  CHECK(multiset_count(1, 0) == 1);
  CHECK(multiset_count(1, 9) == 1);
  CHECK(multiset_count(3, 0) == 1);
  CHECK(multiset_count(3, 1) == 3);
  CHECK(multiset_count(3, 2) == 6);
  CHECK(multiset_count(3, 4) == 15);
  CHECK(multiset_count(2, 7) == 8);
  CHECK(multiset_count(5, 3) == 35);  // C(7,4)
  CHECK(multiset_count(7, 40) == 9366819);  // C(46,6)
  CHECK_THROWS_AS(multiset_count(40, 40), std::overflow_error);
  CHECK_THROWS_AS(multiset_count(0, 3), std::invalid_argument);
}
