#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "strep/enumerate.hpp"
#include "strep/rules.hpp"
#include "strep/word.hpp"

namespace strep {

// How a reported capacity value relates to the true capacity of the system:
//   Exact               value equals the capacity
//   LowerBound          capacity >= value, by a constructive argument
//   ZeroExact           capacity is exactly zero (and value is 0)
//   StrictlyBelowMax    capacity < value, strictly
//   EmpiricalLowerBound capacity >= value, via a measured count that a
//                       self-composition argument turns into a true bound
//   EmpiricalEstimate   value is a measured growth rate with no guarantee
enum class CapacityKind {
  Exact,
  LowerBound,
  ZeroExact,
  StrictlyBelowMax,
  EmpiricalLowerBound,
  EmpiricalEstimate,
};

std::string to_string(CapacityKind kind);

struct CapacityReport {
  double value = 0.0;
  CapacityKind kind = CapacityKind::Exact;
  std::string provenance;  // stable identifier of the producing argument
  std::string system;      // canonical descriptor text (inputs echo)
  std::string witness;     // optional machine-readable supporting data
};

// One-line form: "system=<desc> kind=<kind> value=<6dp> provenance=<id>"
// plus " witness=<...>" when present.
std::string format_report(const CapacityReport& report);

// Fixed 6-decimal formatting used in all value output.
std::string fmt6(double v);

// floor(v * 100): the value truncated to two decimals, as an integer.
int floor_two_decimals(double v);

// True when reversing s and renaming symbols by some bijection can
// reproduce s (palindromes qualify via the identity renaming).  Systems
// with this symmetry compose with themselves under reversed-tandem rules,
// which lifts a measured count into a genuine capacity lower bound.
bool relabel_reverse_matches(const Word& s);

// End replication (either mode, any block length): capacity is exactly the
// log-diversity of the seed, because every word over the seed's symbols can
// be forced as a suffix in boundedly many steps.
CapacityReport end_capacity(const SystemDescriptor& desc);

// Tandem replication with one fixed block length: the reachable count at
// each length is a polynomial binomial in the number of window-class runs
// of the seed, so the capacity is exactly zero (witness carries the runs).
CapacityReport tandem_fixed_capacity(const SystemDescriptor& desc);

// The exact reachable count of a fixed-block tandem system after `rounds`
// replications: multiset_count(b, rounds) with b the seed's window-class
// run count.
std::uint64_t tandem_fixed_count(const StringSystem& system, std::uint64_t rounds);

// Tandem replication, block lengths >= 1, at least two distinct symbols:
// log2(1 + r) with r the unique positive root of the growth automaton's
// characteristic polynomial.  Exact when it meets the log-diversity
// ceiling (two distinct symbols), a lower bound otherwise.
CapacityReport tandem_atleast1_lower(const SystemDescriptor& desc);

// Tandem replication, block lengths >= k, at least two distinct symbols:
// log2(r) with r the unique positive root of x^{k+1} - x - 1, always
// strictly positive.  The underlying construction plants a run/boundary
// pattern (see tandem_atleast_seed_prep) and needs only two distinct
// symbols, so the bound applies to any diversity >= 2; the witness notes
// the measured diversity.
CapacityReport tandem_atleastk_lower(const SystemDescriptor& desc);

// Reversed-tandem replication with block length k equal to the seed length,
// seed not equal to its reversal: blocks and mirrored blocks interleave
// freely, so the capacity is at least 1/k.  Errors when the seed is a
// palindrome or has a different length.
CapacityReport rt_alternating_lower(const SystemDescriptor& desc);

// Reversed-tandem replication, fixed block length k, seed of length exactly
// k with the reversal-renaming symmetry: log2(N(rounds*k)) / (rounds*k)
// read off a closure profile that must cover length rounds*k.  The symmetry
// makes counts super-multiplicative across self-composition, so this is a
// true lower bound.
CapacityReport rt_empirical_lower(const SystemDescriptor& desc, std::size_t rounds,
                                  const LevelProfile& profile);

// Gap replication with pattern lengths (k, k'): (1/k) * log2(1 + H) where H
// is the Hamming distance between the seed's first k symbols and the next k
// symbols of the seed read cyclically (the window at position k+1 of the
// doubled seed).  H = 0 yields the (valid, vacuous) bound 0.
CapacityReport gap_hamming_lower(const SystemDescriptor& desc);

// Gap replication: when the seed misses some pair-position residue modulo
// gcd(k, k') >= 2, every reachable word misses it too, which pins the
// closure inside a pruned sliding-window graph of strictly smaller spectral
// radius.  The report states capacity strictly below log2(diversity) and
// names the deficient pair.  Returns nothing when no pair is deficient,
// when gcd = 1 (a single residue class cannot be deficient), or for unary
// seeds (where the strict form of the statement would be vacuous).
std::optional<CapacityReport> gap_strict_upper_flag(const SystemDescriptor& desc);

// Measured growth rate: the maximum of log2(N(n)) / n over the profile's
// covered lengths.  Explicitly non-certifying; used where no proven
// argument applies.
CapacityReport empirical_estimate(const LevelProfile& profile,
                                  const SystemDescriptor& desc);

struct CapacityOptions {
  bool include_estimate = false;  // additionally report the measured rate
  std::size_t empirical_rounds = 7;
  std::size_t max_states = 1'000'000;
  std::size_t max_length = 0;  // 0: default to |seed| + 8k
};

// Every report that applies to the system, dispatched on variant and mode:
// exact values where known, proven bounds where available, an honest
// estimate otherwise.  For reversed-tandem systems with diversity >= 2 the
// 1/k bound is extended to any non-palindromic length-k window of the seed
// (the freely-interleaving blocks construction works at any offset).
std::vector<CapacityReport> capacity_reports(const SystemDescriptor& desc,
                                             const CapacityOptions& options);

}  // namespace strep
