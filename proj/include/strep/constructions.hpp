#pragma once

#include <cstddef>
#include <vector>

#include "strep/rules.hpp"
#include "strep/word.hpp"

namespace strep {

// A word built from a start word together with the exact rule sequence that
// builds it: `trace_replay(start, trace) == output` always holds.
struct ConstructionResult {
  Word output;
  std::vector<ReplicationRule> trace;

  std::size_t steps() const { return trace.size(); }
};

// End replication, block length k: extends x so that it ends with the chosen
// word w (|w| = k, every symbol of w occurring in x).  Uses exactly 2k steps:
// one priming step that makes every cyclic k-window of x available, then two
// steps per target symbol (one per symbol for the first).  The key fact this
// procedure witnesses: under end replication any admissible suffix is
// reachable in a number of steps linear in k, so long suffixes carry the
// growth of the system.
ConstructionResult end_force_suffix(const Word& x, std::size_t k, const Word& w);

struct CompactDistinctResult {
  ConstructionResult construction;
  std::size_t window_pos;  // 0-based start of a window holding all distinct symbols
};

// Tandem replication with unconstrained block lengths: produces a word
// containing a window of length d that holds all d distinct symbols of s,
// in d-1 steps.  Requires at least two distinct symbols.
CompactDistinctResult tandem_compact_distinct(const Word& s);

struct SeedPrepResult {
  ConstructionResult construction;
  std::size_t pattern_pos;  // 0-based start of the run/boundary pattern
  bool run_first;           // true: run then boundary symbol; false: boundary then run
  Symbol run_symbol;
  Symbol boundary_symbol;
};

// Tandem replication with block lengths >= k: k preparatory steps with
// blocks k, k+1, ..., 2k-1 anchored at the left edge.  The result always
// contains a length-k run of the seed's first symbol; next to the (maximal
// extension of the) run sits some other symbol, giving an
// `aaa..a b` or `b a..aaa` pattern whose position is returned.  This pattern
// is the launch point for growth arguments.  Requires |s| >= k and at least
// two distinct symbols.
SeedPrepResult tandem_atleast_seed_prep(const Word& s, std::size_t k);

// Reversed-tandem replication, fixed block length k >= 2: extends y so that
// it ends with the symbol a (which must occur in y).  Moves a mirrored copy
// of an occurrence rightward, k-1 positions per full step, using parity
// fix-ups for the remainder.
ConstructionResult rt_push_to_end(const Word& y, std::size_t k, Symbol a);

// Reversed-tandem replication, fixed block length k >= 2: extends y so that
// it ends with the word x.  Requires each symbol to occur at least as often
// in y as in x.  Places x back to front, pushing each symbol to the end of
// the then-current prefix.
ConstructionResult rt_embed_as_suffix(const Word& y, std::size_t k, const Word& x);

// Gap replication with pattern lengths (k, k'), gcd(k, k') = 1: extends y
// (|y| >= k+k') so that it ends with the symbol a (which must occur in y).
// Tail-padding steps adjust the distance-to-end to a multiple of k', then
// each carrying step moves the tracked occurrence k' closer to the end.
ConstructionResult gap_push_to_end(const Word& y, std::size_t k, std::size_t kprime, Symbol a);

struct DistinctRoundResult {
  ReplicationRule first;                 // shared first step, applied to the seed prefix
  Word intermediate;                     // seed prefix after the first step
  std::vector<ReplicationRule> second;   // one rule per distinct outcome, aligned with words
  std::vector<Word> words;               // distinct two-step outcomes, sorted

  std::size_t count() const { return words.size(); }
};

// Gap replication with pattern lengths (k, k'): applies one fixed first step
// to the length-(k+k') prefix of s, then every second step at offsets
// 0..k, and collects the distinct outcomes.  Their number is exactly
// 1 + H where H is the Hamming distance between the prefix's first k symbols
// and its next k symbols read cyclically — the same quantity that drives
// the gap growth bound.
DistinctRoundResult gap_distinct_round(const Word& s, std::size_t k, std::size_t kprime);

}  // namespace strep
