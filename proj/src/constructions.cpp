#include "strep/constructions.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace strep {

namespace {

// Applies rules one at a time, insisting that every step genuinely rewrites
// the word; a no-op application signals a bug in the calling procedure.
class TraceBuilder {
 public:
  explicit TraceBuilder(Word start) : cur_(std::move(start)) {}

  const Word& word() const { return cur_; }
  std::size_t size() const { return cur_.size(); }

  void step(const ReplicationRule& rule) {
    Word next = apply(rule, cur_);
    if (next.size() == cur_.size())
      throw std::logic_error("construction: rule application did not grow the word");
    cur_ = std::move(next);
    trace_.push_back(rule);
  }

  ConstructionResult finish() && { return {std::move(cur_), std::move(trace_)}; }

 private:
  Word cur_;
  std::vector<ReplicationRule> trace_;
};

ReplicationRule end_rule(std::size_t offset, std::size_t block) {
  return {Variant::End, offset, block, 0};
}
ReplicationRule tandem_rule(std::size_t offset, std::size_t block) {
  return {Variant::Tandem, offset, block, 0};
}
ReplicationRule rt_rule(std::size_t offset, std::size_t block) {
  return {Variant::ReversedTandem, offset, block, 0};
}
ReplicationRule gap_rule(std::size_t offset, std::size_t block, std::size_t gap) {
  return {Variant::Gap, offset, block, gap};
}

}  // namespace

ConstructionResult end_force_suffix(const Word& x, std::size_t k, const Word& w) {
  if (k == 0) throw std::invalid_argument("end_force_suffix: block length must be positive");
  if (x.size() < k) throw std::invalid_argument("end_force_suffix: word shorter than the block");
  if (w.size() != k)
    throw std::invalid_argument("end_force_suffix: target suffix must have length k");
  auto present = alpha_representation(x);
  for (Symbol a : w)
    if (!present.count(a))
      throw std::invalid_argument("end_force_suffix: target suffix uses an absent symbol");

  TraceBuilder tb(x);
  // Priming step: append the first k symbols.  The resulting prefix
  // xp = x + x[0..k) exposes every cyclic k-window of x at an offset < |x|,
  // and stays a prefix of the word from here on, so each window below can be
  // copied from a fixed offset at any later time.
  tb.step(end_rule(0, k));
  const Word xp = tb.word();

  auto window_ending_with = [&](Symbol target) {
    for (std::size_t i = 0; i < x.size(); ++i)
      if (xp[i + k - 1] == target) return i;
    throw std::logic_error("end_force_suffix: missing window");
  };
  auto window_starting_with = [&](Symbol target) {
    for (std::size_t i = 0; i < x.size(); ++i)
      if (xp[i] == target) return i;
    throw std::logic_error("end_force_suffix: missing window");
  };

  // First target symbol: copy a window that ends with it.
  tb.step(end_rule(window_ending_with(w[0]), k));
  // Each further target symbol w[j] takes two steps: copy a window starting
  // with w[j], then copy the k-window that ends on that symbol.  The latter
  // window closes with w[0..j] (the j placed symbols sit right before the
  // fresh w[j]), so appending it extends the built suffix by one symbol.
  for (std::size_t j = 1; j < k; ++j) {
    std::size_t size_before = tb.size();
    tb.step(end_rule(window_starting_with(w[j]), k));
    tb.step(end_rule(size_before - k + 1, k));
  }
  return std::move(tb).finish();
}

CompactDistinctResult tandem_compact_distinct(const Word& s) {
  std::map<Symbol, std::size_t> first_at;  // symbol -> first 1-based position
  for (std::size_t i = 0; i < s.size(); ++i) first_at.try_emplace(s[i], i + 1);
  if (first_at.size() < 2)
    throw std::invalid_argument("tandem_compact_distinct: need two distinct symbols");

  std::vector<std::size_t> occ;
  for (const auto& [sym, pos] : first_at) occ.push_back(pos);
  std::sort(occ.begin(), occ.end());
  const std::size_t d = occ.size();
  const std::size_t anchor = occ[d - 1];  // 1-based start of the window built below

  TraceBuilder tb(s);
  // Step j replays the stretch from the first occurrence of the j-th-from-
  // last symbol up to the growing window, landing a copy of that symbol at
  // window position j.  After d-1 steps positions anchor..anchor+d-1 hold
  // one copy of each distinct symbol.
  for (std::size_t j = 1; j < d; ++j) {
    std::size_t low = occ[d - 1 - j];
    tb.step(tandem_rule(low - 1, anchor - low + j));
  }
  return {std::move(tb).finish(), anchor - 1};
}

SeedPrepResult tandem_atleast_seed_prep(const Word& s, std::size_t k) {
  if (k == 0)
    throw std::invalid_argument("tandem_atleast_seed_prep: block length must be positive");
  if (s.size() < k)
    throw std::invalid_argument("tandem_atleast_seed_prep: seed shorter than the block");
  if (alpha_diversity(s) < 2)
    throw std::invalid_argument("tandem_atleast_seed_prep: need two distinct symbols");

  TraceBuilder tb(s);
  // Left-anchored doubling with blocks k..2k-1: step t rewrites the prefix
  // v of length k+t into vv, so the symbol at position k+t becomes a copy of
  // the first symbol, and later steps (larger blocks) never disturb it.
  for (std::size_t t = 0; t < k; ++t) tb.step(tandem_rule(0, k + t));

  ConstructionResult cr = std::move(tb).finish();
  const Word& sp = cr.output;
  const Symbol a = sp[0];
  for (std::size_t i = k; i < 2 * k; ++i)
    if (sp[i] != a) throw std::logic_error("tandem_atleast_seed_prep: run invariant broken");

  // Maximal run of a covering positions k..2k-1, then the adjacent
  // boundary symbol on whichever side the word continues.
  std::size_t lo = k, hi = 2 * k - 1;
  while (lo > 0 && sp[lo - 1] == a) --lo;
  while (hi + 1 < sp.size() && sp[hi + 1] == a) ++hi;

  SeedPrepResult out{std::move(cr), 0, true, a, 0};
  const Word& word = out.construction.output;
  if (hi + 1 < word.size()) {
    out.pattern_pos = hi + 1 - k;
    out.run_first = true;
    out.boundary_symbol = word[hi + 1];
  } else if (lo > 0) {
    out.pattern_pos = lo - 1;
    out.run_first = false;
    out.boundary_symbol = word[lo - 1];
  } else {
    throw std::logic_error("tandem_atleast_seed_prep: word is a single-symbol run");
  }
  return out;
}

ConstructionResult rt_push_to_end(const Word& y, std::size_t k, Symbol a) {
  if (k < 2) throw std::invalid_argument("rt_push_to_end: block length must be at least 2");
  if (y.size() < k) throw std::invalid_argument("rt_push_to_end: word shorter than the block");
  if (occurrences(y, a) == 0)
    throw std::invalid_argument("rt_push_to_end: symbol does not occur in the word");

  TraceBuilder tb(y);
  if (tb.word().back() == a) return std::move(tb).finish();

  // Grow to length >= 2k so an occurrence with mirror room on both sides
  // exists.  Only the |word| == k doubling can change the last symbol.
  while (tb.size() < 2 * k) tb.step(rt_rule(0, k));
  if (tb.word().back() == a) return std::move(tb).finish();

  // Track one occurrence at 0-based p, preferring one with k-1 positions of
  // room on the left and k on the right.
  std::size_t n = tb.size();
  std::size_t p = n;
  std::size_t leftmost = n;
  for (std::size_t i = 0; i < n; ++i) {
    if (tb.word()[i] != a) continue;
    if (leftmost == n) leftmost = i;
    if (i + 1 >= k && n - i - 1 >= k) {
      p = i;
      break;
    }
  }
  if (p == n) p = leftmost;

  // Boundary fix-ups, each restoring both kinds of room: a left-edge mirror
  // moves a too-far-left occurrence to position 2k-1-p >= k+1; a mid-word
  // mirror of the block ending at p pushes the tail k further right.
  if (p + 1 < k) {
    tb.step(rt_rule(0, k));
    p = 2 * k - 1 - p;
  } else if (tb.size() - p - 1 < k) {
    tb.step(rt_rule(p + 1 - k, k));
  }

  const std::size_t full = k - 1;  // distance covered by one full carrying step
  auto dist = [&]() { return tb.size() - 1 - p; };

  // Remainder phase: shrink the distance-to-end to a multiple of k-1.
  if (k % 2 == 0) {
    // Mirroring the block centred just past p carries the occurrence k+1
    // to the right while the word grows by k: distance shrinks by 1.
    std::size_t r = dist() % full;
    for (std::size_t t = 0; t < r; ++t) {
      tb.step(rt_rule(p + 1 - k / 2, k));
      p += k + 1;
    }
  } else {
    // Odd k: the centred mirror shifts the distance by 2 per step, so first
    // fix its parity if needed (an in-place mirror of the block starting at
    // p leaves p alone and grows the word by k, changing the remainder's
    // parity because k-1 is even and k is odd).
    if (dist() % full % 2 == 1) tb.step(rt_rule(p, k));
    std::size_t r = dist() % full;
    for (std::size_t t = 0; t < r / 2; ++t) {
      tb.step(rt_rule(p + 1 - (k - 1) / 2, k));
      p += k + 2;
    }
  }
  // Full carrying steps: mirror the block starting at the occurrence; the
  // mirrored copy ends 2k-1 further right while the word grows by k.
  while (dist() > 0) {
    tb.step(rt_rule(p, k));
    p += 2 * k - 1;
  }
  if (p + 1 != tb.size() || tb.word()[p] != a)
    throw std::logic_error("rt_push_to_end: carry invariant broken");
  return std::move(tb).finish();
}

ConstructionResult rt_embed_as_suffix(const Word& y, std::size_t k, const Word& x) {
  if (k < 2)
    throw std::invalid_argument("rt_embed_as_suffix: block length must be at least 2");
  if (y.size() < k)
    throw std::invalid_argument("rt_embed_as_suffix: word shorter than the block");
  for (Symbol a : alpha_representation(x))
    if (occurrences(y, a) < occurrences(x, a))
      throw std::invalid_argument("rt_embed_as_suffix: too few occurrences for the suffix");

  TraceBuilder tb(y);
  if (x.empty()) return std::move(tb).finish();
  // Headroom first: every working prefix below must keep at least k symbols
  // even with |x|-1 placed symbols excluded.
  while (tb.size() < k + x.size()) tb.step(rt_rule(0, k));

  // Place x back to front.  Round `done` freezes the already-placed suffix
  // x[j+1..] and pushes x[j] to the end of the remaining prefix; the push's
  // rules all rewrite inside that prefix, so replaying them on the full word
  // shifts the frozen suffix right but never changes it.
  for (std::size_t done = 0; done < x.size(); ++done) {
    std::size_t j = x.size() - 1 - done;
    Word prefix = tb.word().prefix(tb.size() - done);
    ConstructionResult push = rt_push_to_end(prefix, k, x[j]);
    for (const ReplicationRule& rule : push.trace) tb.step(rule);
  }
  return std::move(tb).finish();
}

ConstructionResult gap_push_to_end(const Word& y, std::size_t k, std::size_t kprime,
                                   Symbol a) {
  if (k == 0 || kprime == 0)
    throw std::invalid_argument("gap_push_to_end: pattern lengths must be positive");
  if (std::gcd(k, kprime) != 1)
    throw std::invalid_argument("gap_push_to_end: pattern lengths must be coprime");
  if (y.size() < k + kprime)
    throw std::invalid_argument("gap_push_to_end: word shorter than the pattern");
  if (occurrences(y, a) == 0)
    throw std::invalid_argument("gap_push_to_end: symbol does not occur in the word");

  TraceBuilder tb(y);
  if (tb.word().back() == a) return std::move(tb).finish();

  // Track one occurrence at 0-based p with at least k symbols to its left;
  // if none exists, one left-edge copy plants one at p + k + k'.
  std::size_t n = tb.size();
  std::size_t p = n;
  for (std::size_t i = k; i < n && p == n; ++i)
    if (tb.word()[i] == a) p = i;
  if (p == n) {
    for (std::size_t i = 0; i < n; ++i)
      if (tb.word()[i] == a) {
        p = i;
        break;
      }
    tb.step(gap_rule(0, k, kprime));
    p += k + kprime;
  }

  auto dist = [&]() { return tb.size() - 1 - p; };

  // Tail pads: replicating in the last k+k' symbols appends k symbols while
  // moving nothing, growing the distance by k per pad until it is a multiple
  // of k'.  Coprimality of k and k' bounds this by k'-1 pads.
  while (dist() % kprime != 0) tb.step(gap_rule(tb.size() - k - kprime, k, kprime));

  // Carrying steps: copy the k-block ending at the occurrence past the k'
  // symbols after it; the copy ends k+k' further right while the word grows
  // by k, so the distance shrinks by k'.
  while (dist() > 0) {
    tb.step(gap_rule(p + 1 - k, k, kprime));
    p += k + kprime;
  }
  if (p + 1 != tb.size() || tb.word()[p] != a)
    throw std::logic_error("gap_push_to_end: carry invariant broken");
  return std::move(tb).finish();
}

DistinctRoundResult gap_distinct_round(const Word& s, std::size_t k, std::size_t kprime) {
  if (k == 0 || kprime == 0)
    throw std::invalid_argument("gap_distinct_round: pattern lengths must be positive");
  if (s.size() < k + kprime)
    throw std::invalid_argument("gap_distinct_round: seed shorter than the pattern");
  Word base = s.prefix(k + kprime);

  DistinctRoundResult out;
  out.first = gap_rule(0, k, kprime);
  out.intermediate = apply(out.first, base);

  // All k+1 admissible second steps; later duplicates keep the first rule
  // that produced the word.
  std::map<Word, ReplicationRule> outcomes;
  for (std::size_t i = 0; i <= k; ++i) {
    ReplicationRule rule = gap_rule(i, k, kprime);
    outcomes.try_emplace(apply(rule, out.intermediate), rule);
  }
  for (const auto& [word, rule] : outcomes) {
    out.words.push_back(word);
    out.second.push_back(rule);
  }
  return out;
}

}  // namespace strep
