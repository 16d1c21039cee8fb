#pragma once

#include "strep/word.hpp"

#include <functional>

namespace strep {

enum class Variant { End, Tandem, ReversedTandem, Gap };
enum class Mode { FixedK, AtLeastK };

std::string to_string(Variant v);

/// One concrete rewriting step. `offset` is the number of symbols before
/// the copied block (a length, not a position), `block` its length, and
/// `gap` the skipped length between block and insertion point (gap
/// variant only, 0 otherwise).
struct ReplicationRule {
  Variant variant = Variant::End;
  std::size_t offset = 0;
  std::size_t block = 1;
  std::size_t gap = 0;

  auto operator<=>(const ReplicationRule&) const = default;
};

/// Text form "variant(offset,block[,gap])", e.g. "tan(0,3)" or "gap(1,3,1)".
std::string to_string(const ReplicationRule& r);
ReplicationRule parse_rule(std::string_view text);

/// Total application: returns x unchanged when the rule's pattern does
/// not fit inside x, otherwise a strictly longer word.
///   end    x = uvw        -> uvwv
///   tan    x = uvw        -> uvvw
///   rt     x = uvw        -> u v rev(v) w
///   gap    x = uvwz       -> uvwvz      (|w| = gap)
Word apply(const ReplicationRule& r, const Word& x);

/// A parameterized family of rules: all offsets of one variant, either
/// with the exact block length (FixedK) or every block length >= block
/// (AtLeastK; end and tandem only). Gap families are always FixedK and
/// carry a positive gap.
struct RuleFamily {
  Variant variant = Variant::End;
  Mode mode = Mode::FixedK;
  std::size_t block = 1;
  std::size_t gap = 0;

  static RuleFamily fixed(Variant v, std::size_t k, std::size_t kprime = 0);
  static RuleFamily at_least(Variant v, std::size_t k);
};

/// Every (rule, result) with the rule drawn from the family and the
/// result a genuine rewrite of x, in deterministic order: block lengths
/// ascending, offsets ascending.
void for_each_application(const RuleFamily& fam, const Word& x,
                          const std::function<void(const ReplicationRule&, const Word&)>& fn);

/// Distinct one-step successors of x (never contains x), sorted.
std::vector<Word> successors(const RuleFamily& fam, const Word& x);

/// Left fold of apply over the trace.
Word trace_replay(const Word& start, const std::vector<ReplicationRule>& trace);

std::string trace_to_string(const std::vector<ReplicationRule>& trace);
std::vector<ReplicationRule> parse_trace(std::string_view text);

/// A seed word, its alphabet, and a rule family. Construction validates
/// that the seed fits the alphabet and is long enough for the family's
/// pattern to apply at least in principle (|seed| >= block, and
/// >= block+gap for gap families).
struct StringSystem {
  Alphabet alphabet;
  Word seed;
  RuleFamily family;

  StringSystem(Alphabet alphabet_, Word seed_, RuleFamily family_);
};

/// Canonical text key for a system:
///   "variant:rt;k=2;mode=fixed;seed=01;alphabet=2"
/// (gap systems add ";kprime=<int>" right after k). parse/format are
/// exact inverses on canonical strings; parse also accepts spaces after
/// the separators.
struct SystemDescriptor {
  Variant variant = Variant::End;
  Mode mode = Mode::FixedK;
  std::size_t k = 1;
  std::size_t kprime = 0;
  std::string seed_text;
  int alphabet_size = 0;  // 0 means: infer from seed text

  static SystemDescriptor parse(std::string_view text);
  std::string format() const;

  /// Builds the concrete system. The alphabet display map is inferred
  /// from the seed text: digit seeds use the digit display, other seeds
  /// map characters by first appearance.
  StringSystem instantiate() const;
  Alphabet make_alphabet() const;
};

}  // namespace strep
