#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace strep {

/// Dense symbol index into an Alphabet (0..sigma-1).
using Symbol = unsigned char;

/// Finite sequence of symbol indices; the empty word is a legal value.
/// Comparison is lexicographic on symbol indices (std::string compares
/// chars as unsigned, so the full 0..255 index range orders correctly).
class Word {
public:
  Word() = default;
  Word(std::initializer_list<int> symbols);

  /// Adopts a byte string whose chars are raw symbol indices.
  static Word from_raw(std::string raw) { return Word(std::move(raw)); }

  std::size_t size() const { return raw_.size(); }
  bool empty() const { return raw_.empty(); }
  Symbol operator[](std::size_t i) const { return static_cast<Symbol>(raw_[i]); }
  Symbol front() const { return (*this)[0]; }
  Symbol back() const { return (*this)[raw_.size() - 1]; }

  const Symbol* begin() const { return reinterpret_cast<const Symbol*>(raw_.data()); }
  const Symbol* end() const { return begin() + raw_.size(); }

  Word substr(std::size_t pos, std::size_t len) const;
  Word prefix(std::size_t len) const { return substr(0, len); }
  Word suffix(std::size_t len) const;
  void push_back(Symbol a) { raw_.push_back(static_cast<char>(a)); }

  /// Raw bytes; doubles as the canonical deduplication key.
  const std::string& raw() const { return raw_; }

  friend Word operator+(const Word& a, const Word& b) { return Word(a.raw_ + b.raw_); }
  auto operator<=>(const Word&) const = default;
  bool operator==(const Word&) const = default;

private:
  explicit Word(std::string raw) : raw_(std::move(raw)) {}
  std::string raw_;
};

/// Symbol inventory plus an optional printable display map. Symbols are
/// always the dense indices 0..size-1; the display map is presentation
/// only and never affects any computation.
class Alphabet {
public:
  /// Digits 0-9 as display when size <= 10, dotted-index form otherwise.
  explicit Alphabet(int size);
  /// Custom display map; display.size() must equal size and be injective.
  Alphabet(int size, std::string display);

  int size() const { return size_; }
  bool has_display() const { return !display_.empty(); }
  char display_char(Symbol a) const;
  std::optional<Symbol> symbol_of(char c) const;
  bool contains(const Word& w) const;

  /// Text form: one display char per symbol, or dotted indices ("0.1.2")
  /// when no display map is available.
  Word parse(std::string_view text) const;
  std::string format(const Word& w) const;

private:
  int size_;
  std::string display_;  // empty means dotted-index form
};

// ---- word functionals ------------------------------------------------

/// Set of symbols occurring in w.
std::set<Symbol> alpha_representation(const Word& w);

/// Number of distinct symbols in w.
int alpha_diversity(const Word& w);

/// Number of positions holding symbol a.
std::size_t occurrences(const Word& w, Symbol a);

Word reversed(const Word& w);

/// Positions where u and v disagree; requires |u| == |v|.
std::size_t hamming(const Word& u, const Word& v);

/// Left rotation by j (any integer, reduced mod |w|); requires |w| >= 1.
Word cyclic_shift(const Word& w, long long j);

/// Equivalence class of w under rotation, keyed by the lexicographically
/// least rotation.
struct CyclicClass {
  Word representative;
  auto operator<=>(const CyclicClass&) const = default;
  bool operator==(const CyclicClass&) const = default;
};
CyclicClass cyclic_class(const Word& w);

/// True when w[i] == w[i+p] for every valid i; requires 1 <= p <= |w|.
bool is_periodic(const Word& w, std::size_t p);

/// Rotation classes of the |w|-k+1 overlapping k-windows of w, plus the
/// run structure of that class sequence: bins = 1 + number of adjacent
/// class changes.
struct PhiProfile {
  Word first_window;
  std::vector<CyclicClass> classes;
  std::size_t bins = 0;
};
PhiProfile phi_profile(const Word& w, std::size_t k);

/// Inverse of phi_profile given the first window: the unique word whose
/// window-class sequence matches. Throws when the sequence is not
/// realizable by sliding one symbol at a time.
Word reconstruct_from_phi(const Word& first_window,
                          const std::vector<CyclicClass>& classes);

/// For each ordered symbol pair (a,b) present in w: the set of position
/// differences j with w[i] == a and w[i+j] == b, and those differences
/// reduced mod `modulus` (non-negative residues).
struct PositionDifferenceProfile {
  std::size_t modulus = 0;
  std::map<std::pair<Symbol, Symbol>, std::set<long long>> differences;
  std::map<std::pair<Symbol, Symbol>, std::set<std::size_t>> residues;
};
PositionDifferenceProfile position_profile(const Word& w, std::size_t modulus);

}  // namespace strep
