#include "strep/word.hpp"

#include <algorithm>

namespace strep {

Word::Word(std::initializer_list<int> symbols) {
  raw_.reserve(symbols.size());
  for (int v : symbols) {
    if (v < 0 || v > 255) throw std::invalid_argument("word: symbol index out of range");
    raw_.push_back(static_cast<char>(v));
  }
}

Word Word::substr(std::size_t pos, std::size_t len) const {
  if (pos > raw_.size() || len > raw_.size() - pos)
    throw std::invalid_argument("word: substring out of range");
  return Word(raw_.substr(pos, len));
}

Word Word::suffix(std::size_t len) const {
  if (len > raw_.size()) throw std::invalid_argument("word: suffix longer than word");
  return substr(raw_.size() - len, len);
}

Alphabet::Alphabet(int size) : size_(size) {
  if (size < 1 || size > 255) throw std::invalid_argument("alphabet: size must be in 1..255");
  if (size <= 10) display_ = std::string("0123456789").substr(0, static_cast<std::size_t>(size));
}

Alphabet::Alphabet(int size, std::string display) : size_(size), display_(std::move(display)) {
  if (size < 1 || size > 255) throw std::invalid_argument("alphabet: size must be in 1..255");
  if (display_.size() != static_cast<std::size_t>(size))
    throw std::invalid_argument("alphabet: display map size mismatch");
  for (std::size_t i = 0; i < display_.size(); ++i)
    for (std::size_t j = i + 1; j < display_.size(); ++j)
      if (display_[i] == display_[j])
        throw std::invalid_argument("alphabet: display map not injective");
}

char Alphabet::display_char(Symbol a) const {
  if (!has_display() || a >= size_) throw std::invalid_argument("alphabet: no display for symbol");
  return display_[a];
}

std::optional<Symbol> Alphabet::symbol_of(char c) const {
  auto pos = display_.find(c);
  if (pos == std::string::npos) return std::nullopt;
  return static_cast<Symbol>(pos);
}

bool Alphabet::contains(const Word& w) const {
  for (Symbol a : w)
    if (a >= size_) return false;
  return true;
}

Word Alphabet::parse(std::string_view text) const {
  std::string raw;
  // Dotted-index form works under any display as long as '.' is not a
  // display char itself; display parse is attempted first.
  bool dotted = !has_display() ||
                (text.find('.') != std::string_view::npos && !symbol_of('.').has_value());
  if (!dotted) {
    raw.reserve(text.size());
    for (char c : text) {
      auto s = symbol_of(c);
      if (!s) throw std::invalid_argument(std::string("alphabet: unknown symbol character '") + c + "'");
      raw.push_back(static_cast<char>(*s));
    }
  } else {
    // dotted-index form, e.g. "0.1.2"; empty text is the empty word
    std::size_t pos = 0;
    while (pos < text.size()) {
      std::size_t dot = text.find('.', pos);
      std::string_view tok = text.substr(pos, dot == std::string_view::npos ? std::string_view::npos : dot - pos);
      if (tok.empty()) throw std::invalid_argument("alphabet: empty index token");
      int v = 0;
      for (char c : tok) {
        if (c < '0' || c > '9') throw std::invalid_argument("alphabet: bad index token");
        v = v * 10 + (c - '0');
        if (v > 255) throw std::invalid_argument("alphabet: index token too large");
      }
      if (v >= size_) throw std::invalid_argument("alphabet: symbol index out of range");
      raw.push_back(static_cast<char>(v));
      if (dot == std::string_view::npos) break;
      pos = dot + 1;
      if (pos == text.size()) throw std::invalid_argument("alphabet: trailing dot");
    }
  }
  Word w = Word::from_raw(std::move(raw));
  if (!contains(w)) throw std::invalid_argument("alphabet: symbol index out of range");
  return w;
}

std::string Alphabet::format(const Word& w) const {
  if (!contains(w)) throw std::invalid_argument("alphabet: word not over this alphabet");
  std::string out;
  if (has_display()) {
    out.reserve(w.size());
    for (Symbol a : w) out.push_back(display_[a]);
  } else {
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i) out.push_back('.');
      out += std::to_string(static_cast<int>(w[i]));
    }
  }
  return out;
}

std::set<Symbol> alpha_representation(const Word& w) {
  return std::set<Symbol>(w.begin(), w.end());
}

int alpha_diversity(const Word& w) {
  return static_cast<int>(alpha_representation(w).size());
}

std::size_t occurrences(const Word& w, Symbol a) {
  return static_cast<std::size_t>(std::count(w.begin(), w.end(), a));
}

Word reversed(const Word& w) {
  std::string raw(w.raw().rbegin(), w.raw().rend());
  return Word::from_raw(std::move(raw));
}

std::size_t hamming(const Word& u, const Word& v) {
  if (u.size() != v.size()) throw std::invalid_argument("hamming: length mismatch");
  std::size_t d = 0;
  for (std::size_t i = 0; i < u.size(); ++i)
    if (u[i] != v[i]) ++d;
  return d;
}

Word cyclic_shift(const Word& w, long long j) {
  if (w.empty()) throw std::invalid_argument("cyclic_shift: empty word");
  const long long n = static_cast<long long>(w.size());
  long long r = j % n;
  if (r < 0) r += n;
  const std::string& s = w.raw();
  return Word::from_raw(s.substr(static_cast<std::size_t>(r)) + s.substr(0, static_cast<std::size_t>(r)));
}

CyclicClass cyclic_class(const Word& w) {
  if (w.empty()) throw std::invalid_argument("cyclic_class: empty word");
  // lexicographically least rotation; quadratic scan is fine at window scale
  Word best = w;
  for (std::size_t j = 1; j < w.size(); ++j) {
    Word rot = cyclic_shift(w, static_cast<long long>(j));
    if (rot < best) best = rot;
  }
  return CyclicClass{best};
}

bool is_periodic(const Word& w, std::size_t p) {
  if (p < 1 || p > w.size()) throw std::invalid_argument("is_periodic: period out of range");
  for (std::size_t i = 0; i + p < w.size(); ++i)
    if (w[i] != w[i + p]) return false;
  return true;
}

PhiProfile phi_profile(const Word& w, std::size_t k) {
  if (k < 1) throw std::invalid_argument("phi_profile: window length must be positive");
  if (w.size() < k) throw std::invalid_argument("phi_profile: word shorter than window");
  PhiProfile out;
  out.first_window = w.prefix(k);
  out.classes.reserve(w.size() - k + 1);
  for (std::size_t i = 0; i + k <= w.size(); ++i)
    out.classes.push_back(cyclic_class(w.substr(i, k)));
  out.bins = 1;
  for (std::size_t i = 1; i < out.classes.size(); ++i)
    if (!(out.classes[i] == out.classes[i - 1])) ++out.bins;
  return out;
}

Word reconstruct_from_phi(const Word& first_window,
                          const std::vector<CyclicClass>& classes) {
  if (first_window.empty()) throw std::invalid_argument("reconstruct_from_phi: empty first window");
  if (classes.empty()) throw std::invalid_argument("reconstruct_from_phi: empty class sequence");
  if (!(classes.front() == cyclic_class(first_window)))
    throw std::invalid_argument("reconstruct_from_phi: first class does not match first window");
  const std::size_t k = first_window.size();
  Word out = first_window;
  Word window = first_window;
  for (std::size_t t = 1; t < classes.size(); ++t) {
    // The next symbol is unique: two windows sharing the first k-1
    // symbols but ending differently have different symbol multisets,
    // so they cannot be rotations of each other.
    bool found = false;
    for (Symbol a : alpha_representation(classes[t].representative)) {
      Word cand = window.substr(1, k - 1);
      cand.push_back(a);
      if (cyclic_class(cand) == classes[t]) {
        out.push_back(a);
        window = std::move(cand);
        found = true;
        break;
      }
    }
    if (!found) throw std::invalid_argument("reconstruct_from_phi: inconsistent class sequence");
  }
  return out;
}

PositionDifferenceProfile position_profile(const Word& w, std::size_t modulus) {
  if (modulus < 1) throw std::invalid_argument("position_profile: modulus must be positive");
  PositionDifferenceProfile out;
  out.modulus = modulus;
  std::vector<std::vector<long long>> where(256);
  for (std::size_t i = 0; i < w.size(); ++i)
    where[w[i]].push_back(static_cast<long long>(i));
  std::set<Symbol> present = alpha_representation(w);
  const long long m = static_cast<long long>(modulus);
  for (Symbol a : present)
    for (Symbol b : present) {
      auto key = std::make_pair(a, b);
      auto& diffs = out.differences[key];
      auto& res = out.residues[key];
      for (long long i : where[a])
        for (long long j : where[b]) {
          long long d = j - i;
          diffs.insert(d);
          long long r = d % m;
          if (r < 0) r += m;
          res.insert(static_cast<std::size_t>(r));
        }
    }
  return out;
}

}  // namespace strep
