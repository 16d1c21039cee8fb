#include "strep/rules.hpp"

#include <algorithm>
#include <set>

namespace strep {

std::string to_string(Variant v) {
  switch (v) {
    case Variant::End: return "end";
    case Variant::Tandem: return "tan";
    case Variant::ReversedTandem: return "rt";
    case Variant::Gap: return "gap";
  }
  throw std::logic_error("to_string: bad variant");
}

namespace {

Variant variant_from(std::string_view s) {
  if (s == "end") return Variant::End;
  if (s == "tan") return Variant::Tandem;
  if (s == "rt") return Variant::ReversedTandem;
  if (s == "gap") return Variant::Gap;
  throw std::invalid_argument("unknown rule variant '" + std::string(s) + "'");
}

std::size_t parse_uint(std::string_view tok, const char* what) {
  if (tok.empty()) throw std::invalid_argument(std::string(what) + ": empty integer");
  std::size_t v = 0;
  for (char c : tok) {
    if (c < '0' || c > '9') throw std::invalid_argument(std::string(what) + ": bad integer '" + std::string(tok) + "'");
    v = v * 10 + static_cast<std::size_t>(c - '0');
    if (v > 100000000) throw std::invalid_argument(std::string(what) + ": integer too large");
  }
  return v;
}

}  // namespace

std::string to_string(const ReplicationRule& r) {
  std::string out = to_string(r.variant);
  out += '(' + std::to_string(r.offset) + ',' + std::to_string(r.block);
  if (r.variant == Variant::Gap) out += ',' + std::to_string(r.gap);
  out += ')';
  return out;
}

ReplicationRule parse_rule(std::string_view text) {
  auto open = text.find('(');
  if (open == std::string_view::npos || text.empty() || text.back() != ')')
    throw std::invalid_argument("rule: expected variant(i,k[,k'])");
  ReplicationRule r;
  r.variant = variant_from(text.substr(0, open));
  std::string_view args = text.substr(open + 1, text.size() - open - 2);
  std::vector<std::string_view> parts;
  std::size_t pos = 0;
  while (true) {
    auto comma = args.find(',', pos);
    parts.push_back(args.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  const std::size_t want = r.variant == Variant::Gap ? 3 : 2;
  if (parts.size() != want) throw std::invalid_argument("rule: wrong number of parameters");
  r.offset = parse_uint(parts[0], "rule offset");
  r.block = parse_uint(parts[1], "rule block");
  if (r.block < 1) throw std::invalid_argument("rule: block length must be positive");
  if (r.variant == Variant::Gap) {
    r.gap = parse_uint(parts[2], "rule gap");
    if (r.gap < 1) throw std::invalid_argument("rule: gap length must be positive");
  }
  return r;
}

Word apply(const ReplicationRule& r, const Word& x) {
  const std::size_t gap = r.variant == Variant::Gap ? r.gap : 0;
  if (r.block == 0) return x;
  const std::size_t span = r.offset + r.block + gap;
  if (span < r.offset || span > x.size()) return x;  // pattern does not fit
  const std::string& s = x.raw();
  std::string out;
  out.reserve(s.size() + r.block);
  switch (r.variant) {
    case Variant::End:
      out = s;
      out.append(s, r.offset, r.block);
      break;
    case Variant::Tandem:
      out.append(s, 0, r.offset + r.block);
      out.append(s, r.offset, r.block);
      out.append(s, r.offset + r.block, std::string::npos);
      break;
    case Variant::ReversedTandem: {
      out.append(s, 0, r.offset + r.block);
      for (std::size_t i = 0; i < r.block; ++i)
        out.push_back(s[r.offset + r.block - 1 - i]);
      out.append(s, r.offset + r.block, std::string::npos);
      break;
    }
    case Variant::Gap:
      out.append(s, 0, span);
      out.append(s, r.offset, r.block);
      out.append(s, span, std::string::npos);
      break;
  }
  return Word::from_raw(std::move(out));
}

RuleFamily RuleFamily::fixed(Variant v, std::size_t k, std::size_t kprime) {
  if (k < 1) throw std::invalid_argument("rule family: block length must be positive");
  if (v == Variant::Gap) {
    if (kprime < 1) throw std::invalid_argument("rule family: gap variant needs a positive gap length");
  } else if (kprime != 0) {
    throw std::invalid_argument("rule family: gap length only applies to the gap variant");
  }
  return RuleFamily{v, Mode::FixedK, k, kprime};
}

RuleFamily RuleFamily::at_least(Variant v, std::size_t k) {
  if (v != Variant::End && v != Variant::Tandem)
    throw std::invalid_argument("rule family: at-least mode exists only for end and tandem");
  if (k < 1) throw std::invalid_argument("rule family: block length must be positive");
  return RuleFamily{v, Mode::AtLeastK, k, 0};
}

void for_each_application(const RuleFamily& fam, const Word& x,
                          const std::function<void(const ReplicationRule&, const Word&)>& fn) {
  auto run_block = [&](std::size_t k) {
    const std::size_t gap = fam.variant == Variant::Gap ? fam.gap : 0;
    const std::size_t span = k + gap;
    if (span > x.size()) return;
    for (std::size_t i = 0; i + span <= x.size(); ++i) {
      ReplicationRule r{fam.variant, i, k, gap};
      fn(r, apply(r, x));
    }
  };
  if (fam.mode == Mode::FixedK) {
    run_block(fam.block);
  } else {
    for (std::size_t k = fam.block; k <= x.size(); ++k) run_block(k);
  }
}

std::vector<Word> successors(const RuleFamily& fam, const Word& x) {
  std::set<Word> out;
  for_each_application(fam, x, [&](const ReplicationRule&, const Word& y) { out.insert(y); });
  return std::vector<Word>(out.begin(), out.end());
}

Word trace_replay(const Word& start, const std::vector<ReplicationRule>& trace) {
  Word cur = start;
  for (const ReplicationRule& r : trace) cur = apply(r, cur);
  return cur;
}

std::string trace_to_string(const std::vector<ReplicationRule>& trace) {
  std::string out;
  for (std::size_t i = 0; i < trace.size(); ++i) {
    if (i) out.push_back(';');
    out += to_string(trace[i]);
  }
  return out;
}

std::vector<ReplicationRule> parse_trace(std::string_view text) {
  std::vector<ReplicationRule> out;
  if (text.empty()) return out;
  std::size_t pos = 0;
  while (true) {
    auto semi = text.find(';', pos);
    out.push_back(parse_rule(text.substr(pos, semi == std::string_view::npos ? std::string_view::npos : semi - pos)));
    if (semi == std::string_view::npos) break;
    pos = semi + 1;
  }
  return out;
}

StringSystem::StringSystem(Alphabet alphabet_, Word seed_, RuleFamily family_)
    : alphabet(std::move(alphabet_)), seed(std::move(seed_)), family(family_) {
  if (!alphabet.contains(seed)) throw std::invalid_argument("system: seed not over the alphabet");
  const std::size_t need = family.block + (family.variant == Variant::Gap ? family.gap : 0);
  if (seed.size() < need)
    throw std::invalid_argument("system: seed shorter than the rule pattern");
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return s;
}

}  // namespace

SystemDescriptor SystemDescriptor::parse(std::string_view text) {
  SystemDescriptor d;
  bool saw_variant = false, saw_k = false, saw_seed = false, saw_mode = false;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto semi = text.find(';', pos);
    std::string_view field =
        trim(text.substr(pos, semi == std::string_view::npos ? std::string_view::npos : semi - pos));
    if (!field.empty()) {
      auto split = field.find(field.starts_with("variant") ? ':' : '=');
      if (split == std::string_view::npos)
        throw std::invalid_argument("descriptor: malformed field '" + std::string(field) + "'");
      std::string_view key = field.substr(0, split);
      std::string_view val = field.substr(split + 1);
      if (key == "variant") {
        d.variant = variant_from(val);
        saw_variant = true;
      } else if (key == "k") {
        d.k = parse_uint(val, "descriptor k");
        saw_k = true;
      } else if (key == "kprime") {
        d.kprime = parse_uint(val, "descriptor kprime");
      } else if (key == "mode") {
        if (val == "fixed") d.mode = Mode::FixedK;
        else if (val == "atleast") d.mode = Mode::AtLeastK;
        else throw std::invalid_argument("descriptor: unknown mode");
        saw_mode = true;
      } else if (key == "seed") {
        d.seed_text = std::string(val);
        saw_seed = true;
      } else if (key == "alphabet") {
        d.alphabet_size = static_cast<int>(parse_uint(val, "descriptor alphabet"));
      } else {
        throw std::invalid_argument("descriptor: unknown field '" + std::string(key) + "'");
      }
    }
    if (semi == std::string_view::npos) break;
    pos = semi + 1;
  }
  if (!saw_variant || !saw_k || !saw_seed || !saw_mode)
    throw std::invalid_argument("descriptor: variant, k, mode and seed are required");
  return d;
}

std::string SystemDescriptor::format() const {
  std::string out = "variant:" + to_string(variant);
  out += ";k=" + std::to_string(k);
  if (variant == Variant::Gap) out += ";kprime=" + std::to_string(kprime);
  out += ";mode=";
  out += mode == Mode::FixedK ? "fixed" : "atleast";
  out += ";seed=" + seed_text;
  out += ";alphabet=" + std::to_string(alphabet_size);
  return out;
}

Alphabet SystemDescriptor::make_alphabet() const {
  bool digits = !seed_text.empty() && seed_text.find('.') == std::string_view::npos;
  for (char c : seed_text)
    if (c < '0' || c > '9') digits = false;
  if (seed_text.find('.') != std::string::npos || seed_text.empty()) {
    // dotted-index or empty seed: plain sized alphabet (size required)
    if (alphabet_size < 1) throw std::invalid_argument("descriptor: alphabet size required for this seed form");
    return Alphabet(alphabet_size);
  }
  if (digits) {
    int max_digit = 0;
    for (char c : seed_text) max_digit = std::max(max_digit, c - '0');
    int size = std::max(alphabet_size, max_digit + 1);
    if (size > 10) throw std::invalid_argument("descriptor: digit seeds support at most 10 symbols");
    return Alphabet(size);
  }
  // letter seeds: display map by first appearance, padded from a fixed pool
  std::string display;
  for (char c : seed_text)
    if (display.find(c) == std::string::npos) display.push_back(c);
  const std::string pool = "0123456789ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz";
  for (char c : pool) {
    if (static_cast<int>(display.size()) >= alphabet_size) break;
    if (display.find(c) == std::string::npos) display.push_back(c);
  }
  if (alphabet_size > 0 && static_cast<int>(display.size()) < alphabet_size)
    throw std::invalid_argument("descriptor: alphabet too large for the display pool");
  return Alphabet(static_cast<int>(display.size()), display);
}

StringSystem SystemDescriptor::instantiate() const {
  Alphabet alpha = make_alphabet();
  Word seed = alpha.parse(seed_text);
  RuleFamily fam = mode == Mode::FixedK
                       ? RuleFamily::fixed(variant, k, variant == Variant::Gap ? kprime : 0)
                       : RuleFamily::at_least(variant, k);
  return StringSystem(std::move(alpha), std::move(seed), fam);
}

}  // namespace strep
