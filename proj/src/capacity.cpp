#include "strep/capacity.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "strep/spectral.hpp"

namespace strep {
namespace {

void require(bool condition, const std::string& message) {
  if (!condition) throw std::invalid_argument(message);
}

CapacityReport make_report(const SystemDescriptor& desc, double value,
                           CapacityKind kind, std::string provenance,
                           std::string witness = {}) {
  CapacityReport report;
  report.value = value;
  report.kind = kind;
  report.provenance = std::move(provenance);
  report.system = desc.format();
  report.witness = std::move(witness);
  return report;
}

// The freely-interleaving-blocks bound applied to the first non-palindromic
// length-k window of the seed, if any; a reversed-tandem step inside that
// window mints a mirrored neighbour, and both orientations can then be
// appended in any order.
std::optional<CapacityReport> rt_window_lower(const SystemDescriptor& desc,
                                              const StringSystem& system) {
  const Word& seed = system.seed;
  const std::size_t k = desc.k;
  if (k == 0 || seed.size() < k) return std::nullopt;
  for (std::size_t offset = 0; offset + k <= seed.size(); ++offset) {
    Word window = seed.substr(offset, k);
    if (window == reversed(window)) continue;
    std::string witness = "window=" + system.alphabet.format(window) +
                          ";offset=" + std::to_string(offset + 1);
    return make_report(desc, 1.0 / static_cast<double>(k),
                       CapacityKind::LowerBound, "rt-alternating-blocks",
                       std::move(witness));
  }
  return std::nullopt;
}

}  // namespace

std::string to_string(CapacityKind kind) {
  switch (kind) {
    case CapacityKind::Exact: return "exact";
    case CapacityKind::LowerBound: return "lower-bound";
    case CapacityKind::ZeroExact: return "zero-exact";
    case CapacityKind::StrictlyBelowMax: return "strictly-below-max";
    case CapacityKind::EmpiricalLowerBound: return "empirical-lower-bound";
    case CapacityKind::EmpiricalEstimate: return "empirical-estimate";
  }
  throw std::logic_error("unknown capacity kind");
}

std::string fmt6(double v) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.6f", v);
  return buffer;
}

int floor_two_decimals(double v) {
  return static_cast<int>(std::floor(v * 100.0));
}

std::string format_report(const CapacityReport& report) {
  std::string line = "system=" + report.system;
  line += " kind=" + to_string(report.kind);
  line += " value=" + fmt6(report.value);
  line += " provenance=" + report.provenance;
  if (!report.witness.empty()) line += " witness=" + report.witness;
  return line;
}

bool relabel_reverse_matches(const Word& s) {
  const Word r = reversed(s);
  // Build the symbol renaming forced by aligning r with s, position by
  // position, and check it is consistent and injective.
  std::map<Symbol, Symbol> forward;
  std::map<Symbol, Symbol> inverse;
  for (std::size_t i = 0; i < s.size(); ++i) {
    Symbol from = r[i];
    Symbol to = s[i];
    auto [fit, finserted] = forward.try_emplace(from, to);
    if (!finserted && fit->second != to) return false;
    auto [iit, iinserted] = inverse.try_emplace(to, from);
    if (!iinserted && iit->second != from) return false;
  }
  return true;
}

CapacityReport end_capacity(const SystemDescriptor& desc) {
  require(desc.variant == Variant::End, "end_capacity: not an end system");
  StringSystem system = desc.instantiate();  // validates |seed| >= k
  double value = std::log2(static_cast<double>(alpha_diversity(system.seed)));
  CapacityKind kind = value == 0.0 ? CapacityKind::ZeroExact : CapacityKind::Exact;
  return make_report(desc, value, kind, "end-replication");
}

CapacityReport tandem_fixed_capacity(const SystemDescriptor& desc) {
  require(desc.variant == Variant::Tandem && desc.mode == Mode::FixedK,
          "tandem_fixed_capacity: not a fixed-block tandem system");
  StringSystem system = desc.instantiate();
  PhiProfile profile = phi_profile(system.seed, desc.k);
  return make_report(desc, 0.0, CapacityKind::ZeroExact,
                     "tandem-fixed-polynomial",
                     "bins=" + std::to_string(profile.bins));
}

std::uint64_t tandem_fixed_count(const StringSystem& system, std::uint64_t rounds) {
  require(system.family.variant == Variant::Tandem &&
              system.family.mode == Mode::FixedK,
          "tandem_fixed_count: not a fixed-block tandem system");
  PhiProfile profile = phi_profile(system.seed, system.family.block);
  return multiset_count(profile.bins, rounds);
}

CapacityReport tandem_atleast1_lower(const SystemDescriptor& desc) {
  require(desc.variant == Variant::Tandem && desc.mode == Mode::AtLeastK &&
              desc.k == 1,
          "tandem_atleast1_lower: not a tandem system with blocks >= 1");
  StringSystem system = desc.instantiate();
  std::size_t diversity = alpha_diversity(system.seed);
  require(diversity >= 2, "tandem_atleast1_lower: seed uses a single symbol");
  Polynomial poly = tandem_atleast1_characteristic(diversity);
  double root = largest_real_root(poly, 1.0, 2.0);
  double value = std::log2(1.0 + root);
  double ceiling = std::log2(static_cast<double>(diversity));
  CapacityKind kind = std::abs(value - ceiling) < 1e-9 ? CapacityKind::Exact
                                                       : CapacityKind::LowerBound;
  if (diversity == 2) value = 1.0;  // root is exactly 1: closure is everything
  return make_report(desc, value, kind, "tandem-atleast1-root-bound",
                     "diversity=" + std::to_string(diversity));
}

CapacityReport tandem_atleastk_lower(const SystemDescriptor& desc) {
  require(desc.variant == Variant::Tandem && desc.mode == Mode::AtLeastK,
          "tandem_atleastk_lower: not a block-length-at-least tandem system");
  StringSystem system = desc.instantiate();
  std::size_t diversity = alpha_diversity(system.seed);
  require(diversity >= 2, "tandem_atleastk_lower: seed uses a single symbol");
  Polynomial poly = tandem_atleastk_characteristic(desc.k);
  double root = largest_real_root(poly, 1.0, 2.0);
  if (!(root > 1.0))
    throw std::logic_error("tandem_atleastk_lower: root not above 1");
  double value = std::log2(root);
  return make_report(desc, value, CapacityKind::LowerBound,
                     "tandem-atleastk-root-bound",
                     "diversity=" + std::to_string(diversity));
}

CapacityReport rt_alternating_lower(const SystemDescriptor& desc) {
  require(desc.variant == Variant::ReversedTandem,
          "rt_alternating_lower: not a reversed-tandem system");
  StringSystem system = desc.instantiate();
  require(system.seed.size() == desc.k,
          "rt_alternating_lower: seed length must equal the block length");
  require(system.seed != reversed(system.seed),
          "rt_alternating_lower: seed is a palindrome");
  return make_report(desc, 1.0 / static_cast<double>(desc.k),
                     CapacityKind::LowerBound, "rt-alternating-blocks",
                     "window=" + system.alphabet.format(system.seed) +
                         ";offset=1");
}

CapacityReport rt_empirical_lower(const SystemDescriptor& desc, std::size_t rounds,
                                  const LevelProfile& profile) {
  require(desc.variant == Variant::ReversedTandem,
          "rt_empirical_lower: not a reversed-tandem system");
  StringSystem system = desc.instantiate();
  require(system.seed.size() == desc.k,
          "rt_empirical_lower: seed length must equal the block length");
  require(relabel_reverse_matches(system.seed),
          "rt_empirical_lower: seed lacks the reversal-renaming symmetry");
  require(rounds >= 1, "rt_empirical_lower: rounds must be positive");
  std::size_t length = rounds * desc.k;
  require(profile.max_length >= length, "rt_empirical_lower: profile too short");
  std::uint64_t count = profile.count_at(length);
  require(count >= 1, "rt_empirical_lower: profile has no words at target length");
  double value =
      std::log2(static_cast<double>(count)) / static_cast<double>(length);
  return make_report(desc, value, CapacityKind::EmpiricalLowerBound,
                     "rt-positive-empirical",
                     "count=" + std::to_string(count) +
                         ";length=" + std::to_string(length));
}

CapacityReport gap_hamming_lower(const SystemDescriptor& desc) {
  require(desc.variant == Variant::Gap, "gap_hamming_lower: not a gap system");
  StringSystem system = desc.instantiate();  // validates |seed| >= k + k'
  const Word& seed = system.seed;
  const std::size_t k = desc.k;
  Word doubled = seed + seed;
  Word left = seed.prefix(k);
  Word right = doubled.substr(k, k);
  std::size_t distance = hamming(left, right);
  double value = std::log2(1.0 + static_cast<double>(distance)) /
                 static_cast<double>(k);
  return make_report(desc, value, CapacityKind::LowerBound, "gap-hamming",
                     "distance=" + std::to_string(distance));
}

std::optional<CapacityReport> gap_strict_upper_flag(const SystemDescriptor& desc) {
  require(desc.variant == Variant::Gap,
          "gap_strict_upper_flag: not a gap system");
  StringSystem system = desc.instantiate();
  const Word& seed = system.seed;
  std::size_t diversity = alpha_diversity(seed);
  if (diversity < 2) return std::nullopt;  // strict bound below 0 is vacuous
  std::size_t modulus = std::gcd(desc.k, desc.kprime);
  if (modulus < 2) return std::nullopt;  // a single residue class is never missed
  PositionDifferenceProfile profile = position_profile(seed, modulus);
  for (const auto& [pair, residues] : profile.residues) {
    if (residues.size() >= modulus) continue;
    std::string residue_text;
    for (std::size_t r : residues) {
      if (!residue_text.empty()) residue_text += ",";
      residue_text += std::to_string(r);
    }
    const auto& [a, b] = pair;
    std::string witness = "pair=" + std::string(1, system.alphabet.display_char(a)) +
                          "," + std::string(1, system.alphabet.display_char(b)) +
                          ";modulus=" + std::to_string(modulus) +
                          ";residues={" + residue_text + "}";
    return make_report(desc, std::log2(static_cast<double>(diversity)),
                       CapacityKind::StrictlyBelowMax, "gap-residue-constraint",
                       std::move(witness));
  }
  return std::nullopt;
}

CapacityReport empirical_estimate(const LevelProfile& profile,
                                  const SystemDescriptor& desc) {
  require(!profile.counts.empty(), "empirical_estimate: profile is empty");
  double best = 0.0;
  std::size_t best_length = profile.seed_length;
  std::uint64_t best_count = 1;
  for (const auto& [length, count] : profile.counts) {
    if (length == 0) continue;
    double rate =
        std::log2(static_cast<double>(count)) / static_cast<double>(length);
    if (rate > best) {
      best = rate;
      best_length = length;
      best_count = count;
    }
  }
  return make_report(desc, best, CapacityKind::EmpiricalEstimate,
                     "empirical-estimate",
                     "count=" + std::to_string(best_count) +
                         ";length=" + std::to_string(best_length));
}

namespace {

LevelProfile enumerate_for_options(const StringSystem& system,
                                   const SystemDescriptor& desc,
                                   const CapacityOptions& options,
                                   std::size_t min_length) {
  EnumerationBudget budget;
  budget.max_length = options.max_length != 0
                          ? options.max_length
                          : system.seed.size() + 8 * std::max<std::size_t>(desc.k, 1);
  budget.max_length = std::max(budget.max_length, min_length);
  budget.max_states = options.max_states;
  return enumerate_closure(system, budget);
}

}  // namespace

std::vector<CapacityReport> capacity_reports(const SystemDescriptor& desc,
                                             const CapacityOptions& options) {
  std::vector<CapacityReport> reports;
  StringSystem system = desc.instantiate();
  const Word& seed = system.seed;
  const std::size_t diversity = alpha_diversity(seed);

  switch (desc.variant) {
    case Variant::End:
      reports.push_back(end_capacity(desc));
      break;

    case Variant::Tandem:
      if (desc.mode == Mode::FixedK) {
        reports.push_back(tandem_fixed_capacity(desc));
      } else if (diversity < 2) {
        reports.push_back(make_report(desc, 0.0, CapacityKind::ZeroExact,
                                      "tandem-unary-zero"));
      } else if (desc.k == 1) {
        reports.push_back(tandem_atleast1_lower(desc));
      } else {
        reports.push_back(tandem_atleastk_lower(desc));
      }
      break;

    case Variant::ReversedTandem:
      if (desc.k == 1) {
        // A reversed length-1 block is itself, so this is fixed-block tandem
        // replication with block 1: the count is polynomial and the capacity
        // exactly zero, whatever the diversity.
        PhiProfile profile = phi_profile(seed, 1);
        reports.push_back(make_report(desc, 0.0, CapacityKind::ZeroExact,
                                      "rt-unit-block-zero",
                                      "bins=" + std::to_string(profile.bins)));
      } else if (diversity < 2) {
        reports.push_back(make_report(desc, 0.0, CapacityKind::ZeroExact,
                                      "rt-zero-iff-unary"));
      } else {
        if (auto window = rt_window_lower(desc, system)) reports.push_back(*window);
        if (seed.size() == desc.k && relabel_reverse_matches(seed)) {
          std::size_t length = options.empirical_rounds * desc.k;
          LevelProfile profile =
              enumerate_for_options(system, desc, options, length);
          reports.push_back(
              rt_empirical_lower(desc, options.empirical_rounds, profile));
        }
        if (reports.empty()) {
          LevelProfile profile = enumerate_for_options(system, desc, options, 0);
          reports.push_back(empirical_estimate(profile, desc));
        }
      }
      break;

    case Variant::Gap: {
      std::size_t period = std::gcd(desc.k, desc.kprime);
      if (is_periodic(seed, period)) {
        reports.push_back(make_report(desc, 0.0, CapacityKind::ZeroExact,
                                      "gap-periodicity",
                                      "period=" + std::to_string(period)));
      } else {
        CapacityReport hamming_report = gap_hamming_lower(desc);
        if (hamming_report.value > 0.0) {
          reports.push_back(hamming_report);
        } else {
          LevelProfile profile = enumerate_for_options(system, desc, options, 0);
          reports.push_back(empirical_estimate(profile, desc));
        }
      }
      if (auto strict = gap_strict_upper_flag(desc)) reports.push_back(*strict);
      break;
    }
  }

  if (options.include_estimate) {
    bool has_estimate = false;
    for (const auto& report : reports)
      if (report.kind == CapacityKind::EmpiricalEstimate) has_estimate = true;
    if (!has_estimate) {
      LevelProfile profile = enumerate_for_options(system, desc, options, 0);
      reports.push_back(empirical_estimate(profile, desc));
    }
  }
  return reports;
}

}  // namespace strep
