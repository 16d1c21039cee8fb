#include <cmath>

#include "doctest.h"
#include "strep/capacity.hpp"

using namespace strep;

namespace {

SystemDescriptor desc_of(std::string_view text) {
  return SystemDescriptor::parse(text);
}

LevelProfile profile_for(const SystemDescriptor& d, std::size_t max_length) {
  return enumerate_closure(d.instantiate(), {.max_length = max_length});
}

const CapacityReport* find_kind(const std::vector<CapacityReport>& reports,
                                CapacityKind kind) {
  for (const CapacityReport& r : reports)
    if (r.kind == kind) return &r;
  return nullptr;
}

}  // namespace

TEST_CASE("formatting helpers") {
  CHECK(fmt6(0.0) == "0.000000");
  CHECK(fmt6(1.0) == "1.000000");
  CHECK(fmt6(0.6564164) == "0.656416");
  CHECK(fmt6(2.3247179572) == "2.324718");

  CHECK(floor_two_decimals(0.656416) == 65);
  CHECK(floor_two_decimals(0.547564) == 54);
  CHECK(floor_two_decimals(0.642808) == 64);
  CHECK(floor_two_decimals(0.9999) == 99);
  CHECK(floor_two_decimals(1.0) == 100);
  CHECK(floor_two_decimals(0.0) == 0);

  CHECK(to_string(CapacityKind::Exact) == "exact");
  CHECK(to_string(CapacityKind::LowerBound) == "lower-bound");
  CHECK(to_string(CapacityKind::ZeroExact) == "zero-exact");
  CHECK(to_string(CapacityKind::StrictlyBelowMax) == "strictly-below-max");
  CHECK(to_string(CapacityKind::EmpiricalLowerBound) == "empirical-lower-bound");
  CHECK(to_string(CapacityKind::EmpiricalEstimate) == "empirical-estimate");

  CapacityReport r;
  r.value = 0.5;
  r.kind = CapacityKind::LowerBound;
  r.provenance = "demo";
  r.system = "variant:rt;k=2;mode=fixed;seed=01;alphabet=0";
  CHECK(format_report(r) ==
        "system=variant:rt;k=2;mode=fixed;seed=01;alphabet=0 "
        "kind=lower-bound value=0.500000 provenance=demo");
  r.witness = "window=01;offset=1";
  CHECK(format_report(r) ==
        "system=variant:rt;k=2;mode=fixed;seed=01;alphabet=0 "
        "kind=lower-bound value=0.500000 provenance=demo "
        "witness=window=01;offset=1");
}

TEST_CASE("reversal-renaming symmetry detection") {
  Alphabet a3(3);
  CHECK(relabel_reverse_matches(a3.parse("01")));    // swap 0<->1
  CHECK(relabel_reverse_matches(a3.parse("010")));   // palindrome
  CHECK(relabel_reverse_matches(a3.parse("012")));   // swap 0<->2
  CHECK(relabel_reverse_matches(a3.parse("0")));
  CHECK(relabel_reverse_matches(a3.parse("00")));
  CHECK(!relabel_reverse_matches(a3.parse("001")));  // reverse 100: 0->1,0->0 clash
  CHECK(!relabel_reverse_matches(a3.parse("0012")));
  CHECK(relabel_reverse_matches(a3.parse("0011")));  // reverse 1100, swap 0<->1
}

TEST_CASE("end replication: exact log-diversity") {
  CapacityReport dna =
      end_capacity(desc_of("variant:end;k=3;mode=fixed;seed=TCATGC;alphabet=0"));
  CHECK(dna.kind == CapacityKind::Exact);
  CHECK(dna.value == doctest::Approx(2.0));
  CHECK(fmt6(dna.value) == "2.000000");

  CapacityReport binary =
      end_capacity(desc_of("variant:end;k=1;mode=fixed;seed=01;alphabet=0"));
  CHECK(binary.value == doctest::Approx(1.0));

  CapacityReport unary =
      end_capacity(desc_of("variant:end;k=2;mode=fixed;seed=00;alphabet=0"));
  CHECK(unary.value == 0.0);
  CHECK(unary.kind == CapacityKind::ZeroExact);
}

TEST_CASE("fixed-block tandem: capacity zero with polynomial counts") {
  CapacityReport r = tandem_fixed_capacity(
      desc_of("variant:tan;k=2;mode=fixed;seed=0011;alphabet=0"));
  CHECK(r.kind == CapacityKind::ZeroExact);
  CHECK(r.value == 0.0);
  CHECK(r.witness.find("bins=3") != std::string::npos);

  StringSystem sys =
      desc_of("variant:tan;k=2;mode=fixed;seed=0011;alphabet=0").instantiate();
  LevelProfile p = enumerate_closure(sys, {.max_length = 4 + 2 * 5});
  for (std::uint64_t m = 0; m <= 5; ++m)
    CHECK(tandem_fixed_count(sys, m) == p.count_at(4 + 2 * m));
}

TEST_CASE("tandem with unconstrained blocks: root-based bounds") {
  CapacityReport two =
      tandem_atleast1_lower(desc_of("variant:tan;k=1;mode=atleast;seed=01;alphabet=0"));
  CHECK(two.kind == CapacityKind::Exact);  // meets the log-diversity ceiling
  CHECK(two.value == 1.0);                 // bit-exact by the bracket rule
  CHECK(two.witness.find("diversity=2") != std::string::npos);

  CapacityReport three =
      tandem_atleast1_lower(desc_of("variant:tan;k=1;mode=atleast;seed=012;alphabet=0"));
  CHECK(three.kind == CapacityKind::LowerBound);
  CHECK(fmt6(three.value) == "1.217056");  // log2(1 + root of x^3-x-1)

  CapacityReport atleast2 =
      tandem_atleastk_lower(desc_of("variant:tan;k=2;mode=atleast;seed=01;alphabet=0"));
  CHECK(atleast2.kind == CapacityKind::LowerBound);
  CHECK(fmt6(atleast2.value) == "0.405685");  // log2 of the plastic number
  CHECK(atleast2.value > 0.0);

  CHECK_THROWS_AS(
      tandem_atleast1_lower(desc_of("variant:tan;k=1;mode=atleast;seed=00;alphabet=0")),
      std::invalid_argument);
  CHECK_THROWS_AS(
      tandem_atleast1_lower(desc_of("variant:tan;k=1;mode=fixed;seed=01;alphabet=0")),
      std::invalid_argument);
  CHECK_THROWS_AS(
      tandem_atleastk_lower(desc_of("variant:tan;k=2;mode=atleast;seed=11;alphabet=0")),
      std::invalid_argument);
}

TEST_CASE("reversed-tandem: alternating-blocks and measured bounds") {
  CapacityReport alt =
      rt_alternating_lower(desc_of("variant:rt;k=2;mode=fixed;seed=01;alphabet=0"));
  CHECK(alt.kind == CapacityKind::LowerBound);
  CHECK(alt.value == doctest::Approx(0.5));
  CHECK(alt.witness == "window=01;offset=1");

  CHECK_THROWS_AS(
      rt_alternating_lower(desc_of("variant:rt;k=3;mode=fixed;seed=010;alphabet=0")),
      std::invalid_argument);  // palindromic seed
  CHECK_THROWS_AS(
      rt_alternating_lower(desc_of("variant:rt;k=2;mode=fixed;seed=011;alphabet=0")),
      std::invalid_argument);  // seed longer than the block

  SystemDescriptor d01 = desc_of("variant:rt;k=2;mode=fixed;seed=01;alphabet=0");
  CapacityReport meas = rt_empirical_lower(d01, 7, profile_for(d01, 14));
  CHECK(meas.kind == CapacityKind::EmpiricalLowerBound);
  CHECK(fmt6(meas.value) == "0.656416");  // log2(584)/14
  CHECK(meas.witness == "count=584;length=14");

  SystemDescriptor d010 = desc_of("variant:rt;k=3;mode=fixed;seed=010;alphabet=0");
  CHECK(fmt6(rt_empirical_lower(d010, 7, profile_for(d010, 21)).value) == "0.547564");

  SystemDescriptor d012 = desc_of("variant:rt;k=3;mode=fixed;seed=012;alphabet=0");
  CHECK(fmt6(rt_empirical_lower(d012, 7, profile_for(d012, 21)).value) == "0.642808");

  CHECK_THROWS_AS(rt_empirical_lower(d01, 7, profile_for(d01, 10)),
                  std::invalid_argument);  // profile too short
  SystemDescriptor asym = desc_of("variant:rt;k=3;mode=fixed;seed=001;alphabet=0");
  CHECK_THROWS_AS(rt_empirical_lower(asym, 3, profile_for(asym, 9)),
                  std::invalid_argument);  // no reversal-renaming symmetry
}

TEST_CASE("gap replication: window Hamming bound and periodicity") {
  CapacityReport pos =
      gap_hamming_lower(desc_of("variant:gap;k=2;kprime=2;mode=fixed;seed=0110;alphabet=0"));
  CHECK(pos.kind == CapacityKind::LowerBound);
  CHECK(fmt6(pos.value) == "0.792481");  // (1/2) log2(3)
  CHECK(pos.witness == "distance=2");

  CapacityReport zero =
      gap_hamming_lower(desc_of("variant:gap;k=2;kprime=2;mode=fixed;seed=0101;alphabet=0"));
  CHECK(zero.value == 0.0);
  CHECK(zero.witness == "distance=0");

  // Wrap-around window: seed 010, k=2, k'=1 compares 01 against 00.
  CapacityReport wrap =
      gap_hamming_lower(desc_of("variant:gap;k=2;kprime=1;mode=fixed;seed=010;alphabet=0"));
  CHECK(wrap.witness == "distance=1");
  CHECK(wrap.value == doctest::Approx(0.5));
}

TEST_CASE("gap replication: deficient-residue flag") {
  auto flagged = gap_strict_upper_flag(
      desc_of("variant:gap;k=2;kprime=2;mode=fixed;seed=0101;alphabet=0"));
  REQUIRE(flagged.has_value());
  CHECK(flagged->kind == CapacityKind::StrictlyBelowMax);
  CHECK(flagged->value == doctest::Approx(1.0));  // log2(diversity)
  CHECK(flagged->witness == "pair=0,0;modulus=2;residues={0}");

  CHECK(!gap_strict_upper_flag(
      desc_of("variant:gap;k=2;kprime=1;mode=fixed;seed=010;alphabet=0")));  // gcd 1
  CHECK(!gap_strict_upper_flag(
      desc_of("variant:gap;k=2;kprime=2;mode=fixed;seed=0000;alphabet=0")));  // unary
  // Full residue coverage: no deficient pair.
  CHECK(!gap_strict_upper_flag(
      desc_of("variant:gap;k=2;kprime=2;mode=fixed;seed=00110110;alphabet=0")));
}

TEST_CASE("measured growth rate takes the best covered length") {
  SystemDescriptor d = desc_of("variant:end;k=1;mode=fixed;seed=01;alphabet=0");
  CapacityReport est = empirical_estimate(profile_for(d, 10), d);
  CHECK(est.kind == CapacityKind::EmpiricalEstimate);
  // N(2+t) = 2^t, so the best rate in range is 8/10 at length 10 — visibly
  // above-capacity, which is why this kind certifies nothing.
  CHECK(est.value == doctest::Approx(0.8));
  CHECK(est.witness == "count=256;length=10");

  LevelProfile empty;
  CHECK_THROWS_AS(empirical_estimate(empty, d), std::invalid_argument);
}

TEST_CASE("dispatcher: one honest report set per system") {
  CapacityOptions opt;

  // End: a single exact value.
  auto end_reports =
      capacity_reports(desc_of("variant:end;k=3;mode=fixed;seed=TCATGC;alphabet=0"), opt);
  REQUIRE(end_reports.size() == 1);
  CHECK(end_reports[0].kind == CapacityKind::Exact);
  CHECK(fmt6(end_reports[0].value) == "2.000000");

  // Fixed tandem: zero-exact.
  auto tan_reports =
      capacity_reports(desc_of("variant:tan;k=2;mode=fixed;seed=0011;alphabet=0"), opt);
  REQUIRE(tan_reports.size() == 1);
  CHECK(tan_reports[0].kind == CapacityKind::ZeroExact);

  // Reversed-tandem, unit blocks: equivalent to fixed tandem, zero-exact.
  auto rt1 = capacity_reports(desc_of("variant:rt;k=1;mode=fixed;seed=0011;alphabet=0"), opt);
  REQUIRE(rt1.size() == 1);
  CHECK(rt1[0].kind == CapacityKind::ZeroExact);
  CHECK(rt1[0].provenance == "rt-unit-block-zero");

  // Reversed-tandem, unary seed: zero-exact.
  auto rtu = capacity_reports(desc_of("variant:rt;k=2;mode=fixed;seed=000;alphabet=0"), opt);
  REQUIRE(rtu.size() == 1);
  CHECK(rtu[0].kind == CapacityKind::ZeroExact);

  // Reversed-tandem, seed = block, symmetric: window bound + measured bound.
  auto rt01 = capacity_reports(desc_of("variant:rt;k=2;mode=fixed;seed=01;alphabet=0"), opt);
  REQUIRE(rt01.size() == 2);
  CHECK(rt01[0].kind == CapacityKind::LowerBound);
  CHECK(fmt6(rt01[0].value) == "0.500000");
  CHECK(rt01[1].kind == CapacityKind::EmpiricalLowerBound);
  CHECK(fmt6(rt01[1].value) == "0.656416");

  // Palindromic seed of block length: no window bound, measured bound only.
  auto rt010 = capacity_reports(desc_of("variant:rt;k=3;mode=fixed;seed=010;alphabet=0"), opt);
  REQUIRE(rt010.size() == 1);
  CHECK(rt010[0].kind == CapacityKind::EmpiricalLowerBound);
  CHECK(fmt6(rt010[0].value) == "0.547564");

  // Longer seed with a non-palindromic window: the 1/k bound applies at the
  // first such window even though the strict seed-length form does not.
  auto rt_long =
      capacity_reports(desc_of("variant:rt;k=2;mode=fixed;seed=0110;alphabet=0"), opt);
  const CapacityReport* window = find_kind(rt_long, CapacityKind::LowerBound);
  REQUIRE(window != nullptr);
  CHECK(window->value == doctest::Approx(0.5));
  CHECK(window->witness.find("offset=1") != std::string::npos);

  // Gap, periodic seed: zero-exact via the periodicity argument.
  auto gap_per =
      capacity_reports(desc_of("variant:gap;k=2;kprime=2;mode=fixed;seed=0101;alphabet=0"), opt);
  const CapacityReport* zero = find_kind(gap_per, CapacityKind::ZeroExact);
  REQUIRE(zero != nullptr);
  CHECK(zero->provenance == "gap-periodicity");
  const CapacityReport* strict = find_kind(gap_per, CapacityKind::StrictlyBelowMax);
  REQUIRE(strict != nullptr);
  CHECK(fmt6(strict->value) == "1.000000");

  // Gap, aperiodic seed with positive window distance: proven lower bound.
  auto gap_pos =
      capacity_reports(desc_of("variant:gap;k=2;kprime=2;mode=fixed;seed=0110;alphabet=0"), opt);
  const CapacityReport* ham = find_kind(gap_pos, CapacityKind::LowerBound);
  REQUIRE(ham != nullptr);
  CHECK(fmt6(ham->value) == "0.792481");

  // Gap, aperiodic seed with zero window distance (001 with k=1: first
  // symbol matches the one k positions later): only a measured estimate.
  auto gap_est =
      capacity_reports(desc_of("variant:gap;k=1;kprime=2;mode=fixed;seed=001;alphabet=0"), opt);
  const CapacityReport* est = find_kind(gap_est, CapacityKind::EmpiricalEstimate);
  REQUIRE(est != nullptr);
  CHECK(est->value >= 0.0);

  // include_estimate adds a measured rate where none was present.
  CapacityOptions with_est;
  with_est.include_estimate = true;
  auto end_est =
      capacity_reports(desc_of("variant:end;k=1;mode=fixed;seed=01;alphabet=0"), with_est);
  CHECK(end_est.size() == 2);
  CHECK(end_est[1].kind == CapacityKind::EmpiricalEstimate);
}

TEST_CASE("dispatcher invariants across a broad system sweep") {
  const char* descriptors[] = {
      "variant:end;k=1;mode=fixed;seed=01;alphabet=0",
      "variant:end;k=2;mode=atleast;seed=0120;alphabet=0",
      "variant:end;k=1;mode=fixed;seed=0;alphabet=1",
      "variant:tan;k=1;mode=fixed;seed=01;alphabet=0",
      "variant:tan;k=2;mode=fixed;seed=0011;alphabet=0",
      "variant:tan;k=3;mode=fixed;seed=010;alphabet=0",
      "variant:tan;k=1;mode=atleast;seed=01;alphabet=0",
      "variant:tan;k=1;mode=atleast;seed=012;alphabet=0",
      "variant:tan;k=2;mode=atleast;seed=01;alphabet=0",
      "variant:tan;k=3;mode=atleast;seed=0102;alphabet=0",
      "variant:tan;k=2;mode=atleast;seed=000;alphabet=0",
      "variant:rt;k=1;mode=fixed;seed=0011;alphabet=0",
      "variant:rt;k=2;mode=fixed;seed=01;alphabet=0",
      "variant:rt;k=2;mode=fixed;seed=0110;alphabet=0",
      "variant:rt;k=3;mode=fixed;seed=010;alphabet=0",
      "variant:rt;k=3;mode=fixed;seed=012;alphabet=0",
      "variant:rt;k=2;mode=fixed;seed=0001;alphabet=0",
      "variant:rt;k=2;mode=fixed;seed=0011;alphabet=0",
      "variant:gap;k=1;kprime=1;mode=fixed;seed=01;alphabet=0",
      "variant:gap;k=2;kprime=2;mode=fixed;seed=0101;alphabet=0",
      "variant:gap;k=2;kprime=2;mode=fixed;seed=0110;alphabet=0",
      "variant:gap;k=2;kprime=1;mode=fixed;seed=010;alphabet=0",
      "variant:gap;k=1;kprime=2;mode=fixed;seed=001;alphabet=0",
      "variant:gap;k=3;kprime=3;mode=fixed;seed=010010;alphabet=0",
      "variant:gap;k=2;kprime=4;mode=fixed;seed=011010;alphabet=0",
  };
  CapacityOptions opt;
  opt.include_estimate = true;
  opt.max_length = 12;      // keep the estimate enumerations small
  opt.empirical_rounds = 4; // measured bounds at length 4k fit that budget
  for (const char* text : descriptors) {
    CAPTURE(text);
    SystemDescriptor d = desc_of(text);
    StringSystem sys = d.instantiate();
    double ceiling = std::log2(static_cast<double>(sys.alphabet.size()));
    auto reports = capacity_reports(d, opt);
    REQUIRE(!reports.empty());

    bool zero_exact = false;
    for (const CapacityReport& r : reports) {
      CHECK(r.value >= 0.0);
      CHECK(r.value <= ceiling + 1e-12);
      CHECK(!r.provenance.empty());
      CHECK(r.system == d.format());
      if (r.kind == CapacityKind::ZeroExact) zero_exact = true;
    }
    if (zero_exact) {
      // A proof of zero forbids any coexisting positive lower bound.
      for (const CapacityReport& r : reports) {
        if (r.kind == CapacityKind::LowerBound ||
            r.kind == CapacityKind::EmpiricalLowerBound)
          CHECK(r.value == 0.0);
      }
    }
  }
}
