#include <doctest.h>

#include <stdexcept>

#include <random>
#include <string>
#include <vector>

#include "ilseq/interleave.hpp"
#include "ilseq/record_io.hpp"

using namespace ilseq;

namespace {

BinarySequence seq(std::initializer_list<int> bits) {
  std::vector<std::uint8_t> v;
  for (int b : bits) v.push_back(static_cast<std::uint8_t>(b));
  return BinarySequence(std::move(v));
}

BinarySequence random_sequence(std::size_t n, std::mt19937& rng) {
  std::vector<std::uint8_t> bits(n);
  std::bernoulli_distribution coin(0.5);
  for (auto& b : bits) b = coin(rng) ? 1 : 0;
  return BinarySequence(std::move(bits));
}

std::string bit_string(const BinarySequence& a) {
  std::string s;
  for (std::uint8_t b : a.bits()) s += static_cast<char>('0' + b);
  return s;
}

// Construction output for p = 29, tuple 0, b = 0000, recomputed independently
// from the class definitions before being frozen here.
const char* kReference116 =
    "0000011011101101111011101011000001111011001010010001100111"
    "0001110011111100001100000010101101010100010110000001001011";

}  // namespace

TEST_SUITE("interleave") {
  TEST_CASE("interleave reads the column array row by row") {
    CHECK(interleave({seq({0, 1}), seq({1, 0})}) == seq({0, 1, 1, 0}));
    CHECK(interleave({seq({1, 0, 1})}) == seq({1, 0, 1}));
    CHECK_THROWS_AS(interleave({}), std::invalid_argument);
    CHECK_THROWS_AS(interleave({seq({0, 1}), seq({0, 1, 0})}), std::invalid_argument);
  }

  TEST_CASE("deinterleave inverts interleave") {
    const auto cols = deinterleave(seq({0, 1, 1, 0}), 2);
    REQUIRE(cols.size() == 2);
    CHECK(cols[0] == seq({0, 1}));
    CHECK(cols[1] == seq({1, 0}));
    CHECK_THROWS_AS(deinterleave(seq({0, 1, 1}), 2), std::invalid_argument);
    CHECK_THROWS_AS(deinterleave(seq({0, 1, 1}), 0), std::invalid_argument);

    std::mt19937 rng(31);
    for (int trial = 0; trial < 40; ++trial) {
      const std::size_t m = 1 + rng() % 5;
      const std::size_t n = 1 + rng() % 8;
      std::vector<BinarySequence> columns;
      for (std::size_t j = 0; j < m; ++j) columns.push_back(random_sequence(n, rng));
      CHECK(deinterleave(interleave(columns), m) == columns);
    }
  }

  TEST_CASE("construction for p = 5 gives the known period-20 sequence") {
    const DhlFamily fam = build_family(5);
    const ConstructionParams params = make_params(fam, 0, {0, 0, 0, 0});
    CHECK(params.d == 4);
    const BinarySequence u = construct(params, fam);
    CHECK(bit_string(u) == "00010000110000101111");
    CHECK(classify(autocorrelation_profile(u)).tag == OptimalityTag::OptimalMagnitude4);
  }

  TEST_CASE("construction reproduces the independently computed 116-bit reference") {
    const DhlFamily fam = build_family(29);
    const BinarySequence u = construct(make_params(fam, 0, {0, 0, 0, 0}), fam);
    CHECK(bit_string(u) == kReference116);
  }

  TEST_CASE("columns of the output are the shifted family members") {
    const DhlFamily fam = build_family(29);
    const ConstructionParams params = make_params(fam, 0, {0, 0, 0, 0});
    const auto cols = deinterleave(construct(params, fam), 4);
    REQUIRE(cols.size() == 4);
    // tuple 0 = (s3, s2, s1, s1) with shifts (0, d, 2d, 3d), d = 22
    CHECK(cols[0] == fam.seq(3));
    CHECK(cols[1] == shift_left(fam.seq(2), 22));
    CHECK(cols[2] == shift_left(fam.seq(1), 44 % 29));
    CHECK(cols[3] == shift_left(fam.seq(1), 66 % 29));
  }

  TEST_CASE("offset vector must pair up and d must invert 4") {
    const DhlFamily fam = build_family(13);
    CHECK_THROWS_WITH_AS(static_cast<void>(make_params(fam, 0, {0, 0, 1, 0})),
                         "inadmissible b: b(0) != b(2)", std::invalid_argument);
    CHECK_THROWS_WITH_AS(static_cast<void>(make_params(fam, 0, {0, 0, 0, 1})),
                         "inadmissible b: b(1) != b(3)", std::invalid_argument);
    CHECK_THROWS_AS(static_cast<void>(make_params(fam, 0, {0, 2, 0, 2})), std::invalid_argument);
    CHECK_THROWS_AS(static_cast<void>(make_params(fam, 8, {0, 0, 0, 0})), std::invalid_argument);
    CHECK_THROWS_AS(static_cast<void>(make_params(fam, -1, {0, 0, 0, 0})), std::invalid_argument);

    ConstructionParams params = make_params(fam, 0, {0, 0, 0, 0});
    params.d = 3;  // 4 * 3 = 12 != 1 (mod 13)
    CHECK_THROWS_AS(static_cast<void>(construct(params, fam)), std::invalid_argument);
    params.d = 23;  // right residue class but outside [0, p)
    CHECK_THROWS_AS(static_cast<void>(construct(params, fam)), std::invalid_argument);
  }

  TEST_CASE("params must come from the same family") {
    const DhlFamily fam13 = build_family(13);
    const DhlFamily fam5 = build_family(5);
    const ConstructionParams params = make_params(fam13, 0, {0, 0, 0, 0});
    CHECK_THROWS_AS(static_cast<void>(construct(params, fam5)), std::invalid_argument);
  }

  TEST_CASE("all 32 parameter choices for p = 5 are optimal") {
    const DhlFamily fam = build_family(5);
    const auto tagged = all_constructions(fam);
    REQUIRE(tagged.size() == 32);
    for (const auto& tc : tagged) {
      CHECK(tc.u.period() == 20);
      CHECK(classify(autocorrelation_profile(tc.u)).tag == OptimalityTag::OptimalMagnitude4);
    }
    // complementing b complements the output
    for (std::size_t t = 0; t < 8; ++t) {
      const BinarySequence& plain = tagged[4 * t].u;        // b = 0000
      const BinarySequence& flipped = tagged[4 * t + 3].u;  // b = 1111
      CHECK(flipped == add_constant(plain, 1));
    }
  }

  TEST_CASE("column-level prediction matches the direct autocorrelation") {
    const DhlFamily fam = build_family(13);
    const BinarySequence u = construct(make_params(fam, 0, {0, 0, 0, 0}), fam);
    const auto cols = deinterleave(u, 4);
    const CorrelationProfile direct = autocorrelation_profile(u);
    for (std::size_t tau = 0; tau < u.period(); ++tau)
      CHECK(predicted_autocorrelation(cols, static_cast<std::int64_t>(tau)) ==
            direct.values[tau]);

    std::mt19937 rng(32);
    for (int trial = 0; trial < 25; ++trial) {
      std::vector<BinarySequence> columns;
      const std::size_t n = (trial % 2 == 0) ? 5 : 13;
      for (int j = 0; j < 4; ++j) columns.push_back(random_sequence(n, rng));
      const CorrelationProfile ref = autocorrelation_profile(interleave(columns));
      for (std::size_t tau = 0; tau < 4 * n; ++tau)
        CHECK(predicted_autocorrelation(columns, static_cast<std::int64_t>(tau)) ==
              ref.values[tau]);
    }
  }

  TEST_CASE("structure check accepts a valid construction and records its shape") {
    const DhlFamily fam = build_family(13);
    const ConstructionParams params = make_params(fam, 0, {0, 0, 0, 0});
    const BinarySequence u = construct(params, fam);
    const StructureCheck chk = structure_check(autocorrelation_profile(u), params, fam);
    CHECK(chk.ok);
    CHECK(chk.violations.empty());
    CHECK(chk.zero_count == 12);  // p - 1 zeros, all at shifts 2 mod 4
    // d = 10, so tau1 = -2d = 6 (mod 13) carries the +4 at tau = 4*6 + 2
    CHECK(chk.plus4_even_shift == 26);
    CHECK(chk.odd1_sign == -1);
    CHECK(chk.odd3_sign == 1);
  }

  TEST_CASE("structure check fits the opposite odd-shift signs for tuple 2") {
    const DhlFamily fam = build_family(13);
    const ConstructionParams params = make_params(fam, 2, {0, 0, 0, 0});
    const BinarySequence u = construct(params, fam);
    const StructureCheck chk = structure_check(autocorrelation_profile(u), params, fam);
    CHECK(chk.ok);
    CHECK(chk.odd1_sign == 1);
    CHECK(chk.odd3_sign == -1);
  }

  TEST_CASE("structure check covers the offset variants") {
    const DhlFamily fam = build_family(13);
    for (const auto& b : kAdmissibleB) {
      const ConstructionParams params = make_params(fam, 0, b);
      const BinarySequence u = construct(params, fam);
      const StructureCheck chk = structure_check(autocorrelation_profile(u), params, fam);
      CHECK(chk.ok);
      CHECK(chk.zero_count == 12);
    }
  }

  TEST_CASE("structure check flags profiles built with the wrong shift parameter") {
    const DhlFamily fam = build_family(13);
    ConstructionParams params = make_params(fam, 0, {0, 0, 0, 0});
    params.d = 3;
    const BinarySequence u = construct_unchecked_d(params, fam);
    const StructureCheck chk = structure_check(autocorrelation_profile(u), params, fam);
    CHECK_FALSE(chk.ok);
    CHECK_FALSE(chk.violations.empty());
  }

  TEST_CASE("structure check flags a mismatched profile period") {
    const DhlFamily fam = build_family(13);
    const ConstructionParams params = make_params(fam, 0, {0, 0, 0, 0});
    CorrelationProfile wrong;
    wrong.period = 8;
    wrong.values.assign(8, 0);
    const StructureCheck chk = structure_check(wrong, params, fam);
    CHECK_FALSE(chk.ok);
  }
}
