#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "ilseq/correlation.hpp"
#include "ilseq/number_theory.hpp"
#include "ilseq/sequence.hpp"

namespace ilseq {

// The four Ding-Helleseth-Lam sequences of period p, defined by their
// supports over the quartic cyclotomic classes
//   s1: D0 ∪ D1,  s2: D0 ∪ D3,  s3: D1 ∪ D2,  s4: D2 ∪ D3,
// together with the resolved decomposition p = x^2 + 4y^2, y = +-1.
// Each member has out-of-phase autocorrelation in {1, -3}.
struct DhlFamily {
  DhlPrime prime;
  CyclotomicClasses classes;
  std::array<BinarySequence, 4> s;
  std::int64_t x = 0;
  int y = 0;

  // 1-based accessor matching the family naming s1..s4.
  const BinarySequence& seq(int i) const { return s.at(static_cast<std::size_t>(i) - 1); }
};

// Builds the family for a valid prime; alpha defaults to the smallest
// primitive root. Throws std::invalid_argument naming the violated condition
// for primes outside the family or a non-generator alpha.
DhlFamily build_family(std::uint64_t p, std::optional<std::uint64_t> alpha = std::nullopt);

struct XyPair {
  std::int64_t x = 0;
  int y = 0;
};

// Resolves (x, y) from two computed constants: R_{s1} takes the value
// -2y - 1 everywhere on D0, and R_{s1,s2} takes the value x there. Throws
// std::runtime_error if either sweep is not constant, y is not +-1, or
// x^2 + 4y^2 != p.
XyPair resolve_xy(const CyclotomicClasses& classes, const std::array<BinarySequence, 4>& s);

// Column selector for the closed-form table: the shift-0 column or one of
// the four class columns.
inline constexpr int kZeroColumn = CyclotomicClasses::kZeroResidue;

// Closed-form value of R_{s_i,s_j}(tau) for tau = 0 (cls = kZeroColumn) or
// tau ranging over class cls, expressed in (x, y, p). i, j are 1-based.
std::int64_t expected_class_value(std::int64_t x, int y, std::uint64_t p, int i, int j, int cls);

struct CorrelationTableRow {
  int i = 0;
  int j = 0;
  int cls = kZeroColumn;  // kZeroColumn or 0..3
  std::int64_t expected = 0;
  std::optional<std::int64_t> computed;        // empty when not constant over the class
  bool match = false;
  std::optional<std::uint64_t> offending_tau;  // first shift breaking constancy or equality
};

struct CorrelationTableReport {
  std::uint64_t p = 0;
  std::uint64_t alpha = 0;
  std::int64_t x = 0;
  int y = 0;
  std::vector<CorrelationTableRow> rows;  // 16 ordered pairs x 5 columns
  bool all_match() const;
};

// Sweeps every ordered pair (s_i, s_j) over every shift and compares the
// computed class constants against expected_class_value.
CorrelationTableReport verify_correlation_table(const DhlFamily& family);

}  // namespace ilseq
