#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ilseq/sequence.hpp"

namespace ilseq {

// Periodic correlation R_{a,b}(tau) = sum_{i=0}^{N-1} (-1)^(a(i) + b(i+tau)),
// indices mod N. Exact integers throughout; requires equal periods.
std::int64_t cross_correlation(const BinarySequence& a, const BinarySequence& b, std::int64_t tau);

// Support-counting route for the autocorrelation with C = support(a):
//   R_a(tau) = N - 4(|C| - |(C + tau) ∩ C|).
// Agrees with the sign-sum route at every shift; kept as a cross-check.
std::int64_t autocorrelation_via_support(const BinarySequence& a, std::int64_t tau);

struct CorrelationProfile {
  std::size_t period = 0;
  std::vector<std::int64_t> values;  // values[tau] = R(tau), 0 <= tau < period
};

// Full profiles over all shifts. The default kernels parallelize over tau
// with OpenMP; each shift writes its own slot, so the result is independent
// of scheduling. The _serial variants are the plain reference loops kept for
// testing the parallel kernels and for benchmarking.
CorrelationProfile cross_profile(const BinarySequence& a, const BinarySequence& b);
CorrelationProfile autocorrelation_profile(const BinarySequence& a);
CorrelationProfile cross_profile_serial(const BinarySequence& a, const BinarySequence& b);
CorrelationProfile autocorrelation_profile_serial(const BinarySequence& a);

// Out-of-phase optimality taxonomy for autocorrelation profiles, by period
// mod 4. OptimalMagnitude4 additionally demands that both +4 and -4 occur.
enum class OptimalityTag {
  PerfectA,           // N = 0 (mod 4), every out-of-phase value 0
  OptimalB,           // N = 1 (mod 4), values in {1, -3}
  OptimalC,           // N = 2 (mod 4), values in {2, -2}
  IdealD,             // N = 3 (mod 4), every value -1
  OptimalMagnitude4,  // N = 0 (mod 4), values in {0, 4, -4}, both signs attained
  NonOptimal,
};

std::string_view to_string(OptimalityTag tag);

struct OptimalityClass {
  OptimalityTag tag = OptimalityTag::NonOptimal;
  std::optional<std::size_t> witness_shift;  // an offending shift, when one exists
  std::string note;                          // human-readable reason when NonOptimal
  bool optimal() const { return tag != OptimalityTag::NonOptimal; }
};

// Classify an autocorrelation profile. pre: values[0] == period.
OptimalityClass classify(const CorrelationProfile& profile);

}  // namespace ilseq
