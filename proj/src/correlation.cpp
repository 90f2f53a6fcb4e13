#include "ilseq/correlation.hpp"

#include <stdexcept>
#include <string>

namespace ilseq {

namespace {

void require_same_period(const BinarySequence& a, const BinarySequence& b) {
  if (a.period() != b.period())
    throw std::invalid_argument("correlation needs equal periods, got " +
                                std::to_string(a.period()) + " and " + std::to_string(b.period()));
}

// One shift of the definitional sign sum; t0 already reduced into [0, N).
std::int64_t correlation_sum(const BinarySequence& a, const BinarySequence& b, std::size_t t0) {
  const std::size_t n = a.period();
  std::int64_t acc = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t j = i + t0;
    if (j >= n) j -= n;
    acc += (a.bit(i) == b.bit(j)) ? 1 : -1;
  }
  return acc;
}

}  // namespace

std::int64_t cross_correlation(const BinarySequence& a, const BinarySequence& b, std::int64_t tau) {
  require_same_period(a, b);
  return correlation_sum(a, b, reduce_shift(tau, a.period()));
}

std::int64_t autocorrelation_via_support(const BinarySequence& a, std::int64_t tau) {
  const std::size_t n = a.period();
  const std::size_t t0 = reduce_shift(tau, n);
  std::int64_t ones = 0;      // |C|
  std::int64_t retained = 0;  // |(C + tau) ∩ C|
  for (std::size_t t = 0; t < n; ++t) {
    if (!a.bit(t)) continue;
    ++ones;
    std::size_t j = t + t0;
    if (j >= n) j -= n;
    if (a.bit(j)) ++retained;
  }
  return static_cast<std::int64_t>(n) - 4 * (ones - retained);
}

CorrelationProfile cross_profile(const BinarySequence& a, const BinarySequence& b) {
  require_same_period(a, b);
  const auto n = static_cast<std::int64_t>(a.period());
  CorrelationProfile prof;
  prof.period = a.period();
  prof.values.resize(a.period());
#pragma omp parallel for schedule(static) if (n >= 64)
  for (std::int64_t tau = 0; tau < n; ++tau)
    prof.values[static_cast<std::size_t>(tau)] =
        correlation_sum(a, b, static_cast<std::size_t>(tau));
  return prof;
}

CorrelationProfile autocorrelation_profile(const BinarySequence& a) { return cross_profile(a, a); }

CorrelationProfile cross_profile_serial(const BinarySequence& a, const BinarySequence& b) {
  require_same_period(a, b);
  const std::size_t n = a.period();
  CorrelationProfile prof;
  prof.period = n;
  prof.values.reserve(n);
  for (std::size_t tau = 0; tau < n; ++tau) {
    std::int64_t acc = 0;
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t j = i + tau;
      if (j >= n) j -= n;
      acc += (a.bit(i) == b.bit(j)) ? 1 : -1;
    }
    prof.values.push_back(acc);
  }
  return prof;
}

CorrelationProfile autocorrelation_profile_serial(const BinarySequence& a) {
  return cross_profile_serial(a, a);
}

std::string_view to_string(OptimalityTag tag) {
  switch (tag) {
    case OptimalityTag::PerfectA:
      return "PerfectA";
    case OptimalityTag::OptimalB:
      return "OptimalB";
    case OptimalityTag::OptimalC:
      return "OptimalC";
    case OptimalityTag::IdealD:
      return "IdealD";
    case OptimalityTag::OptimalMagnitude4:
      return "OptimalMagnitude4";
    case OptimalityTag::NonOptimal:
      return "NonOptimal";
  }
  return "unknown";
}

namespace {

OptimalityClass non_optimal_at(std::size_t tau) {
  OptimalityClass c;
  c.tag = OptimalityTag::NonOptimal;
  c.witness_shift = tau;
  c.note = "R(" + std::to_string(tau) + ") outside the optimal value set";
  return c;
}

}  // namespace

OptimalityClass classify(const CorrelationProfile& profile) {
  const std::size_t n = profile.period;
  if (n == 0 || profile.values.size() != n)
    throw std::invalid_argument("malformed correlation profile");
  if (profile.values[0] != static_cast<std::int64_t>(n))
    throw std::invalid_argument("not an autocorrelation profile: R(0) != period");

  OptimalityClass out;
  switch (n % 4) {
    case 0: {
      bool all_zero = true;
      bool has_plus4 = false;
      bool has_minus4 = false;
      for (std::size_t tau = 1; tau < n; ++tau) {
        const std::int64_t v = profile.values[tau];
        if (v != 0) all_zero = false;
        if (v == 4)
          has_plus4 = true;
        else if (v == -4)
          has_minus4 = true;
        else if (v != 0)
          return non_optimal_at(tau);
      }
      if (all_zero) {
        out.tag = OptimalityTag::PerfectA;
        return out;
      }
      if (has_plus4 && has_minus4) {
        out.tag = OptimalityTag::OptimalMagnitude4;
        return out;
      }
      out.tag = OptimalityTag::NonOptimal;
      out.note = has_plus4 ? "values never reach -4" : "values never reach +4";
      return out;
    }
    case 1:
      for (std::size_t tau = 1; tau < n; ++tau) {
        const std::int64_t v = profile.values[tau];
        if (v != 1 && v != -3) return non_optimal_at(tau);
      }
      out.tag = OptimalityTag::OptimalB;
      return out;
    case 2:
      for (std::size_t tau = 1; tau < n; ++tau) {
        const std::int64_t v = profile.values[tau];
        if (v != 2 && v != -2) return non_optimal_at(tau);
      }
      out.tag = OptimalityTag::OptimalC;
      return out;
    default:
      for (std::size_t tau = 1; tau < n; ++tau)
        if (profile.values[tau] != -1) return non_optimal_at(tau);
      out.tag = OptimalityTag::IdealD;
      return out;
  }
}

}  // namespace ilseq
