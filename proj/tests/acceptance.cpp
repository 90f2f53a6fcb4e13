// Acceptance gate for the whole pipeline: each numbered criterion prints one
// PASS/FAIL line, and the process exits nonzero if any of them fails.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ilseq/cli.hpp"
#include "ilseq/correlation.hpp"
#include "ilseq/dhl.hpp"
#include "ilseq/interleave.hpp"
#include "ilseq/number_theory.hpp"
#include "ilseq/record_io.hpp"
#include "ilseq/sequence.hpp"

using namespace ilseq;

namespace {

int g_failures = 0;

void report(int idx, const std::string& what, bool ok) {
  std::cout << (ok ? "PASS" : "FAIL") << "  " << idx << ". " << what << "\n";
  if (!ok) ++g_failures;
}

void run_criterion(int idx, const std::string& what, bool (*fn)()) {
  bool ok = false;
  try {
    ok = fn();
  } catch (const std::exception& e) {
    std::cerr << "criterion " << idx << " raised: " << e.what() << "\n";
    ok = false;
  }
  report(idx, what, ok);
}

BinarySequence random_sequence(std::size_t n, std::mt19937& rng) {
  std::vector<std::uint8_t> bits(n);
  std::bernoulli_distribution coin(0.5);
  for (auto& b : bits) b = coin(rng) ? 1 : 0;
  return BinarySequence(std::move(bits));
}

// 1. The quartic classes of 29 under generator 2 match the reference sets.
bool criterion_classes() {
  const CyclotomicClasses classes(29, 2);
  return classes.members(0) == std::vector<std::uint64_t>{1, 7, 16, 20, 23, 24, 25} &&
         classes.members(1) == std::vector<std::uint64_t>{2, 3, 11, 14, 17, 19, 21} &&
         classes.members(2) == std::vector<std::uint64_t>{4, 5, 6, 9, 13, 22, 28} &&
         classes.members(3) == std::vector<std::uint64_t>{8, 10, 12, 15, 18, 26, 27};
}

// 2. Validation, (x, y) resolution and the quarter shift for p = 29.
bool criterion_parameters() {
  const DhlPrimeCheck chk = validate_dhl_prime(29);
  if (!chk.ok() || chk.prime->f != 7 || chk.prime->x != 5) return false;
  const DhlFamily fam = build_family(29, 2);
  return fam.x == 5 && fam.y == -1 && compute_d(29) == 22;
}

// 3. Family members are optimal for their period class exactly when the
//    prime qualifies.
bool criterion_family_optimality() {
  for (std::uint64_t p : {5ull, 13ull, 29ull, 53ull}) {
    const DhlFamily fam = build_family(p);
    for (int i = 1; i <= 4; ++i)
      if (classify(autocorrelation_profile(fam.seq(i))).tag != OptimalityTag::OptimalB)
        return false;
  }
  return validate_dhl_prime(17).reason == DhlRejection::EvenF &&
         validate_dhl_prime(37).reason == DhlRejection::YNotUnit;
}

// 4. The closed-form correlation constants survive exhaustive sweeps.
bool criterion_table() {
  for (std::uint64_t p : {13ull, 29ull, 53ull}) {
    const CorrelationTableReport rep = verify_correlation_table(build_family(p));
    if (rep.rows.size() != 80 || !rep.all_match()) return false;
  }
  return true;
}

// 5. All 8 x 4 parameter choices produce optimal sequences for three primes,
//    and every offset vector outside the admissible four is rejected.
bool criterion_all_constructions() {
  for (std::uint64_t p : {5ull, 13ull, 29ull}) {
    const DhlFamily fam = build_family(p);
    const auto tagged = all_constructions(fam);
    if (tagged.size() != 32) return false;
    for (const auto& tc : tagged) {
      if (tc.u.period() != 4 * p) return false;
      if (classify(autocorrelation_profile(tc.u)).tag != OptimalityTag::OptimalMagnitude4)
        return false;
    }
  }
  const DhlFamily fam13 = build_family(13);
  int rejected = 0;
  int accepted = 0;
  for (int mask = 0; mask < 16; ++mask) {
    const std::array<int, 4> b{(mask >> 3) & 1, (mask >> 2) & 1, (mask >> 1) & 1, mask & 1};
    try {
      static_cast<void>(construct(make_params(fam13, 0, b), fam13));
      ++accepted;
    } catch (const std::invalid_argument&) {
      ++rejected;
    }
  }
  return accepted == 4 && rejected == 12;
}

// 6. The p = 29 reference construction: period 116, values in {0, +-4}, 28
//    zeros, the lone +4 among shifts = 2 (mod 4) at shift 58, and the full
//    shift-by-shift shape.
bool criterion_reference_construction() {
  const DhlFamily fam = build_family(29, 2);
  const ConstructionParams params = make_params(fam, 0, {0, 0, 0, 0});
  const BinarySequence u = construct(params, fam);
  if (u.period() != 116) return false;
  const CorrelationProfile prof = autocorrelation_profile(u);
  if (classify(prof).tag != OptimalityTag::OptimalMagnitude4) return false;
  std::size_t zeros = 0;
  std::vector<std::size_t> plus4_even;
  for (std::size_t tau = 1; tau < prof.values.size(); ++tau) {
    if (prof.values[tau] == 0) ++zeros;
    if (tau % 4 == 2 && prof.values[tau] == 4) plus4_even.push_back(tau);
  }
  if (zeros != 28 || plus4_even != std::vector<std::size_t>{58}) return false;
  return structure_check(prof, params, fam).ok;
}

// 7. The column-level prediction of the interleaved autocorrelation matches
//    the direct computation on random column sets, every shift.
bool criterion_prediction() {
  std::mt19937 rng(1702);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = (trial % 2 == 0) ? 5 : 13;
    std::vector<BinarySequence> columns;
    for (int j = 0; j < 4; ++j) columns.push_back(random_sequence(n, rng));
    const CorrelationProfile direct = autocorrelation_profile(interleave(columns));
    for (std::size_t tau = 0; tau < 4 * n; ++tau)
      if (predicted_autocorrelation(columns, static_cast<std::int64_t>(tau)) !=
          direct.values[tau])
        return false;
  }
  return true;
}

// 8. Support counting and the definitional sign sum agree on random
//    sequences at every shift, and values are congruent to N mod 4.
bool criterion_dual_routes() {
  std::mt19937 rng(1703);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 4 + rng() % 61;
    const BinarySequence a = random_sequence(n, rng);
    for (std::size_t tau = 0; tau < n; ++tau) {
      const std::int64_t direct = cross_correlation(a, a, static_cast<std::int64_t>(tau));
      if (autocorrelation_via_support(a, static_cast<std::int64_t>(tau)) != direct) return false;
      if (((direct - static_cast<std::int64_t>(n)) % 4 + 4) % 4 != 0) return false;
    }
  }
  return true;
}

// 9. The shift parameter is not arbitrary: for p = 13 every d' other than 10
//    breaks the value set or the profile shape, and 10 itself passes.
bool criterion_shift_is_forced() {
  const DhlFamily fam = build_family(13);
  for (std::uint64_t trial_d = 0; trial_d < 13; ++trial_d) {
    ConstructionParams params = make_params(fam, 0, {0, 0, 0, 0});
    params.d = trial_d;
    const BinarySequence u = construct_unchecked_d(params, fam);
    const CorrelationProfile prof = autocorrelation_profile(u);
    const bool values_ok = classify(prof).tag == OptimalityTag::OptimalMagnitude4;
    const bool shape_ok = structure_check(prof, params, fam).ok;
    const bool intact = values_ok && shape_ok;
    if (trial_d == 10 && !intact) return false;
    if (trial_d != 10 && intact) return false;
  }
  return true;
}

// 10. The command-line surface: search emits exactly the known prime list,
//     the reference command passes, generated records verify as optimal, and
//     the exit codes separate success, invalid input and failed verification.
bool criterion_cli() {
  std::ostringstream out;
  std::ostringstream err;
  if (run_cli({"search", "--max-p", "300"}, out, err) != kExitOk) return false;
  const std::string expected =
      "p,f,x\n"
      "5,1,1\n"
      "13,3,-3\n"
      "29,7,5\n"
      "53,13,-7\n"
      "173,43,13\n"
      "229,57,-15\n"
      "293,73,17\n";
  if (out.str() != expected) return false;

  out.str("");
  err.str("");
  if (run_cli({"example1"}, out, err) != kExitOk) return false;

  out.str("");
  err.str("");
  if (run_cli({"generate", "--p", "29", "--tuple", "1", "--b", "1111"}, out, err) != kExitOk)
    return false;
  const std::string record = out.str();
  const SequenceRecord parsed = parse_record(record);
  if (classify(autocorrelation_profile(parsed.bits)).tag != OptimalityTag::OptimalMagnitude4)
    return false;
  const auto record_path =
      std::filesystem::temp_directory_path() / "ilseq_acceptance_record.txt";
  {
    std::ofstream f(record_path);
    f << record;
  }
  out.str("");
  err.str("");
  if (run_cli({"verify", "--in", record_path.string()}, out, err) != kExitOk) return false;
  if (out.str().find("OptimalMagnitude4") == std::string::npos) return false;

  out.str("");
  err.str("");
  if (run_cli({"generate", "--p", "17"}, out, err) != kExitInvalidInput) return false;

  const auto flat_path = std::filesystem::temp_directory_path() / "ilseq_acceptance_flat.txt";
  {
    std::ofstream f(flat_path);
    f << "00000000\n";
  }
  out.str("");
  err.str("");
  if (run_cli({"verify", "--in", flat_path.string()}, out, err) != kExitVerifyFailed) return false;

  out.str("");
  err.str("");
  return run_cli({"bogus"}, out, err) == kExitInvalidInput;
}

}  // namespace

int main() {
  run_criterion(1, "quartic classes of 29 match the reference partition", criterion_classes);
  run_criterion(2, "p = 29 parameters: f = 7, x = 5, y = -1, d = 22", criterion_parameters);
  run_criterion(3, "family members are optimal and bad primes are rejected",
                criterion_family_optimality);
  run_criterion(4, "closed-form correlation table holds for p = 13, 29, 53", criterion_table);
  run_criterion(5, "all 32 parameter choices are optimal for p = 5, 13, 29; bad offsets rejected",
                criterion_all_constructions);
  run_criterion(6, "reference construction: values, zero count, +4 location, full shape",
                criterion_reference_construction);
  run_criterion(7, "column-level prediction equals direct autocorrelation on random columns",
                criterion_prediction);
  run_criterion(8, "support counting equals the sign sum on random sequences",
                criterion_dual_routes);
  run_criterion(9, "every wrong shift parameter breaks the construction for p = 13",
                criterion_shift_is_forced);
  run_criterion(10, "command-line interface: outputs and exit codes", criterion_cli);

  if (g_failures == 0) {
    std::cout << "all 10 criteria passed\n";
    return 0;
  }
  std::cout << g_failures << " of 10 criteria failed\n";
  return 1;
}
