// Times the serial reference profile kernel against the OpenMP one on random
// sequences and checks that both produce identical values. Run with an
// optional argument to cap the largest period (default 16384).

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <random>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "ilseq/correlation.hpp"
#include "ilseq/sequence.hpp"

using namespace ilseq;

namespace {

BinarySequence random_sequence(std::size_t n, std::mt19937& rng) {
  std::vector<std::uint8_t> bits(n);
  std::bernoulli_distribution coin(0.5);
  for (auto& b : bits) b = coin(rng) ? 1 : 0;
  return BinarySequence(std::move(bits));
}

template <typename F>
double best_of_ms(int reps, F&& f) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    const auto start = std::chrono::steady_clock::now();
    f();
    const auto stop = std::chrono::steady_clock::now();
    const double ms = std::chrono::duration<double, std::milli>(stop - start).count();
    if (ms < best) best = ms;
  }
  return best;
}

}  // namespace

int main(int argc, char** argv) {
  std::size_t max_n = 16384;
  if (argc > 1) max_n = static_cast<std::size_t>(std::strtoull(argv[1], nullptr, 10));

#ifdef _OPENMP
  std::printf("OpenMP enabled, max threads: %d\n", omp_get_max_threads());
#else
  std::printf("OpenMP disabled; both kernels run serially\n");
#endif
  std::printf("%8s %12s %12s %9s\n", "period", "serial ms", "parallel ms", "speedup");

  std::mt19937 rng(41);
  for (std::size_t n = 1024; n <= max_n; n *= 4) {
    const BinarySequence a = random_sequence(n, rng);

    CorrelationProfile serial_prof;
    CorrelationProfile parallel_prof;
    const double serial_ms = best_of_ms(3, [&] { serial_prof = autocorrelation_profile_serial(a); });
    const double parallel_ms = best_of_ms(3, [&] { parallel_prof = autocorrelation_profile(a); });

    if (serial_prof.values != parallel_prof.values) {
      std::fprintf(stderr, "kernel mismatch at period %zu\n", n);
      return 1;
    }
    std::printf("%8zu %12.3f %12.3f %8.2fx\n", n, serial_ms, parallel_ms,
                serial_ms / parallel_ms);
  }
  return 0;
}
