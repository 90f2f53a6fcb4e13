#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace ilseq {

// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(std::uint64_t n);

// Smallest positive primitive root mod a prime p.
std::uint64_t primitive_root(std::uint64_t p);

// The unique d in [0, p) with 4d = 1 (mod p). Requires odd p > 1.
std::uint64_t compute_d(std::uint64_t p);

// A prime admitting the construction: p = 4f + 1 with f odd and p - 4 a
// perfect square, i.e. p = x^2 + 4y^2 with y = +-1. x carries the sign that
// makes x = 1 (mod 4); the sign of y is resolved later from the built family.
struct DhlPrime {
  std::uint64_t p = 0;
  std::uint64_t f = 0;
  std::int64_t x = 0;
  int y_abs = 1;
};

enum class DhlRejection { NotPrime, NotOneMod4, EvenF, YNotUnit };

std::string_view describe(DhlRejection r);

struct DhlPrimeCheck {
  std::optional<DhlPrime> prime;
  DhlRejection reason = DhlRejection::NotPrime;  // first failed condition when !ok()
  bool ok() const { return prime.has_value(); }
};

// Checks, in order: p prime, p = 1 (mod 4), f = (p-1)/4 odd, p - 4 a perfect
// square. Stops at the first failure.
DhlPrimeCheck validate_dhl_prime(std::uint64_t p);

// Quartic cyclotomic classes D_i = { alpha^(i+4j) mod p : 0 <= j < f } for
// p = 4f + 1 prime and alpha a generator of the multiplicative group mod p.
// The classes partition {1, ..., p-1}; multiplying D_i by alpha rotates it
// into D_(i+1 mod 4).
class CyclotomicClasses {
 public:
  CyclotomicClasses(std::uint64_t p, std::uint64_t alpha);

  std::uint64_t p() const { return p_; }
  std::uint64_t alpha() const { return alpha_; }

  // Members of D_i, sorted ascending. pre: 0 <= i < 4.
  const std::vector<std::uint64_t>& members(int i) const {
    return classes_.at(static_cast<std::size_t>(i));
  }

  // Class index of residue t, or kZeroResidue for t = 0. pre: t < p.
  static constexpr int kZeroResidue = -1;
  int index_of(std::uint64_t t) const;

 private:
  std::uint64_t p_ = 0;
  std::uint64_t alpha_ = 0;
  std::array<std::vector<std::uint64_t>, 4> classes_;
  std::vector<std::int8_t> index_;  // residue -> class, O(1) lookups in shift sweeps
};

}  // namespace ilseq
