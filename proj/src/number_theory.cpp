#include "ilseq/number_theory.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace ilseq {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(u128(a) * b % m); }

u64 powmod(u64 base, u64 exp, u64 m) {
  u64 r = 1 % m;
  base %= m;
  while (exp) {
    if (exp & 1) r = mulmod(r, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return r;
}

u64 isqrt_u64(u64 n) {
  if (n == 0) return 0;
  u64 r = static_cast<u64>(std::sqrt(static_cast<double>(n)));
  r = std::min<u64>(r + 2, 0xFFFFFFFFull);
  while (u128(r) * r > n) --r;
  return r;
}

// Distinct prime factors by trial division. p - 1 stays desk sized here.
std::vector<u64> distinct_prime_factors(u64 n) {
  std::vector<u64> out;
  for (u64 d = 2; u128(d) * d <= n; d += (d == 2) ? 1 : 2) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

bool is_generator(u64 alpha, u64 p, const std::vector<u64>& factors_of_group_order) {
  if (alpha % p == 0) return false;
  for (u64 q : factors_of_group_order)
    if (powmod(alpha, (p - 1) / q, p) == 1) return false;
  return true;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  constexpr u64 kSmall[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (u64 q : kSmall)
    if (n % q == 0) return n == q;
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // This witness set decides primality exactly for all n < 2^64.
  for (u64 a : kSmall) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::uint64_t primitive_root(std::uint64_t p) {
  if (!is_prime(p))
    throw std::invalid_argument("primitive_root: " + std::to_string(p) + " is not prime");
  if (p == 2) return 1;
  const auto factors = distinct_prime_factors(p - 1);
  for (u64 g = 2; g < p; ++g)
    if (is_generator(g, p, factors)) return g;
  throw std::logic_error("primitive_root: no generator below p");  // unreachable for prime p
}

std::uint64_t compute_d(std::uint64_t p) {
  if (p < 3 || p % 2 == 0)
    throw std::invalid_argument("compute_d: modulus must be odd and > 1, got " + std::to_string(p));
  // Closed form for the inverse of 4: p = 1 (mod 4) gives 4(p - (p-1)/4) = 4p - (p-1),
  // p = 3 (mod 4) gives 4((p-3)/4 + 1) = p + 1; both are 1 mod p.
  if (p % 4 == 1) return p - (p - 1) / 4;
  return (p - 3) / 4 + 1;
}

std::string_view describe(DhlRejection r) {
  switch (r) {
    case DhlRejection::NotPrime:
      return "not prime";
    case DhlRejection::NotOneMod4:
      return "p != 1 (mod 4)";
    case DhlRejection::EvenF:
      return "f = (p-1)/4 is even";
    case DhlRejection::YNotUnit:
      return "p - 4 is not a perfect square (y != +-1)";
  }
  return "unknown rejection";
}

DhlPrimeCheck validate_dhl_prime(std::uint64_t p) {
  DhlPrimeCheck chk;
  if (!is_prime(p)) {
    chk.reason = DhlRejection::NotPrime;
    return chk;
  }
  if (p % 4 != 1) {
    chk.reason = DhlRejection::NotOneMod4;
    return chk;
  }
  const u64 f = (p - 1) / 4;
  if (f % 2 == 0) {
    chk.reason = DhlRejection::EvenF;
    return chk;
  }
  const u64 r = isqrt_u64(p - 4);
  if (r * r != p - 4) {
    chk.reason = DhlRejection::YNotUnit;
    return chk;
  }
  // r is odd (p is odd), so exactly one of +-r is 1 mod 4.
  const auto x = (r % 4 == 1) ? static_cast<std::int64_t>(r) : -static_cast<std::int64_t>(r);
  chk.prime = DhlPrime{p, f, x, 1};
  return chk;
}

CyclotomicClasses::CyclotomicClasses(std::uint64_t p, std::uint64_t alpha)
    : p_(p), alpha_(p ? alpha % p : 0) {
  if (!is_prime(p_) || p_ % 4 != 1)
    throw std::invalid_argument("cyclotomic classes need a prime p = 1 (mod 4), got " +
                                std::to_string(p));
  const auto factors = distinct_prime_factors(p_ - 1);
  if (!is_generator(alpha_, p_, factors))
    throw std::invalid_argument("alpha = " + std::to_string(alpha) +
                                " does not generate the multiplicative group mod " +
                                std::to_string(p));
  const u64 f = (p_ - 1) / 4;
  for (auto& cls : classes_) cls.reserve(f);
  index_.assign(p_, static_cast<std::int8_t>(kZeroResidue));
  u64 val = 1;
  for (u64 e = 0; e < p_ - 1; ++e) {
    const int c = static_cast<int>(e % 4);
    classes_[static_cast<std::size_t>(c)].push_back(val);
    index_[val] = static_cast<std::int8_t>(c);
    val = mulmod(val, alpha_, p_);
  }
  for (auto& cls : classes_) std::sort(cls.begin(), cls.end());
}

int CyclotomicClasses::index_of(std::uint64_t t) const {
  if (t >= p_)
    throw std::invalid_argument("residue " + std::to_string(t) + " out of range for p = " +
                                std::to_string(p_));
  return index_[t];
}

}  // namespace ilseq
