#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace ilseq {

// Periodic binary sequence over {0,1}. Position t is always taken mod the
// period, so any one period of bits fixes the whole sequence.
class BinarySequence {
 public:
  BinarySequence() = default;
  explicit BinarySequence(std::vector<std::uint8_t> bits);  // nonempty, entries 0/1
  static BinarySequence zeros(std::size_t period);

  std::size_t period() const { return bits_.size(); }
  std::uint8_t bit(std::size_t t) const { return bits_[t]; }  // pre: t < period
  std::uint8_t cyclic(std::int64_t t) const;                  // any t, reduced mod period
  const std::vector<std::uint8_t>& bits() const { return bits_; }

  friend bool operator==(const BinarySequence&, const BinarySequence&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

// Support of a sequence: the positions in [0, period) holding a 1.
struct SupportSet {
  std::size_t period = 0;
  std::vector<std::uint64_t> elements;  // sorted, unique, all < period
};

BinarySequence from_support(std::size_t period, std::span<const std::uint64_t> elements);
BinarySequence from_support(const SupportSet& s);
SupportSet support(const BinarySequence& a);

// Left cyclic shift: result(t) = a(t + tau). Negative tau shifts right.
BinarySequence shift_left(const BinarySequence& a, std::int64_t tau);

// result(t) = a(t) XOR bit.
BinarySequence add_constant(const BinarySequence& a, int bit);

// Reduce an arbitrary shift into [0, period).
std::size_t reduce_shift(std::int64_t tau, std::size_t period);

}  // namespace ilseq
