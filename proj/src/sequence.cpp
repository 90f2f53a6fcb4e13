#include "ilseq/sequence.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace ilseq {

BinarySequence::BinarySequence(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  if (bits_.empty()) throw std::invalid_argument("sequence period must be positive");
  for (std::size_t t = 0; t < bits_.size(); ++t) {
    if (bits_[t] > 1)
      throw std::invalid_argument("sequence element at position " + std::to_string(t) +
                                  " is not a bit");
  }
}

BinarySequence BinarySequence::zeros(std::size_t period) {
  if (period == 0) throw std::invalid_argument("sequence period must be positive");
  BinarySequence s;
  s.bits_.assign(period, 0);
  return s;
}

std::uint8_t BinarySequence::cyclic(std::int64_t t) const {
  return bits_[reduce_shift(t, bits_.size())];
}

std::size_t reduce_shift(std::int64_t tau, std::size_t period) {
  if (period == 0) throw std::invalid_argument("period must be positive");
  const auto n = static_cast<std::int64_t>(period);
  std::int64_t r = tau % n;
  if (r < 0) r += n;
  return static_cast<std::size_t>(r);
}

BinarySequence from_support(std::size_t period, std::span<const std::uint64_t> elements) {
  if (period == 0) throw std::invalid_argument("sequence period must be positive");
  std::vector<std::uint8_t> bits(period, 0);
  for (std::uint64_t t : elements) {
    if (t >= period)
      throw std::invalid_argument("support element " + std::to_string(t) + " is outside [0, " +
                                  std::to_string(period) + ")");
    bits[static_cast<std::size_t>(t)] = 1;
  }
  return BinarySequence(std::move(bits));
}

BinarySequence from_support(const SupportSet& s) { return from_support(s.period, s.elements); }

SupportSet support(const BinarySequence& a) {
  SupportSet s;
  s.period = a.period();
  for (std::size_t t = 0; t < a.period(); ++t)
    if (a.bit(t)) s.elements.push_back(t);
  return s;
}

BinarySequence shift_left(const BinarySequence& a, std::int64_t tau) {
  const std::size_t n = a.period();
  const std::size_t s = reduce_shift(tau, n);
  std::vector<std::uint8_t> bits(n);
  for (std::size_t t = 0; t < n; ++t) {
    std::size_t j = t + s;
    if (j >= n) j -= n;
    bits[t] = a.bit(j);
  }
  return BinarySequence(std::move(bits));
}

BinarySequence add_constant(const BinarySequence& a, int bit) {
  if (bit != 0 && bit != 1) throw std::invalid_argument("constant must be 0 or 1");
  std::vector<std::uint8_t> bits(a.bits());
  if (bit)
    for (auto& v : bits) v ^= 1;
  return BinarySequence(std::move(bits));
}

}  // namespace ilseq
