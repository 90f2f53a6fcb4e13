#include "ilseq/interleave.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace ilseq {

BinarySequence interleave(const std::vector<BinarySequence>& columns) {
  if (columns.empty()) throw std::invalid_argument("interleave needs at least one column");
  const std::size_t n = columns.front().period();
  for (const auto& c : columns)
    if (c.period() != n)
      throw std::invalid_argument("interleave columns must share one period");
  const std::size_t m = columns.size();
  std::vector<std::uint8_t> bits(n * m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) bits[i * m + j] = columns[j].bit(i);
  return BinarySequence(std::move(bits));
}

std::vector<BinarySequence> deinterleave(const BinarySequence& u, std::size_t m) {
  if (m == 0 || u.period() % m != 0)
    throw std::invalid_argument("column count " + std::to_string(m) +
                                " does not divide period " + std::to_string(u.period()));
  const std::size_t n = u.period() / m;
  std::vector<BinarySequence> columns;
  columns.reserve(m);
  for (std::size_t j = 0; j < m; ++j) {
    std::vector<std::uint8_t> bits(n);
    for (std::size_t i = 0; i < n; ++i) bits[i] = u.bit(i * m + j);
    columns.emplace_back(std::move(bits));
  }
  return columns;
}

namespace {

void validate_b(const std::array<int, 4>& b) {
  for (int v : b)
    if (v != 0 && v != 1) throw std::invalid_argument("b entries must be bits");
  if (b[0] != b[2]) throw std::invalid_argument("inadmissible b: b(0) != b(2)");
  if (b[1] != b[3]) throw std::invalid_argument("inadmissible b: b(1) != b(3)");
}

void validate_tuple_id(int tuple_id) {
  if (tuple_id < 0 || tuple_id >= static_cast<int>(kConstructionTuples.size()))
    throw std::invalid_argument("tuple id must be in 0..7, got " + std::to_string(tuple_id));
}

}  // namespace

ConstructionParams make_params(const DhlFamily& family, int tuple_id,
                               const std::array<int, 4>& b) {
  validate_tuple_id(tuple_id);
  validate_b(b);
  ConstructionParams params;
  params.prime = family.prime;
  params.alpha = family.classes.alpha();
  params.tuple_id = tuple_id;
  params.b = b;
  params.d = compute_d(family.prime.p);
  return params;
}

BinarySequence construct_unchecked_d(const ConstructionParams& params, const DhlFamily& family) {
  validate_tuple_id(params.tuple_id);
  validate_b(params.b);
  if (params.prime.p != family.prime.p || params.alpha != family.classes.alpha())
    throw std::invalid_argument("params and family disagree on (p, alpha)");
  const std::uint64_t p = family.prime.p;
  const auto& tuple = kConstructionTuples[static_cast<std::size_t>(params.tuple_id)];
  std::vector<BinarySequence> columns;
  columns.reserve(4);
  for (int j = 0; j < 4; ++j) {
    const auto shift = static_cast<std::uint64_t>(
        static_cast<unsigned __int128>(params.d) * static_cast<unsigned>(j) % p);
    columns.push_back(add_constant(
        shift_left(family.seq(tuple[static_cast<std::size_t>(j)]),
                   static_cast<std::int64_t>(shift)),
        params.b[static_cast<std::size_t>(j)]));
  }
  return interleave(columns);
}

BinarySequence construct(const ConstructionParams& params, const DhlFamily& family) {
  const std::uint64_t p = family.prime.p;
  if (params.d >= p || static_cast<unsigned __int128>(params.d) * 4 % p != 1)
    throw std::invalid_argument("d = " + std::to_string(params.d) +
                                " does not satisfy 4d = 1 (mod " + std::to_string(p) + ")");
  return construct_unchecked_d(params, family);
}

std::vector<TaggedConstruction> all_constructions(const DhlFamily& family) {
  std::vector<TaggedConstruction> out;
  out.reserve(kConstructionTuples.size() * kAdmissibleB.size());
  for (std::size_t t = 0; t < kConstructionTuples.size(); ++t) {
    for (const auto& b : kAdmissibleB) {
      ConstructionParams params = make_params(family, static_cast<int>(t), b);
      BinarySequence u = construct(params, family);
      out.push_back(TaggedConstruction{std::move(params), std::move(u)});
    }
  }
  return out;
}

std::int64_t predicted_autocorrelation(const std::vector<BinarySequence>& columns,
                                       std::int64_t tau) {
  if (columns.empty()) throw std::invalid_argument("prediction needs at least one column");
  const std::size_t m = columns.size();
  const std::size_t n = columns.front().period();
  const std::size_t t = reduce_shift(tau, n * m);
  const std::size_t tau1 = t / m;
  const std::size_t tau2 = t % m;
  std::int64_t acc = 0;
  for (std::size_t k = 0; k + tau2 < m; ++k)
    acc += cross_correlation(columns[k], columns[k + tau2], static_cast<std::int64_t>(tau1));
  for (std::size_t k = m - tau2; k < m; ++k)
    acc += cross_correlation(columns[k], columns[k + tau2 - m],
                             static_cast<std::int64_t>(tau1) + 1);
  return acc;
}

StructureCheck structure_check(const CorrelationProfile& profile,
                               const ConstructionParams& params, const DhlFamily& family) {
  const std::uint64_t p = family.prime.p;
  StructureCheck chk;
  if (profile.period != 4 * p || profile.values.size() != profile.period) {
    chk.violations.push_back("profile period " + std::to_string(profile.period) +
                             " is not 4p = " + std::to_string(4 * p));
    return chk;
  }
  const auto n = static_cast<std::int64_t>(profile.period);
  if (profile.values[0] != n)
    chk.violations.push_back("tau=0: expected " + std::to_string(n) + ", got " +
                             std::to_string(profile.values[0]));

  const int sigma = ((params.b[0] + params.b[1]) % 2 == 0) ? 1 : -1;
  const std::int64_t y4s = 4LL * family.y * sigma;
  const std::uint64_t d = params.d % p;

  auto complain = [&chk](std::size_t tau, std::int64_t expected, std::int64_t got) {
    chk.violations.push_back("tau=" + std::to_string(tau) + ": expected " +
                             std::to_string(expected) + ", got " + std::to_string(got));
  };

  for (std::size_t tau = 1; tau < profile.period; ++tau) {
    const std::int64_t v = profile.values[tau];
    if (v == 0) ++chk.zero_count;
    const std::uint64_t tau1 = tau / 4;
    const std::size_t tau2 = tau % 4;
    switch (tau2) {
      case 0:
        if (v != -4) complain(tau, -4, v);
        break;
      case 2: {
        const std::uint64_t t = (tau1 + 2 * d) % p;
        if (t == 0) {
          chk.plus4_even_shift = tau;
          if (v != 4) complain(tau, 4, v);
        } else if (v != 0) {
          complain(tau, 0, v);
        }
        break;
      }
      default: {  // tau2 = 1 or 3
        const std::uint64_t t = (tau1 + (tau2 == 1 ? 1 : 3) * d) % p;
        if (t == 0) {
          if (v != 4 * sigma) complain(tau, 4 * sigma, v);
          break;
        }
        const int cls = family.classes.index_of(t);
        const bool in02 = (cls == 0 || cls == 2);
        const std::int64_t base = (tau2 == 1) ? (in02 ? y4s : -y4s) : (in02 ? -y4s : y4s);
        int& sign = (tau2 == 1) ? chk.odd1_sign : chk.odd3_sign;
        if (sign == 0) {
          if (v == base)
            sign = 1;
          else if (v == -base)
            sign = -1;
          else
            complain(tau, base, v);
        } else if (v != sign * base) {
          complain(tau, sign * base, v);
        }
        break;
      }
    }
  }
  chk.ok = chk.violations.empty();
  return chk;
}

}  // namespace ilseq
