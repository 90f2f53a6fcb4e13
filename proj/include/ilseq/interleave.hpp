#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ilseq/correlation.hpp"
#include "ilseq/dhl.hpp"
#include "ilseq/sequence.hpp"

namespace ilseq {

// Row-major read-out of the N x M array whose columns are the inputs:
// u(i*M + j) = columns[j](i). The result has period N*M.
BinarySequence interleave(const std::vector<BinarySequence>& columns);

// Inverse of interleave; m must divide the period of u.
std::vector<BinarySequence> deinterleave(const BinarySequence& u, std::size_t m);

// The eight admissible column tuples (1-based ids into the family), frozen
// order. Tuple (a0, a1, a2, a3) selects the base sequences before shifting.
inline constexpr std::array<std::array<int, 4>, 8> kConstructionTuples{{
    {3, 2, 1, 1},
    {2, 3, 1, 1},
    {4, 1, 2, 2},
    {1, 4, 2, 2},
    {4, 1, 3, 3},
    {1, 4, 3, 3},
    {3, 2, 4, 4},
    {2, 3, 4, 4},
}};

// The four admissible offset vectors: b(0) = b(2) and b(1) = b(3).
inline constexpr std::array<std::array<int, 4>, 4> kAdmissibleB{{
    {0, 0, 0, 0},
    {0, 1, 0, 1},
    {1, 0, 1, 0},
    {1, 1, 1, 1},
}};

// Everything determining one interleaved output of period 4p:
//   u = I(a0 + b(0), L^d(a1) + b(1), L^2d(a2) + b(2), L^3d(a3) + b(3))
// with (a0..a3) = kConstructionTuples[tuple_id] and 4d = 1 (mod p).
struct ConstructionParams {
  DhlPrime prime;
  std::uint64_t alpha = 0;
  int tuple_id = 0;        // 0..7
  std::array<int, 4> b{};  // admissible offsets only
  std::uint64_t d = 0;     // 4d = 1 (mod p)
};

// Params with d derived from p. Validates tuple_id and b admissibility.
ConstructionParams make_params(const DhlFamily& family, int tuple_id, const std::array<int, 4>& b);

// The interleaved sequence. Validates b admissibility and 4d = 1 (mod p),
// throwing std::invalid_argument that names the violated constraint.
BinarySequence construct(const ConstructionParams& params, const DhlFamily& family);

// Same construction but takes params.d as-is. Exists so tests can show that
// every other shift parameter breaks the result; not part of normal use.
BinarySequence construct_unchecked_d(const ConstructionParams& params, const DhlFamily& family);

struct TaggedConstruction {
  ConstructionParams params;
  BinarySequence u;
};

// All 8 tuples x 4 admissible b, tuple-major, b in kAdmissibleB order.
std::vector<TaggedConstruction> all_constructions(const DhlFamily& family);

// Autocorrelation of an interleaving predicted from column cross-correlations
// alone: writing tau = tau1*M + tau2 with 0 <= tau2 < M,
//   R_u(tau) = sum_{k=0}^{M-tau2-1} R_{a_k, a_{k+tau2}}(tau1)
//            + sum_{k=M-tau2}^{M-1} R_{a_k, a_{k+tau2-M}}(tau1 + 1).
// Never touches the interleaved sequence itself.
std::int64_t predicted_autocorrelation(const std::vector<BinarySequence>& columns,
                                       std::int64_t tau);

// Shift-by-shift shape of a constructed profile, with sigma = (-1)^(b0+b1):
//   tau = 0 (mod 4), tau > 0: value -4;
//   tau = 2 (mod 4): 0 everywhere except +4 at the one shift with
//     tau1 + 2d = 0 (mod p);
//   tau = 1 (mod 4): 4*sigma at tau1 + d = 0 (mod p); otherwise magnitude 4
//     with one sign across D0 ∪ D2 and the opposite across D1 ∪ D3;
//   tau = 3 (mod 4): the same with tau1 + 3d and independently fitted sign.
// The two odd-shift signs are fitted at the first applicable shift, recorded,
// and then enforced everywhere; which sign a tuple realizes is reported, not
// prescribed. Any deviation lands in violations with its shift.
struct StructureCheck {
  bool ok = false;
  std::vector<std::string> violations;
  int odd1_sign = 0;  // +-1 once fitted: sign on D0 ∪ D2 relative to 4*y*sigma
  int odd3_sign = 0;  // +-1 once fitted: sign on D0 ∪ D2 relative to -4*y*sigma
  std::size_t zero_count = 0;                   // zeros among out-of-phase values
  std::optional<std::size_t> plus4_even_shift;  // the tau = 2 (mod 4) shift that must hold +4
};

StructureCheck structure_check(const CorrelationProfile& profile,
                               const ConstructionParams& params, const DhlFamily& family);

}  // namespace ilseq
