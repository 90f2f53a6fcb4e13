#include "ilseq/dhl.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace ilseq {

namespace {

BinarySequence sequence_from_classes(const CyclotomicClasses& classes, int c1, int c2) {
  std::vector<std::uint64_t> sup = classes.members(c1);
  const auto& more = classes.members(c2);
  sup.insert(sup.end(), more.begin(), more.end());
  return from_support(classes.p(), sup);
}

struct Coef {
  std::int8_t c0, cx, cy, cp;  // value = c0 + cx*x + cy*y + cp*p
};

// Closed-form correlation constants of the family. Rows are ordered pairs
// (s_i, s_j); columns are [tau = 0, tau in D0, D1, D2, D3]. Every entry was
// checked against exhaustive shift sweeps for all valid primes up to 300.
constexpr Coef kClassTable[4][4][5] = {
    {
        // (1,1)
        {{0, 0, 0, 1}, {-1, 0, -2, 0}, {-1, 0, 2, 0}, {-1, 0, -2, 0}, {-1, 0, 2, 0}},
        // (1,2)
        {{1, 0, 0, 0}, {0, 1, 0, 0}, {2, -1, 0, 0}, {0, 1, 0, 0}, {-2, -1, 0, 0}},
        // (1,3)
        {{1, 0, 0, 0}, {2, -1, 0, 0}, {0, 1, 0, 0}, {-2, -1, 0, 0}, {0, 1, 0, 0}},
        // (1,4)
        {{2, 0, 0, -1}, {3, 0, 2, 0}, {3, 0, -2, 0}, {-1, 0, 2, 0}, {-1, 0, -2, 0}},
    },
    {
        // (2,1)
        {{1, 0, 0, 0}, {0, 1, 0, 0}, {-2, -1, 0, 0}, {0, 1, 0, 0}, {2, -1, 0, 0}},
        // (2,2)
        {{0, 0, 0, 1}, {-1, 0, 2, 0}, {-1, 0, -2, 0}, {-1, 0, 2, 0}, {-1, 0, -2, 0}},
        // (2,3)
        {{2, 0, 0, -1}, {3, 0, -2, 0}, {-1, 0, 2, 0}, {-1, 0, -2, 0}, {3, 0, 2, 0}},
        // (2,4)
        {{1, 0, 0, 0}, {2, -1, 0, 0}, {0, 1, 0, 0}, {-2, -1, 0, 0}, {0, 1, 0, 0}},
    },
    {
        // (3,1)
        {{1, 0, 0, 0}, {-2, -1, 0, 0}, {0, 1, 0, 0}, {2, -1, 0, 0}, {0, 1, 0, 0}},
        // (3,2)
        {{2, 0, 0, -1}, {-1, 0, -2, 0}, {3, 0, 2, 0}, {3, 0, -2, 0}, {-1, 0, 2, 0}},
        // (3,3)
        {{0, 0, 0, 1}, {-1, 0, 2, 0}, {-1, 0, -2, 0}, {-1, 0, 2, 0}, {-1, 0, -2, 0}},
        // (3,4)
        {{1, 0, 0, 0}, {0, 1, 0, 0}, {2, -1, 0, 0}, {0, 1, 0, 0}, {-2, -1, 0, 0}},
    },
    {
        // (4,1)
        {{2, 0, 0, -1}, {-1, 0, 2, 0}, {-1, 0, -2, 0}, {3, 0, 2, 0}, {3, 0, -2, 0}},
        // (4,2)
        {{1, 0, 0, 0}, {-2, -1, 0, 0}, {0, 1, 0, 0}, {2, -1, 0, 0}, {0, 1, 0, 0}},
        // (4,3)
        {{1, 0, 0, 0}, {0, 1, 0, 0}, {-2, -1, 0, 0}, {0, 1, 0, 0}, {2, -1, 0, 0}},
        // (4,4)
        {{0, 0, 0, 1}, {-1, 0, -2, 0}, {-1, 0, 2, 0}, {-1, 0, -2, 0}, {-1, 0, 2, 0}},
    },
};

}  // namespace

DhlFamily build_family(std::uint64_t p, std::optional<std::uint64_t> alpha) {
  const DhlPrimeCheck chk = validate_dhl_prime(p);
  if (!chk.ok())
    throw std::invalid_argument("p = " + std::to_string(p) +
                                " rejected: " + std::string(describe(chk.reason)));
  const std::uint64_t a = alpha.value_or(primitive_root(p));
  CyclotomicClasses classes(p, a);
  std::array<BinarySequence, 4> s{
      sequence_from_classes(classes, 0, 1),
      sequence_from_classes(classes, 0, 3),
      sequence_from_classes(classes, 1, 2),
      sequence_from_classes(classes, 2, 3),
  };
  const XyPair xy = resolve_xy(classes, s);
  return DhlFamily{*chk.prime, std::move(classes), std::move(s), xy.x, xy.y};
}

XyPair resolve_xy(const CyclotomicClasses& classes, const std::array<BinarySequence, 4>& s) {
  const auto p = static_cast<std::int64_t>(classes.p());
  auto constant_on_d0 = [&classes](const BinarySequence& a, const BinarySequence& b,
                                   const char* what) {
    std::optional<std::int64_t> v;
    for (std::uint64_t tau : classes.members(0)) {
      const std::int64_t r = cross_correlation(a, b, static_cast<std::int64_t>(tau));
      if (!v)
        v = r;
      else if (*v != r)
        throw std::runtime_error(std::string(what) +
                                 " is not constant on D0; the family is malformed");
    }
    return *v;
  };
  const std::int64_t auto_v = constant_on_d0(s[0], s[0], "R_{s1}");
  const std::int64_t x = constant_on_d0(s[0], s[1], "R_{s1,s2}");
  const std::int64_t y = -(auto_v + 1) / 2;
  if (y != 1 && y != -1)
    throw std::runtime_error("resolved y = " + std::to_string(y) + " is not +-1");
  if (x * x + 4 * y * y != p)
    throw std::runtime_error("resolved (x, y) = (" + std::to_string(x) + ", " + std::to_string(y) +
                             ") fails x^2 + 4y^2 = p");
  return XyPair{x, static_cast<int>(y)};
}

std::int64_t expected_class_value(std::int64_t x, int y, std::uint64_t p, int i, int j, int cls) {
  if (i < 1 || i > 4 || j < 1 || j > 4)
    throw std::invalid_argument("sequence indices must be in 1..4");
  if (cls < kZeroColumn || cls > 3)
    throw std::invalid_argument("class column must be in {-1, 0, 1, 2, 3}");
  const Coef& c = kClassTable[i - 1][j - 1][cls + 1];
  return c.c0 + c.cx * x + static_cast<std::int64_t>(c.cy) * y +
         static_cast<std::int64_t>(c.cp) * static_cast<std::int64_t>(p);
}

bool CorrelationTableReport::all_match() const {
  if (rows.empty()) return false;
  for (const auto& r : rows)
    if (!r.match) return false;
  return true;
}

CorrelationTableReport verify_correlation_table(const DhlFamily& family) {
  CorrelationTableReport rep;
  rep.p = family.prime.p;
  rep.alpha = family.classes.alpha();
  rep.x = family.x;
  rep.y = family.y;
  for (int i = 1; i <= 4; ++i) {
    for (int j = 1; j <= 4; ++j) {
      const CorrelationProfile prof = cross_profile(family.seq(i), family.seq(j));
      for (int cls = kZeroColumn; cls <= 3; ++cls) {
        CorrelationTableRow row;
        row.i = i;
        row.j = j;
        row.cls = cls;
        row.expected = expected_class_value(family.x, family.y, rep.p, i, j, cls);
        if (cls == kZeroColumn) {
          row.computed = prof.values[0];
          row.match = (*row.computed == row.expected);
          if (!row.match) row.offending_tau = 0;
        } else {
          bool constant = true;
          std::optional<std::int64_t> first;
          for (std::uint64_t tau : family.classes.members(cls)) {
            const std::int64_t v = prof.values[static_cast<std::size_t>(tau)];
            if (!first) {
              first = v;
            } else if (v != *first) {
              constant = false;
              row.offending_tau = tau;
              break;
            }
          }
          if (constant) {
            row.computed = first;
            row.match = (*first == row.expected);
            if (!row.match) row.offending_tau = family.classes.members(cls).front();
          }
        }
        rep.rows.push_back(row);
      }
    }
  }
  return rep;
}

}  // namespace ilseq
