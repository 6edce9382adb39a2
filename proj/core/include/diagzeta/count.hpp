#pragma once

#include <cstdint>

#include "diagzeta/curve.hpp"
#include "diagzeta/numeric.hpp"

namespace diagzeta::count {

enum class Source { formula, bruteforce };

struct PointCount {
  std::uint32_t n = 0;
  BigInt value;
  Source source = Source::formula;
};

/// Which branch of the three-way point-count formula applies at extension
/// degree n: 1 when i*n = j*n = 0 (mod e), 2 when i*n, j*n, (i-j)*n are all
/// nonzero (mod e), 3 otherwise. Depends only on (i*n mod e, j*n mod e).
int formula_branch(std::uint32_t e, std::uint32_t i, std::uint32_t j, std::uint32_t n);

/// Closed-form number of F_{q^n}-rational points:
///   branch 1: q^n + 1 - (e-1)(e-2) * theta^n
///   branch 2: q^n + 1 - 2 * theta^n
///   branch 3: q^n + 1 + (e-2) * theta^n
/// with theta^n = (-1)^{ns} q^{n/2}, all arithmetic exact.
PointCount count_formula(const curve::CurveParams& params, std::uint32_t i,
                         std::uint32_t j, std::uint32_t n);
PointCount count_formula(const curve::CurveParams& params, const curve::IndexPair& idx,
                         std::uint32_t n);

struct WeilBounds {
  BigInt lower;
  BigInt upper;
};

/// (q^n + 1 - 2g q^{n/2}, q^n + 1 + 2g q^{n/2}), exact.
WeilBounds weil_bounds(const curve::CurveParams& params, std::uint32_t n);

inline constexpr std::uint64_t kDefaultBudget = 1'000'000'000ULL;

/// Exact projective point count over F_{q^n} by chart enumeration
/// ((x,y,1), (x,1,0), (1,0,0)) with per-chart e-th-power value tables.
/// Refuses instances whose q^{2n} pair sweep exceeds the work budget
/// (BudgetExceeded carries the estimated cost). Degree 1 reuses F_q itself.
PointCount count_bruteforce(const curve::Curve& curve, std::uint32_t n,
                            std::uint64_t budget = kDefaultBudget);

/// Enumerator self-test surface: the same chart walk with the curve
/// predicate replaced by "always true"; must equal q^{2n} + q^n + 1 where
/// the argument field plays F_{q^n}.
BigInt projective_point_census(const ff::FieldPtr& field);

}  // namespace diagzeta::count
