#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "diagzeta/count.hpp"
#include "diagzeta/curve.hpp"

namespace diagzeta::maximality {

enum class Extremality { maximal, minimal, neither };

const char* extremality_name(Extremality status) noexcept;

struct ExtremalityVerdict {
  Extremality status = Extremality::neither;
  BigInt attained_count;  // a(1)
  BigInt weil_lower;
  BigInt weil_upper;
  /// The bound the count is measured against: upper when maximal, lower when
  /// minimal, upper by convention otherwise.
  BigInt bound;
  bool is_fermat_class = false;   // index pair (0,0): coefficients reduce to a=b=c=1
  bool is_hermitian = false;      // Fermat class with e = sqrt(q) + 1
  bool e_divides_sqrt_q_plus_1 = false;
  std::optional<std::string> fermat_prime_note;
};

/// Compares a(1) from the closed-form count against both Weil bounds,
/// exactly.
ExtremalityVerdict classify_extremality(const curve::CurveParams& params,
                                        std::uint32_t i, std::uint32_t j);
ExtremalityVerdict classify_extremality(const curve::Curve& curve);

/// Fermat class and e = sqrt(q) + 1; such a curve has the largest genus a
/// maximal curve over F_q can have.
bool is_hermitian(const curve::CurveParams& params, std::uint32_t i, std::uint32_t j);
bool is_hermitian(const curve::Curve& curve);

/// sqrt(q) (sqrt(q) - 1) / 2 for square q; throws NotASquare otherwise.
BigInt max_genus_bound(const BigInt& q);

}  // namespace diagzeta::maximality
