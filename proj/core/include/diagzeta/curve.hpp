#pragma once

#include <cstdint>
#include <string>

#include "diagzeta/ff.hpp"
#include "diagzeta/numeric.hpp"

namespace diagzeta::curve {

/// Validated numeric regime for the curve a*Y^e = b*X^e + c*Z^e over F_q:
/// l an odd prime, e = l or 2l, f = ord p (mod l) even, alpha = f*s,
/// q = p^alpha, q0 = p^f, u = sqrt(q0), theta = (-1)^s * sqrt(q),
/// genus = (e-1)(e-2)/2. Coefficients live in Curve below so that purely
/// numeric work (case tables, P(t), class numbers) never constructs F_q.
struct CurveParams {
  std::uint64_t p = 0;
  std::uint32_t l = 0;
  std::uint32_t e = 0;
  std::uint32_t f = 0;
  std::uint32_t s = 0;
  std::uint32_t alpha = 0;
  BigInt q;
  BigInt q0;
  BigInt u;
  BigInt theta;
  std::uint32_t genus = 0;

  bool two_l_family() const noexcept { return e == 2 * l; }
  /// sqrt(q) = u^s as an exact integer.
  BigInt sqrt_q() const { return pow_big(u, s); }
};

/// Checks every regime hypothesis and fills the derived fields. Throws
/// LNotOddPrime, PNotPrime, ENotLOr2L, PEvenWith2l, OrderNotEven,
/// CongruenceFailure.
CurveParams validate_params(std::uint64_t p, std::uint32_t l, std::uint32_t e,
                            std::uint32_t s);

/// A concrete curve: the regime plus F_q (two-level tower over F_p) and the
/// nonzero coefficients a, b, c in F_q.
struct Curve {
  CurveParams params;
  ff::FieldPtr field;
  ff::FieldElement a;
  ff::FieldElement b;
  ff::FieldElement c;
};

/// Builds F_q and parses the coefficients from element text. Throws
/// ZeroCoefficient on a*b*c = 0 in addition to validate_params errors.
Curve make_curve(std::uint64_t p, std::uint32_t l, std::uint32_t e, std::uint32_t s,
                 const std::string& a_text, const std::string& b_text,
                 const std::string& c_text);
Curve make_curve(const CurveParams& params, ff::FieldPtr field, ff::FieldElement a,
                 ff::FieldElement b, ff::FieldElement c);

/// i = ind_gamma(b/c) mod e, j = ind_gamma(a/c) mod e for the canonical
/// generator gamma of F_q^*.
struct IndexPair {
  std::uint32_t i = 0;
  std::uint32_t j = 0;
  ff::FieldElement gamma;
};

IndexPair index_pair(const Curve& curve);

enum class CaseFamily { e2l, el };
enum class Subcase { none, i, ii, iii };

/// Which case of the seven-way (e = 2l) or three-way (e = l) taxonomy the
/// residue pair (i, j) falls in. Exactly one label applies to each pair.
struct CaseLabel {
  CaseFamily family = CaseFamily::e2l;
  int number = 0;
  Subcase sub = Subcase::none;

  bool operator==(const CaseLabel&) const = default;
  /// "2l-case-5(i)", "l-case-3", ...
  std::string str() const;
};

/// Seven-case classification for e = 2l; 0 <= i, j < 2l.
CaseLabel classify_2l(std::uint32_t i, std::uint32_t j, std::uint32_t l);
/// Three-case classification for e = l; 0 <= i, j < l.
CaseLabel classify_l(std::uint32_t i, std::uint32_t j, std::uint32_t l);
/// Dispatch on the params' family.
CaseLabel classify(const CurveParams& params, std::uint32_t i, std::uint32_t j);

}  // namespace diagzeta::curve
