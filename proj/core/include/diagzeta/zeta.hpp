#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "diagzeta/count.hpp"
#include "diagzeta/curve.hpp"
#include "diagzeta/numeric.hpp"

namespace diagzeta::zeta {

/// Exact integer polynomial, coefficients ascending, no trailing zeros.
class IntPolynomial {
 public:
  IntPolynomial() = default;  // zero polynomial
  explicit IntPolynomial(std::vector<BigInt> coeffs);
  static IntPolynomial constant(BigInt value);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  /// Coefficient of t^k (zero beyond the degree).
  const BigInt& coeff(std::size_t k) const noexcept;
  const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }

  BigInt eval(const BigInt& x) const;

  IntPolynomial operator+(const IntPolynomial& rhs) const;
  IntPolynomial operator-(const IntPolynomial& rhs) const;
  IntPolynomial operator*(const IntPolynomial& rhs) const;
  IntPolynomial pow(std::uint64_t exponent) const;
  bool operator==(const IntPolynomial& rhs) const = default;

  /// Exact quotient when rhs divides *this in Z[t]; nullopt otherwise.
  /// rhs must have constant term +/-1 (every factor block does).
  std::optional<IntPolynomial> divide_exact(const IntPolynomial& rhs) const;

 private:
  std::vector<BigInt> coeffs_;
};

/// Symbolic factor of P(t). The cyclotomic kinds carry the complex l-th
/// roots of unity purely structurally via the integer identities
///   prod_{r=1}^{l-1} (1 - z^r x) = 1 + x + ... + x^{l-1}
///   prod_{r=1}^{l-1} (1 + z^r x) = 1 - x + ... + x^{l-1}   (l odd),
/// so no complex arithmetic ever happens.
enum class BlockKind { lin_plus, lin_minus, cyclo_plus, cyclo_minus };

const char* block_kind_name(BlockKind kind) noexcept;

struct FactorBlock {
  BlockKind kind = BlockKind::lin_plus;
  std::uint32_t exponent = 0;
  bool operator==(const FactorBlock&) const = default;
};

/// P(t) as a multiset of factor blocks over the signed integer theta.
struct FactoredPolynomial {
  std::vector<FactorBlock> blocks;
  BigInt theta;
  std::uint32_t l = 0;

  std::uint32_t expanded_degree() const noexcept;
};

/// Expansion of a single block in t, substituting theta:
/// lin_plus -> 1 - theta t, lin_minus -> 1 + theta t,
/// cyclo_plus -> sum (theta t)^k, cyclo_minus -> sum (-theta t)^k, k < l.
IntPolynomial block_expansion(BlockKind kind, const BigInt& theta, std::uint32_t l);

/// The exact case table: which block multiset P(t) is for the given case.
/// Throws FamilyMismatch when the label's family is not the params' family.
FactoredPolynomial build_factored_p(const curve::CurveParams& params,
                                    const curve::CaseLabel& label);

/// Full product of block expansions: degree 2g, constant term 1, leading
/// coefficient q^g.
IntPolynomial expand(const FactoredPolynomial& fp);

/// Z(t) = numerator / ((1-t)(1-qt)), with the factored form retained for
/// structural root checks.
struct ZetaFunction {
  IntPolynomial numerator;
  BigInt q;
  std::uint32_t genus = 0;
  FactoredPolynomial factored;
};

/// index pair -> case -> factored P -> expansion, for a concrete curve.
ZetaFunction zeta_function(const curve::Curve& curve);
/// Same, for a case chosen directly (numeric-grid work).
ZetaFunction zeta_for_case(const curve::CurveParams& params,
                           const curve::CaseLabel& label);

struct WeilReport {
  bool degree_ok = false;
  bool constant_term_ok = false;
  bool leading_coeff_ok = false;
  bool functional_equation_ok = false;  // c_{2g-k} = q^{g-k} c_k for all k
  bool root_magnitude_ok = false;       // every block divides P exactly

  bool all_ok() const noexcept {
    return degree_ok && constant_term_ok && leading_coeff_ok &&
           functional_equation_ok && root_magnitude_ok;
  }
};

/// All five checks are reported; nothing short-circuits.
WeilReport check_weil(const ZetaFunction& z);

/// q^n + 1 - sum alpha_k^n computed blockwise: lin_plus contributes theta^n
/// per exponent unit, lin_minus (-theta)^n, and the cyclotomic kinds
/// S(n) theta^n resp. S(n) (-theta)^n with S(n) = l-1 if l | n else -1.
BigInt power_sum_counts(const FactoredPolynomial& fp, const BigInt& q, std::uint32_t n);

/// Exact check that exp(sum_{n<=N} a(n) t^n / n) agrees with the Taylor
/// series of numerator/((1-t)(1-qt)) through t^N. The left side runs in
/// exact rationals, the right side in integers; the two routes share
/// nothing but the inputs.
bool series_consistency(const ZetaFunction& z,
                        const std::function<BigInt(std::uint32_t)>& counts,
                        std::uint32_t N);

}  // namespace diagzeta::zeta
