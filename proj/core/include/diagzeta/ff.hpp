#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>
#include <vector>

#include "diagzeta/errors.hpp"
#include "diagzeta/numeric.hpp"

namespace diagzeta::ff {

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// An element of a Field: the coefficient vector over the base field,
/// ascending degree, each coefficient stored by its base-field encoding.
/// Prime-field elements have a single digit (the residue). Immutable once
/// built; equality is owner + digits.
class FieldElement {
 public:
  FieldElement() = default;

  const FieldPtr& field() const noexcept { return field_; }
  const std::vector<std::uint64_t>& digits() const noexcept { return digits_; }
  bool valid() const noexcept { return field_ != nullptr; }
  bool is_zero() const noexcept;
  bool is_one() const noexcept;

  /// Integer encoding sum_k digits[k] * (base order)^k; the canonical
  /// enumeration order is ascending encoding.
  std::uint64_t encoding() const noexcept;

  FieldElement operator+(const FieldElement& rhs) const;
  FieldElement operator-(const FieldElement& rhs) const;
  FieldElement operator*(const FieldElement& rhs) const;
  FieldElement operator/(const FieldElement& rhs) const;
  FieldElement operator-() const;
  FieldElement inverse() const;
  FieldElement pow(const BigInt& exponent) const;

  bool operator==(const FieldElement& rhs) const noexcept;
  bool operator!=(const FieldElement& rhs) const noexcept { return !(*this == rhs); }

 private:
  friend class Field;
  FieldElement(FieldPtr field, std::vector<std::uint64_t> digits)
      : field_(std::move(field)), digits_(std::move(digits)) {}

  FieldPtr field_;
  std::vector<std::uint64_t> digits_;
};

std::ostream& operator<<(std::ostream& os, const FieldElement& x);

/// A prime field F_p or an extension built over it. Towers are at most two
/// extension levels deep (F_p -> F_q -> F_{q^n}), which keeps embeddings of
/// lower-level elements the plain constant injection. All state is immutable
/// after construction; the memoized canonical generator is guarded by a
/// once-flag, so sharing a Field across threads is safe.
class Field : public std::enable_shared_from_this<Field> {
 public:
  enum class Kind { prime, extension };

  Kind kind() const noexcept { return kind_; }
  bool is_prime_field() const noexcept { return kind_ == Kind::prime; }
  std::uint64_t characteristic() const noexcept { return p_; }
  /// Degree over the immediate base (1 for prime fields).
  std::uint32_t degree() const noexcept { return degree_; }
  /// Degree over the prime field.
  std::uint32_t absolute_degree() const noexcept;
  std::uint64_t order() const noexcept { return order_; }
  BigInt order_big() const { return BigInt(order_); }
  const FieldPtr& base() const noexcept { return base_; }
  /// Monic modulus as base-field encodings, ascending, length degree()+1.
  /// Empty for prime fields.
  const std::vector<std::uint64_t>& modulus() const noexcept { return modulus_; }

  bool same_field(const Field& other) const noexcept;

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement from_encoding(std::uint64_t enc) const;
  /// Builds an element from base-field encodings (length <= degree; padded).
  FieldElement from_digits(std::vector<std::uint64_t> digits) const;

  // Arithmetic on encodings. Used by the level above for coefficient work
  // and by the enumeration oracle for flat value tables.
  std::uint64_t add_enc(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t sub_enc(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t neg_enc(std::uint64_t a) const;
  std::uint64_t mul_enc(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t inv_enc(std::uint64_t a) const;
  std::uint64_t pow_enc(std::uint64_t a, BigInt exponent) const;

  std::vector<std::uint64_t> decode(std::uint64_t enc) const;
  std::uint64_t encode(const std::vector<std::uint64_t>& digits) const;

 private:
  friend class FieldElement;
  friend FieldPtr build_prime_field(std::uint64_t);
  friend FieldPtr build_extension(const FieldPtr&, std::uint32_t);
  friend FieldElement find_generator(const FieldPtr&);
  Field() = default;

  std::vector<std::uint64_t> mul_digits(const std::vector<std::uint64_t>& a,
                                        const std::vector<std::uint64_t>& b) const;

  Kind kind_ = Kind::prime;
  std::uint64_t p_ = 0;
  std::uint32_t degree_ = 1;
  std::uint64_t order_ = 0;
  FieldPtr base_;
  std::vector<std::uint64_t> modulus_;
  std::vector<std::uint64_t> top_reduction_;  // encodings of -modulus tail: x^d = sum top_reduction_[k] x^k

  mutable std::once_flag generator_once_;
  mutable std::uint64_t generator_enc_ = 0;
};

/// F_p for prime p. Throws NotPrime for composite p, DeskScaleExceeded for
/// p >= 2^32.
FieldPtr build_prime_field(std::uint64_t p);

/// Lexicographically least monic irreducible of degree d over base:
/// candidates ordered by the coefficient tuple (c_{d-1}, ..., c_1, c_0),
/// each coefficient running through the base field's canonical enumeration
/// order. Returned ascending (c_0 first), length d+1, monic. Deterministic.
std::vector<std::uint64_t> find_irreducible(const FieldPtr& base, std::uint32_t d);

/// Degree-d extension of base with modulus find_irreducible(base, d).
/// At most two extension levels; order must stay desk scale (< 2^40).
FieldPtr build_extension(const FieldPtr& base, std::uint32_t d);

/// Irreducibility over the base field (Rabin's criterion; exact).
/// `poly` is given as base encodings, ascending, monic.
bool is_irreducible(const FieldPtr& base, const std::vector<std::uint64_t>& poly);

/// Lazy range over all field elements in canonical (ascending encoding) order.
class ElementSequence {
 public:
  explicit ElementSequence(FieldPtr field) : field_(std::move(field)) {}

  class iterator {
   public:
    using value_type = FieldElement;
    iterator(const Field* field, std::uint64_t enc) : field_(field), enc_(enc) {}
    FieldElement operator*() const { return field_->from_encoding(enc_); }
    iterator& operator++() { ++enc_; return *this; }
    bool operator!=(const iterator& rhs) const { return enc_ != rhs.enc_; }
    bool operator==(const iterator& rhs) const { return enc_ == rhs.enc_; }
   private:
    const Field* field_;
    std::uint64_t enc_;
  };

  iterator begin() const { return {field_.get(), 0}; }
  iterator end() const { return {field_.get(), field_->order()}; }
  std::uint64_t size() const { return field_->order(); }

 private:
  FieldPtr field_;
};

ElementSequence enumerate_elements(const FieldPtr& field);

/// Least k >= 1 with x^k = 1. Throws ZeroElement for x = 0.
BigInt multiplicative_order(const FieldElement& x);

/// First element in enumeration order of multiplicative order |F|-1; the
/// canonical generator used everywhere downstream. Memoized per field.
FieldElement find_generator(const FieldPtr& field);

/// Baby-step giant-step index of x base gamma, in [0, |F|-2]. Throws
/// ZeroElement for x = 0 and NotGenerator when ord(gamma) != |F|-1.
std::uint64_t discrete_log(const FieldElement& gamma, const FieldElement& x);

/// Constant injection of a base-field element into the extension.
FieldElement lift_to_extension(const FieldPtr& ext, const FieldElement& x);

/// Element text format: prime-field elements as decimal residues; extension
/// elements as "poly:[c0,c1,...]" (coefficients ascending, recursively in
/// element text format) or "g^k" (canonical generator to the k). Bare
/// decimals are also accepted for extension fields and mean the canonical
/// encoding.
std::string format_element(const FieldElement& x);
FieldElement parse_element(const FieldPtr& field, std::string_view text);

}  // namespace diagzeta::ff
