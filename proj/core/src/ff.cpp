#include "diagzeta/ff.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <ostream>
#include <sstream>
#include <unordered_map>

namespace diagzeta::ff {

namespace {

constexpr std::uint64_t kDeskScaleOrderCap = 1ULL << 40;
constexpr std::uint64_t kPrimeCap = 1ULL << 32;

// --- polynomial arithmetic over an arbitrary base field ---------------------
// Coefficients are base-field encodings, ascending degree.

using Poly = std::vector<std::uint64_t>;

void ptrim(Poly& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

bool pis_zero(const Poly& v) {
  return std::all_of(v.begin(), v.end(), [](std::uint64_t c) { return c == 0; });
}

Poly psub(const Field& k, const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    std::uint64_t ai = i < a.size() ? a[i] : 0;
    std::uint64_t bi = i < b.size() ? b[i] : 0;
    r[i] = k.sub_enc(ai, bi);
  }
  ptrim(r);
  return r;
}

Poly pmul(const Field& k, const Poly& a, const Poly& b) {
  if (pis_zero(a) || pis_zero(b)) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j] == 0) continue;
      r[i + j] = k.add_enc(r[i + j], k.mul_enc(a[i], b[j]));
    }
  }
  ptrim(r);
  return r;
}

// Reduce v modulo the monic polynomial f in place.
void preduce(const Field& k, Poly& v, const Poly& f) {
  const std::size_t d = f.size() - 1;
  if (v.size() <= d) return;
  for (std::size_t top = v.size(); top-- > d;) {
    std::uint64_t c = v[top];
    if (c == 0) continue;
    v[top] = 0;
    for (std::size_t i = 0; i < d; ++i) {
      if (f[i] == 0) continue;
      v[top - d + i] = k.sub_enc(v[top - d + i], k.mul_enc(c, f[i]));
    }
  }
  v.resize(d);
  ptrim(v);
}

Poly pmulmod(const Field& k, const Poly& a, const Poly& b, const Poly& f) {
  Poly r = pmul(k, a, b);
  preduce(k, r, f);
  return r;
}

Poly ppowmod(const Field& k, Poly base, const BigInt& exp, const Poly& f) {
  Poly result{1};
  if (exp == 0) return result;
  preduce(k, base, f);
  const unsigned bits = boost::multiprecision::msb(exp);
  for (unsigned bit = bits + 1; bit-- > 0;) {
    result = pmulmod(k, result, result, f);
    if (boost::multiprecision::bit_test(exp, bit)) {
      result = pmulmod(k, result, base, f);
    }
  }
  return result;
}

// Euclidean remainder a mod b (b nonzero, not necessarily monic).
Poly pmod(const Field& k, Poly a, const Poly& b) {
  ptrim(a);
  const std::size_t db = b.size() - 1;
  const std::uint64_t lead_inv = k.inv_enc(b.back());
  while (a.size() > db) {
    std::uint64_t c = k.mul_enc(a.back(), lead_inv);
    if (c != 0) {
      const std::size_t shift = a.size() - 1 - db;
      for (std::size_t i = 0; i <= db; ++i) {
        if (b[i] == 0) continue;
        a[shift + i] = k.sub_enc(a[shift + i], k.mul_enc(c, b[i]));
      }
    }
    a.pop_back();
    ptrim(a);
    if (a.empty()) break;
  }
  return a;
}

Poly pgcd(const Field& k, Poly a, Poly b) {
  ptrim(a);
  ptrim(b);
  while (!b.empty()) {
    Poly r = pmod(k, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

}  // namespace

// --- FieldElement ------------------------------------------------------------

bool FieldElement::is_zero() const noexcept {
  return std::all_of(digits_.begin(), digits_.end(),
                     [](std::uint64_t d) { return d == 0; });
}

bool FieldElement::is_one() const noexcept {
  if (digits_.empty() || digits_[0] != 1) return false;
  return std::all_of(digits_.begin() + 1, digits_.end(),
                     [](std::uint64_t d) { return d == 0; });
}

std::uint64_t FieldElement::encoding() const noexcept {
  return field_->encode(digits_);
}

bool FieldElement::operator==(const FieldElement& rhs) const noexcept {
  if (field_ == nullptr || rhs.field_ == nullptr) return field_ == rhs.field_;
  return field_->same_field(*rhs.field_) && digits_ == rhs.digits_;
}

namespace {
void require_same_field(const FieldElement& a, const FieldElement& b) {
  if (!a.valid() || !b.valid() || !a.field()->same_field(*b.field())) {
    raise(Errc::MixedFields, "operands belong to different fields");
  }
}
}  // namespace

FieldElement FieldElement::operator+(const FieldElement& rhs) const {
  require_same_field(*this, rhs);
  const Field& coeffs = field_->is_prime_field() ? *field_ : *field_->base();
  std::vector<std::uint64_t> r(digits_.size());
  for (std::size_t i = 0; i < r.size(); ++i) {
    r[i] = coeffs.add_enc(digits_[i], rhs.digits_[i]);
  }
  return FieldElement(field_, std::move(r));
}

FieldElement FieldElement::operator-(const FieldElement& rhs) const {
  return *this + (-rhs);
}

FieldElement FieldElement::operator-() const {
  const Field& coeffs = field_->is_prime_field() ? *field_ : *field_->base();
  std::vector<std::uint64_t> r(digits_.size());
  for (std::size_t i = 0; i < r.size(); ++i) {
    r[i] = coeffs.neg_enc(digits_[i]);
  }
  return FieldElement(field_, std::move(r));
}

FieldElement FieldElement::operator*(const FieldElement& rhs) const {
  require_same_field(*this, rhs);
  return FieldElement(field_, field_->mul_digits(digits_, rhs.digits_));
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) raise(Errc::DivisionByZero, "inverse of zero");
  if (field_->is_prime_field()) {
    return FieldElement(field_, {field_->inv_enc(digits_[0])});
  }
  return pow(field_->order_big() - 2);
}

FieldElement FieldElement::operator/(const FieldElement& rhs) const {
  require_same_field(*this, rhs);
  return *this * rhs.inverse();
}

FieldElement FieldElement::pow(const BigInt& exponent) const {
  if (exponent < 0) {
    return inverse().pow(-exponent);
  }
  FieldElement result = field_->one();
  if (exponent == 0) return result;
  if (is_zero()) return field_->zero();
  const unsigned bits = boost::multiprecision::msb(exponent);
  for (unsigned bit = bits + 1; bit-- > 0;) {
    result = result * result;
    if (boost::multiprecision::bit_test(exponent, bit)) {
      result = result * *this;
    }
  }
  return result;
}

std::ostream& operator<<(std::ostream& os, const FieldElement& x) {
  return os << format_element(x);
}

// --- Field -------------------------------------------------------------------

std::uint32_t Field::absolute_degree() const noexcept {
  return kind_ == Kind::prime ? 1 : degree_ * base_->absolute_degree();
}

bool Field::same_field(const Field& other) const noexcept {
  if (this == &other) return true;
  if (kind_ != other.kind_ || p_ != other.p_ || order_ != other.order_ ||
      degree_ != other.degree_) {
    return false;
  }
  if (kind_ == Kind::prime) return true;
  return modulus_ == other.modulus_ && base_->same_field(*other.base_);
}

FieldElement Field::zero() const {
  return FieldElement(shared_from_this(), std::vector<std::uint64_t>(degree_, 0));
}

FieldElement Field::one() const {
  std::vector<std::uint64_t> d(degree_, 0);
  d[0] = 1;
  return FieldElement(shared_from_this(), std::move(d));
}

FieldElement Field::from_encoding(std::uint64_t enc) const {
  if (enc >= order_) throw std::invalid_argument("encoding out of range");
  return FieldElement(shared_from_this(), decode(enc));
}

FieldElement Field::from_digits(std::vector<std::uint64_t> digits) const {
  if (digits.size() > degree_) throw std::invalid_argument("too many digits");
  digits.resize(degree_, 0);
  const std::uint64_t b = kind_ == Kind::prime ? p_ : base_->order();
  for (std::uint64_t d : digits) {
    if (d >= b) throw std::invalid_argument("digit out of range");
  }
  return FieldElement(shared_from_this(), std::move(digits));
}

std::vector<std::uint64_t> Field::decode(std::uint64_t enc) const {
  std::vector<std::uint64_t> digits(degree_, 0);
  const std::uint64_t b = kind_ == Kind::prime ? p_ : base_->order();
  for (std::uint32_t k = 0; k < degree_; ++k) {
    digits[k] = enc % b;
    enc /= b;
  }
  return digits;
}

std::uint64_t Field::encode(const std::vector<std::uint64_t>& digits) const {
  const std::uint64_t b = kind_ == Kind::prime ? p_ : base_->order();
  std::uint64_t enc = 0;
  for (std::size_t k = digits.size(); k-- > 0;) {
    enc = enc * b + digits[k];
  }
  return enc;
}

std::uint64_t Field::add_enc(std::uint64_t a, std::uint64_t b) const {
  if (kind_ == Kind::prime) {
    std::uint64_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::vector<std::uint64_t> da = decode(a), db = decode(b);
  for (std::uint32_t k = 0; k < degree_; ++k) da[k] = base_->add_enc(da[k], db[k]);
  return encode(da);
}

std::uint64_t Field::neg_enc(std::uint64_t a) const {
  if (kind_ == Kind::prime) return a == 0 ? 0 : p_ - a;
  std::vector<std::uint64_t> da = decode(a);
  for (std::uint32_t k = 0; k < degree_; ++k) da[k] = base_->neg_enc(da[k]);
  return encode(da);
}

std::uint64_t Field::sub_enc(std::uint64_t a, std::uint64_t b) const {
  return add_enc(a, neg_enc(b));
}

std::uint64_t Field::mul_enc(std::uint64_t a, std::uint64_t b) const {
  if (kind_ == Kind::prime) return a * b % p_;
  return encode(mul_digits(decode(a), decode(b)));
}

std::uint64_t Field::inv_enc(std::uint64_t a) const {
  if (a == 0) raise(Errc::DivisionByZero, "inverse of zero");
  if (kind_ == Kind::prime) {
    std::int64_t t = 0, newt = 1;
    std::int64_t r = static_cast<std::int64_t>(p_), newr = static_cast<std::int64_t>(a);
    while (newr != 0) {
      std::int64_t q = r / newr;
      std::int64_t tmp = t - q * newt;
      t = newt;
      newt = tmp;
      tmp = r - q * newr;
      r = newr;
      newr = tmp;
    }
    return static_cast<std::uint64_t>(t < 0 ? t + static_cast<std::int64_t>(p_) : t);
  }
  return pow_enc(a, order_big() - 2);
}

std::uint64_t Field::pow_enc(std::uint64_t a, BigInt exponent) const {
  if (exponent < 0) {
    a = inv_enc(a);
    exponent = -exponent;
  }
  if (exponent == 0) return 1;
  if (a == 0) return 0;
  std::uint64_t result = 1;
  const unsigned bits = boost::multiprecision::msb(exponent);
  for (unsigned bit = bits + 1; bit-- > 0;) {
    result = mul_enc(result, result);
    if (boost::multiprecision::bit_test(exponent, bit)) result = mul_enc(result, a);
  }
  return result;
}

std::vector<std::uint64_t> Field::mul_digits(
    const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) const {
  if (kind_ == Kind::prime) return {a[0] * b[0] % p_};
  const std::uint32_t d = degree_;
  std::vector<std::uint64_t> conv(2 * d - 1, 0);
  for (std::uint32_t i = 0; i < d; ++i) {
    if (a[i] == 0) continue;
    for (std::uint32_t j = 0; j < d; ++j) {
      if (b[j] == 0) continue;
      conv[i + j] = base_->add_enc(conv[i + j], base_->mul_enc(a[i], b[j]));
    }
  }
  for (std::size_t top = conv.size(); top-- > d;) {
    const std::uint64_t c = conv[top];
    if (c == 0) continue;
    conv[top] = 0;
    for (std::uint32_t i = 0; i < d; ++i) {
      if (top_reduction_[i] == 0) continue;
      conv[top - d + i] =
          base_->add_enc(conv[top - d + i], base_->mul_enc(c, top_reduction_[i]));
    }
  }
  conv.resize(d);
  return conv;
}

// --- construction ------------------------------------------------------------

FieldPtr build_prime_field(std::uint64_t p) {
  if (p >= kPrimeCap) raise(Errc::DeskScaleExceeded, "characteristic above 2^32");
  if (!is_prime_u64(p)) raise(Errc::NotPrime, std::to_string(p) + " is composite");
  auto f = std::shared_ptr<Field>(new Field());
  f->kind_ = Field::Kind::prime;
  f->p_ = p;
  f->degree_ = 1;
  f->order_ = p;
  return f;
}

bool is_irreducible(const FieldPtr& base, const std::vector<std::uint64_t>& poly) {
  Poly f = poly;
  ptrim(f);
  if (f.size() < 2) return false;  // constants are units or zero
  if (f.back() != 1) throw std::invalid_argument("modulus must be monic");
  const std::size_t d = f.size() - 1;
  if (d == 1) return true;
  const Poly x{0, 1};
  const BigInt b = base->order_big();

  // x^(B^d) must reduce to x mod f.
  Poly frob = ppowmod(*base, x, pow_big(b, d), f);
  if (frob != x) return false;
  // gcd(x^(B^(d/r)) - x, f) must be constant for every prime r | d.
  for (const auto& [r, mult] : factorize_u64(d)) {
    (void)mult;
    Poly sub = ppowmod(*base, x, pow_big(b, d / r), f);
    Poly g = pgcd(*base, psub(*base, sub, x), f);
    if (g.size() > 1) return false;
  }
  return true;
}

std::vector<std::uint64_t> find_irreducible(const FieldPtr& base, std::uint32_t d) {
  if (d < 2) throw std::invalid_argument("degree must be >= 2");
  const BigInt span_big = pow_big(base->order_big(), d);
  if (span_big > kDeskScaleOrderCap) {
    raise(Errc::DeskScaleExceeded, "irreducible scan above desk scale");
  }
  const std::uint64_t span = span_big.convert_to<std::uint64_t>();
  const std::uint64_t b = base->order();
  for (std::uint64_t m = 0; m < span; ++m) {
    std::vector<std::uint64_t> candidate(d + 1, 0);
    std::uint64_t rest = m;
    for (std::uint32_t k = 0; k < d; ++k) {
      candidate[k] = rest % b;
      rest /= b;
    }
    candidate[d] = 1;
    if (is_irreducible(base, candidate)) return candidate;
  }
  throw std::logic_error("no irreducible polynomial found");  // unreachable
}

FieldPtr build_extension(const FieldPtr& base, std::uint32_t d) {
  if (d < 2) throw std::invalid_argument("degree must be >= 2");
  if (base->kind() == Field::Kind::extension &&
      base->base()->kind() == Field::Kind::extension) {
    raise(Errc::TowerTooDeep, "towers are limited to two extension levels");
  }
  const BigInt order_big = pow_big(base->order_big(), d);
  if (order_big > kDeskScaleOrderCap) {
    raise(Errc::DeskScaleExceeded,
          "field order " + order_big.str() + " above desk scale");
  }
  auto f = std::shared_ptr<Field>(new Field());
  f->kind_ = Field::Kind::extension;
  f->p_ = base->characteristic();
  f->degree_ = d;
  f->order_ = order_big.convert_to<std::uint64_t>();
  f->base_ = base;
  f->modulus_ = find_irreducible(base, d);
  f->top_reduction_.resize(d);
  for (std::uint32_t i = 0; i < d; ++i) {
    f->top_reduction_[i] = base->neg_enc(f->modulus_[i]);
  }
  return f;
}

ElementSequence enumerate_elements(const FieldPtr& field) {
  return ElementSequence(field);
}

BigInt multiplicative_order(const FieldElement& x) {
  if (x.is_zero()) raise(Errc::ZeroElement, "zero has no multiplicative order");
  const std::uint64_t n = x.field()->order() - 1;
  std::uint64_t k = n;
  for (const auto& [prime, mult] : factorize_u64(n)) {
    (void)mult;
    while (k % prime == 0 && x.pow(k / prime).is_one()) k /= prime;
  }
  return BigInt(k);
}

FieldElement find_generator(const FieldPtr& field) {
  std::call_once(field->generator_once_, [&]() {
    const std::uint64_t n = field->order() - 1;
    const auto factors = factorize_u64(n);
    for (std::uint64_t enc = 1; enc < field->order(); ++enc) {
      bool generates = true;
      for (const auto& [prime, mult] : factors) {
        (void)mult;
        if (field->pow_enc(enc, BigInt(n / prime)) == 1) {
          generates = false;
          break;
        }
      }
      if (generates) {
        field->generator_enc_ = enc;
        return;
      }
    }
    throw std::logic_error("no generator found");  // unreachable: F* is cyclic
  });
  return field->from_encoding(field->generator_enc_);
}

std::uint64_t discrete_log(const FieldElement& gamma, const FieldElement& x) {
  require_same_field(gamma, x);
  if (x.is_zero()) raise(Errc::ZeroElement, "discrete log of zero");
  const FieldPtr& field = gamma.field();
  const std::uint64_t n = field->order() - 1;
  if (multiplicative_order(gamma) != n) {
    raise(Errc::NotGenerator, "base element does not generate the unit group");
  }
  // table size = ceil(sqrt(n)), exact
  std::uint64_t table_size = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (table_size > 1 && (table_size - 1) * (table_size - 1) >= n) --table_size;
  while (table_size * table_size < n) ++table_size;

  std::unordered_map<std::uint64_t, std::uint64_t> baby;
  baby.reserve(table_size);
  const std::uint64_t g = gamma.encoding();
  std::uint64_t cur = 1;
  for (std::uint64_t j = 0; j < table_size; ++j) {
    baby.emplace(cur, j);
    cur = field->mul_enc(cur, g);
  }
  // gamma^(-m) = gamma^(n-m)
  const std::uint64_t giant = field->pow_enc(g, BigInt(n - table_size % n));
  std::uint64_t y = x.encoding();
  for (std::uint64_t t = 0; t <= n / table_size + 1; ++t) {
    auto it = baby.find(y);
    if (it != baby.end()) {
      const std::uint64_t result = t * table_size + it->second;
      return result % n;
    }
    y = field->mul_enc(y, giant);
  }
  throw std::logic_error("discrete log not found for generator base");
}

FieldElement lift_to_extension(const FieldPtr& ext, const FieldElement& x) {
  if (ext->kind() != Field::Kind::extension || !x.valid() ||
      !ext->base()->same_field(*x.field())) {
    raise(Errc::MixedFields, "element is not in the extension's base field");
  }
  std::vector<std::uint64_t> digits(ext->degree(), 0);
  digits[0] = x.encoding();
  return ext->from_digits(std::move(digits));
}

// --- element text format -------------------------------------------------------

std::string format_element(const FieldElement& x) {
  if (!x.valid()) return "<invalid>";
  if (x.field()->is_prime_field()) return std::to_string(x.digits()[0]);
  std::ostringstream os;
  os << "poly:[";
  const FieldPtr& base = x.field()->base();
  for (std::size_t k = 0; k < x.digits().size(); ++k) {
    if (k != 0) os << ',';
    os << format_element(base->from_encoding(x.digits()[k]));
  }
  os << ']';
  return os.str();
}

namespace {

std::string_view strip(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::uint64_t parse_u64(std::string_view s) {
  if (s.empty()) raise(Errc::ParseError, "empty number");
  std::uint64_t v = 0;
  for (char c : s) {
    if (c < '0' || c > '9') raise(Errc::ParseError, "bad digit in number");
    const std::uint64_t nv = v * 10 + static_cast<std::uint64_t>(c - '0');
    if (nv < v) raise(Errc::ParseError, "number out of range");
    v = nv;
  }
  return v;
}

// Splits the comma-separated payload of poly:[...] at bracket depth zero.
std::vector<std::string_view> split_top_level(std::string_view s) {
  std::vector<std::string_view> parts;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '[') ++depth;
    else if (s[i] == ']') --depth;
    else if (s[i] == ',' && depth == 0) {
      parts.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  parts.push_back(s.substr(start));
  return parts;
}

}  // namespace

FieldElement parse_element(const FieldPtr& field, std::string_view text) {
  std::string_view s = strip(text);
  if (s.empty()) raise(Errc::ParseError, "empty element text");

  if (s.substr(0, 5) == "poly:") {
    std::string_view body = strip(s.substr(5));
    if (body.size() < 2 || body.front() != '[' || body.back() != ']') {
      raise(Errc::ParseError, "poly form must be poly:[c0,c1,...]");
    }
    body = body.substr(1, body.size() - 2);
    std::vector<std::string_view> parts = split_top_level(body);
    if (parts.size() > field->degree()) {
      raise(Errc::ParseError, "too many coefficients for field degree");
    }
    std::vector<std::uint64_t> digits;
    digits.reserve(parts.size());
    const FieldPtr base = field->is_prime_field() ? field : field->base();
    for (std::string_view part : parts) {
      digits.push_back(parse_element(base, part).encoding());
    }
    if (field->is_prime_field()) {
      if (digits.size() != 1) raise(Errc::ParseError, "prime field takes one coefficient");
      return field->from_encoding(digits[0]);
    }
    return field->from_digits(std::move(digits));
  }

  if (s == "g") return find_generator(field);
  if (s.substr(0, 2) == "g^") {
    std::string_view exp = s.substr(2);
    bool negative = false;
    if (!exp.empty() && (exp[0] == '-' || exp[0] == '+')) {
      negative = exp[0] == '-';
      exp.remove_prefix(1);
    }
    BigInt k(parse_u64(exp));
    if (negative) k = -k;
    return find_generator(field).pow(k);
  }

  const std::uint64_t enc = parse_u64(s);
  if (enc >= field->order()) {
    raise(Errc::ParseError, "encoding " + std::to_string(enc) + " not below field order");
  }
  return field->from_encoding(enc);
}

}  // namespace diagzeta::ff
