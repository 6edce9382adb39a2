#include "diagzeta/curve.hpp"

namespace diagzeta::curve {

CurveParams validate_params(std::uint64_t p, std::uint32_t l, std::uint32_t e,
                            std::uint32_t s) {
  if (l < 3 || l % 2 == 0 || !is_prime_u64(l)) {
    raise(Errc::LNotOddPrime, "l = " + std::to_string(l));
  }
  if (!is_prime_u64(p)) raise(Errc::PNotPrime, "p = " + std::to_string(p));
  if (e != l && e != 2 * l) {
    raise(Errc::ENotLOr2L, "e = " + std::to_string(e) + " with l = " + std::to_string(l));
  }
  if (e == 2 * l && p == 2) raise(Errc::PEvenWith2l, "e = 2l requires odd p");
  if (s < 1) raise(Errc::ParseError, "s must be >= 1");
  if (p % l == 0) {
    raise(Errc::OrderNotEven, "p divisible by l; order of p mod l undefined");
  }

  CurveParams params;
  params.p = p;
  params.l = l;
  params.e = e;
  params.s = s;
  params.f = static_cast<std::uint32_t>(multiplicative_order_mod(p, l));
  if (params.f % 2 != 0) {
    raise(Errc::OrderNotEven,
          "ord p (mod l) = " + std::to_string(params.f) + " is odd");
  }
  params.alpha = params.f * s;
  params.q = pow_big(BigInt(p), params.alpha);
  params.q0 = pow_big(BigInt(p), params.f);
  params.u = pow_big(BigInt(p), params.f / 2);
  if (params.q % e != 1) {
    raise(Errc::CongruenceFailure, "q = " + params.q.str() + " not 1 mod e");
  }
  params.theta = (s % 2 == 0 ? params.sqrt_q() : -params.sqrt_q());
  params.genus = (e - 1) * (e - 2) / 2;
  return params;
}

Curve make_curve(const CurveParams& params, ff::FieldPtr field, ff::FieldElement a,
                 ff::FieldElement b, ff::FieldElement c) {
  if (a.is_zero() || b.is_zero() || c.is_zero()) {
    raise(Errc::ZeroCoefficient, "a, b, c must be nonzero");
  }
  return Curve{params, std::move(field), std::move(a), std::move(b), std::move(c)};
}

Curve make_curve(std::uint64_t p, std::uint32_t l, std::uint32_t e, std::uint32_t s,
                 const std::string& a_text, const std::string& b_text,
                 const std::string& c_text) {
  CurveParams params = validate_params(p, l, e, s);
  ff::FieldPtr field = ff::build_extension(ff::build_prime_field(p), params.alpha);
  ff::FieldElement a = ff::parse_element(field, a_text);
  ff::FieldElement b = ff::parse_element(field, b_text);
  ff::FieldElement c = ff::parse_element(field, c_text);
  return make_curve(params, std::move(field), std::move(a), std::move(b), std::move(c));
}

IndexPair index_pair(const Curve& curve) {
  ff::FieldElement gamma = ff::find_generator(curve.field);
  const ff::FieldElement c_inv = curve.c.inverse();
  const std::uint64_t e = curve.params.e;
  IndexPair idx;
  idx.i = static_cast<std::uint32_t>(ff::discrete_log(gamma, curve.b * c_inv) % e);
  idx.j = static_cast<std::uint32_t>(ff::discrete_log(gamma, curve.a * c_inv) % e);
  idx.gamma = std::move(gamma);
  return idx;
}

std::string CaseLabel::str() const {
  std::string out = family == CaseFamily::e2l ? "2l-case-" : "l-case-";
  out += std::to_string(number);
  switch (sub) {
    case Subcase::none: break;
    case Subcase::i: out += "(i)"; break;
    case Subcase::ii: out += "(ii)"; break;
    case Subcase::iii: out += "(iii)"; break;
  }
  return out;
}

CaseLabel classify_2l(std::uint32_t i, std::uint32_t j, std::uint32_t l) {
  const std::uint32_t e = 2 * l;
  if (i >= e || j >= e) throw std::invalid_argument("indices must be reduced mod 2l");
  const bool i_even = i % 2 == 0;
  const bool j_even = j % 2 == 0;
  const std::uint32_t diff = (i + e - j) % e;  // i - j mod 2l

  // Case 1: i = j = 0 (mod 2l).
  if (i == 0 && j == 0) return {CaseFamily::e2l, 1, Subcase::none};
  // Case 2: i, j even; i, j, i-j all nonzero (mod 2l).
  if (i_even && j_even && i != 0 && j != 0 && diff != 0) {
    return {CaseFamily::e2l, 2, Subcase::none};
  }
  // Case 3: i, j even with one of i = 0, j = 0, i = j (mod 2l).
  if (i_even && j_even) {
    if (i == 0 && j != 0) return {CaseFamily::e2l, 3, Subcase::i};
    if (i != 0 && j == 0) return {CaseFamily::e2l, 3, Subcase::ii};
    if (i != 0 && j != 0 && diff == 0) return {CaseFamily::e2l, 3, Subcase::iii};
  }
  // Case 4: i and j in {0, l}, not both 0.
  if (i == 0 && j == l) return {CaseFamily::e2l, 4, Subcase::i};
  if (i == l && j == 0) return {CaseFamily::e2l, 4, Subcase::ii};
  if (i == l && j == l) return {CaseFamily::e2l, 4, Subcase::iii};
  // Case 5: one index 0, the other odd and != l; or i = j odd, != l.
  if (!j_even && i == 0 && j != l) return {CaseFamily::e2l, 5, Subcase::i};
  if (!i_even && i != l && j == 0) return {CaseFamily::e2l, 5, Subcase::ii};
  if (!i_even && i == j && i != l) return {CaseFamily::e2l, 5, Subcase::iii};
  // Case 6: i, j, i-j all outside {0, l} (mod 2l), with mixed or odd parities.
  if (i != 0 && i != l && j != 0 && j != l && diff != 0 && diff != l) {
    if (i_even != j_even) return {CaseFamily::e2l, 6, Subcase::i};
    if (!i_even && !j_even) return {CaseFamily::e2l, 6, Subcase::ii};
  }
  // Case 7: one index = l and the other outside {0, l}; or i - j = l (mod 2l).
  if (i == l && j != 0 && j != l) return {CaseFamily::e2l, 7, Subcase::i};
  if (i != 0 && i != l && j == l) return {CaseFamily::e2l, 7, Subcase::ii};
  if (i != 0 && i != l && j != 0 && j != l && diff == l) {
    return {CaseFamily::e2l, 7, Subcase::iii};
  }
  raise(Errc::Unclassifiable,
        "(" + std::to_string(i) + "," + std::to_string(j) + ") mod " + std::to_string(e));
}

CaseLabel classify_l(std::uint32_t i, std::uint32_t j, std::uint32_t l) {
  if (i >= l || j >= l) throw std::invalid_argument("indices must be reduced mod l");
  const std::uint32_t diff = (i + l - j) % l;
  if (i == 0 && j == 0) return {CaseFamily::el, 1, Subcase::none};
  if (i == 0 && j != 0) return {CaseFamily::el, 2, Subcase::i};
  if (i != 0 && j == 0) return {CaseFamily::el, 2, Subcase::ii};
  if (diff == 0) return {CaseFamily::el, 2, Subcase::iii};
  return {CaseFamily::el, 3, Subcase::none};
}

CaseLabel classify(const CurveParams& params, std::uint32_t i, std::uint32_t j) {
  return params.two_l_family() ? classify_2l(i, j, params.l)
                               : classify_l(i, j, params.l);
}

}  // namespace diagzeta::curve
