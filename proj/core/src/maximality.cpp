#include "diagzeta/maximality.hpp"

namespace diagzeta::maximality {

const char* extremality_name(Extremality status) noexcept {
  switch (status) {
    case Extremality::maximal: return "maximal";
    case Extremality::minimal: return "minimal";
    case Extremality::neither: return "neither";
  }
  return "?";
}

namespace {

// l = 2^(2^n) + 1 for some n >= 0 (3, 5, 17, 257, 65537).
std::optional<std::uint32_t> fermat_prime_exponent(std::uint32_t l) {
  for (std::uint32_t n = 0; n < 5; ++n) {
    const std::uint64_t candidate = (1ULL << (1u << n)) + 1;
    if (candidate == l) return n;
    if (candidate > l) break;
  }
  return std::nullopt;
}

}  // namespace

ExtremalityVerdict classify_extremality(const curve::CurveParams& params,
                                        std::uint32_t i, std::uint32_t j) {
  ExtremalityVerdict verdict;
  verdict.attained_count = count::count_formula(params, i, j, 1).value;
  const count::WeilBounds bounds = count::weil_bounds(params, 1);
  verdict.weil_lower = bounds.lower;
  verdict.weil_upper = bounds.upper;

  if (verdict.attained_count == bounds.upper) {
    verdict.status = Extremality::maximal;
    verdict.bound = bounds.upper;
  } else if (verdict.attained_count == bounds.lower) {
    verdict.status = Extremality::minimal;
    verdict.bound = bounds.lower;
  } else {
    verdict.status = Extremality::neither;
    verdict.bound = bounds.upper;
  }

  verdict.is_fermat_class = i == 0 && j == 0;
  const BigInt sqrt_q = params.sqrt_q();
  verdict.e_divides_sqrt_q_plus_1 = (sqrt_q + 1) % params.e == 0;
  verdict.is_hermitian = verdict.is_fermat_class && sqrt_q + 1 == params.e;

  if (const auto n = fermat_prime_exponent(params.l);
      n.has_value() && params.p == 2 && params.e == params.l) {
    std::string note = "l = 2^(2^" + std::to_string(*n) + ")+1 is a Fermat prime; ";
    note += verdict.is_hermitian
                ? "the degree-l Fermat curve is Hermitian over F_" + params.q.str() +
                      " in characteristic 2"
                : "characteristic-2 Fermat-prime family over F_" + params.q.str();
    verdict.fermat_prime_note = std::move(note);
  }
  return verdict;
}

ExtremalityVerdict classify_extremality(const curve::Curve& curve) {
  const curve::IndexPair idx = index_pair(curve);
  return classify_extremality(curve.params, idx.i, idx.j);
}

bool is_hermitian(const curve::CurveParams& params, std::uint32_t i, std::uint32_t j) {
  if (i != 0 || j != 0) return false;
  if (params.sqrt_q() + 1 != params.e) return false;
  // Consistency of the genus with the Hermitian shape.
  const BigInt sqrt_q = params.sqrt_q();
  if (BigInt(params.genus) * 2 != sqrt_q * (sqrt_q - 1)) {
    throw std::logic_error("Hermitian genus mismatch");
  }
  return true;
}

bool is_hermitian(const curve::Curve& curve) {
  const curve::IndexPair idx = index_pair(curve);
  return is_hermitian(curve.params, idx.i, idx.j);
}

BigInt max_genus_bound(const BigInt& q) {
  const auto [root, exact] = sqrt_exact(q);
  if (!exact) raise(Errc::NotASquare, "q = " + q.str());
  return root * (root - 1) / 2;
}

}  // namespace diagzeta::maximality
