#include "diagzeta/count.hpp"

#include <vector>

namespace diagzeta::count {

int formula_branch(std::uint32_t e, std::uint32_t i, std::uint32_t j, std::uint32_t n) {
  const std::uint64_t in = static_cast<std::uint64_t>(i) * n % e;
  const std::uint64_t jn = static_cast<std::uint64_t>(j) * n % e;
  const std::uint64_t dn = static_cast<std::uint64_t>((i + e - j) % e) * n % e;
  if (in == 0 && jn == 0) return 1;
  if (in != 0 && jn != 0 && dn != 0) return 2;
  return 3;
}

PointCount count_formula(const curve::CurveParams& params, std::uint32_t i,
                         std::uint32_t j, std::uint32_t n) {
  const BigInt qn = pow_big(params.q, n);
  const BigInt theta_n = pow_big(params.theta, n);
  BigInt value = qn + 1;
  switch (formula_branch(params.e, i, j, n)) {
    case 1:
      value -= BigInt(params.e - 1) * (params.e - 2) * theta_n;
      break;
    case 2:
      value -= 2 * theta_n;
      break;
    default:
      value += BigInt(params.e - 2) * theta_n;
      break;
  }
  return PointCount{n, std::move(value), Source::formula};
}

PointCount count_formula(const curve::CurveParams& params, const curve::IndexPair& idx,
                         std::uint32_t n) {
  return count_formula(params, idx.i, idx.j, n);
}

WeilBounds weil_bounds(const curve::CurveParams& params, std::uint32_t n) {
  const BigInt center = pow_big(params.q, n) + 1;
  const BigInt radius = BigInt(2) * params.genus * pow_big(params.sqrt_q(), n);
  return WeilBounds{center - radius, center + radius};
}

namespace {

// One pass over the three charts covering the projective plane exactly once:
// (x, y, 1) for all x, y; (x, 1, 0) for all x; the single point (1, 0, 0).
template <typename AffinePred, typename InfinityPred, typename CornerPred>
BigInt walk_charts(std::uint64_t order, AffinePred&& affine, InfinityPred&& infinity,
                   CornerPred&& corner) {
  BigInt total = 0;
  for (std::uint64_t y = 0; y < order; ++y) {
    std::uint64_t row = 0;
    for (std::uint64_t x = 0; x < order; ++x) {
      if (affine(x, y)) ++row;
    }
    total += row;
  }
  std::uint64_t line = 0;
  for (std::uint64_t x = 0; x < order; ++x) {
    if (infinity(x)) ++line;
  }
  total += line;
  if (corner()) total += 1;
  return total;
}

}  // namespace

PointCount count_bruteforce(const curve::Curve& curve, std::uint32_t n,
                            std::uint64_t budget) {
  if (n < 1) throw std::invalid_argument("extension degree must be >= 1");
  const BigInt cost = pow_big(curve.params.q, 2 * n);
  if (cost > budget) {
    raise(Errc::BudgetExceeded,
          "estimated cost " + cost.str() + " exceeds budget " + std::to_string(budget));
  }

  ff::FieldPtr field = curve.field;
  std::uint64_t a = curve.a.encoding();
  std::uint64_t b = curve.b.encoding();
  std::uint64_t c = curve.c.encoding();
  if (n > 1) {
    field = ff::build_extension(curve.field, n);
    a = ff::lift_to_extension(field, curve.a).encoding();
    b = ff::lift_to_extension(field, curve.b).encoding();
    c = ff::lift_to_extension(field, curve.c).encoding();
  }

  const std::uint64_t order = field->order();
  const std::uint32_t e = curve.params.e;

  // e-th power value table, then lhs[y] = a y^e and rhs[x] = b x^e + c, all by
  // encoding, so the pair sweep is two lookups and a compare.
  std::vector<std::uint64_t> powers(order);
  for (std::uint64_t enc = 0; enc < order; ++enc) {
    powers[enc] = field->pow_enc(enc, BigInt(e));
  }
  std::vector<std::uint64_t> lhs(order), rhs(order);
  for (std::uint64_t enc = 0; enc < order; ++enc) {
    lhs[enc] = field->mul_enc(a, powers[enc]);
    rhs[enc] = field->add_enc(field->mul_enc(b, powers[enc]), c);
  }

  BigInt total = walk_charts(
      order,
      [&](std::uint64_t x, std::uint64_t y) { return rhs[x] == lhs[y]; },
      [&](std::uint64_t x) { return field->mul_enc(b, powers[x]) == a; },
      [&]() { return b == 0; });
  return PointCount{n, std::move(total), Source::bruteforce};
}

BigInt projective_point_census(const ff::FieldPtr& field) {
  return walk_charts(
      field->order(), [](std::uint64_t, std::uint64_t) { return true; },
      [](std::uint64_t) { return true; }, []() { return true; });
}

}  // namespace diagzeta::count
