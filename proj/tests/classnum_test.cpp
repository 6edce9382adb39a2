#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "diagzeta/classnum.hpp"

using namespace diagzeta;
using namespace diagzeta::classnum;
using curve::CaseFamily;
using curve::CaseLabel;
using curve::CurveParams;
using curve::Subcase;

namespace {

std::vector<CaseLabel> all_labels(const CurveParams& params) {
  std::vector<CaseLabel> labels;
  for (std::uint32_t i = 0; i < params.e; ++i) {
    for (std::uint32_t j = 0; j < params.e; ++j) {
      const CaseLabel label = curve::classify(params, i, j);
      if (std::find(labels.begin(), labels.end(), label) == labels.end()) {
        labels.push_back(label);
      }
    }
  }
  return labels;
}

// Class number as a polynomial in X = u^s: substitute theta = -X (s odd) or
// +X (s even) into each factor of P and evaluate at t = 1. Each block is then
// a polynomial in X with constant term 1:
//   lin_plus  -> 1 - theta = 1 -/+ X     lin_minus  -> 1 + theta
//   cyclo_plus -> sum theta^k            cyclo_minus -> sum (-theta)^k
zeta::IntPolynomial h_as_polynomial_in_sqrt_q(const zeta::FactoredPolynomial& fp,
                                              bool s_odd, std::uint32_t l) {
  using zeta::BlockKind;
  using zeta::IntPolynomial;
  const BigInt theta_sign = s_odd ? BigInt(-1) : BigInt(1);
  auto block_poly = [&](BlockKind kind) {
    switch (kind) {
      case BlockKind::lin_plus:
        return IntPolynomial({1, -theta_sign});
      case BlockKind::lin_minus:
        return IntPolynomial({1, theta_sign});
      default: {
        const BigInt step =
            kind == BlockKind::cyclo_plus ? theta_sign : BigInt(-theta_sign);
        std::vector<BigInt> c(l);
        for (std::uint32_t k = 0; k < l; ++k) c[k] = (k % 2 == 0) ? BigInt(1) : step;
        return IntPolynomial(std::move(c));
      }
    }
  };
  IntPolynomial result = IntPolynomial::constant(1);
  for (const zeta::FactorBlock& block : fp.blocks) {
    result = result * block_poly(block.kind).pow(block.exponent);
  }
  return result;
}

}  // namespace

TEST_CASE("class numbers of the worked examples") {
  const ClassNumberReport sextic =
      class_number(curve::make_curve(5, 3, 6, 1, "1", "1", "1"));
  CHECK(sextic.h == pow_big(BigInt(6), 20));
  CHECK(sextic.h == BigInt("3656158440062976"));
  CHECK(sextic.via_p1 == sextic.via_closed_form);

  const ClassNumberReport cubic =
      class_number(curve::make_curve(2, 3, 3, 1, "1", "1", "1"));
  CHECK(cubic.h == 9);

  // (i,j) = (3,3) over F_25 is case 4(iii): h = 6^8 * 4^12
  const ClassNumberReport case4 =
      class_number(curve::make_curve(5, 3, 6, 1, "g^3", "g^3", "1"));
  CHECK(case4.case_label.str() == "2l-case-4(iii)");
  CHECK(case4.h == pow_big(BigInt(6), 8) * pow_big(BigInt(4), 12));
  CHECK(case4.h == BigInt("28179280429056"));
}

TEST_CASE("closed forms of the worked examples") {
  CHECK(closed_form({CaseFamily::e2l, 1, Subcase::none}, 5, 1, 3) ==
        pow_big(BigInt(6), 20));
  CHECK(closed_form({CaseFamily::el, 1, Subcase::none}, 2, 1, 3) == 9);
  CHECK(closed_form({CaseFamily::el, 2, Subcase::i}, 2, 1, 5) == 1331);  // 11^3
}

TEST_CASE("dual-path equality over a compact grid") {
  const struct { std::uint64_t p; std::uint32_t l, e; } regimes[] = {
      {2, 3, 3}, {2, 5, 5}, {5, 3, 6}, {19, 5, 10}};
  for (const auto& r : regimes) {
    for (std::uint32_t s : {1u, 2u, 3u}) {
      const CurveParams params = curve::validate_params(r.p, r.l, r.e, s);
      for (const CaseLabel& label : all_labels(params)) {
        const BigInt via_p1 = zeta::expand(zeta::build_factored_p(params, label)).eval(1);
        const BigInt via_formula = closed_form(label, params.u, s, params.l);
        CHECK(via_p1 == via_formula);
        CHECK(via_p1 > 0);
      }
    }
  }
}

TEST_CASE("h is a degree-2g polynomial in sqrt(q) with constant term 1") {
  for (std::uint32_t s : {1u, 2u}) {
    for (const auto& [p, l, e] :
         {std::tuple<std::uint64_t, std::uint32_t, std::uint32_t>{5, 3, 6}, {2, 3, 3}}) {
      const CurveParams params = curve::validate_params(p, l, e, s);
      for (const CaseLabel& label : all_labels(params)) {
        const zeta::FactoredPolynomial fp = zeta::build_factored_p(params, label);
        const zeta::IntPolynomial h_poly =
            h_as_polynomial_in_sqrt_q(fp, s % 2 == 1, params.l);
        CHECK(h_poly.degree() == static_cast<int>(2 * params.genus));
        CHECK(h_poly.coeff(0) == 1);
        // evaluating at X = u^s recovers the class number
        CHECK(h_poly.eval(params.sqrt_q()) ==
              zeta::expand(fp).eval(1));
      }
    }
  }
}

TEST_CASE("parity selects h1 vs h2 by the total multiplier") {
  // case 1, e = 2l: h1 = (u^s+1)^2g for s odd, h2 = (u^s-1)^2g for s even
  const CaseLabel case1{CaseFamily::e2l, 1, Subcase::none};
  CHECK(closed_form(case1, 5, 1, 3) == pow_big(BigInt(6), 20));
  CHECK(closed_form(case1, 5, 2, 3) == pow_big(BigInt(24), 20));
  CHECK(closed_form(case1, 5, 3, 3) == pow_big(BigInt(126), 20));
}

TEST_CASE("growth table for the Fermat cubic over F_4") {
  const curve::Curve cubic = curve::make_curve(2, 3, 3, 1, "1", "1", "1");
  const std::vector<GrowthRow> rows = growth_table(cubic, 3);
  REQUIRE(rows.size() == 3);

  CHECK(rows[0].total_multiplier == 1);
  CHECK(rows[0].h == 9);
  CHECK(rows[1].total_multiplier == 2);
  CHECK(rows[1].h == 9);  // (u^2 - 1)^2 = 9, confirmed by P(1) over F_16
  CHECK(rows[2].total_multiplier == 3);
  CHECK(rows[2].h == 81);
  for (const GrowthRow& row : rows) {
    CHECK(row.closed_form_matches);
    CHECK(row.case_label.number == 1);
  }
}

TEST_CASE("growth table with an even base multiplier uses h2 everywhere") {
  const curve::Curve cubic16 = curve::make_curve(2, 3, 3, 2, "1", "1", "1");
  const std::vector<GrowthRow> rows = growth_table(cubic16, 3);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].total_multiplier == 2);
  CHECK(rows[0].h == 9);    // (2^2-1)^2
  CHECK(rows[1].total_multiplier == 4);
  CHECK(rows[1].h == 225);  // (2^4-1)^2
  CHECK(rows[2].total_multiplier == 6);
  CHECK(rows[2].h == 3969); // (2^6-1)^2
}

TEST_CASE("growth table recomputes the case and matches in-field recomputation") {
  const curve::Curve base = curve::make_curve(5, 3, 6, 1, "g^2", "g^1", "1");
  const std::vector<GrowthRow> rows = growth_table(base, 3);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].case_label.str() == "2l-case-6(i)");   // (1,2)
  CHECK(rows[1].case_label.str() == "2l-case-2");      // (2,4)
  CHECK(rows[2].case_label.str() == "2l-case-4(ii)");  // (3,0)

  // honest recomputation: lift the coefficients into F_{25^s}, take discrete
  // logs against that field's canonical generator, classify
  for (std::uint32_t s : {2u, 3u}) {
    const CurveParams level = curve::validate_params(5, 3, 6, s);
    ff::FieldPtr ext = ff::build_extension(base.field, s);
    const curve::Curve lifted = curve::make_curve(
        level, ext, ff::lift_to_extension(ext, base.a),
        ff::lift_to_extension(ext, base.b), ff::lift_to_extension(ext, base.c));
    const curve::IndexPair idx = index_pair(lifted);
    CHECK(curve::classify(level, idx.i, idx.j) == rows[s - 1].case_label);
    // and the row's h is that level's class number
    CHECK(class_number_for_case(level, rows[s - 1].case_label).h == rows[s - 1].h);
  }

  for (const GrowthRow& row : rows) CHECK(row.closed_form_matches);
}
