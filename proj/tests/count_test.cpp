#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "diagzeta/count.hpp"

using namespace diagzeta;
using namespace diagzeta::count;
using curve::CurveParams;

TEST_CASE("closed-form counts match the worked examples") {
  const CurveParams sextic = curve::validate_params(5, 3, 6, 1);
  CHECK(count_formula(sextic, 0, 0, 1).value == 126);
  CHECK(count_formula(sextic, 3, 3, 1).value == 6);
  CHECK(count_formula(sextic, 1, 2, 1).value == 36);

  const CurveParams cubic = curve::validate_params(2, 3, 3, 1);
  CHECK(count_formula(cubic, 0, 0, 1).value == 9);
}

TEST_CASE("weil bounds") {
  const CurveParams sextic = curve::validate_params(5, 3, 6, 1);
  const WeilBounds wb25 = weil_bounds(sextic, 1);
  CHECK(wb25.lower == -74);
  CHECK(wb25.upper == 126);

  const CurveParams cubic = curve::validate_params(2, 3, 3, 1);
  CHECK(weil_bounds(cubic, 1).lower == 1);
  CHECK(weil_bounds(cubic, 1).upper == 9);
  CHECK(weil_bounds(cubic, 2).lower == 9);
  CHECK(weil_bounds(cubic, 2).upper == 25);
}

TEST_CASE("formula counts stay inside the Weil bounds, n <= 12, all classes") {
  const struct { std::uint64_t p; std::uint32_t l, e; } regimes[] = {
      {2, 3, 3}, {2, 5, 5}, {13, 7, 7}, {5, 3, 6}, {19, 5, 10}, {13, 7, 14}};
  for (const auto& r : regimes) {
    for (std::uint32_t s : {1u, 2u}) {
      const CurveParams params = curve::validate_params(r.p, r.l, r.e, s);
      for (std::uint32_t i = 0; i < params.e; ++i) {
        for (std::uint32_t j = 0; j < params.e; ++j) {
          for (std::uint32_t n = 1; n <= 12; ++n) {
            const BigInt a = count_formula(params, i, j, n).value;
            const WeilBounds wb = weil_bounds(params, n);
            CHECK(a >= wb.lower);
            CHECK(a <= wb.upper);
          }
        }
      }
    }
  }
}

TEST_CASE("branch dispatch depends only on (i n, j n) mod e and is e-periodic") {
  for (std::uint32_t e : {3u, 6u, 10u}) {
    for (std::uint32_t i = 0; i < e; ++i) {
      for (std::uint32_t j = 0; j < e; ++j) {
        for (std::uint32_t n = 1; n <= 2 * e; ++n) {
          CHECK(formula_branch(e, i, j, n) == formula_branch(e, i, j, n + e));
          CHECK(formula_branch(e, i, j, n) ==
                formula_branch(e, i * n % e, j * n % e, 1));
        }
      }
    }
  }

  // direct evaluation on both sides of the periodicity statement
  const CurveParams params = curve::validate_params(5, 3, 6, 1);
  for (std::uint32_t i = 0; i < 6; ++i) {
    for (std::uint32_t j = 0; j < 6; ++j) {
      for (std::uint32_t n = 1; n <= 6; ++n) {
        for (std::uint32_t k = 1; k <= 2; ++k) {
          const std::uint32_t m = n + 6 * k;
          const BigInt lhs = count_formula(params, i, j, m).value;
          const BigInt theta_m = pow_big(params.theta, m);
          BigInt rhs = pow_big(params.q, m) + 1;
          switch (formula_branch(6, i, j, n)) {
            case 1: rhs -= BigInt(20) * theta_m; break;
            case 2: rhs -= 2 * theta_m; break;
            default: rhs += 4 * theta_m; break;
          }
          CHECK(lhs == rhs);
        }
      }
    }
  }
}

TEST_CASE("brute-force enumeration of the Fermat curves") {
  const curve::Curve cubic = curve::make_curve(2, 3, 3, 1, "1", "1", "1");
  CHECK(count_bruteforce(cubic, 1).value == 9);
  // over F_16 (even extension degree) the count drops to the lower bound
  CHECK(count_bruteforce(cubic, 2).value == 9);
  CHECK(count_formula(cubic.params, 0, 0, 2).value == 9);
  CHECK(count_bruteforce(cubic, 3).value == 81);

  const curve::Curve sextic = curve::make_curve(5, 3, 6, 1, "1", "1", "1");
  CHECK(count_bruteforce(sextic, 1).value == 126);  // the Weil upper bound
}

TEST_CASE("brute force agrees with the formula on non-Fermat classes") {
  const curve::Curve c = curve::make_curve(5, 3, 6, 1, "g^4", "g^1", "1");
  const curve::IndexPair idx = index_pair(c);
  REQUIRE(idx.i == 1);
  REQUIRE(idx.j == 4);
  for (std::uint32_t n : {1u, 2u}) {
    CHECK(count_bruteforce(c, n).value == count_formula(c.params, idx, n).value);
  }
}

TEST_CASE("chart walk covers the projective plane exactly once") {
  auto f4 = ff::build_extension(ff::build_prime_field(2), 2);
  CHECK(projective_point_census(f4) == 21);  // 16 + 4 + 1

  auto f25 = ff::build_extension(ff::build_prime_field(5), 2);
  CHECK(projective_point_census(f25) == 651);

  auto f625 = ff::build_extension(f25, 2);
  CHECK(projective_point_census(f625) == BigInt(625) * 625 + 625 + 1);
}

TEST_CASE("work budget refusal") {
  const curve::Curve sextic = curve::make_curve(5, 3, 6, 1, "1", "1", "1");
  CHECK_THROWS_WITH_AS(count_bruteforce(sextic, 2, 1000),
                       doctest::Contains("BudgetExceeded"), Error);
  try {
    count_bruteforce(sextic, 2, 1000);
  } catch (const Error& err) {
    CHECK(std::string(err.what()).find("390625") != std::string::npos);
  }
  // within budget it runs
  CHECK(count_bruteforce(sextic, 1, 1000).value == 126);
}

TEST_CASE("formula counts carry their source tag") {
  const CurveParams params = curve::validate_params(2, 3, 3, 1);
  CHECK(count_formula(params, 0, 0, 1).source == Source::formula);
  const curve::Curve cubic = curve::make_curve(2, 3, 3, 1, "1", "1", "1");
  CHECK(count_bruteforce(cubic, 1).source == Source::bruteforce);
}
