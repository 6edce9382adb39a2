#include "diagzeta/classnum.hpp"

namespace diagzeta::classnum {

namespace {

BigInt exact_div(const BigInt& numerator, const BigInt& denominator) {
  if (denominator == 0 || numerator % denominator != 0) {
    raise(Errc::InexactDivision,
          numerator.str() + " not divisible by " + denominator.str());
  }
  return numerator / denominator;
}

}  // namespace

BigInt closed_form(const curve::CaseLabel& label, const BigInt& u, std::uint32_t s,
                   std::uint32_t l) {
  const bool odd = s % 2 == 1;
  const BigInt x = pow_big(u, s);        // u^s = sqrt(q)
  const BigInt y = pow_big(u, static_cast<std::uint64_t>(l) * s);  // u^{ls}
  // sign-split pairs: h_1 uses (x+1, y+1), h_2 uses (x-1, y-1)
  const BigInt xs = odd ? BigInt(x + 1) : BigInt(x - 1);
  const BigInt xo = odd ? BigInt(x - 1) : BigInt(x + 1);  // the opposite-sign factor
  const BigInt ys = odd ? BigInt(y + 1) : BigInt(y - 1);
  const BigInt yo = odd ? BigInt(y - 1) : BigInt(y + 1);

  if (label.family == curve::CaseFamily::e2l) {
    switch (label.number) {
      case 1:
        return pow_big(xs, (2 * l - 1) * (2 * l - 2));
      case 2:
        return pow_big(xs, 2) * pow_big(ys, 4 * l - 6);
      case 3:
        return exact_div(pow_big(ys, 4 * l - 4), pow_big(xs, 2 * l - 2));
      case 4:
        return pow_big(xs, 2 * (l - 1) * (l - 1)) * pow_big(xo, 2 * l * (l - 1));
      case 5:
        return pow_big(exact_div(pow_big(u, 2ULL * l * s) - 1, xs), 2 * l - 2);
      case 6:
        return pow_big(xs, 2) * pow_big(ys, 2 * l - 4) * pow_big(yo, 2 * l - 2);
      case 7:
        return exact_div(pow_big(ys, 2 * l - 3) * pow_big(yo, 2 * l - 1),
                         pow_big(xs, l - 2) * pow_big(xo, l));
      default:
        raise(Errc::Unclassifiable, "bad 2l case " + std::to_string(label.number));
    }
  }
  switch (label.number) {
    case 1:
      return pow_big(xs, (l - 1) * (l - 2));
    case 2:
      return pow_big(exact_div(ys, xs), l - 2);
    case 3:
      return pow_big(xs, 2) * pow_big(ys, l - 3);
    default:
      raise(Errc::Unclassifiable, "bad l case " + std::to_string(label.number));
  }
}

ClassNumberReport class_number_for_case(const curve::CurveParams& params,
                                        const curve::CaseLabel& label) {
  ClassNumberReport report;
  report.case_label = label;
  report.s_odd = params.s % 2 == 1;
  report.via_p1 = zeta::expand(zeta::build_factored_p(params, label)).eval(1);
  report.via_closed_form = closed_form(label, params.u, params.s, params.l);
  if (report.via_p1 != report.via_closed_form) {
    raise(Errc::InexactDivision,
          "P(1) = " + report.via_p1.str() + " disagrees with closed form " +
              report.via_closed_form.str() + " for " + label.str());
  }
  report.h = report.via_p1;
  return report;
}

ClassNumberReport class_number(const curve::Curve& curve) {
  const curve::IndexPair idx = index_pair(curve);
  return class_number_for_case(curve.params,
                               curve::classify(curve.params, idx.i, idx.j));
}

std::vector<GrowthRow> growth_table(const curve::Curve& curve, std::uint32_t s_max) {
  if (s_max < 1) throw std::invalid_argument("s_max must be >= 1");
  const curve::IndexPair idx = index_pair(curve);
  const curve::CurveParams& base = curve.params;

  std::vector<GrowthRow> rows;
  rows.reserve(s_max);
  for (std::uint32_t step = 1; step <= s_max; ++step) {
    GrowthRow row;
    row.step = step;
    row.total_multiplier = step * base.s;
    // Index transport into F_{q^step}: both indices scale by step (up to a
    // common unit mod e, which the classifier ignores).
    const auto i_ext = static_cast<std::uint32_t>(
        static_cast<std::uint64_t>(idx.i) * step % base.e);
    const auto j_ext = static_cast<std::uint32_t>(
        static_cast<std::uint64_t>(idx.j) * step % base.e);
    curve::CurveParams level =
        curve::validate_params(base.p, base.l, base.e, row.total_multiplier);
    row.case_label = curve::classify(level, i_ext, j_ext);
    const BigInt via_p1 = zeta::expand(zeta::build_factored_p(level, row.case_label)).eval(1);
    const BigInt via_formula = closed_form(row.case_label, level.u, level.s, level.l);
    row.closed_form_matches = via_p1 == via_formula;
    row.h = via_p1;
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace diagzeta::classnum
