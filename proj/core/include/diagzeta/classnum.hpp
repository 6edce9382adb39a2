#pragma once

#include <cstdint>
#include <vector>

#include "diagzeta/curve.hpp"
#include "diagzeta/numeric.hpp"
#include "diagzeta/zeta.hpp"

namespace diagzeta::classnum {

/// Class number of the curve's function field, computed two ways:
/// via_p1 = P(1) and via_closed_form = the explicit h_1/h_2 formula for the
/// case, selected by the parity of s. Both must agree (and do; the
/// acceptance suite checks the whole grid).
struct ClassNumberReport {
  BigInt h;
  BigInt via_p1;
  BigInt via_closed_form;
  bool s_odd = true;
  curve::CaseLabel case_label;
};

ClassNumberReport class_number(const curve::Curve& curve);
ClassNumberReport class_number_for_case(const curve::CurveParams& params,
                                        const curve::CaseLabel& label);

/// The explicit class-number formula for the case: h_1 (s odd) or h_2
/// (s even) as an exact integer in u and s. Every division is checked
/// exact; a remainder raises InexactDivision (a case-table transcription
/// bug, so it must be unreachable).
BigInt closed_form(const curve::CaseLabel& label, const BigInt& u, std::uint32_t s,
                   std::uint32_t l);

/// One row of the constant-field-extension growth table: step s gives the
/// curve over F_{q^s}, total extension multiplier s * s0 where s0 is the
/// base curve's multiplier. The case label is recomputed at every level
/// (indices transport as (unit * s * i) mod e, and the classifier is
/// invariant under units), and the row is flagged if P(1) and the parity
/// closed form ever disagree.
struct GrowthRow {
  std::uint32_t step = 0;
  std::uint32_t total_multiplier = 0;
  curve::CaseLabel case_label;
  BigInt h;
  bool closed_form_matches = true;
};

std::vector<GrowthRow> growth_table(const curve::Curve& curve, std::uint32_t s_max);

}  // namespace diagzeta::classnum
