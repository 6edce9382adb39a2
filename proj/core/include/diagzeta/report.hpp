#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "diagzeta/classnum.hpp"
#include "diagzeta/count.hpp"
#include "diagzeta/curve.hpp"
#include "diagzeta/maximality.hpp"
#include "diagzeta/zeta.hpp"

namespace diagzeta::report {

struct ReportOptions {
  std::uint32_t n_max = 5;
  bool bruteforce = false;
  std::uint64_t budget = count::kDefaultBudget;
};

struct CountRow {
  std::uint32_t n = 0;
  BigInt formula;
  std::optional<BigInt> bruteforce;  // present under --bruteforce, absent when refused
  std::optional<std::string> bruteforce_error;
};

/// Everything cmd_report emits for one curve. All integers serialize as
/// decimal strings (class numbers and P coefficients outgrow 64 bits already
/// at l = 5); JSON output is byte-stable for fixed inputs.
struct ReportDocument {
  curve::CurveParams params;
  std::string a_text, b_text, c_text;
  std::string generator_text;
  curve::IndexPair index;
  curve::CaseLabel case_label;
  zeta::FactoredPolynomial p_factored;
  zeta::IntPolynomial p_expanded;
  classnum::ClassNumberReport class_number;
  maximality::ExtremalityVerdict extremality;
  std::vector<CountRow> counts;
  zeta::WeilReport weil;
};

ReportDocument build_report(const curve::Curve& curve, const ReportOptions& options = {});

/// Pretty two-space-indented JSON with trailing newline; byte-identical for
/// identical inputs.
std::string to_json(const ReportDocument& doc);
/// Single-line JSON (JSONL row).
std::string to_json_line(const ReportDocument& doc);
std::string to_text(const ReportDocument& doc);
std::string csv_header();
std::string to_csv_row(const ReportDocument& doc);

/// One report per (i, j) in Z_e x Z_e, coefficients b = g^i, a = g^j, c = 1,
/// row-major in (i, j).
std::vector<ReportDocument> sweep_all_ij(std::uint64_t p, std::uint32_t l,
                                         std::uint32_t e, std::uint32_t s,
                                         const ReportOptions& options = {});

}  // namespace diagzeta::report
