#include "diagzeta/report.hpp"

#include <sstream>

#include <json.hpp>

namespace diagzeta::report {

using ordered_json = nlohmann::ordered_json;

ReportDocument build_report(const curve::Curve& curve, const ReportOptions& options) {
  ReportDocument doc;
  doc.params = curve.params;
  doc.a_text = ff::format_element(curve.a);
  doc.b_text = ff::format_element(curve.b);
  doc.c_text = ff::format_element(curve.c);

  doc.index = curve::index_pair(curve);
  doc.generator_text = ff::format_element(doc.index.gamma);
  doc.case_label = curve::classify(curve.params, doc.index.i, doc.index.j);
  doc.p_factored = zeta::build_factored_p(curve.params, doc.case_label);
  doc.p_expanded = zeta::expand(doc.p_factored);
  doc.class_number = classnum::class_number_for_case(curve.params, doc.case_label);
  doc.extremality = maximality::classify_extremality(curve.params, doc.index.i, doc.index.j);

  for (std::uint32_t n = 1; n <= options.n_max; ++n) {
    CountRow row;
    row.n = n;
    row.formula = count::count_formula(curve.params, doc.index, n).value;
    if (options.bruteforce) {
      try {
        row.bruteforce = count::count_bruteforce(curve, n, options.budget).value;
      } catch (const Error& err) {
        if (err.code() != Errc::BudgetExceeded) throw;
        row.bruteforce_error = err.what();
      }
    }
    doc.counts.push_back(std::move(row));
  }

  zeta::ZetaFunction z{doc.p_expanded, curve.params.q, curve.params.genus, doc.p_factored};
  doc.weil = zeta::check_weil(z);
  return doc;
}

namespace {

ordered_json to_json_value(const ReportDocument& doc) {
  const curve::CurveParams& p = doc.params;
  ordered_json params{
      {"p", std::to_string(p.p)},
      {"l", std::to_string(p.l)},
      {"e", std::to_string(p.e)},
      {"f", std::to_string(p.f)},
      {"s", std::to_string(p.s)},
      {"alpha", std::to_string(p.alpha)},
      {"q", p.q.str()},
      {"q0", p.q0.str()},
      {"u", p.u.str()},
      {"theta", p.theta.str()},
      {"genus", std::to_string(p.genus)},
      {"a", doc.a_text},
      {"b", doc.b_text},
      {"c", doc.c_text},
  };

  ordered_json factored = ordered_json::array();
  for (const zeta::FactorBlock& block : doc.p_factored.blocks) {
    factored.push_back(ordered_json{{"kind", zeta::block_kind_name(block.kind)},
                                    {"exponent", std::to_string(block.exponent)}});
  }

  ordered_json coeffs = ordered_json::array();
  for (std::uint32_t k = 0; k <= 2 * p.genus; ++k) {
    coeffs.push_back(doc.p_expanded.coeff(k).str());
  }

  const maximality::ExtremalityVerdict& verdict = doc.extremality;
  ordered_json extremality{
      {"status", maximality::extremality_name(verdict.status)},
      {"attained_count", verdict.attained_count.str()},
      {"bound", verdict.bound.str()},
      {"weil_lower", verdict.weil_lower.str()},
      {"weil_upper", verdict.weil_upper.str()},
      {"is_fermat_class", verdict.is_fermat_class},
      {"is_hermitian", verdict.is_hermitian},
      {"e_divides_sqrt_q_plus_1", verdict.e_divides_sqrt_q_plus_1},
  };
  if (verdict.fermat_prime_note.has_value()) {
    extremality["fermat_prime_note"] = *verdict.fermat_prime_note;
  }

  ordered_json counts = ordered_json::array();
  for (const CountRow& row : doc.counts) {
    ordered_json entry{{"n", std::to_string(row.n)}, {"formula", row.formula.str()}};
    if (row.bruteforce.has_value()) entry["bruteforce"] = row.bruteforce->str();
    if (row.bruteforce_error.has_value()) entry["bruteforce_error"] = *row.bruteforce_error;
    counts.push_back(std::move(entry));
  }

  ordered_json weil{
      {"degree", doc.weil.degree_ok},
      {"constant_term", doc.weil.constant_term_ok},
      {"leading_coefficient", doc.weil.leading_coeff_ok},
      {"functional_equation", doc.weil.functional_equation_ok},
      {"root_magnitude", doc.weil.root_magnitude_ok},
  };

  return ordered_json{
      {"params", std::move(params)},
      {"generator", doc.generator_text},
      {"index_pair",
       ordered_json{{"i", std::to_string(doc.index.i)}, {"j", std::to_string(doc.index.j)}}},
      {"case", doc.case_label.str()},
      {"p_factored", std::move(factored)},
      {"p_coeffs", std::move(coeffs)},
      {"class_number", doc.class_number.h.str()},
      {"extremality", std::move(extremality)},
      {"hermitian", verdict.is_hermitian},
      {"counts", std::move(counts)},
      {"weil_report", std::move(weil)},
  };
}

std::string join_counts(const ReportDocument& doc) {
  std::ostringstream os;
  for (std::size_t k = 0; k < doc.counts.size(); ++k) {
    if (k != 0) os << ';';
    os << doc.counts[k].n << ':' << doc.counts[k].formula.str();
    if (doc.counts[k].bruteforce.has_value()) os << ':' << doc.counts[k].bruteforce->str();
  }
  return os.str();
}

std::string join_coeffs(const ReportDocument& doc) {
  std::ostringstream os;
  for (std::uint32_t k = 0; k <= 2 * doc.params.genus; ++k) {
    if (k != 0) os << ';';
    os << doc.p_expanded.coeff(k).str();
  }
  return os.str();
}

std::string csv_quote(const std::string& cell) {
  std::string out = "\"";
  for (char c : cell) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string to_json(const ReportDocument& doc) {
  return to_json_value(doc).dump(2) + "\n";
}

std::string to_json_line(const ReportDocument& doc) {
  return to_json_value(doc).dump();
}

std::string to_text(const ReportDocument& doc) {
  const curve::CurveParams& p = doc.params;
  std::ostringstream os;
  os << "curve: " << doc.a_text << "*Y^" << p.e << " = " << doc.b_text << "*X^" << p.e
     << " + " << doc.c_text << "*Z^" << p.e << " over F_" << p.q.str() << "\n";
  os << "regime: p=" << p.p << " l=" << p.l << " e=" << p.e << " f=" << p.f
     << " s=" << p.s << " q=" << p.q.str() << " u=" << p.u.str()
     << " theta=" << p.theta.str() << " genus=" << p.genus << "\n";
  os << "generator: " << doc.generator_text << "\n";
  os << "index pair: (i, j) = (" << doc.index.i << ", " << doc.index.j << ")\n";
  os << "case: " << doc.case_label.str() << "\n";
  os << "P(t) factored:";
  for (const zeta::FactorBlock& block : doc.p_factored.blocks) {
    os << ' ' << zeta::block_kind_name(block.kind) << '^' << block.exponent;
  }
  os << "\nP(t) coefficients: [" << join_coeffs(doc) << "]\n";
  os << "class number: " << doc.class_number.h.str() << "\n";
  os << "extremality: " << maximality::extremality_name(doc.extremality.status)
     << " (a(1) = " << doc.extremality.attained_count.str() << ", Weil ["
     << doc.extremality.weil_lower.str() << ", " << doc.extremality.weil_upper.str()
     << "])\n";
  os << "hermitian: " << (doc.extremality.is_hermitian ? "yes" : "no") << "\n";
  if (doc.extremality.fermat_prime_note.has_value()) {
    os << "note: " << *doc.extremality.fermat_prime_note << "\n";
  }
  os << "counts:";
  for (const CountRow& row : doc.counts) {
    os << " a(" << row.n << ")=" << row.formula.str();
    if (row.bruteforce.has_value()) {
      os << (row.bruteforce == row.formula ? "=bf" : "!=bf:" + row.bruteforce->str());
    }
  }
  os << "\nweil checks: degree=" << doc.weil.degree_ok
     << " constant=" << doc.weil.constant_term_ok
     << " leading=" << doc.weil.leading_coeff_ok
     << " functional_equation=" << doc.weil.functional_equation_ok
     << " root_magnitude=" << doc.weil.root_magnitude_ok << "\n";
  return os.str();
}

std::string csv_header() {
  return "p,l,e,f,s,alpha,q,q0,u,theta,genus,a,b,c,generator,i,j,case,"
         "p_coeffs,class_number,extremality,hermitian,counts";
}

std::string to_csv_row(const ReportDocument& doc) {
  const curve::CurveParams& p = doc.params;
  std::ostringstream os;
  os << p.p << ',' << p.l << ',' << p.e << ',' << p.f << ',' << p.s << ',' << p.alpha
     << ',' << p.q.str() << ',' << p.q0.str() << ',' << p.u.str() << ','
     << p.theta.str() << ',' << p.genus << ',' << csv_quote(doc.a_text) << ','
     << csv_quote(doc.b_text) << ',' << csv_quote(doc.c_text) << ','
     << csv_quote(doc.generator_text) << ',' << doc.index.i << ',' << doc.index.j
     << ',' << doc.case_label.str() << ',' << csv_quote(join_coeffs(doc)) << ','
     << doc.class_number.h.str() << ','
     << maximality::extremality_name(doc.extremality.status) << ','
     << (doc.extremality.is_hermitian ? "true" : "false") << ','
     << csv_quote(join_counts(doc));
  return os.str();
}

std::vector<ReportDocument> sweep_all_ij(std::uint64_t p, std::uint32_t l,
                                         std::uint32_t e, std::uint32_t s,
                                         const ReportOptions& options) {
  const curve::CurveParams params = curve::validate_params(p, l, e, s);
  ff::FieldPtr field = ff::build_extension(ff::build_prime_field(p), params.alpha);
  const ff::FieldElement gamma = ff::find_generator(field);
  const ff::FieldElement one = field->one();

  std::vector<ReportDocument> docs;
  docs.reserve(static_cast<std::size_t>(e) * e);
  for (std::uint32_t i = 0; i < e; ++i) {
    for (std::uint32_t j = 0; j < e; ++j) {
      const curve::Curve instance = curve::make_curve(
          params, field, gamma.pow(BigInt(j)), gamma.pow(BigInt(i)), one);
      docs.push_back(build_report(instance, options));
    }
  }
  return docs;
}

}  // namespace diagzeta::report
