#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <json.hpp>
#include <map>
#include <set>
#include <sstream>

#include "diagzeta/report.hpp"

using namespace diagzeta;
using namespace diagzeta::report;

TEST_CASE("report document for the Fermat sextic") {
  const curve::Curve instance = curve::make_curve(5, 3, 6, 1, "1", "1", "1");
  const ReportDocument doc = build_report(instance);

  CHECK(doc.case_label.str() == "2l-case-1");
  CHECK(doc.generator_text == "poly:[1,1]");
  CHECK(doc.index.i == 0);
  CHECK(doc.index.j == 0);
  CHECK(doc.class_number.h == pow_big(BigInt(6), 20));
  CHECK(doc.extremality.is_hermitian);
  CHECK(doc.weil.functional_equation_ok);
  REQUIRE(doc.counts.size() == 5);
  CHECK(doc.counts[0].formula == 126);
  CHECK_FALSE(doc.counts[0].bruteforce.has_value());

  const nlohmann::json parsed = nlohmann::json::parse(to_json(doc));
  CHECK(parsed["params"]["q"] == "25");
  CHECK(parsed["params"]["theta"] == "-5");
  CHECK(parsed["case"] == "2l-case-1");
  CHECK(parsed["p_coeffs"][0] == "1");
  CHECK(parsed["p_coeffs"][1] == "100");
  CHECK(parsed["p_coeffs"][20] == "95367431640625");
  CHECK(parsed["class_number"] == "3656158440062976");
  CHECK(parsed["hermitian"] == true);
  CHECK(parsed["index_pair"]["i"] == "0");
  CHECK(parsed["extremality"]["status"] == "maximal");
  CHECK(parsed["weil_report"]["functional_equation"] == true);
}

#ifdef DIAGZETA_TESTS_DATA_DIR
TEST_CASE("report JSON matches the frozen golden file") {
  std::ifstream golden(std::string(DIAGZETA_TESTS_DATA_DIR) + "/fermat_sextic_f25.json");
  REQUIRE(golden.good());
  std::ostringstream contents;
  contents << golden.rdbuf();
  const ReportDocument doc = build_report(curve::make_curve(5, 3, 6, 1, "1", "1", "1"));
  CHECK(to_json(doc) == contents.str());
}
#endif

TEST_CASE("JSON output is byte-stable and JSONL is one line") {
  auto build = []() {
    return build_report(curve::make_curve(5, 3, 6, 1, "g^4", "g^2", "1"));
  };
  const std::string a = to_json(build());
  const std::string b = to_json(build());
  CHECK(a == b);
  CHECK(a.back() == '\n');

  const std::string line = to_json_line(build());
  CHECK(line.find('\n') == std::string::npos);
  CHECK(nlohmann::json::parse(line)["case"] == "2l-case-2");
}

TEST_CASE("CSV carries the same numeric content as JSON") {
  const ReportDocument doc = build_report(curve::make_curve(5, 3, 6, 1, "1", "1", "1"));
  const std::string row = to_csv_row(doc);
  const nlohmann::json parsed = nlohmann::json::parse(to_json(doc));
  CHECK(row.find(parsed["class_number"].get<std::string>()) != std::string::npos);
  CHECK(row.find(parsed["params"]["q"].get<std::string>()) != std::string::npos);
  CHECK(row.find("2l-case-1") != std::string::npos);
  // p_coeffs cell joins the same decimal strings
  for (const auto& coeff : parsed["p_coeffs"]) {
    CHECK(row.find(coeff.get<std::string>()) != std::string::npos);
  }
}

TEST_CASE("bruteforce rows appear when requested and respect the budget") {
  ReportOptions options;
  options.n_max = 2;
  options.bruteforce = true;
  const ReportDocument doc =
      build_report(curve::make_curve(2, 3, 3, 1, "1", "1", "1"), options);
  REQUIRE(doc.counts.size() == 2);
  REQUIRE(doc.counts[0].bruteforce.has_value());
  CHECK(*doc.counts[0].bruteforce == doc.counts[0].formula);

  options.budget = 20;  // q^2 = 16 fits, q^4 = 256 does not
  const ReportDocument limited =
      build_report(curve::make_curve(2, 3, 3, 1, "1", "1", "1"), options);
  CHECK(limited.counts[0].bruteforce.has_value());
  CHECK_FALSE(limited.counts[1].bruteforce.has_value());
  REQUIRE(limited.counts[1].bruteforce_error.has_value());
  CHECK(limited.counts[1].bruteforce_error->find("BudgetExceeded") != std::string::npos);
}

TEST_CASE("sweep over F_25, all 36 index classes") {
  const std::vector<ReportDocument> docs = sweep_all_ij(5, 3, 6, 1);
  REQUIRE(docs.size() == 36);

  // row-major (i, j) order and exact index recovery
  for (std::uint32_t k = 0; k < 36; ++k) {
    CHECK(docs[k].index.i == k / 6);
    CHECK(docs[k].index.j == k % 6);
  }

  std::size_t extremal = 0;
  std::map<int, int> case_sizes;
  for (const ReportDocument& doc : docs) {
    if (doc.extremality.status != maximality::Extremality::neither) ++extremal;
    ++case_sizes[doc.case_label.number];
  }
  CHECK(extremal == 1);
  CHECK(case_sizes[1] == 1);
  CHECK(case_sizes[2] == 2);
  CHECK(case_sizes[3] == 6);
  CHECK(case_sizes[4] == 3);
  CHECK(case_sizes[5] == 6);
  CHECK(case_sizes[6] == 6);
  CHECK(case_sizes[7] == 12);
}

TEST_CASE("sweep over F_4, all 9 index classes") {
  const std::vector<ReportDocument> docs = sweep_all_ij(2, 3, 3, 1);
  REQUIRE(docs.size() == 9);
  std::set<int> case_numbers;
  std::set<std::string> labels;
  for (const ReportDocument& doc : docs) {
    case_numbers.insert(doc.case_label.number);
    labels.insert(doc.case_label.str());
  }
  CHECK(case_numbers.size() == 3);
  CHECK(labels.size() == 5);  // 1, 2(i), 2(ii), 2(iii), 3
}
