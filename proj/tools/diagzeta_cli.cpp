// diagzeta command-line tool: exact zeta functions, point counts, class
// numbers, and maximality classification for the diagonal curves
// a Y^e = b X^e + c Z^e over finite fields, plus the verification harness.
//
// Exit codes: 0 success, 1 verification failure, 2 usage/validation error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "diagzeta/diagzeta.hpp"

namespace {

using namespace diagzeta;

std::uint64_t default_budget() {
  if (const char* env = std::getenv("DIAGZETA_BUDGET"); env != nullptr) {
    try {
      return std::stoull(env);
    } catch (...) {
      std::cerr << "ParseError: DIAGZETA_BUDGET is not a number, ignoring\n";
    }
  }
  return count::kDefaultBudget;
}

struct CurveFlags {
  std::uint64_t p = 0;
  std::uint32_t l = 0, e = 0, s = 1;
  std::string a = "1", b = "1", c = "1";
};

void add_curve_flags(CLI::App* cmd, CurveFlags& flags) {
  cmd->add_option("--p", flags.p, "characteristic (prime)")->required();
  cmd->add_option("--l", flags.l, "odd prime l")->required();
  cmd->add_option("--e", flags.e, "curve degree, l or 2l")->required();
  cmd->add_option("--s", flags.s, "extension multiplier (q = p^{fs})");
  cmd->add_option("--a", flags.a, "coefficient a (element text: decimal, poly:[...], g^k)");
  cmd->add_option("--b", flags.b, "coefficient b (element text)");
  cmd->add_option("--c", flags.c, "coefficient c (element text)");
}

int run_report(const CurveFlags& flags, std::uint32_t n_max, bool bruteforce,
               std::uint64_t budget, const std::string& format) {
  const curve::Curve instance =
      curve::make_curve(flags.p, flags.l, flags.e, flags.s, flags.a, flags.b, flags.c);
  report::ReportOptions options;
  options.n_max = n_max;
  options.bruteforce = bruteforce;
  options.budget = budget;
  const report::ReportDocument doc = report::build_report(instance, options);
  if (format == "json") {
    std::cout << report::to_json(doc);
  } else if (format == "csv") {
    std::cout << report::csv_header() << "\n" << report::to_csv_row(doc) << "\n";
  } else {
    std::cout << report::to_text(doc);
  }
  return 0;
}

int run_sweep(const CurveFlags& flags, std::uint32_t n_max, bool bruteforce,
              std::uint64_t budget, const std::string& out) {
  report::ReportOptions options;
  options.n_max = n_max;
  options.bruteforce = bruteforce;
  options.budget = budget;
  const std::vector<report::ReportDocument> docs =
      report::sweep_all_ij(flags.p, flags.l, flags.e, flags.s, options);

  const bool csv = out.size() > 4 && out.substr(out.size() - 4) == ".csv";
  std::ofstream file;
  std::ostream* os = &std::cout;
  if (!out.empty() && out != "-") {
    file.open(out);
    if (!file) {
      std::cerr << "ParseError: cannot open output file " << out << "\n";
      return 2;
    }
    os = &file;
  }
  if (csv) {
    *os << report::csv_header() << "\n";
    for (const auto& doc : docs) *os << report::to_csv_row(doc) << "\n";
  } else {
    for (const auto& doc : docs) *os << report::to_json_line(doc) << "\n";
  }
  return 0;
}

int run_verify(const std::string& suite, std::uint64_t budget) {
  const std::vector<verify::SuiteResult> results = verify::run_suites(suite, budget);
  bool all_pass = true;
  for (const verify::SuiteResult& result : results) {
    for (const verify::CheckResult& check : result.checks) {
      std::cout << (check.pass ? "[PASS] " : "[FAIL] ") << result.suite << ": "
                << check.name;
      if (!check.pass && !check.detail.empty()) std::cout << " --" << check.detail;
      std::cout << "\n";
    }
    all_pass = all_pass && result.all_pass();
    std::cout << result.suite << ": "
              << (result.checks.size() - result.failures()) << "/"
              << result.checks.size() << " checks passed\n";
  }
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact zeta functions, point counts, and class numbers of the "
               "diagonal projective curves a*Y^e = b*X^e + c*Z^e over F_q"};
  app.require_subcommand(1);

  CurveFlags flags;
  std::uint32_t n_max = 5;
  bool bruteforce = false;
  std::uint64_t budget = default_budget();
  std::string format = "text";
  std::string out;
  std::string suite;
  bool all_ij = false;

  CLI::App* report_cmd =
      app.add_subcommand("report", "full pipeline for one curve");
  add_curve_flags(report_cmd, flags);
  report_cmd->add_option("--n-max", n_max, "point counts for n = 1..n_max");
  report_cmd->add_flag("--bruteforce", bruteforce, "include enumeration oracle counts");
  report_cmd->add_option("--budget", budget,
                         "work budget for brute force (q^{2n} pair sweeps)");
  report_cmd->add_option("--format", format, "json | text | csv")
      ->check(CLI::IsMember({"json", "text", "csv"}));

  CLI::App* sweep_cmd =
      app.add_subcommand("sweep", "one report per coefficient class (i,j)");
  add_curve_flags(sweep_cmd, flags);
  sweep_cmd->add_flag("--all-ij", all_ij,
                      "iterate b = g^i, a = g^j, c = 1 over all (i,j)")
      ->required();
  sweep_cmd->add_option("--n-max", n_max, "point counts for n = 1..n_max");
  sweep_cmd->add_flag("--bruteforce", bruteforce, "include enumeration oracle counts");
  sweep_cmd->add_option("--budget", budget, "work budget for brute force");
  sweep_cmd->add_option("--out", out, "output file (.jsonl or .csv); stdout if omitted");

  CLI::App* verify_cmd =
      app.add_subcommand("verify", "run the verification suites");
  verify_cmd
      ->add_option("--suite", suite, "lemma1 | lemma2 | weil | classnum | series | all")
      ->required()
      ->check(CLI::IsMember({"lemma1", "lemma2", "weil", "classnum", "series", "all"}));
  verify_cmd->add_option("--budget", budget, "work budget for brute-force checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    if (report_cmd->parsed()) {
      return run_report(flags, n_max, bruteforce, budget, format);
    }
    if (sweep_cmd->parsed()) {
      return run_sweep(flags, n_max, bruteforce, budget, out);
    }
    return run_verify(suite, budget);
  } catch (const Error& err) {
    std::cerr << err.what() << "\n";
    return 2;
  } catch (const std::exception& err) {
    std::cerr << "InternalError: " << err.what() << "\n";
    return 2;
  }
}
