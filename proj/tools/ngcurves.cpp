// ngcurves: classify projective monomial curves by their ring-theoretic invariants.
//
// Exit codes: 0 ok, 2 usage or validation error, 3 verification mismatch,
// 4 classification verdict failed, 5 no nearly Gorenstein movement.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <ngcurves/ngcurves.hpp>

namespace {

using namespace ngcurves;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitVerify = 3;
constexpr int kExitVerdict = 4;
constexpr int kExitNotNg = 5;

Int scan_cap_from_env() {
  const char* env = std::getenv("NGCURVES_MAX_AN");
  if (!env || !*env) return kDefaultScanCap;
  try {
    return std::stoll(env);
  } catch (const std::exception&) {
    throw Error(Errc::cap_exceeded, std::string("NGCURVES_MAX_AN is not an integer: ") + env);
  }
}

int emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return kExitOk;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) {
    std::cerr << "error: cannot open " << out_path << " for writing\n";
    return kExitUsage;
  }
  f << text;
  return kExitOk;
}

int cmd_analyze(const std::vector<Int>& values, const std::string& format, bool verify) {
  const Curve curve{Sequence(values)};
  const auto rec = analyze(curve);
  if (format == "json") {
    std::cout << io::to_json(rec).dump(2) << "\n";
  } else if (format == "csv") {
    std::cout << io::to_csv({rec});
  } else {
    std::cout << io::to_text(rec);
  }
  if (verify) {
    const auto bad = verification::verify(curve, rec);
    for (const auto& m : bad) std::cerr << "verify: " << m << "\n";
    if (!bad.empty()) return kExitVerify;
    std::cerr << "verify: all cross-checks agree\n";
  }
  return kExitOk;
}

int cmd_scan(int n, Int max_an, const std::string& format, const std::string& out, unsigned threads) {
  ScanOptions opt;
  opt.cap = scan_cap_from_env();
  opt.threads = threads;
  const auto rep = scan(n, max_an, opt);
  std::string text;
  if (format == "json") {
    text = io::to_json(rep).dump(2) + "\n";
  } else if (format == "csv") {
    text = io::to_csv(rep.records);
  } else {
    text = io::to_text(rep);
  }
  if (int rc = emit(text, out); rc != kExitOk) return rc;
  if (!rep.verdict) {
    std::cerr << "classification verdict failed: found set differs from expected families\n";
    return kExitVerdict;
  }
  return kExitOk;
}

int cmd_movement(const std::vector<Int>& values) {
  const Curve curve{Sequence(values)};
  if (!curve.is_cm()) {
    std::cerr << "no nearly Gorenstein movement exists (not Cohen-Macaulay)\n";
    return kExitNotNg;
  }
  const auto chain = CanonicalModule(curve).find_movement();
  if (!chain) {
    std::cerr << "no nearly Gorenstein movement exists\n";
    return kExitNotNg;
  }
  std::cout << render_movement(*chain, curve.sequence()) << "\n";
  return kExitOk;
}

int cmd_family(const std::string& name, const std::vector<Int>& params) {
  if (auto f = family_from_name(name)) {
    if (params.size() != 1) throw Error(Errc::out_of_family_range, "family " + name + " takes one parameter k");
    std::cout << to_string(family(*f, params[0]), " ") << "\n";
    return kExitOk;
  }
  if (auto f = pair_family_from_name(name)) {
    if (params.size() != 2) throw Error(Errc::out_of_family_range, "family " + name + " takes parameters a b");
    std::cout << to_string(family(*f, params[0], params[1]), " ") << "\n";
    std::cout << "witness: " << to_string(family_witness(*f, params[0], params[1])) << "\n";
    return kExitOk;
  }
  throw Error(Errc::out_of_family_range, "unknown family " + name);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Invariants of projective monomial curves"};
  app.require_subcommand(1);

  std::vector<Int> values;
  std::string format = "text";
  bool verify = false;
  auto* analyze_cmd = app.add_subcommand("analyze", "Classify one sequence a_1 < ... < a_n");
  analyze_cmd->add_option("values", values, "Sequence values")->required()->expected(2, -1);
  analyze_cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
  analyze_cmd->add_flag("--verify", verify, "Cross-check the result against brute-force oracles");

  int scan_n = 0;
  Int scan_max = 0;
  std::string scan_out;
  unsigned threads = 0;
  auto* scan_cmd = app.add_subcommand("scan", "Classify every sequence of length n with a_n <= max");
  scan_cmd->add_option("--n", scan_n, "Sequence length")->required()->check(CLI::IsMember({2, 3, 4}));
  scan_cmd->add_option("--max", scan_max, "Largest a_n")->required()->check(CLI::PositiveNumber);
  scan_cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
  scan_cmd->add_option("--out", scan_out, "Write the report to a file");
  scan_cmd->add_option("--threads", threads, "Worker threads (0 = all cores)");

  auto* movement_cmd = app.add_subcommand("movement", "Print a nearly Gorenstein movement");
  movement_cmd->add_option("values", values, "Sequence values")->required()->expected(2, -1);

  std::string family_name;
  std::vector<Int> family_params;
  auto* family_cmd = app.add_subcommand("family", "Print a member of a parametric family");
  family_cmd->add_option("name", family_name, "alpha, i_a, i_b, ii_d, iv_b, v_d, i_c, ii_e or iii")->required();
  family_cmd->add_option("params", family_params, "k, or a b for the pair families")->required()->expected(1, 2);

  auto* dual_cmd = app.add_subcommand("dual", "Print the dual sequence");
  dual_cmd->add_option("values", values, "Sequence values")->required()->expected(2, -1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*analyze_cmd) return cmd_analyze(values, format, verify);
    if (*scan_cmd) return cmd_scan(scan_n, scan_max, format, scan_out, threads);
    if (*movement_cmd) return cmd_movement(values);
    if (*family_cmd) return cmd_family(family_name, family_params);
    if (*dual_cmd) {
      std::cout << to_string(dual(Sequence(values)), " ") << "\n";
      return kExitOk;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
