#include <iostream>

#include "CLI11.hpp"
#include "lienil/catalog.hpp"
#include "lienil/cli/input.hpp"
#include "lienil/cli/report.hpp"
#include "lienil/cli/verify.hpp"
#include "lienil/errors.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitInputError = 2;

struct AnalyzeArgs {
  std::string named, table, present;
  std::uint32_t p = 0;
  bool json = false;
  bool verbose = false;
  std::size_t max_order = 128;
  std::string convention = "auto";
};

struct VerifyArgs {
  std::size_t max_order = 128;
  std::string convention = "auto";
  unsigned jobs = 0;
};

lienil::cli::ConventionChoice convention_or_throw(const std::string& text) {
  auto c = lienil::cli::parse_convention_choice(text);
  if (!c) throw lienil::InputError("unknown convention '" + text + "' (ceiling, strict-greater, auto)");
  return *c;
}

int run_analyze(const AnalyzeArgs& a) {
  const int sources = !a.named.empty() + !a.table.empty() + !a.present.empty();
  if (sources != 1) throw lienil::InputError("give exactly one of --named, --table, --present");
  if (!lienil::is_prime(a.p)) throw lienil::InputError("-p " + std::to_string(a.p) + " is not prime");
  const auto choice = convention_or_throw(a.convention);
  lienil::GroupSpec spec = !a.named.empty()   ? lienil::parse_named(a.named)
                           : !a.table.empty() ? lienil::cli::load_table_file(a.table)
                                              : lienil::cli::parse_presentation(a.present);
  const lienil::GroupPtr G = lienil::build(spec);
  const auto report = lienil::cli::analyze_with_choice(G, a.p, spec.name, a.max_order, choice);
  if (a.json) {
    std::cout << lienil::cli::to_json(report).dump(2) << '\n';
  } else {
    std::cout << lienil::cli::render_text(report, a.verbose);
  }
  return report.passed() ? kExitPass : kExitCheckFailure;
}

int run_verify(const VerifyArgs& a) {
  lienil::cli::VerifyOptions options{a.max_order, convention_or_throw(a.convention), a.jobs};
  const auto result = lienil::cli::verify_corpus(options);
  std::cout << lienil::cli::render_matrix(result);
  return result.all_passed ? kExitPass : kExitCheckFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lie nilpotency indices of modular group algebras F_p G"};
  app.require_subcommand(1);

  AnalyzeArgs analyze_args;
  auto* analyze = app.add_subcommand("analyze", "Analyze one group");
  analyze->add_option("--named", analyze_args.named, "Catalog name, e.g. D16, Q8, C4xC2, He3");
  analyze->add_option("--table", analyze_args.table, "JSON Cayley table file");
  analyze->add_option("--present", analyze_args.present, "Presentation, e.g. \"a^8=1; b^2=1; a^b=a^-1\"");
  analyze->add_option("-p,--prime", analyze_args.p, "Characteristic")->required();
  analyze->add_flag("--json", analyze_args.json, "Emit the report as JSON");
  analyze->add_flag("--verbose", analyze_args.verbose, "Print the series, chain dimensions and every check");
  analyze->add_option("--max-order", analyze_args.max_order, "Brute-force cap on |G|")->capture_default_str();
  analyze->add_option("--convention", analyze_args.convention, "ceiling, strict-greater or auto")->capture_default_str();

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "Run the standard corpus");
  verify->add_option("--max-order", verify_args.max_order, "Skip entries with |G| above this")->capture_default_str();
  verify->add_option("--convention", verify_args.convention, "ceiling, strict-greater or auto")->capture_default_str();
  verify->add_option("-j,--jobs", verify_args.jobs, "Worker threads (0: hardware concurrency)")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitInputError;
  }

  try {
    if (analyze->parsed()) return run_analyze(analyze_args);
    return run_verify(verify_args);
  } catch (const lienil::InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitCheckFailure;
  }
}
