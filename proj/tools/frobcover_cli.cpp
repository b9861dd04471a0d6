// frobcover verify: run the verification pipeline for one or more primes.
//
// Exit status: 0 all checks pass (skips allowed), 1 some check failed,
// 2 invalid input or unwritable output.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "frobcover/report.hpp"

namespace {

constexpr int kInvalidInput = 2;

struct VerifyArgs {
  std::optional<std::uint32_t> prime;
  std::vector<std::uint32_t> primes;
  std::string checks = "all";
  std::uint64_t max_field_size = frobcover::kDefaultEnumerationCap;
  std::uint64_t seed = 0;
  std::string format = "json";
  std::string output;
  std::string mutate;
};

int verify(const VerifyArgs& args) {
  using namespace frobcover;
  std::vector<std::uint32_t> primes = args.primes;
  if (args.prime) primes.insert(primes.begin(), *args.prime);

  VerifyOptions options;
  options.selection = CheckSelection::parse(args.checks);
  options.max_field_size = args.max_field_size;
  options.seed = args.seed;
  if (!args.mutate.empty()) options.mutate = args.mutate;
  const ReportFormat format = args.format == "text" ? ReportFormat::Text : ReportFormat::Json;

  std::vector<CoverReport> reports;
  for (std::uint32_t p : primes) reports.push_back(run_verification(p, options));

  const std::string out = args.prime ? render(reports.front(), format) : render(reports, format);
  if (args.output.empty()) {
    std::cout << out;
  } else {
    std::ofstream file(args.output, std::ios::binary);
    if (!(file << out)) throw std::runtime_error("cannot write report to " + args.output);
  }
  for (const auto& r : reports) {
    if (!r.passed()) return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of Frobenius-periodic syzygy covers on Fermat curves"};
  app.require_subcommand(1);

  VerifyArgs args;
  std::uint32_t prime = 0;
  auto* cmd = app.add_subcommand("verify", "Run the checks and emit a report");
  auto* single = cmd->add_option("--prime", prime, "Odd prime p");
  auto* batch = cmd->add_option("--primes", args.primes, "Comma-separated primes; emits an array")->delimiter(',');
  single->excludes(batch);
  cmd->add_option("--checks", args.checks, "lemmas, cover, fiber, all or none, comma-separated")
      ->default_str("all");
  cmd->add_option("--max-field-size", args.max_field_size, "Largest field the census may enumerate")
      ->default_val(frobcover::kDefaultEnumerationCap);
  cmd->add_option("--seed", args.seed, "Seed for sampled checks")->default_val(0);
  cmd->add_option("--format", args.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  cmd->add_option("--output", args.output, "Write the report here instead of standard output");
  cmd->add_option("--mutate", args.mutate, "Flip the sign of the leading term of a catalog entry first");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInvalidInput;
  }

  if (single->count() == 0 && batch->count() == 0) {
    std::cerr << "verify: one of --prime or --primes is required\n";
    return kInvalidInput;
  }
  if (single->count() > 0) args.prime = prime;

  try {
    return verify(args);
  } catch (const std::invalid_argument& e) {
    std::cerr << "verify: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const std::runtime_error& e) {
    std::cerr << "verify: " << e.what() << "\n";
    return kInvalidInput;
  }
}
