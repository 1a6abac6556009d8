#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "galcert/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Certify large residual images of genus-2 Siegel eigenforms"};
  app.require_subcommand(1);

  galcert::RunConfig config;
  std::string root = "all";
  std::string format = "text";

  auto* certify = app.add_subcommand("certify", "run the maximal-subgroup exclusion checks on a dataset");
  certify->add_option("input", config.input, "eigenform dataset file")->required();
  certify->add_option("--prime", config.p, "residual characteristic")->capture_default_str();
  certify->add_option("--root", root, "embedding root alpha -> R in [0, P), or 'all'")->capture_default_str();
  certify->add_option("--format", format, "report format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  certify->add_option("--out", config.output, "write the report to PATH instead of stdout");
  certify->add_option("--exceptional-table", config.exceptional_table,
                      "exceptional maximal subgroup orders for primes without a built-in table");

  try {
    app.parse(argc, argv);
    if (root != "all") {
      std::size_t used = 0;
      const unsigned long long r = std::stoull(root, &used);
      if (used != root.size()) throw std::invalid_argument(root);
      config.root = r;
    }
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : galcert::kExitError;
  } catch (const std::exception&) {
    std::cerr << "error: --root expects a residue or 'all', got '" << root << "'\n";
    return galcert::kExitError;
  }
  config.format = format == "json" ? galcert::OutputFormat::kJson : galcert::OutputFormat::kText;
  return galcert::run(config, std::cout, std::cerr);
}
