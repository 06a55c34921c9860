#include <iostream>

#include "CLI11.hpp"
#include "commands.hpp"
#include "endochain/error.hpp"

namespace cli = endochain::cli;

int main(int argc, char** argv) {
  CLI::App app{
      "endochain: strings and derivations in endomorphism semirings of finite "
      "chains, with an exhaustive claim verifier"};
  app.require_subcommand(1);

  cli::table_args table;
  CLI::App* table_cmd = app.add_subcommand("table", "operation table over a string");
  table_cmd->add_option("--n", table.n, "chain size")->required();
  table_cmd->add_option("--string", table.string_spec, "anchors, e.g. 2,3 or 0,1,2,3")
      ->required();
  table_cmd->add_option("--op", table.op, "add or mul")->default_val("mul");
  table_cmd->add_option("--format", table.format, "ascii, csv or json")->default_val("ascii");
  table_cmd->add_option("--out", table.out_file, "write to a file instead of stdout");

  cli::common_args deriv;
  CLI::App* deriv_cmd =
      app.add_subcommand("derivations", "derivation family report for a two-anchor string");
  deriv_cmd->add_option("--n", deriv.n, "chain size")->required();
  deriv_cmd->add_option("--string", deriv.string_spec, "anchors, e.g. 2,3")->required();
  deriv_cmd->add_option("--format", deriv.format, "ascii, json or dot")->default_val("ascii");
  deriv_cmd->add_option("--out", deriv.out_file, "write to a file instead of stdout");

  cli::verify_args verify;
  CLI::App* verify_cmd =
      app.add_subcommand("verify", "run the exhaustive claim checks");
  verify_cmd->add_option("--claims", verify.claims, "all or a comma list, e.g. 3.2,5.5")
      ->default_val("all");
  verify_cmd->add_option("--n", verify.n_range, "size or range, e.g. 4 or 2..6")->required();
  verify_cmd->add_option("--format", verify.format, "ascii or json")->default_val("ascii");
  verify_cmd->add_option("--out", verify.out_file, "write to a file instead of stdout");

  cli::closure_args closure;
  CLI::App* closure_cmd =
      app.add_subcommand("closure", "differential closure of an ideal with orbit traces");
  closure_cmd->add_option("--n", closure.n, "chain size")->required();
  closure_cmd->add_option("--string", closure.string_spec, "anchors")->required();
  closure_cmd->add_option("--ideal", closure.ideal_spec, "I:<j>, {0,n} or CO")->required();
  closure_cmd
      ->add_option("--derivation", closure.derivation_spec, "D, delta:<k> or delta:<k>,<seg>")
      ->required();
  closure_cmd->add_option("--format", closure.format, "ascii, json or dot")->default_val("ascii");
  closure_cmd->add_option("--out", closure.out_file, "write to a file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return cli::exit_usage;
  }

  try {
    if (*table_cmd) return cli::run_table(table, std::cerr);
    if (*deriv_cmd) return cli::run_derivations(deriv, std::cerr);
    if (*verify_cmd) return cli::run_verify(verify, std::cerr);
    if (*closure_cmd) return cli::run_closure(closure, std::cerr);
  } catch (const endochain::error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return cli::exit_usage;
  }
  return cli::exit_usage;
}
