#ifndef ENDOCHAIN_TOOLS_COMMANDS_HPP
#define ENDOCHAIN_TOOLS_COMMANDS_HPP

#include <iosfwd>
#include <string>

namespace endochain::cli {

/// Exit codes shared by every subcommand: 0 success / all pass, 1 claim
/// failure, 2 usage error.
inline constexpr int exit_ok = 0;
inline constexpr int exit_claim_failure = 1;
inline constexpr int exit_usage = 2;

struct common_args {
  int n = 0;
  std::string string_spec;
  std::string format = "ascii";
  std::string out_file;  // empty = stdout
};

struct table_args : common_args {
  std::string op = "mul";
};

struct verify_args {
  std::string claims = "all";
  std::string n_range;
  std::string format = "ascii";
  std::string out_file;
};

struct closure_args : common_args {
  std::string ideal_spec;
  std::string derivation_spec;
};

int run_table(const table_args& args, std::ostream& diag);
int run_derivations(const common_args& args, std::ostream& diag);
int run_verify(const verify_args& args, std::ostream& diag);
int run_closure(const closure_args& args, std::ostream& diag);

/// Cap from CHAIN_SEMIRING_MAX_N (default 12); larger n is a usage error.
int max_chain_size();

}  // namespace endochain::cli

#endif
