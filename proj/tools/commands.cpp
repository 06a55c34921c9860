#include "commands.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "render.hpp"

namespace endochain::cli {

namespace {

void emit(const std::string& text, const std::string& out_file) {
  if (out_file.empty()) {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(out_file, std::ios::binary);
  require(out.good(), errc::bad_params, "cannot open '" + out_file + "' for writing");
  out << text;
}

void check_n(int n) {
  require(n >= 1, errc::bad_params, "need n >= 1");
  require(n <= max_chain_size(), errc::bad_params,
          "n " + std::to_string(n) + " exceeds the cap " +
              std::to_string(max_chain_size()) + " (set CHAIN_SEMIRING_MAX_N to raise it)");
}

}  // namespace

int max_chain_size() {
  if (const char* env = std::getenv("CHAIN_SEMIRING_MAX_N")) {
    const int value = std::atoi(env);
    if (value >= 1) return value;
  }
  return 12;
}

int run_table(const table_args& args, std::ostream& diag) {
  (void)diag;
  check_n(args.n);
  const output_format format = parse_format(args.format);
  require(format != output_format::dot, errc::bad_format,
          "table supports ascii, csv and json");
  const string_context ctx = parse_string_spec(args.n, args.string_spec);
  const op_table table = make_op_table(ctx, args.op);
  emit(render_table(ctx, table, format), args.out_file);
  return exit_ok;
}

int run_derivations(const common_args& args, std::ostream& diag) {
  (void)diag;
  check_n(args.n);
  const output_format format = parse_format(args.format);
  require(format != output_format::csv, errc::bad_format,
          "derivations supports ascii, json and dot");
  const string_context ctx = parse_string_spec(args.n, args.string_spec);
  require(ctx.two.has_value(), errc::bad_anchors,
          "derivation reports cover two-anchor strings");
  const semilattice_report report = analyze_string_derivations(*ctx.two);
  emit(render_derivations(ctx, report, format), args.out_file);
  return exit_ok;
}

int run_verify(const verify_args& args, std::ostream& diag) {
  const output_format format = parse_format(args.format);
  require(format == output_format::ascii || format == output_format::json,
          errc::bad_format, "verify supports ascii and json");
  const auto [n_lo, n_hi] = parse_n_range(args.n_range);
  check_n(n_hi);
  require(n_lo >= 2, errc::bad_params, "claims need n >= 2");

  std::vector<std::string> ids;
  std::vector<std::string_view> id_views;
  if (args.claims == "all") {
    id_views.assign(claim_ids.begin(), claim_ids.end());
  } else {
    std::size_t pos = 0;
    const std::string& text = args.claims;
    while (pos <= text.size()) {
      const std::size_t next = std::min(text.find(',', pos), text.size());
      ids.push_back(text.substr(pos, next - pos));
      require(is_known_claim(ids.back()), errc::unknown_claim,
              "no claim with id '" + ids.back() + "'");
      if (next == text.size()) break;
      pos = next + 1;
    }
    for (const std::string& id : ids) id_views.push_back(id);
  }

  const std::vector<verification_result> results = run_suite(n_lo, n_hi, id_views);
  emit(render_verify(results, n_lo, n_hi, format), args.out_file);
  if (!all_passed(results)) {
    diag << "verify: " << std::count_if(results.begin(), results.end(),
                                        [](const verification_result& r) {
                                          return r.status == verify_status::fail;
                                        })
         << " claim check(s) failed\n";
    return exit_claim_failure;
  }
  return exit_ok;
}

int run_closure(const closure_args& args, std::ostream& diag) {
  (void)diag;
  check_n(args.n);
  const output_format format = parse_format(args.format);
  require(format != output_format::csv, errc::bad_format,
          "closure supports ascii, json and dot");
  const string_context ctx = parse_string_spec(args.n, args.string_spec);
  const closure_setup setup = parse_derivation_spec(ctx, args.derivation_spec);
  const carrier ideal = parse_ideal_spec(ctx, args.ideal_spec);
  const closure_trace trace = differential_closure_trace(setup.over, ideal, setup.map);
  emit(render_closure(ctx, setup.over, ideal, setup.map.label(), trace, format),
       args.out_file);
  return exit_ok;
}

}  // namespace endochain::cli
