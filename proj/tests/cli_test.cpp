#include <cstdlib>
#include <fstream>
#include <sstream>

#include "commands.hpp"
#include "doctest.h"
#include "json.hpp"
#include "render.hpp"
#include "specparse.hpp"

using namespace endochain;
using namespace endochain::cli;
using nlohmann::json;

namespace {

std::vector<std::vector<std::string>> parse_ascii_cells(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  std::getline(in, line);  // header
  std::getline(in, line);  // separator
  while (std::getline(in, line)) {
    std::istringstream fields(line);
    std::vector<std::string> row;
    std::string tok;
    fields >> tok;  // row label
    while (fields >> tok) row.push_back(tok);
    if (!row.empty()) rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<std::vector<std::string>> parse_csv_cells(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  std::getline(in, line);  // header
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<std::string> row;
    std::size_t pos = 0;
    bool first = true;
    while (pos <= line.size()) {
      const std::size_t next = std::min(line.find(',', pos), line.size());
      if (!first) row.push_back(line.substr(pos, next - pos));
      first = false;
      if (next == line.size()) break;
      pos = next + 1;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("n ranges and spec strings parse") {
  CHECK(parse_n_range("4") == std::pair<int, int>{4, 4});
  CHECK(parse_n_range("2..6") == std::pair<int, int>{2, 6});
  CHECK_THROWS_AS(parse_n_range("6..2"), error);
  CHECK_THROWS_AS(parse_n_range("x"), error);

  const string_context two = parse_string_spec(4, "2,3");
  CHECK(two.two.has_value());
  CHECK(two.label_at(0) == "a_0");
  const string_context multi = parse_string_spec(4, "0,1,2,3");
  CHECK(multi.multi.has_value());
  CHECK(multi.label_at(12) == "a_4_3");
  CHECK_THROWS_AS(parse_string_spec(4, "3"), error);
  CHECK_THROWS_AS(parse_string_spec(4, "1,zebra"), error);
}

TEST_CASE("ideal and derivation specs resolve against the string") {
  const string_context ctx = parse_string_spec(5, "1,3");
  CHECK(parse_ideal_spec(ctx, "{0,n}").size() == 2);
  CHECK(parse_ideal_spec(ctx, "CO").size() == 2);
  CHECK(parse_ideal_spec(ctx, "I:0").size() == 1);
  CHECK_THROWS_AS(parse_ideal_spec(ctx, "I:9"), error);
  CHECK_THROWS_AS(parse_ideal_spec(ctx, "bogus"), error);

  const closure_setup shift = parse_derivation_spec(ctx, "D");
  CHECK(shift.over.size() == 3);  // indices 0..n-b
  const closure_setup dk = parse_derivation_spec(ctx, "delta:2");
  CHECK(dk.over.size() == 6);
  CHECK_THROWS_AS(parse_derivation_spec(ctx, "delta:1,2"), error);

  const string_context full = parse_string_spec(4, "0,1,2,3");
  CHECK(parse_ideal_spec(full, "CO").size() == 4);
  CHECK(parse_derivation_spec(full, "delta:2,3").map.label() == "delta(a_2_3)");
  CHECK_THROWS_AS(parse_derivation_spec(full, "D"), error);
}

TEST_CASE("ascii, csv and json table renderings agree cell for cell") {
  const string_context ctx = parse_string_spec(4, "2,3");
  const op_table table = make_op_table(ctx, "mul");
  const auto ascii = parse_ascii_cells(render_table(ctx, table, output_format::ascii));
  const auto csv = parse_csv_cells(render_table(ctx, table, output_format::csv));
  const json doc = json::parse(render_table(ctx, table, output_format::json));
  REQUIRE(ascii.size() == 5);
  REQUIRE(csv.size() == 5);
  REQUIRE(doc.at("cells").size() == 5);
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j) {
      CHECK(ascii[i][j] == csv[i][j]);
      CHECK(ascii[i][j] == doc.at("cells")[i][j].get<std::string>());
    }
  CHECK(doc.at("schema") == 1);
  CHECK(doc.at("op") == "mul");
}

TEST_CASE("json tables rebuild the carrier bit for bit") {
  for (const char* spec : {"2,3", "0,1,2,3"}) {
    const string_context ctx = parse_string_spec(4, spec);
    const op_table table = make_op_table(ctx, "add");
    const json doc = json::parse(render_table(ctx, table, output_format::json));
    std::vector<endo> rebuilt;
    for (const json& element : doc.at("elements")) {
      std::vector<int> images;
      for (const json& v : element.at("images")) images.push_back(v.get<int>());
      rebuilt.push_back(endo::make(chain(doc.at("n").get<int>()), images));
    }
    CHECK(carrier(chain(4), std::move(rebuilt)) == ctx.elements());
  }
}

TEST_CASE("the pinned full-string product appears in the json table") {
  const string_context ctx = parse_string_spec(4, "0,1,2,3");
  const op_table table = make_op_table(ctx, "mul");
  const json doc = json::parse(render_table(ctx, table, output_format::json));
  const auto& labels = doc.at("labels");
  std::size_t row = 0, col = 0;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] == "a_2_1") row = i;
    if (labels[i] == "a_2_3") col = i;
  }
  CHECK(doc.at("cells")[row][col] == "a_4_2");
  bool found = false;
  for (const json& element : doc.at("elements"))
    if (element.at("label") == "a_4_2") {
      CHECK(element.at("images") == json::array({2, 2, 2, 2}));
      found = true;
    }
  CHECK(found);
}

TEST_CASE("derivation and closure renderings carry the report") {
  const string_context ctx = parse_string_spec(4, "2,3");
  const semilattice_report rep = analyze_string_derivations(*ctx.two);
  const std::string ascii = render_derivations(ctx, rep, output_format::ascii);
  CHECK(ascii.find("identity: delta(a_1)") != std::string::npos);
  CHECK(ascii.find("absorbing: delta(a_2)") != std::string::npos);
  const json doc = json::parse(render_derivations(ctx, rep, output_format::json));
  CHECK(doc.at("identity") == "delta(a_1)");
  CHECK(doc.at("absorbing") == "delta(a_2)");
  CHECK(doc.at("idempotent") == true);
  const std::string dot = render_derivations(ctx, rep, output_format::dot);
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("delta(a_1)") != std::string::npos);
  CHECK_THROWS_AS(render_derivations(ctx, rep, output_format::csv), error);
}

TEST_CASE("commands write files and return stable exit codes") {
  std::ostringstream diag;

  table_args table;
  table.n = 4;
  table.string_spec = "2,3";
  table.op = "mul";
  table.format = "json";
  table.out_file = "table_test_out.json";
  CHECK(run_table(table, diag) == exit_ok);
  const json doc = json::parse(slurp(table.out_file));
  CHECK(doc.at("command") == "table");
  std::remove(table.out_file.c_str());

  verify_args verify;
  verify.claims = "7.4";
  verify.n_range = "4";
  verify.format = "ascii";
  verify.out_file = "verify_test_out.txt";
  CHECK(run_verify(verify, diag) == exit_ok);
  CHECK(slurp(verify.out_file).find("[pass] 7.4") != std::string::npos);
  std::remove(verify.out_file.c_str());

  verify.claims = "5.6";
  verify.n_range = "3";
  verify.out_file = "verify_fail_out.txt";
  CHECK(run_verify(verify, diag) == exit_claim_failure);
  std::remove(verify.out_file.c_str());

  verify.claims = "9.9";
  CHECK_THROWS_AS(run_verify(verify, diag), error);

  closure_args closure;
  closure.n = 5;
  closure.string_spec = "1,3";
  closure.ideal_spec = "I:0";
  closure.derivation_spec = "D";
  closure.format = "json";
  closure.out_file = "closure_test_out.json";
  CHECK(run_closure(closure, diag) == exit_ok);
  const json cdoc = json::parse(slurp(closure.out_file));
  CHECK(cdoc.at("closure").size() == 3);
  std::remove(closure.out_file.c_str());

  table.format = "dot";
  CHECK_THROWS_AS(run_table(table, diag), error);
}

TEST_CASE("the chain-size cap comes from the environment") {
  CHECK(max_chain_size() == 12);
  setenv("CHAIN_SEMIRING_MAX_N", "14", 1);
  CHECK(max_chain_size() == 14);
  unsetenv("CHAIN_SEMIRING_MAX_N");
  CHECK(max_chain_size() == 12);

  std::ostringstream diag;
  table_args table;
  table.n = 13;
  table.string_spec = "0,1";
  CHECK_THROWS_AS(run_table(table, diag), error);
}

}  // TEST_SUITE
