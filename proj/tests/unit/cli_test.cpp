#include <doctest.h>

#include <random>
#include <sstream>

#include "../fixtures.hpp"
#include "../oracles.hpp"
#include "semi/cli/app.hpp"
#include "semi/cli/document.hpp"
#include "semi/cli/table_io.hpp"

using namespace semi;
using namespace semi::cli;

namespace {

ParseErrorKind parse_kind(std::string_view text) {
  try {
    parse_table(text);
  } catch (const ParseError& e) {
    return e.kind();
  }
  FAIL("no parse error");
  return ParseErrorKind::Io;
}

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_args(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("parse examples") {
  CHECK(parse_table("2\n0 0\n1 1") == fixtures::l2());
  const auto c2 = parse_table("# group\n  # indented comment\n2\n0 1\n1 0\n");
  CHECK(c2 == fixtures::c2());
  CHECK(c2.is_semigroup());
  CHECK(parse_table("2 0 1 1 0") == fixtures::c2());
  const auto bad = parse_table("2\n1 0\n0 0\n");
  CHECK(bad.associativity() == AssocStatus::Invalid);
}

TEST_CASE("parse diagnostics") {
  try {
    parse_table("2\n0 2\n1 1", "t");
    FAIL("expected an error");
  } catch (const ParseError& e) {
    CHECK(e.kind() == ParseErrorKind::OutOfRange);
    CHECK(e.line() == 2);
    CHECK(e.column() == 3);
    CHECK(std::string(e.what()) == "t:2:3: entry 2 at row 0, col 1 is outside [0, 2)");
  }
  CHECK(parse_kind("") == ParseErrorKind::MissingOrder);
  CHECK(parse_kind("# only a comment\n") == ParseErrorKind::MissingOrder);
  CHECK(parse_kind("0\n") == ParseErrorKind::ZeroOrder);
  CHECK(parse_kind("two\n") == ParseErrorKind::MalformedToken);
  CHECK(parse_kind("2\n0 1x\n1 0") == ParseErrorKind::MalformedToken);
  CHECK(parse_kind("2\n0 1\n1") == ParseErrorKind::WrongCount);
  CHECK(parse_kind("2\n0 1\n1 0 1") == ParseErrorKind::WrongCount);
  CHECK(parse_kind("2\n0 -1\n1 0") == ParseErrorKind::OutOfRange);
  CHECK(parse_kind("5000\n") == ParseErrorKind::OrderTooLarge);
  CHECK(parse_kind("99999999999999999999999\n") == ParseErrorKind::OrderTooLarge);
  CHECK_THROWS_AS(parse_table_file("/nonexistent/table.tbl"), ParseError);
}

TEST_CASE("text round trip") {
  std::mt19937_64 rng(43);
  for (int round = 0; round < 50; ++round) {
    const auto t = oracle::to_table(oracle::random_semigroup(rng, 20));
    const auto text = std::to_string(t.order()) + "\n" + t.to_string();
    CHECK(parse_table(text) == t);
  }
}

TEST_CASE("document round trip and stability") {
  std::mt19937_64 rng(47);
  std::vector<CayleyTable> tables{fixtures::l2(), fixtures::c2(), fixtures::rb4(),
                                  fixtures::rg4(),
                                  CayleyTable::from_rows({{1, 0}, {0, 0}})};
  for (int round = 0; round < 30; ++round) {
    tables.push_back(oracle::to_table(oracle::random_semigroup(rng, 10)));
  }
  for (const auto& t : tables) {
    for (bool with_factors : {false, true}) {
      const auto doc = analyze(t, with_factors);
      const auto text = dump(doc);
      CHECK(from_json(nlohmann::json::parse(text)) == doc);
      CHECK(dump(analyze(t, with_factors)) == text);
    }
  }
}

TEST_CASE("digest depends on content") {
  CHECK(table_digest(fixtures::l2()) != table_digest(fixtures::r2()));
  CHECK(table_digest(fixtures::l2()).rfind("fnv1a64:", 0) == 0);
}

TEST_CASE("run: enumerate") {
  auto r = run_args({"enumerate", "--order", "3", "--count-only"});
  CHECK(r.code == 0);
  CHECK(r.out == "113\n");
  r = run_args({"enumerate", "--order", "2", "--check-theorems"});
  CHECK(r.code == 0);
  CHECK(r.out.find("order 2: 8 semigroups") != std::string::npos);
  CHECK(r.out.find("0 violations") != std::string::npos);
  CHECK(run_args({"enumerate", "--order", "5"}).code == kExitUsage);
  CHECK(run_args({"enumerate", "--order", "9"}).code == kExitUsage);
}

TEST_CASE("run: usage errors") {
  CHECK(run_args({}).code == kExitUsage);
  CHECK(run_args({"frobnicate"}).code == kExitUsage);
  CHECK(run_args({"validate"}).code == kExitUsage);
  CHECK(run_args({"validate", "/nonexistent.tbl"}).code == kExitUsage);
  CHECK(run_args({"--help"}).code == kExitOk);
}
