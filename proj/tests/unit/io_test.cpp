#include <doctest.h>

#include "starlight/constructions.hpp"
#include "starlight/io.hpp"

using namespace starlight;

namespace {

const char* kOrderSix =
    "ESS 1 e=3 n=6 blocks=5\n"
    "1: 3 5 6\n"
    "2: 1 3 6\n"
    "4: 1 2 3\n"
    "5: 2 3 4\n"
    "6: 3 4 5\n";

}  // namespace

TEST_CASE("system files round-trip byte for byte") {
  auto sys = parse_system(kOrderSix);
  CHECK(sys.size() == 5);
  CHECK(serialize_system(sys) == kOrderSix);
  CHECK(sys == build_equitable_3star(6).system);
}

TEST_CASE("comments and blank lines are skipped, leaves are sorted") {
  auto sys = parse_system("# hand written\nESS 1 e=2 n=4 blocks=3\n\n1: 3 2\n# mid\n3: 4 2\n4: 1 2\n");
  CHECK(sys.star(0) == Star{1, {2, 3}});
  CHECK(validate_decomposition(sys).ok);
}

TEST_CASE("malformed system files") {
  CHECK_THROWS_AS(parse_system(""), ParseError);
  CHECK_THROWS_AS(parse_system("ESS 2 e=3 n=6 blocks=0\n"), ParseError);
  CHECK_THROWS_AS(parse_system("ESS 1 e=3 n=6\n"), ParseError);
  CHECK_THROWS_AS(parse_system("ESS 1 e=3 n=6 blocks=1\n"), ParseError);
  CHECK_THROWS_AS(parse_system("ESS 1 e=3 n=6 blocks=1\n1: 2 3\n"), ParseError);
  CHECK_THROWS_AS(parse_system("ESS 1 e=3 n=6 blocks=1\n1: 2 3 9\n"), ParseError);
  CHECK_THROWS_AS(parse_system("ESS 1 e=3 n=6 blocks=1\n1 2 3 4\n"), ParseError);
  CHECK_THROWS_AS(parse_system("ESS 1 e=3 n=6 blocks=1\n1: 2 3 x\n"), ParseError);
  CHECK_THROWS_AS(parse_system("ESS 1 e=3 n=6 blocks=1\n1: 2 3 4\n2: 3 4 5\n"), ParseError);
  CHECK_THROWS_AS(parse_system("ESS 1 e=3 n=6 blocks=1\r\n1: 2 3 4\r\n"), ParseError);
  try {
    parse_system("ESS 1 e=3 n=6 blocks=2\n1: 2 3 4\n1: 1 3 4\n");
    FAIL("expected a parse error");
  } catch (const ParseError& ex) {
    CHECK(ex.line == 3);
  }
}

TEST_CASE("colouring files") {
  Colouring c(3, std::vector<int>{1, 2, 3, 1});
  auto text = serialize_colouring(c);
  CHECK(text == "COL 1 n=4 k=3\n1 1\n2 2\n3 3\n4 1\n");
  CHECK(parse_colouring(text) == c);
  CHECK_THROWS_AS(parse_colouring("COL 1 n=2 k=2\n1 1\n"), ParseError);
  CHECK_THROWS_AS(parse_colouring("COL 1 n=2 k=2\n1 1\n1 2\n"), ParseError);
  CHECK_THROWS_AS(parse_colouring("COL 1 n=2 k=2\n1 1\n2 3\n"), ParseError);
}

TEST_CASE("claims and JSON export") {
  auto r = build_strong_2chromatic(4);
  auto text = serialize_claims(r.claims);
  auto back = parse_claims(text);
  CHECK(back.k == 2);
  CHECK(back.strongly_equitable);
  CHECK(back.provenance == r.claims.provenance);
  CHECK(back.params == r.claims.params);
  CHECK_THROWS_AS(parse_claims("{\"k\": 2}"), ParseError);

  auto doc = export_json(r.system, r.claims);
  CHECK(doc.find("\"blocks\":[[1,[3,5,6,8]]") != std::string::npos);
  CHECK(doc.find("\"format\":\"ESS\"") != std::string::npos);
  CHECK(export_json(r.system).find("claims") == std::string::npos);
}
