#include <catch2/catch_amalgamated.hpp>

#include "test_support.hpp"

using namespace projew::exactmath;
using namespace projew::exprparse;
using projew::ParseError;
using testsupport::Rng;

namespace {
const MPoly X = MPoly::variable(0);
const MPoly Y = MPoly::variable(1);

std::size_t offset_of(const std::string& src) {
  try {
    parse_expr(src);
  } catch (const ParseError& e) {
    return e.offset();
  }
  FAIL("expected ParseError for: " + src);
  return SIZE_MAX;
}
}  // namespace

TEST_CASE("parse_expr basics", "[parser]") {
  CHECK(parse_expr("x*y") == RatFunc(X * Y));
  CHECK(parse_expr("-x^2/6") == RatFunc(X.pow(2) * make_rational(-1, 6)));
  CHECK(parse_expr("(x+y)^0") == RatFunc(1));
  CHECK(parse_expr("3/4") == RatFunc(make_rational(3, 4)));
  CHECK(parse_expr("1 + 2*3") == RatFunc(7));
  CHECK(parse_expr("1/2/2") == RatFunc(make_rational(1, 4)));
  CHECK(parse_expr("2^3^2") == RatFunc(64));  // chained powers associate left
  CHECK(parse_expr("--x") == RatFunc(X));
  CHECK(parse_expr(" ( x + y ) * ( x - y ) ") == RatFunc(X * X - Y * Y));
  CHECK(parse_expr("x/y") == RatFunc(X, Y));
  CHECK(parse_expr("1/(x - x + 1)") == RatFunc(1));
}

TEST_CASE("parse_expr with custom variable names", "[parser]") {
  VarNames uv{"u", "v"};
  CHECK(parse_expr("u*v", uv) ==
        RatFunc(MPoly::variable(0, uv) * MPoly::variable(1, uv)));
  CHECK_THROWS_AS(parse_expr("x", uv), ParseError);
}

TEST_CASE("parse_expr errors carry byte offsets", "[parser]") {
  CHECK(offset_of("xy") == 0);          // implicit multiplication is not a thing
  CHECK(offset_of("x + ") == 4);
  CHECK(offset_of("x ^ -1") == 4);      // negative exponent
  CHECK(offset_of("x^(2)") == 2);       // parenthesized exponent
  CHECK(offset_of("(x") == 2);
  CHECK(offset_of("x ) ") == 2);        // trailing input
  CHECK(offset_of("x/(y - y)") == 1);   // division by identically zero
  CHECK(offset_of("") == 0);
  CHECK(offset_of("x + $") == 4);
}

TEST_CASE("parse round-trip on fuzzed expressions", "[parser]") {
  Rng rng(20260811);
  int checked = 0;
  for (int iter = 0; iter < 200; ++iter) {
    std::string src = testsupport::random_expr_source(rng);
    RatFunc first;
    try {
      first = parse_expr(src);
    } catch (const ParseError&) {
      FAIL("fuzzed source should be valid: " + src);
    }
    CHECK(parse_expr(first.to_string()) == first);
    ++checked;
  }
  CHECK(checked == 200);
}

TEST_CASE("fuzzed invalid inputs fail with positioned errors", "[parser]") {
  Rng rng(999);
  const std::string junk = "!@#$%&)(^*/+-";
  for (int iter = 0; iter < 200; ++iter) {
    std::string src = testsupport::random_expr_source(rng, 2);
    // splice random junk into a valid expression
    std::size_t pos = static_cast<std::size_t>(
        rng.uniform(0, static_cast<long>(src.size())));
    src.insert(pos, 1, junk[static_cast<std::size_t>(rng.uniform(
                       0, static_cast<long>(junk.size()) - 1))]);
    try {
      RatFunc r = parse_expr(src);
      (void)r;  // some splices still parse (e.g. inserted '-')
    } catch (const ParseError& e) {
      CHECK(e.offset() <= src.size());
    }
  }
}

TEST_CASE("structure documents parse to connections", "[parser]") {
  ChartConnection conn = parse_structure(
      R"({"variables": ["x", "y"],
          "connection": {"1_22": "x*y", "2_11": "-y"}})");
  CHECK(conn.pi(0, 1, 1) == RatFunc(X * Y));
  CHECK(conn.pi(1, 0, 0) == RatFunc(-Y));
  CHECK(conn.pi(0, 0, 0).is_zero());
  CHECK(conn.pi(0, 0, 1).is_zero());

  ChartConnection flat = parse_structure(R"({"connection": {}})");
  CHECK(flat == ChartConnection{});

  // one index order mirrors into the other
  ChartConnection sym = parse_structure(R"({"connection": {"1_12": "x"}})");
  CHECK(sym.pi(0, 0, 1) == RatFunc(X));
  CHECK(sym.pi(0, 1, 0) == RatFunc(X));
}

TEST_CASE("structure documents validate", "[parser]") {
  CHECK_THROWS_AS(parse_structure("not json"), ParseError);
  CHECK_THROWS_AS(parse_structure("[1,2]"), ParseError);
  CHECK_THROWS_AS(parse_structure(R"({"connexion": {}})"), ParseError);
  CHECK_THROWS_AS(parse_structure(R"({"connection": {"3_11": "x"}})"),
                  ParseError);
  CHECK_THROWS_AS(parse_structure(R"({"connection": {"1_11": 5}})"),
                  ParseError);
  CHECK_THROWS_AS(parse_structure(R"({"variables": ["x"], "connection": {}})"),
                  ParseError);
  CHECK_THROWS_AS(
      parse_structure(R"({"variables": ["x", "x"], "connection": {}})"),
      ParseError);
  // torsion symmetry violation
  CHECK_THROWS_AS(parse_structure(
                      R"({"connection": {"1_12": "x", "1_21": "y"}})"),
                  ParseError);
  // equal expressions for both orders are fine
  CHECK_NOTHROW(parse_structure(
      R"({"connection": {"1_12": "x + x", "1_21": "2*x"}})"));
  // expression errors point into the offending entry
  CHECK_THROWS_AS(parse_structure(R"({"connection": {"1_11": "x*"}})"),
                  ParseError);
}

TEST_CASE("structure docs with custom variables", "[parser]") {
  ChartConnection conn = parse_structure(
      R"({"variables": ["u", "v"], "connection": {"2_12": "u^2"}})");
  VarNames uv{"u", "v"};
  CHECK(conn.pi(1, 0, 1) == RatFunc(MPoly::variable(0, uv).pow(2)));
  CHECK(conn.vars() == uv);
}
