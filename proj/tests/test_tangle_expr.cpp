#include "helpers.hpp"

#include "pln/error.hpp"
#include "pln/tangle_expr.hpp"

#include <catch_amalgamated.hpp>

using namespace pln;
using pln::test::context;

namespace {

const std::map<std::string, Color> two{{"x", Color::of(2)}, {"y", Color::of(2)}, {"z", Color::of(3)}};

std::size_t error_position(const std::string& text) {
  try {
    parse_expr(text, two);
  } catch (const ParseError& e) {
    return e.position();
  }
  FAIL("no parse error for " << text);
  return 0;
}

}  // namespace

TEST_CASE("parsing and colour inference", "[dsl]") {
  auto e = parse_expr("mult(x, x)", two);
  CHECK(e->kind == Expr::Kind::mult);
  CHECK(e->color == Color::of(2));
  CHECK(parse_expr("condE(incl(x))", two)->color == Color::of(2));
  CHECK(parse_expr("condE(condE(x))", two)->color == Color::plus0());
  CHECK(parse_expr("condEm(condE(x))", two)->color == Color::minus0());
  CHECK(parse_expr("incl(unit(0-))", two)->color == Color::of(1));
  CHECK(parse_expr("jones/d(4)", two)->normalized);
  CHECK(parse_expr("condE1/d(z)", two)->color == Color::of(3));
  CHECK(parse_expr("mult(x, jones(2), y)", two)->args.size() == 3);
  CHECK_THROWS_AS(parse_expr("mult(x, z)", two), ColorMismatch);
  CHECK_THROWS_AS(parse_expr("condE(unit(0+))", two), ColorMismatch);
  CHECK_THROWS_AS(parse_expr("condEm(x)", two), ColorMismatch);
  CHECK_THROWS_AS(parse_expr("condE1(unit(0-))", two), ColorMismatch);
}

TEST_CASE("parse errors carry positions", "[dsl]") {
  CHECK(error_position("mult(x,") == 7);
  CHECK(error_position("incl(w)") == 5);
  CHECK(error_position("frob(x)") == 0);
  CHECK(error_position("mult(x)") == 0);
  CHECK(error_position("incl(x, y)") == 0);
  CHECK_THROWS_AS(parse_expr("jones(1)", two), ColorMismatch);
  CHECK(error_position("x y") == 2);
  CHECK(error_position("unit(7+)") == 5);
  CHECK(error_position("incl/d(x)") == 0);
}

TEST_CASE("print and parse round trip", "[dsl]") {
  CHECK(print_expr(*parse_expr(" mult( x ,condE( incl(x)) ) ", two)) == "mult(x, condE(incl(x)))");
  CHECK(print_expr(*parse_expr("condE/d(z)", two)) == "condE/d(z)");
  std::mt19937_64 rng(99);
  for (int t = 0; t < 300; ++t) {
    std::map<std::string, Color> vars;
    Color out = Color::of(1 + static_cast<int>(rng() % 4));
    RandomExprOptions opt;
    opt.max_depth = 1 + static_cast<int>(rng() % 5);
    auto e = random_expr(rng, out, opt, vars);
    CHECK(e->color == out);
    CHECK(expr_depth(*e) <= static_cast<std::size_t>(opt.max_depth));
    auto again = parse_expr(print_expr(*e), vars);
    REQUIRE(*again == *e);
  }
  CHECK(expr_depth(*parse_expr("x", two)) == 0);
  CHECK(expr_depth(*parse_expr("incl(condE(x))", two)) == 2);
}

TEST_CASE("batch files", "[dsl]") {
  auto lines = batch_lines("# header\n\nmult(x, x)\n  condE(z)  # trailing\n   \n");
  CHECK(lines == std::vector<std::string>{"mult(x, x)", "condE(z)"});
}

TEST_CASE("evaluation in both models", "[dsl]") {
  const auto& ctx = context("S3:S2");
  const auto& mm = ctx.matrices();
  const auto& pa = ctx.loops();
  std::map<std::string, MatrixElement> mb;
  std::map<std::string, PAElement> lb;
  for (const auto& [name, col] : two) {
    auto x = ctx.commutant_element(col, 1);
    mb.emplace(name, x);
    lb.emplace(name, ctx.phi(x));
  }
  auto u = parse_expr("unit(3)", two);
  CHECK(evaluate(*u, mb, mm) == mm.unit(Color::of(3)));
  CHECK(evaluate(*u, lb, pa) == pa.unit(Color::of(3)));
  auto j = parse_expr("jones/d(2)", two);
  CHECK(ctx.phi(evaluate(*j, mb, mm)) == evaluate(*j, lb, pa));
  for (const char* text : {"mult(x, y, x)", "condE(incl(x))", "condE1/d(mult(z, incl(y)))",
                           "condEm(condE(mult(x, jones(2))))", "incl(condE/d(z))"}) {
    INFO(text);
    auto e = parse_expr(text, two);
    CHECK(ctx.phi(evaluate(*e, mb, mm)) == evaluate(*e, lb, pa));
  }
  CHECK_THROWS_AS(evaluate(*parse_expr("x", two), std::map<std::string, PAElement>{}, pa), Error);
}
