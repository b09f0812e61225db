#include "doctest.h"

#include "superw/expression.hpp"

using namespace superw;

namespace {

Value eval(const std::string& src, int n = 2) {
  auto w = WhittakerData::queer(n);
  Evaluator ev(w);
  return ev.evaluate(*parse_expression(src, n));
}

}  // namespace

TEST_CASE("parse tree shape") {
  auto e = parse_expression("e(1,2)*f(2,1) - 2", 2);
  REQUIRE(e->kind == Expr::Kind::Sub);
  CHECK(e->args[0]->kind == Expr::Kind::Mul);
  CHECK(e->args[1]->kind == Expr::Kind::Number);
  CHECK(e->args[1]->value == Rational(2));
  CHECK(e->args[0]->args[0]->indices == std::vector<int>{1, 2});

  auto nested = parse_expression("theta(pi(sergeev_e(2,1,3)))", 2);
  CHECK(nested->name == "theta");
  CHECK(nested->args[0]->name == "pi");
  CHECK(nested->args[0]->args[0]->indices == std::vector<int>{2, 1, 3});

  auto prec = parse_expression("1 + 2*3 - -e(1,1)", 2);
  CHECK(prec->kind == Expr::Kind::Sub);
  CHECK(prec->args[0]->args[1]->kind == Expr::Kind::Mul);
  CHECK(prec->args[1]->kind == Expr::Kind::Neg);
}

TEST_CASE("parse errors carry positions") {
  auto position = [](const std::string& src, int n) -> std::pair<int, int> {
    try {
      parse_expression(src, n);
    } catch (const ParseError& e) {
      return {e.line(), e.column()};
    }
    return {0, 0};
  };
  CHECK(position("e(5,1)", 2) == std::pair{1, 3});
  CHECK(position("e(1,1) +\n  g(1)", 2) == std::pair{2, 3});
  CHECK(position("e(1,1", 2).first == 1);
  CHECK(position("", 2) == std::pair{1, 1});
  CHECK(position("sergeev_e(1,1,0)", 2) == std::pair{1, 15});
  CHECK(position("e(1,1) )", 2) == std::pair{1, 8});
  CHECK(position("bracket(e(1,1))", 2).first == 1);
  CHECK(position("e(1,2,3)", 2).first == 1);
  CHECK(position("1/0", 2) == std::pair{1, 1});
  CHECK(position("e(1,1)", 0) == std::pair{1, 1});
  CHECK_THROWS_AS(parse_expression("phi(-1)", 2), ParseError);
}

TEST_CASE("render round trip") {
  const char* corpus[] = {
      "e(1,2)*f(2,1) - 2",
      "theta(pi(sergeev_e(2,1,3)))",
      "1/2*e(1,1)*e(1,1) + (e(1,2) - f(1,1))*(e(2,2) + 3)",
      "-(e(1,1)*e(2,2)) - -e(1,2)",
      "e(1,1) - (e(2,2) - e(1,2))",
      "bracket(pi(e(1,1)), phi(1)) + top(pi(sergeev_f(2,1,3)))",
      "theta(pi(central(1))) - x(1)*xi(2)",
      "e(1,1) - (e(2,2) + f(1,1))*(2 - e(1,2))",
      "((e(1,1)))",
  };
  for (const char* src : corpus) {
    auto e = parse_expression(src, 2);
    std::string text = render(*e);
    auto again = parse_expression(text, 2);
    CHECK_MESSAGE(*e == *again, src << " -> " << text);
    CHECK(render(*again) == text);
  }
  CHECK(render(*parse_expression("  e( 1 , 2 )*( 1/2 )", 2)) == "e(1,2)*1/2");
  auto named = parse_expression("gen(theta)*gen(X) - 1", 0);
  CHECK(render(*named) == "gen(theta)*gen(X) - 1");
}

TEST_CASE("evaluation") {
  // ½(x1²+x2²) + ξ1ξ2 + ½(x1+x2)² − (x1+x2) at n = 2
  CHECK(eval("theta(pi(sergeev_e(2,1,3)))").str() == "x(1)^2 + x(1)*x(2) + x(2)^2 + xi(1)*xi(2) - x(1) - x(2)");
  CHECK(eval("theta(pi(sergeev_e(2,1,3))) - (1/2*(x(1)*x(1) + x(2)*x(2)) + xi(1)*xi(2) + 1/2*(x(1) + x(2))*(x(1) + x(2)) - x(1) - x(2))")
            .str() == "0");
  CHECK(eval("pi(e(2,1))").str() == "1");
  CHECK(eval("pi(e(1,1)*e(2,1))").str() == "e(1,1)");
  CHECK(eval("pi(sergeev_e(2,1,2)) - pi(e(1,1) + e(2,2))").str() == "0");
  CHECK(eval("bracket(e(1,2), e(2,1))").str() == "e(1,1) - e(2,2)");
  CHECK(eval("bracket(f(1,1), f(1,1))").str() == "2*e(1,1)");
  CHECK(eval("theta(phi(1))").str() == "-x(1)*xi(2) + x(2)*xi(1)");
  CHECK(eval("top(pi(sergeev_f(2,1,2)))").str() == "f(1,1) - f(2,2)");
  CHECK(eval("2*3 - 1/2").str() == "11/2");
  CHECK_THROWS_AS(eval("theta(e(1,1))"), ParseError);
  CHECK_THROWS_AS(eval("pi(e(1,1)) + e(1,1)"), ParseError);
  CHECK_THROWS_AS(eval("pi(x(1))"), ParseError);

  auto osp = WhittakerData::osp12();
  Evaluator ev(osp);
  CHECK(ev.evaluate(*parse_expression("pi(gen(theta)*gen(theta))", 0)).str() == "1/2");
  CHECK_THROWS_AS(ev.evaluate(*parse_expression("gen(nope)", 0)), ParseError);
}
