#include <gtest/gtest.h>

#include <vector>

#include "alf/expr.hpp"

namespace {

namespace ex = alf::expr;
const std::vector<std::string> kXY{"x", "y"};

std::int64_t at(const ex::Expr& e, std::vector<std::int64_t> v, const ex::Expr& fn = nullptr) {
  return ex::eval(*e, v, fn.get());
}

TEST(Expr, ParsePrintRoundTrip) {
  for (const char* src : {"(+ x 2)", "(ite (>= x 0) x (- 0 x))", "(and (<= x 10) (= (mod x 2) 0))",
                          "(or (< x y) (not (> y 3)))", "true", "false", "(- x -3)"}) {
    const auto e = ex::parse(src, kXY);
    EXPECT_EQ(ex::print(*e, kXY), src);
    EXPECT_TRUE(ex::equal(*ex::parse(ex::print(*e, kXY), kXY), *e));
  }
}

TEST(Expr, UnaryMinusIsSubtractionFromZero) {
  const auto e = ex::parse("(- x)", kXY);
  EXPECT_EQ(ex::print(*e, kXY), "(- 0 x)");
  EXPECT_EQ(at(e, {5, 0}), -5);
}

TEST(Expr, EvaluationSemantics) {
  EXPECT_EQ(at(ex::plus(ex::var(0), ex::constant(2)), {3}), 5);
  const auto abs = ex::ite(ex::geq(ex::var(0), ex::constant(0)), ex::var(0),
                           ex::minus(ex::constant(0), ex::var(0)));
  EXPECT_EQ(at(abs, {-4}), 4);
  EXPECT_EQ(at(ex::var(0), {0}), 0);
  // Mathematical modulus: the result is in [0, k).
  EXPECT_EQ(at(ex::mod(ex::var(0), 3), {-1}), 2);
  EXPECT_EQ(at(ex::parse("(and (<= x 3) (>= y 1))", kXY), {3, 1}), 1);
  EXPECT_EQ(at(ex::parse("(and (<= x 3) (>= y 1))", kXY), {4, 1}), 0);
}

TEST(Expr, ApplicationsEvaluateTheUnknownFunction) {
  const auto spec = ex::parse("(>= (f x y) (+ x y))", kXY, {"f"});
  const auto sum = ex::plus(ex::var(0), ex::var(1));
  EXPECT_EQ(at(spec, {2, 3}, sum), 1);
  EXPECT_EQ(at(spec, {2, 3}, ex::var(0)), 0);
  EXPECT_EQ(ex::app_arity(*spec), 2);
  EXPECT_EQ(ex::app_arity(*sum), -1);
  EXPECT_THROW(ex::app_arity(*ex::parse("(= (f x) (f x y))", kXY, {"f"})), ex::ParseError);
}

TEST(Expr, SizeCountsConditionNodes) {
  EXPECT_EQ(ex::size(*ex::parse("x", kXY)), 1u);
  EXPECT_EQ(ex::size(*ex::parse("(ite (>= x 0) x (- 0 x))", kXY)), 8u);
  EXPECT_EQ(ex::var_bound(*ex::parse("(+ y 1)", kXY)), 2u);
  EXPECT_EQ(ex::var_bound(*ex::parse("3", kXY)), 0u);
}

TEST(Expr, Substitute) {
  const auto e = ex::parse("(<= (+ x y) 4)", kXY);
  std::vector<ex::Expr> repl{ex::parse("(+ x 2)", kXY), ex::parse("y", kXY)};
  EXPECT_EQ(ex::print(*ex::substitute(e, repl), kXY), "(<= (+ (+ x 2) y) 4)");
}

TEST(Expr, StructuralOrderIsStrict) {
  const auto a = ex::parse("x", kXY);
  const auto b = ex::parse("(+ x 1)", kXY);
  EXPECT_TRUE(ex::structural_less(*a, *b));
  EXPECT_FALSE(ex::structural_less(*b, *a));
  EXPECT_FALSE(ex::structural_less(*a, *a));
}

TEST(Expr, ParseErrors) {
  EXPECT_THROW(ex::parse("(+ x", kXY), ex::ParseError);
  EXPECT_THROW(ex::parse("(+ x z)", kXY), ex::ParseError);
  EXPECT_THROW(ex::parse("(frob x)", kXY), ex::ParseError);
  EXPECT_THROW(ex::parse("(mod x 0)", kXY), ex::ParseError);
  EXPECT_THROW(ex::parse("(mod x y)", kXY), ex::ParseError);
  EXPECT_THROW(ex::parse("(+ (<= x 1) 2)", kXY), ex::ParseError);
  EXPECT_THROW(ex::parse("(and x y)", kXY), ex::ParseError);
  EXPECT_THROW(ex::parse("(f x)", kXY), ex::ParseError);  // applications disabled
  EXPECT_THROW(ex::parse("x y", kXY), ex::ParseError);
}

}  // namespace
