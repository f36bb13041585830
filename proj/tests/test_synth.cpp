#include <gtest/gtest.h>

#include <memory>

#include "alf/synth.hpp"
#include "fixtures.hpp"

namespace {

using namespace alf;
using fixtures::px;

TEST(Synth, EvalAndSpec) {
  const auto spec = fixtures::abs_spec();
  const auto e = px("(ite (>= x 0) x (- 0 x))");
  EXPECT_EQ(eval_expr(e, Point{-3}), 3);
  EXPECT_EQ(eval_expr(px("(+ x 2)"), Point{4}), 6);
  EXPECT_TRUE(spec_holds(spec, e, Point{-5}));
  EXPECT_FALSE(spec_holds(spec, px("x"), Point{-5}));
  EXPECT_TRUE(spec_holds(spec, px("x"), Point{5}));
  EXPECT_TRUE(grounded_consistent(spec, px("x"), GroundedSample{{{0}, {3}}}));
  EXPECT_FALSE(grounded_consistent(spec, px("x"), GroundedSample{{{0}, {-3}}}));
}

TEST(Synth, ValidateRejectsBadSpecs) {
  EXPECT_THROW(make_spec({{"x", 0, 3}}, "(+ (f x) 1)"), std::invalid_argument);
  EXPECT_THROW(make_spec({{"x", 0, 3}}, "(= (f x x) 1)"), std::invalid_argument);
  EXPECT_THROW(make_spec({{"x", 0, 3}}, "(= (f y) 1)"), expr::ParseError);
}

TEST(CegisTeacher, Examples) {
  const auto spec = fixtures::abs_spec();
  EXPECT_EQ(std::get<Feedback<GroundedSample>>(cegis_teacher(spec, px("x"))).sample,
            (GroundedSample{{{-8}}}));
  EXPECT_EQ(std::get<Feedback<GroundedSample>>(cegis_teacher(spec, px("(- 0 x)"))).sample,
            (GroundedSample{{{1}}}));
  EXPECT_TRUE(accepted(cegis_teacher(spec, px("(ite (>= x 0) x (- 0 x))"))));
  const auto empty = make_spec({{"x", 1, 0}}, "(= (f x) 7)");
  EXPECT_TRUE(accepted(cegis_teacher(empty, px("x"))));
}

TEST(Enumerator, BaseOrderAndCounts) {
  ExprEnumerator en(1, {0, 1});
  const auto& one = en.of_size(1);
  ASSERT_EQ(one.size(), 3u);
  EXPECT_EQ(expr::print(*one[0], fixtures::kX), "x");
  EXPECT_EQ(expr::print(*one[1], fixtures::kX), "0");
  EXPECT_EQ(expr::print(*one[2], fixtures::kX), "1");
  EXPECT_TRUE(en.of_size(2).empty());
  // Plus and Minus over 3 x 3 leaf pairs.
  const auto& three = en.of_size(3);
  ASSERT_EQ(three.size(), 18u);
  EXPECT_EQ(expr::print(*three[0], fixtures::kX), "(+ x x)");
  EXPECT_EQ(expr::print(*three[9], fixtures::kX), "(- x x)");
  for (std::size_t s = 1; s <= 6; ++s)
    for (const auto& e : en.of_size(s)) EXPECT_EQ(expr::size(*e), s);
}

void converge_and_sweep(const SynthSpec& spec, const char* expected) {
  auto en = std::make_shared<ExprEnumerator>(spec.arity(), spec.constants);
  const auto t = run_instance<GroundedSample, expr::Expr>(
      grounded_lattice(), [&](const GroundedSample& s) { return synth_learn(spec, en, s, Rank{12}); },
      [&](const expr::Expr& e) { return cegis_teacher(spec, e); }, GroundedSample{}, 100);
  const auto& c = std::get<Converged<expr::Expr>>(t.outcome);
  const auto names = spec.input_names();
  EXPECT_EQ(expr::print(*c.hypothesis, names), expected);
  EXPECT_TRUE(accepted(cegis_teacher(spec, c.hypothesis)));
  const std::size_t sz = expr::size(*c.hypothesis);
  for (std::size_t s = 1; s < sz; ++s)
    for (const auto& e : en->of_size(s))
      ASSERT_FALSE(accepted(cegis_teacher(spec, e))) << expr::print(*e, names);
}

TEST(SynthLoop, AbsIsSizeMinimal) { converge_and_sweep(fixtures::abs_spec(), "(ite (>= x 0) x (- 0 x))"); }

TEST(SynthLoop, MaxIsSizeMinimal) { converge_and_sweep(fixtures::max_spec(), "(ite (>= x y) x y)"); }

TEST(SynthLearn, CapAndOrdering) {
  const auto spec = fixtures::abs_spec();
  auto en = std::make_shared<ExprEnumerator>(1, spec.constants);
  const auto out = synth_learn(spec, en, GroundedSample{{{-1}, {1}, {3}}}, Rank{3});
  EXPECT_TRUE(std::holds_alternative<CapExhausted>(out));
  const auto ord = expr_ordering(en);
  EXPECT_FALSE(ord.exhaustive);
  auto next = ord.stream();
  Rank prev{0};
  for (int i = 0; i < 500; ++i) {
    const auto e = next();
    ASSERT_TRUE(e);
    EXPECT_FALSE(ord.rank(*e) < prev);
    prev = ord.rank(*e);
  }
}

}  // namespace
