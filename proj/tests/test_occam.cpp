#include <gtest/gtest.h>

#include <memory>

#include "alf/boxes.hpp"
#include "alf/occam.hpp"
#include "alf/synth.hpp"

namespace {

using namespace alf;

TEST(OccamLearn, IntervalExampleFromTheWorkedSample) {
  const PNSample s{{{-2}, {5}}, {{-8}}};
  const auto out = occam_learn(interval_ordering(), interval_consistent, s, Rank{100});
  ASSERT_TRUE(std::holds_alternative<Proposal<Interval>>(out));
  EXPECT_EQ(to_string(std::get<Proposal<Interval>>(out).hypothesis), "[-2, inf]");
}

TEST(OccamLearn, IdentitySpecYieldsTheVariable) {
  const auto spec = make_spec({{"x", 0, 1}}, "(= (f x) x)");
  auto en = std::make_shared<ExprEnumerator>(1, std::vector<Coord>{0, 1});
  const GroundedSample s{{{0}, {1}}};
  const auto out = occam_learn(
      expr_ordering(en), [&](const expr::Expr& e, const GroundedSample& g) { return grounded_consistent(spec, e, g); },
      s, Rank{5});
  ASSERT_TRUE(std::holds_alternative<Proposal<expr::Expr>>(out));
  EXPECT_EQ(expr::print(*std::get<Proposal<expr::Expr>>(out).hypothesis, spec.input_names()), "x");
}

TEST(OccamLearn, CapExhaustedOnContradictorySample) {
  const PNSample s{{{3}}, {{3}}};
  const auto out = occam_learn(interval_ordering(), interval_consistent, s, Rank{0});
  ASSERT_TRUE(std::holds_alternative<CapExhausted>(out));
  EXPECT_EQ(std::get<CapExhausted>(out).cap, Rank{0});
}

TEST(OccamLearn, ExhaustiveStreamEndsInUnrealizable) {
  ComplexityOrdering<int> ord;
  ord.rank = [](int h) { return Rank{static_cast<std::uint64_t>(h)}; };
  ord.exhaustive = true;
  ord.stream = [] {
    auto i = std::make_shared<int>(0);
    return ComplexityOrdering<int>::Cursor([i]() -> std::optional<int> {
      if (*i == 4) return std::nullopt;
      return (*i)++;
    });
  };
  auto never = [](int, int) { return false; };
  EXPECT_TRUE(std::holds_alternative<Unrealizable>(occam_learn(ord, never, 0, Rank{100})));
  auto three = [](int h, int) { return h == 3; };
  EXPECT_EQ(std::get<Proposal<int>>(occam_learn(ord, three, 0, Rank{100})).hypothesis, 3);
  EXPECT_TRUE(std::holds_alternative<CapExhausted>(occam_learn(ord, three, 0, Rank{2})));
  ord.exhaustive = false;
  EXPECT_TRUE(std::holds_alternative<CapExhausted>(occam_learn(ord, never, 0, Rank{100})));
}

TEST(OccamLearn, ReturnsTheFirstConsistentHypothesisInStreamOrder) {
  // Rank ties are broken by stream order, so the first consistent hypothesis
  // among equal ranks wins.
  const PNSample s{{}, {{3}}};
  const auto out = occam_learn(interval_ordering(), interval_consistent, s, Rank{10});
  EXPECT_EQ(to_string(std::get<Proposal<Interval>>(out).hypothesis), "[-inf, 0]");
}

}  // namespace
