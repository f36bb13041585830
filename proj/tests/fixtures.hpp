#pragma once

// Shared worked instances for the test binaries.

#include <string>
#include <vector>

#include "alf/expr.hpp"
#include "alf/invgen.hpp"
#include "alf/synth.hpp"

namespace fixtures {

inline const std::vector<std::string> kX{"x"};

inline alf::expr::Expr px(const std::string& src) { return alf::expr::parse(src, kX); }

/// while (x < 10) x := x + 2, from x = 0, Post x = 10, over x in [0, hi].
inline alf::LoopProgram program_w(alf::Coord hi = 15) {
  return alf::LoopProgram{alf::StateSpace({{"x", 0, hi}}), px("(= x 0)"), px("(< x 10)"),
                          px("(= x 10)"), {px("(+ x 2)")}};
}

/// [x <= 10, x <= 8, even(x)]
inline alf::PredicateList predicates_w() {
  alf::PredicateList q;
  for (const char* s : {"(<= x 10)", "(<= x 8)", "(= (mod x 2) 0)"}) {
    q.preds.push_back(px(s));
    q.sources.emplace_back(s);
  }
  return q;
}

/// Init {0}, post(x) = {x + 2} clamped to [0, 15], Bad {11}.
inline alf::TransitionSystem system_plus2(const char* bad = "(= x 11)") {
  return alf::TransitionSystem{alf::StateSpace({{"x", 0, 15}}), px("(= x 0)"), px("true"), px(bad),
                               {px("(+ x 2)")}};
}

inline alf::SynthSpec abs_spec(alf::Coord bound = 8) {
  return alf::make_spec({{"x", -bound, bound}},
                        "(and (>= (f x) x) (>= (f x) (- x)) (or (= (f x) x) (= (f x) (- x))))");
}

inline alf::SynthSpec max_spec(alf::Coord bound = 4) {
  return alf::make_spec(
      {{"x", -bound, bound}, {"y", -bound, bound}},
      "(and (>= (f x y) x) (>= (f x y) y) (or (= (f x y) x) (= (f x y) y)))");
}

}  // namespace fixtures
