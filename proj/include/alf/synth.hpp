#pragma once

// Grounded-sample CEGIS for single-function expression synthesis: a
// specification over bounded inputs, an exhaustive verification teacher, and
// the size-ordered enumerative Occam learner over
//   e ::= x_i | c | (+ e e) | (- e e) | (ite (>= e e) e e) | (ite (<= e e) e e)

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "alf/core.hpp"
#include "alf/expr.hpp"
#include "alf/occam.hpp"
#include "alf/samples.hpp"
#include "alf/space.hpp"

namespace alf {

inline const std::vector<Coord> kDefaultConstants{-1, 0, 1, 2};

struct SynthSpec {
  std::vector<VarDecl> inputs;
  std::vector<Coord> constants = kDefaultConstants;
  /// Boolean formula over the inputs and applications `(f ...)` of the
  /// unknown function.
  expr::Expr formula;
  std::string fname = "f";

  std::size_t arity() const { return inputs.size(); }
  std::vector<std::string> input_names() const;
};

/// Throws std::invalid_argument when the formula is not boolean, references
/// undeclared inputs, or applies f with the wrong arity.
void validate(const SynthSpec& spec);

/// Parses the s-expression formula against the declared inputs.
SynthSpec make_spec(std::vector<VarDecl> inputs, std::string_view formula,
                    std::vector<Coord> constants = kDefaultConstants,
                    std::string fname = "f");

std::int64_t eval_expr(const expr::Expr& e, const Point& v);

/// The formula with f interpreted as `e` and the inputs bound to `v`.
bool spec_holds(const SynthSpec& spec, const expr::Expr& e, const Point& v);

/// spec_holds at every valuation of the sample.
bool grounded_consistent(const SynthSpec& spec, const expr::Expr& e, const GroundedSample& s);

/// Scans the bounded inputs in lexicographic order and reports the first
/// violating valuation. Throws std::invalid_argument when the input space
/// exceeds the scan cap.
Verdict<GroundedSample> cegis_teacher(const SynthSpec& spec, const expr::Expr& e);

/// Expressions of the hypothesis grammar by exact size. Within a size:
/// leaves are x_0..x_{k-1} then constants ascending; composite nodes are
/// Plus, then Minus, then Ite with a Geq condition, then Ite with a Leq
/// condition; children vary by size split (leftmost smallest first), then
/// by each child's position in its own size class, leftmost slowest.
class ExprEnumerator {
 public:
  ExprEnumerator(std::size_t arity, std::vector<Coord> constants);

  /// All hypothesis-grammar expressions of exactly `size` nodes; cached.
  const std::vector<expr::Expr>& of_size(std::size_t size);

  std::size_t arity() const { return arity_; }
  const std::vector<Coord>& constants() const { return constants_; }

 private:
  void build(std::size_t size);

  std::size_t arity_;
  std::vector<Coord> constants_;
  std::vector<std::vector<expr::Expr>> by_size_;
  std::vector<bool> built_;
};

/// rank(e) = (size(e)); the stream walks sizes 1, 2, ... through a shared
/// ExprEnumerator cache.
ComplexityOrdering<expr::Expr> expr_ordering(std::shared_ptr<ExprEnumerator> enumerator);

/// Occam learner over the expression grammar.
LearnerOutcome<expr::Expr> synth_learn(const SynthSpec& spec,
                                       const std::shared_ptr<ExprEnumerator>& enumerator,
                                       const GroundedSample& s, const Rank& rank_cap);

DomainContract<GroundedSample, expr::Expr, expr::Expr> synth_domain(const SynthSpec& spec);

/// Finite universe whose concepts are the given expressions.
FiniteUniverse<GroundedSample, expr::Expr, expr::Expr> synth_universe(
    const SynthSpec& spec, std::vector<expr::Expr> concepts);

}  // namespace alf
