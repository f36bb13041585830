#pragma once

// Invariant and fixpoint synthesis over bounded state spaces: the exhaustive
// ICE teacher for single-loop programs, Houdini, adequate-invariant
// enumeration, the fixpoint teacher over the representative set
// {∅} ∪ singletons, and best-abstract-transformer learning on
// interval-product abstract elements.

#include <cstddef>
#include <string>
#include <vector>

#include "alf/boxes.hpp"
#include "alf/core.hpp"
#include "alf/expr.hpp"
#include "alf/occam.hpp"
#include "alf/samples.hpp"
#include "alf/space.hpp"

namespace alf {

/// while (guard) { x := body(x) } with Init and Post predicates. Body results
/// are clamped into the declared bounds.
struct LoopProgram {
  StateSpace space;
  expr::Expr init;
  expr::Expr guard;
  expr::Expr post;
  std::vector<expr::Expr> body;  ///< one update per variable, in order

  bool in_init(const Point& s) const;
  bool in_guard(const Point& s) const;
  bool in_post(const Point& s) const;
  Point step(const Point& s) const;
};

/// Throws std::invalid_argument on sort errors, arity mismatches or
/// out-of-range variable references.
void validate(const LoopProgram& prog);

struct PredicateList {
  std::vector<expr::Expr> preds;
  std::vector<std::string> sources;

  std::size_t size() const { return preds.size(); }
};

/// A subset of the predicate list read as a conjunction; the empty subset is
/// `true`.
struct ConjHypothesis {
  std::vector<std::size_t> chosen;  ///< ascending predicate indices

  bool operator==(const ConjHypothesis&) const = default;
};

ConjHypothesis all_predicates(const PredicateList& preds);
bool conj_holds(const PredicateList& preds, const ConjHypothesis& h, const Point& s);
bool conj_consistent(const PredicateList& preds, const ConjHypothesis& h,
                     const ICESample& s);

std::string to_string(const PredicateList& preds, const ConjHypothesis& h);

/// Check order: (a) Init ⊆ h, smallest violation as a positive example;
/// (b) h ∧ ¬Guard ⊆ Post, smallest violation as a negative example;
/// (c) inductiveness, smallest s with h(s), Guard(s), ¬h(Body(s)) as the
/// implication (s, Body(s)). Accept when all three hold.
Verdict<ICESample> ice_teacher(const LoopProgram& prog, const Membership& h);

/// Starts from the full conjunction; knocks off predicates falsified by
/// positives and promotes consequents of implications whose antecedent
/// satisfies the current conjunction, until nothing changes. Unrealizable if
/// a negative example satisfies the result.
LearnerOutcome<ConjHypothesis> houdini_learn(const PredicateList& preds, const ICESample& s);

/// Exhaustive Occam ordering on predicate subsets: by subset size, then
/// lexicographically by index list.
ComplexityOrdering<ConjHypothesis> conj_ordering(std::size_t predicate_count);

/// All state sets X (as masks over state indices) with Init ⊆ X,
/// X ∩ ¬Guard ⊆ Post, and X closed under Body within Guard. Throws
/// std::invalid_argument when the program has more than `cap` states.
std::vector<ConceptMask> enumerate_adequate_invariants(const LoopProgram& prog,
                                                       std::size_t cap = 16);

/// ICE domain over a program's states. The finite universe (all state
/// subsets) is attached when the program has at most `universe_cap` states.
DomainContract<ICESample, ConjHypothesis> conj_domain(const LoopProgram& prog,
                                                      const PredicateList& preds,
                                                      std::size_t universe_cap = 16);

/// States with deterministic successor: post(s) = {clamp(update(s))} when
/// guard(s) holds, ∅ otherwise.
struct TransitionSystem {
  StateSpace space;
  expr::Expr init;
  expr::Expr guard;
  expr::Expr bad;
  std::vector<expr::Expr> update;

  bool in_init(const Point& s) const;
  bool in_bad(const Point& s) const;
  std::vector<Point> post(const Point& s) const;
};

void validate(const TransitionSystem& ts);

/// Teacher for adequate fixpoints of F(X) = X ∪ Init ∪ post(X) avoiding the
/// bad states. Smallest bad state in h as a negative example; otherwise the
/// smallest x ∈ F(h) \ h, as a positive example when x is initial, else as
/// the implication (y, x) for the smallest y ∈ h reaching x.
Verdict<ICESample> fixpoint_teacher(const TransitionSystem& ts, const Membership& h);
Verdict<ICESample> fixpoint_teacher(const TransitionSystem& ts, const Rect& h);

/// Positive-only teacher for the best abstract post of `xhat` under the pure
/// post transformer: Accept iff h covers post(xhat), otherwise the smallest
/// uncovered successor as a positive example.
Verdict<ICESample> abstract_post_teacher(const TransitionSystem& ts, const Rect& xhat,
                                         const Rect& h);

/// current ⊔ α({positive}).
Rect alpha_join_learn(const Rect& current, const Point& positive);

/// Folds alpha_join_learn over the sample's positives, starting from Empty.
Rect alpha_join_learner(const ICESample& s, std::size_t dim);

/// Least box containing the positives and closed under implications whose
/// antecedent it contains; Unrealizable when a negative falls inside.
LearnerOutcome<Rect> box_hull_learn(const ICESample& s, std::size_t dim);

/// All X ⊆ D with Init ⊆ X, post(X) ⊆ X and X ∩ Bad = ∅, as masks.
std::vector<ConceptMask> enumerate_adequate_fixpoints(const TransitionSystem& ts,
                                                      std::size_t cap = 16);

/// All X ⊆ D containing post(γ(xhat)), as masks.
std::vector<ConceptMask> abstract_post_targets(const TransitionSystem& ts, const Rect& xhat,
                                               std::size_t cap = 16);

DomainContract<ICESample, Rect> box_state_domain(const StateSpace& space,
                                                 std::size_t universe_cap = 16);

/// Membership mask of the states satisfying `in`, over at most 64 states.
ConceptMask state_mask(const StateSpace& space, const Membership& in);

}  // namespace alf
