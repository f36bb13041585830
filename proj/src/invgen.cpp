#include "alf/invgen.hpp"

#include <algorithm>
#include <memory>
#include <stdexcept>

namespace alf {

namespace {

bool eval_bool(const expr::Expr& e, const Point& s) { return expr::holds(*e, s.coords); }

void check_formula(const expr::Expr& e, std::size_t arity, bool want_bool, const char* what) {
  if (!e) throw std::invalid_argument(std::string(what) + " is missing");
  if (expr::is_bool(*e) != want_bool) {
    throw std::invalid_argument(std::string(what) + " must be " +
                                (want_bool ? "a predicate" : "an integer expression"));
  }
  if (expr::var_bound(*e) > arity) {
    throw std::invalid_argument(std::string(what) + " references an undeclared variable");
  }
  if (expr::app_arity(*e) >= 0) {
    throw std::invalid_argument(std::string(what) + " applies the unknown function");
  }
}

void check_updates(const std::vector<expr::Expr>& body, std::size_t arity, const char* what) {
  if (body.size() != arity) {
    throw std::invalid_argument(std::string(what) + " needs one update per variable");
  }
  for (const auto& b : body) check_formula(b, arity, false, what);
}

Point apply_updates(const StateSpace& space, const std::vector<expr::Expr>& body,
                    const Point& s) {
  Point next;
  next.coords.reserve(body.size());
  for (const auto& b : body) next.coords.push_back(expr::eval(*b, s.coords));
  return space.clamp(std::move(next));
}

void check_universe(std::size_t states, std::size_t cap) {
  if (cap > 20) throw std::invalid_argument("subset enumeration cap above 20 states");
  if (states > cap) {
    throw std::invalid_argument("subset enumeration over " + std::to_string(states) +
                                " states exceeds the cap of " + std::to_string(cap));
  }
}

/// All subsets of the states as concepts; membership by state index.
template <class H>
FiniteUniverse<ICESample, H> state_universe(const StateSpace& space,
                                            std::function<ConceptMask(const H&)> gamma) {
  FiniteUniverse<ICESample, H> u;
  u.concepts.resize(std::size_t{1} << space.size());
  for (std::size_t m = 0; m < u.concepts.size(); ++m) u.concepts[m] = m;
  auto sp = std::make_shared<StateSpace>(space);
  u.contains = [sp](const ICESample& s, const ConceptMask& c) {
    return ice_consistent(
        [&](const Point& p) {
          auto i = sp->index(p);
          return i && ((c >> *i) & 1U);
        },
        s);
  };
  u.gamma = std::move(gamma);
  return u;
}

}  // namespace

ConceptMask state_mask(const StateSpace& space, const Membership& in) {
  if (space.size() > 64) throw std::invalid_argument("state mask over more than 64 states");
  ConceptMask m = 0;
  for (std::size_t i = 0; i < space.size(); ++i) {
    if (in(space.state(i))) m |= ConceptMask{1} << i;
  }
  return m;
}

// ------------------------------------------------------------- LoopProgram

bool LoopProgram::in_init(const Point& s) const { return eval_bool(init, s); }
bool LoopProgram::in_guard(const Point& s) const { return eval_bool(guard, s); }
bool LoopProgram::in_post(const Point& s) const { return eval_bool(post, s); }
Point LoopProgram::step(const Point& s) const { return apply_updates(space, body, s); }

void validate(const LoopProgram& prog) {
  const std::size_t k = prog.space.arity();
  check_formula(prog.init, k, true, "init");
  check_formula(prog.guard, k, true, "guard");
  check_formula(prog.post, k, true, "post");
  check_updates(prog.body, k, "body");
}

ConjHypothesis all_predicates(const PredicateList& preds) {
  ConjHypothesis h;
  for (std::size_t i = 0; i < preds.size(); ++i) h.chosen.push_back(i);
  return h;
}

bool conj_holds(const PredicateList& preds, const ConjHypothesis& h, const Point& s) {
  return std::all_of(h.chosen.begin(), h.chosen.end(),
                     [&](std::size_t i) { return eval_bool(preds.preds[i], s); });
}

bool conj_consistent(const PredicateList& preds, const ConjHypothesis& h,
                     const ICESample& s) {
  return ice_consistent([&](const Point& p) { return conj_holds(preds, h, p); }, s);
}

std::string to_string(const PredicateList& preds, const ConjHypothesis& h) {
  if (h.chosen.empty()) return "true";
  std::string out;
  for (std::size_t i : h.chosen) {
    if (!out.empty()) out += " && ";
    out += preds.sources[i];
  }
  return out;
}

Verdict<ICESample> ice_teacher(const LoopProgram& prog, const Membership& h) {
  const auto& sp = prog.space;
  const std::size_t n = sp.size();

  const std::size_t a = par::first_match(n, [&](std::size_t i) {
    const Point s = sp.state(i);
    return prog.in_init(s) && !h(s);
  });
  if (a != npos) return Feedback<ICESample>{{{sp.state(a)}, {}, {}}};

  const std::size_t b = par::first_match(n, [&](std::size_t i) {
    const Point s = sp.state(i);
    return h(s) && !prog.in_guard(s) && !prog.in_post(s);
  });
  if (b != npos) return Feedback<ICESample>{{{}, {sp.state(b)}, {}}};

  const std::size_t c = par::first_match(n, [&](std::size_t i) {
    const Point s = sp.state(i);
    return h(s) && prog.in_guard(s) && !h(prog.step(s));
  });
  if (c != npos) {
    const Point s = sp.state(c);
    return Feedback<ICESample>{{{}, {}, {{s, prog.step(s)}}}};
  }
  return Accept{};
}

LearnerOutcome<ConjHypothesis> houdini_learn(const PredicateList& preds, const ICESample& s) {
  ConjHypothesis h = all_predicates(preds);
  PointSet positives = s.P;
  for (bool changed = true; changed;) {
    changed = false;
    std::vector<std::size_t> kept;
    for (std::size_t i : h.chosen) {
      const bool falsified = std::any_of(positives.begin(), positives.end(), [&](const Point& p) {
        return !eval_bool(preds.preds[i], p);
      });
      if (!falsified) kept.push_back(i);
    }
    if (kept.size() != h.chosen.size()) {
      h.chosen = std::move(kept);
      changed = true;
    }
    for (const auto& [from, to] : s.I) {
      if (!positives.contains(to) && conj_holds(preds, h, from)) {
        positives.insert(to);
        changed = true;
      }
    }
  }
  for (const auto& n : s.N) {
    if (conj_holds(preds, h, n)) return Unrealizable{};
  }
  return Proposal<ConjHypothesis>{std::move(h)};
}

ComplexityOrdering<ConjHypothesis> conj_ordering(std::size_t m) {
  ComplexityOrdering<ConjHypothesis> ord;
  ord.rank = [](const ConjHypothesis& h) { return Rank{h.chosen.size()}; };
  ord.exhaustive = true;
  ord.stream = [m] {
    struct State {
      std::size_t k = 0;
      std::vector<std::size_t> combo;
      bool fresh = true;
      bool done = false;
    };
    auto st = std::make_shared<State>();
    return ComplexityOrdering<ConjHypothesis>::Cursor(
        [st, m]() -> std::optional<ConjHypothesis> {
          if (st->done) return std::nullopt;
          if (st->fresh) {
            st->fresh = false;
            st->combo.clear();
            for (std::size_t i = 0; i < st->k; ++i) st->combo.push_back(i);
            return ConjHypothesis{st->combo};
          }
          // Next k-combination in lexicographic order, else move to k + 1.
          std::size_t k = st->k;
          std::size_t i = k;
          while (i > 0 && st->combo[i - 1] == m - k + i - 1) --i;
          if (i == 0) {
            if (st->k == m) {
              st->done = true;
              return std::nullopt;
            }
            ++st->k;
            st->combo.clear();
            for (std::size_t j = 0; j < st->k; ++j) st->combo.push_back(j);
            return ConjHypothesis{st->combo};
          }
          ++st->combo[i - 1];
          for (std::size_t j = i; j < k; ++j) st->combo[j] = st->combo[j - 1] + 1;
          return ConjHypothesis{st->combo};
        });
  };
  return ord;
}

std::vector<ConceptMask> enumerate_adequate_invariants(const LoopProgram& prog,
                                                       std::size_t cap) {
  const auto& sp = prog.space;
  check_universe(sp.size(), cap);
  const std::size_t n = sp.size();
  ConceptMask init = 0, exit_bad = 0, looping = 0;
  std::vector<std::size_t> succ(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    const Point s = sp.state(i);
    if (prog.in_init(s)) init |= ConceptMask{1} << i;
    if (!prog.in_guard(s)) {
      if (!prog.in_post(s)) exit_bad |= ConceptMask{1} << i;
    } else {
      looping |= ConceptMask{1} << i;
      succ[i] = *sp.index(prog.step(s));
    }
  }
  const auto found = par::matches(std::size_t{1} << n, [&](std::size_t idx) {
    const auto x = static_cast<ConceptMask>(idx);
    if ((x & init) != init || (x & exit_bad) != 0) return false;
    for (ConceptMask rest = x & looping; rest; rest &= rest - 1) {
      const auto i = static_cast<std::size_t>(__builtin_ctzll(rest));
      if (!((x >> succ[i]) & 1U)) return false;
    }
    return true;
  });
  return {found.begin(), found.end()};
}

DomainContract<ICESample, ConjHypothesis> conj_domain(const LoopProgram& prog,
                                                      const PredicateList& preds,
                                                      std::size_t universe_cap) {
  DomainContract<ICESample, ConjHypothesis> d;
  d.lattice = ice_lattice();
  d.consistent = [preds](const ConjHypothesis& h, const ICESample& s) {
    return conj_consistent(preds, h, s);
  };
  if (prog.space.size() <= std::min<std::size_t>(universe_cap, 20)) {
    auto sp = prog.space;
    d.universe = state_universe<ConjHypothesis>(
        prog.space, [sp, preds](const ConjHypothesis& h) {
          return state_mask(sp, [&](const Point& p) { return conj_holds(preds, h, p); });
        });
  }
  return d;
}

// -------------------------------------------------------- TransitionSystem

bool TransitionSystem::in_init(const Point& s) const { return eval_bool(init, s); }
bool TransitionSystem::in_bad(const Point& s) const { return eval_bool(bad, s); }

std::vector<Point> TransitionSystem::post(const Point& s) const {
  if (!eval_bool(guard, s)) return {};
  return {apply_updates(space, update, s)};
}

void validate(const TransitionSystem& ts) {
  const std::size_t k = ts.space.arity();
  check_formula(ts.init, k, true, "init");
  check_formula(ts.guard, k, true, "guard");
  check_formula(ts.bad, k, true, "bad");
  check_updates(ts.update, k, "update");
}

Verdict<ICESample> fixpoint_teacher(const TransitionSystem& ts, const Membership& h) {
  const auto& sp = ts.space;
  const std::size_t n = sp.size();

  const std::size_t b = par::first_match(n, [&](std::size_t i) {
    const Point s = sp.state(i);
    return ts.in_bad(s) && h(s);
  });
  if (b != npos) return Feedback<ICESample>{{{}, {sp.state(b)}, {}}};

  // Smallest x in F(h) \ h = (Init ∪ post(h)) \ h.
  const std::size_t from_init = par::first_match(n, [&](std::size_t i) {
    const Point s = sp.state(i);
    return ts.in_init(s) && !h(s);
  });
  const std::size_t from_post = par::min_key(n, [&](std::size_t i) -> std::size_t {
    const Point s = sp.state(i);
    if (!h(s)) return npos;
    std::size_t best = npos;
    for (const auto& t : ts.post(s)) {
      if (!h(t)) best = std::min(best, *sp.index(t));
    }
    return best;
  });
  const std::size_t x = std::min(from_init, from_post);
  if (x == npos) return Accept{};

  const Point target = sp.state(x);
  if (x == from_init) return Feedback<ICESample>{{{target}, {}, {}}};
  const std::size_t y = par::first_match(n, [&](std::size_t i) {
    const Point s = sp.state(i);
    if (!h(s)) return false;
    const auto succ = ts.post(s);
    return std::find(succ.begin(), succ.end(), target) != succ.end();
  });
  if (y == npos) {
    throw ContractViolation("fixpoint teacher: " + to_string(target) +
                            " is neither initial nor a successor");
  }
  return Feedback<ICESample>{{{}, {}, {{sp.state(y), target}}}};
}

Verdict<ICESample> fixpoint_teacher(const TransitionSystem& ts, const Rect& h) {
  return fixpoint_teacher(ts, [&](const Point& p) { return h.contains(p); });
}

Verdict<ICESample> abstract_post_teacher(const TransitionSystem& ts, const Rect& xhat,
                                         const Rect& h) {
  const auto& sp = ts.space;
  const std::size_t missing = par::min_key(sp.size(), [&](std::size_t i) -> std::size_t {
    const Point s = sp.state(i);
    if (!xhat.contains(s)) return npos;
    std::size_t best = npos;
    for (const auto& t : ts.post(s)) {
      if (!h.contains(t)) best = std::min(best, *sp.index(t));
    }
    return best;
  });
  if (missing == npos) return Accept{};
  return Feedback<ICESample>{{{sp.state(missing)}, {}, {}}};
}

Rect alpha_join_learn(const Rect& current, const Point& positive) {
  return hull(current, Rect::point(positive));
}

Rect alpha_join_learner(const ICESample& s, std::size_t dim) {
  Rect h = Rect::empty(dim);
  for (const auto& p : s.P) h = alpha_join_learn(h, p);
  return h;
}

LearnerOutcome<Rect> box_hull_learn(const ICESample& s, std::size_t dim) {
  Rect h = alpha_join_learner(s, dim);
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& [from, to] : s.I) {
      if (h.contains(from) && !h.contains(to)) {
        h = alpha_join_learn(h, to);
        changed = true;
      }
    }
  }
  for (const auto& n : s.N) {
    if (h.contains(n)) return Unrealizable{};
  }
  return Proposal<Rect>{std::move(h)};
}

std::vector<ConceptMask> enumerate_adequate_fixpoints(const TransitionSystem& ts,
                                                      std::size_t cap) {
  const auto& sp = ts.space;
  check_universe(sp.size(), cap);
  const std::size_t n = sp.size();
  ConceptMask init = 0, bad = 0, stepping = 0;
  std::vector<std::size_t> succ(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    const Point s = sp.state(i);
    if (ts.in_init(s)) init |= ConceptMask{1} << i;
    if (ts.in_bad(s)) bad |= ConceptMask{1} << i;
    const auto next = ts.post(s);
    if (!next.empty()) {
      stepping |= ConceptMask{1} << i;
      succ[i] = *sp.index(next.front());
    }
  }
  const auto found = par::matches(std::size_t{1} << n, [&](std::size_t idx) {
    const auto x = static_cast<ConceptMask>(idx);
    if ((x & init) != init || (x & bad) != 0) return false;
    for (ConceptMask rest = x & stepping; rest; rest &= rest - 1) {
      const auto i = static_cast<std::size_t>(__builtin_ctzll(rest));
      if (!((x >> succ[i]) & 1U)) return false;
    }
    return true;
  });
  return {found.begin(), found.end()};
}

std::vector<ConceptMask> abstract_post_targets(const TransitionSystem& ts, const Rect& xhat,
                                               std::size_t cap) {
  const auto& sp = ts.space;
  check_universe(sp.size(), cap);
  ConceptMask need = 0;
  for (std::size_t i = 0; i < sp.size(); ++i) {
    const Point s = sp.state(i);
    if (!xhat.contains(s)) continue;
    for (const auto& t : ts.post(s)) need |= ConceptMask{1} << *sp.index(t);
  }
  const auto found = par::matches(std::size_t{1} << sp.size(), [&](std::size_t idx) {
    return (static_cast<ConceptMask>(idx) & need) == need;
  });
  return {found.begin(), found.end()};
}

DomainContract<ICESample, Rect> box_state_domain(const StateSpace& space,
                                                 std::size_t universe_cap) {
  DomainContract<ICESample, Rect> d;
  d.lattice = ice_lattice();
  d.consistent = [](const Rect& h, const ICESample& s) {
    return ice_consistent([&](const Point& p) { return h.contains(p); }, s);
  };
  if (space.size() <= std::min<std::size_t>(universe_cap, 20)) {
    auto sp = space;
    d.universe = state_universe<Rect>(space, [sp](const Rect& h) {
      return state_mask(sp, [&](const Point& p) { return h.contains(p); });
    });
  }
  return d;
}

}  // namespace alf
