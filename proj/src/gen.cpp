#include "alf/gen.hpp"

#include <algorithm>

namespace alf::gen {

namespace {

bool coin(Rng& rng, int num = 1, int den = 2) { return uniform(rng, 1, den) <= num; }

template <class T>
const T& pick(Rng& rng, const std::vector<T>& xs) {
  return xs[static_cast<std::size_t>(uniform(rng, 0, static_cast<Coord>(xs.size()) - 1))];
}

StateSpace random_space(Rng& rng, std::size_t max_states) {
  const auto n = static_cast<Coord>(std::max<std::size_t>(max_states, 4));
  if (coin(rng) || n < 9) {
    const Coord hi = uniform(rng, 3, std::min<Coord>(n, 32) - 1);
    return StateSpace({{"x", 0, hi}});
  }
  const Coord wx = uniform(rng, 2, std::min<Coord>(n / 2, 8));
  const Coord wy = uniform(rng, 2, std::min<Coord>(n / wx, 8));
  return StateSpace({{"x", 0, wx - 1}, {"y", 0, wy - 1}});
}

expr::Expr atom(Rng& rng, const StateSpace& space) {
  const auto& vars = space.vars();
  const std::size_t k = vars.size();
  const auto v = static_cast<std::size_t>(uniform(rng, 0, static_cast<Coord>(k) - 1));
  const auto w = (v + 1) % k;
  const int kind = static_cast<int>(uniform(rng, 0, k > 1 ? 5 : 3));
  const auto& dv = vars[v];
  const auto& dw = vars[w];
  switch (kind) {
    case 0: return expr::leq(expr::var(v), expr::constant(uniform(rng, dv.lo, dv.hi)));
    case 1: return expr::geq(expr::var(v), expr::constant(uniform(rng, dv.lo, dv.hi)));
    case 2: return expr::eq(expr::mod(expr::var(v), 2), expr::constant(uniform(rng, 0, 1)));
    case 3: return expr::eq(expr::mod(expr::var(v), 3), expr::constant(uniform(rng, 0, 2)));
    case 4:
      return expr::leq(expr::plus(expr::var(v), expr::var(w)),
                       expr::constant(uniform(rng, dv.lo + dw.lo, dv.hi + dw.hi)));
    default:
      return expr::geq(expr::minus(expr::var(v), expr::var(w)),
                       expr::constant(uniform(rng, dv.lo - dw.hi, dv.hi - dw.lo)));
  }
}

std::vector<expr::Expr> body(Rng& rng, const StateSpace& space) {
  const auto& vars = space.vars();
  const std::size_t k = vars.size();
  std::vector<expr::Expr> out;
  for (std::size_t i = 0; i < k; ++i) {
    const int kind = static_cast<int>(uniform(rng, 0, 5));
    const auto other = (i + 1) % k;
    switch (kind) {
      case 0:
      case 1:
      case 2: out.push_back(expr::plus(expr::var(i), expr::constant(uniform(rng, -3, 3)))); break;
      case 3: out.push_back(expr::plus(expr::var(other), expr::constant(uniform(rng, -2, 2)))); break;
      case 4: out.push_back(expr::constant(uniform(rng, vars[i].lo, vars[i].hi))); break;
      default: out.push_back(expr::minus(expr::constant(vars[i].hi), expr::var(i))); break;
    }
  }
  return out;
}

expr::Expr state_is(const Point& s) {
  std::vector<expr::Expr> parts;
  for (std::size_t i = 0; i < s.dim(); ++i) parts.push_back(expr::eq(expr::var(i), expr::constant(s[i])));
  return expr::conj(std::move(parts));
}

expr::Expr some_states(Rng& rng, const std::vector<Point>& pool) {
  std::vector<expr::Expr> parts;
  const int count = static_cast<int>(uniform(rng, 1, 2));
  for (int i = 0; i < count; ++i) parts.push_back(state_is(pick(rng, pool)));
  return expr::disj(std::move(parts));
}

std::vector<Point> all_states(const StateSpace& space) {
  std::vector<Point> out;
  for (std::size_t i = 0; i < space.size(); ++i) out.push_back(space.state(i));
  return out;
}

}  // namespace

Coord uniform(Rng& rng, Coord lo, Coord hi) {
  return std::uniform_int_distribution<Coord>(lo, hi)(rng);
}

BoxTarget box_target(Rng& rng, std::size_t dim, Coord lo, Coord hi) {
  BoxTarget t;
  const int required = static_cast<int>(uniform(rng, 0, 6));  // 0 only rarely
  const int nreq = required == 0 ? 0 : 1 + required % 3;
  auto random_point = [&] {
    Point p;
    for (std::size_t d = 0; d < dim; ++d) p.coords.push_back(uniform(rng, lo, hi));
    return p;
  };
  for (int i = 0; i < nreq; ++i) t.required.insert(random_point());
  const Rect box = [&] {
    Rect r = Rect::empty(dim);
    for (const auto& p : t.required) r = hull(r, Rect::point(p));
    return r;
  }();
  const int nforb = static_cast<int>(uniform(rng, 0, 4));
  for (int i = 0, tries = 0; i < nforb && tries < 100; ++tries) {
    Point p = random_point();
    if (box.contains(p)) continue;
    t.forbidden.insert(std::move(p));
    ++i;
  }
  return t;
}

PredicateList random_predicates(Rng& rng, const StateSpace& space, std::size_t count) {
  PredicateList preds;
  for (std::size_t i = 0; i < count; ++i) {
    preds.preds.push_back(atom(rng, space));
    preds.sources.push_back(expr::print(*preds.preds.back(), space.names()));
  }
  return preds;
}

PlantedProgram planted_program(Rng& rng, std::size_t m) {
  for (;;) {
    StateSpace space = random_space(rng, 64);
    PredicateList preds = random_predicates(rng, space, m);
    ConjHypothesis planted;
    for (std::size_t i = 0; i < m; ++i) {
      if (coin(rng)) planted.chosen.push_back(i);
    }
    std::vector<expr::Expr> inv_parts;
    for (auto i : planted.chosen) inv_parts.push_back(preds.preds[i]);
    const expr::Expr inv = expr::conj(inv_parts);

    std::vector<Point> inside;
    for (std::size_t i = 0; i < space.size(); ++i) {
      Point s = space.state(i);
      if (conj_holds(preds, planted, s)) inside.push_back(std::move(s));
    }
    if (inside.empty()) continue;

    auto upd = body(rng, space);
    std::vector<expr::Expr> guard_parts;
    if (coin(rng, 2, 3)) guard_parts.push_back(atom(rng, space));
    guard_parts.push_back(expr::substitute(inv, upd));
    for (std::size_t i = 0; i < upd.size(); ++i) {
      guard_parts.push_back(expr::geq(upd[i], expr::constant(space.vars()[i].lo)));
      guard_parts.push_back(expr::leq(upd[i], expr::constant(space.vars()[i].hi)));
    }
    std::vector<expr::Expr> post_parts;
    for (auto i : planted.chosen) {
      if (coin(rng)) post_parts.push_back(preds.preds[i]);
    }
    LoopProgram prog{space, some_states(rng, inside), expr::conj(guard_parts), expr::conj(post_parts),
                     std::move(upd)};
    return {std::move(prog), std::move(preds), std::move(planted)};
  }
}

LoopProgram small_program(Rng& rng, std::size_t max_states) {
  StateSpace space = random_space(rng, max_states);
  const auto states = all_states(space);
  expr::Expr init = coin(rng, 3, 4) ? some_states(rng, states) : atom(rng, space);
  expr::Expr post = coin(rng) ? atom(rng, space) : expr::disj({atom(rng, space), atom(rng, space)});
  auto guard = atom(rng, space);
  auto upd = body(rng, space);
  return LoopProgram{std::move(space), std::move(init), std::move(guard), std::move(post), std::move(upd)};
}

TransitionSystem transition_system(Rng& rng, std::size_t max_states) {
  StateSpace space = random_space(rng, max_states);
  const auto states = all_states(space);
  auto init = some_states(rng, states);
  auto guard = coin(rng, 2, 3) ? atom(rng, space) : expr::truth(true);
  auto bad = coin(rng, 2, 3) ? expr::truth(false) : atom(rng, space);
  auto upd = body(rng, space);
  return TransitionSystem{std::move(space), std::move(init), std::move(guard), std::move(bad),
                          std::move(upd)};
}

Rect box_in(Rng& rng, const StateSpace& space) {
  if (uniform(rng, 1, 15) == 1) return Rect::empty(space.arity());
  std::vector<Interval> factors;
  for (const auto& v : space.vars()) {
    Coord a = uniform(rng, v.lo - 2, v.hi + 2);
    Coord b = uniform(rng, v.lo - 2, v.hi + 2);
    if (b < a) std::swap(a, b);
    const ExtInt lo = uniform(rng, 1, 10) == 1 ? ExtInt::neg_inf() : ExtInt(a);
    const ExtInt hi = uniform(rng, 1, 10) == 1 ? ExtInt::pos_inf() : ExtInt(b);
    factors.push_back(Interval::closed(lo, hi));
  }
  return Rect::product(std::move(factors));
}

PNSample pn_sample(Rng& rng, std::span<const Point> universe, std::size_t max_each) {
  PNSample s;
  if (universe.empty()) return s;
  const auto last = static_cast<Coord>(universe.size()) - 1;
  const auto np = uniform(rng, 0, static_cast<Coord>(max_each));
  const auto nn = uniform(rng, 0, static_cast<Coord>(max_each));
  for (Coord i = 0; i < np; ++i) s.P.insert(universe[static_cast<std::size_t>(uniform(rng, 0, last))]);
  for (Coord i = 0; i < nn; ++i) s.N.insert(universe[static_cast<std::size_t>(uniform(rng, 0, last))]);
  return s;
}

ICESample ice_sample(Rng& rng, const StateSpace& space, std::size_t max_each) {
  ICESample s;
  if (space.size() == 0) return s;
  const auto last = static_cast<Coord>(space.size()) - 1;
  auto any = [&] { return space.state(static_cast<std::size_t>(uniform(rng, 0, last))); };
  const auto m = static_cast<Coord>(max_each);
  for (Coord i = uniform(rng, 0, m); i > 0; --i) s.P.insert(any());
  for (Coord i = uniform(rng, 0, m); i > 0; --i) s.N.insert(any());
  for (Coord i = uniform(rng, 0, m); i > 0; --i) s.I.emplace(any(), any());
  return s;
}

GroundedSample grounded_sample(Rng& rng, const StateSpace& space, std::size_t max_count) {
  GroundedSample s;
  if (space.size() == 0) return s;
  const auto last = static_cast<Coord>(space.size()) - 1;
  for (Coord i = uniform(rng, 0, static_cast<Coord>(max_count)); i > 0; --i) {
    s.V.insert(space.state(static_cast<std::size_t>(uniform(rng, 0, last))));
  }
  return s;
}

ConceptMask state_subset(Rng& rng, const StateSpace& space) {
  const std::size_t n = std::min<std::size_t>(space.size(), 64);
  ConceptMask m = rng();
  return n == 64 ? m : m & ((ConceptMask{1} << n) - 1);
}

Json box_config(Rng& rng, std::size_t dim, std::size_t budget) {
  const Coord bound = dim == 1 ? 20 : 10;
  const BoxTarget t = box_target(rng, dim, -bound, bound);
  Json req = Json::array();
  Json forb = Json::array();
  for (const auto& p : t.required) req.push_back(to_json(p));
  for (const auto& p : t.forbidden) forb.push_back(to_json(p));
  Json doc{{"budget", budget}, {"target", {{"required", req}, {"forbidden", forb}}}};
  if (dim == 1) {
    doc["kind"] = "interval";
    doc["learner"] = "occam";
  } else {
    doc["kind"] = "rectangle";
    doc["learner"] = "wqo";
    doc["dim"] = dim;
  }
  return doc;
}

}  // namespace alf::gen
