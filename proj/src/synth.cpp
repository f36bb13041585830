#include "alf/synth.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace alf {

std::vector<std::string> SynthSpec::input_names() const {
  std::vector<std::string> names;
  names.reserve(inputs.size());
  for (const auto& v : inputs) names.push_back(v.name);
  return names;
}

void validate(const SynthSpec& spec) {
  if (!spec.formula) throw std::invalid_argument("spec formula is missing");
  if (spec.inputs.empty() || spec.inputs.size() > expr::kMaxArity) {
    throw std::invalid_argument("spec arity must be in [1, 8]");
  }
  if (!expr::is_bool(*spec.formula)) throw std::invalid_argument("spec formula must be boolean");
  if (expr::var_bound(*spec.formula) > spec.arity()) {
    throw std::invalid_argument("spec formula references an undeclared input");
  }
  const int a = expr::app_arity(*spec.formula);
  if (a >= 0 && static_cast<std::size_t>(a) != spec.arity()) {
    throw std::invalid_argument("every application of " + spec.fname + " must take " +
                                std::to_string(spec.arity()) + " arguments");
  }
}

SynthSpec make_spec(std::vector<VarDecl> inputs, std::string_view formula,
                    std::vector<Coord> constants, std::string fname) {
  SynthSpec spec;
  spec.inputs = std::move(inputs);
  spec.constants = std::move(constants);
  spec.fname = std::move(fname);
  const auto names = spec.input_names();
  spec.formula = expr::parse(formula, names, {spec.fname});
  validate(spec);
  return spec;
}

std::int64_t eval_expr(const expr::Expr& e, const Point& v) { return expr::eval(*e, v.coords); }

bool spec_holds(const SynthSpec& spec, const expr::Expr& e, const Point& v) {
  return expr::holds(*spec.formula, v.coords, e.get());
}

bool grounded_consistent(const SynthSpec& spec, const expr::Expr& e, const GroundedSample& s) {
  return std::all_of(s.V.begin(), s.V.end(),
                     [&](const Point& v) { return spec_holds(spec, e, v); });
}

Verdict<GroundedSample> cegis_teacher(const SynthSpec& spec, const expr::Expr& e) {
  const StateSpace inputs(spec.inputs);
  const std::size_t bad = par::first_match(
      inputs.size(), [&](std::size_t i) { return !spec_holds(spec, e, inputs.state(i)); });
  if (bad == npos) return Accept{};
  return Feedback<GroundedSample>{{{inputs.state(bad)}}};
}

// -------------------------------------------------------------- enumerator

ExprEnumerator::ExprEnumerator(std::size_t arity, std::vector<Coord> constants)
    : arity_(arity), constants_(std::move(constants)) {
  std::sort(constants_.begin(), constants_.end());
  constants_.erase(std::unique(constants_.begin(), constants_.end()), constants_.end());
}

const std::vector<expr::Expr>& ExprEnumerator::of_size(std::size_t size) {
  if (by_size_.size() <= size) {
    by_size_.resize(size + 1);
    built_.resize(size + 1, false);
  }
  if (!built_[size]) build(size);
  return by_size_[size];
}

void ExprEnumerator::build(std::size_t size) {
  std::vector<expr::Expr> out;
  if (size == 1) {
    for (std::size_t i = 0; i < arity_; ++i) out.push_back(expr::var(i));
    for (Coord c : constants_) out.push_back(expr::constant(c));
  }
  if (size >= 3) {
    for (int op = 0; op < 2; ++op) {
      for (std::size_t sa = 1; sa <= size - 2; ++sa) {
        const std::size_t sb = size - 1 - sa;
        const auto& as = of_size(sa);
        const auto& bs = of_size(sb);
        for (const auto& a : as) {
          for (const auto& b : bs) out.push_back(op == 0 ? expr::plus(a, b) : expr::minus(a, b));
        }
      }
    }
  }
  if (size >= 6) {
    const std::size_t rest = size - 2;
    for (int cmp = 0; cmp < 2; ++cmp) {
      for (std::size_t sa = 1; sa + 3 <= rest; ++sa) {
        for (std::size_t sb = 1; sa + sb + 2 <= rest; ++sb) {
          for (std::size_t st = 1; sa + sb + st + 1 <= rest; ++st) {
            const std::size_t se = rest - sa - sb - st;
            const auto& as = of_size(sa);
            const auto& bs = of_size(sb);
            const auto& ts = of_size(st);
            const auto& es = of_size(se);
            for (const auto& a : as) {
              for (const auto& b : bs) {
                auto cond = cmp == 0 ? expr::geq(a, b) : expr::leq(a, b);
                for (const auto& t : ts) {
                  for (const auto& e : es) out.push_back(expr::ite(cond, t, e));
                }
              }
            }
          }
        }
      }
    }
  }
  by_size_[size] = std::move(out);
  built_[size] = true;
}

namespace {

ComplexityOrdering<expr::Expr> bounded_expr_ordering(std::shared_ptr<ExprEnumerator> en,
                                                     std::size_t max_size) {
  ComplexityOrdering<expr::Expr> ord;
  ord.rank = [](const expr::Expr& e) { return Rank{expr::size(*e)}; };
  ord.exhaustive = false;
  ord.stream = [en, max_size] {
    struct State {
      std::size_t size = 1;
      std::size_t pos = 0;
    };
    auto st = std::make_shared<State>();
    return ComplexityOrdering<expr::Expr>::Cursor([en, st, max_size]() -> std::optional<expr::Expr> {
      while (st->size <= max_size) {
        const auto& batch = en->of_size(st->size);
        if (st->pos < batch.size()) return batch[st->pos++];
        ++st->size;
        st->pos = 0;
      }
      return std::nullopt;
    });
  };
  return ord;
}

}  // namespace

ComplexityOrdering<expr::Expr> expr_ordering(std::shared_ptr<ExprEnumerator> enumerator) {
  return bounded_expr_ordering(std::move(enumerator), std::numeric_limits<std::size_t>::max());
}

LearnerOutcome<expr::Expr> synth_learn(const SynthSpec& spec,
                                       const std::shared_ptr<ExprEnumerator>& enumerator,
                                       const GroundedSample& s, const Rank& rank_cap) {
  const std::size_t max_size = rank_cap.empty() ? 0 : static_cast<std::size_t>(rank_cap[0]);
  return occam_learn(
      bounded_expr_ordering(enumerator, max_size),
      [&](const expr::Expr& e, const GroundedSample& g) { return grounded_consistent(spec, e, g); },
      s, rank_cap);
}

DomainContract<GroundedSample, expr::Expr, expr::Expr> synth_domain(const SynthSpec& spec) {
  DomainContract<GroundedSample, expr::Expr, expr::Expr> d;
  d.lattice = grounded_lattice();
  d.consistent = [spec](const expr::Expr& e, const GroundedSample& s) {
    return grounded_consistent(spec, e, s);
  };
  return d;
}

FiniteUniverse<GroundedSample, expr::Expr, expr::Expr> synth_universe(
    const SynthSpec& spec, std::vector<expr::Expr> concepts) {
  FiniteUniverse<GroundedSample, expr::Expr, expr::Expr> u;
  u.concepts = std::move(concepts);
  u.contains = [spec](const GroundedSample& s, const expr::Expr& e) {
    return grounded_consistent(spec, e, s);
  };
  u.gamma = [](const expr::Expr& e) { return e; };
  return u;
}

}  // namespace alf
