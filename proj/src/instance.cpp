#include "alf/instance.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <memory>

#include "alf/gen.hpp"

namespace alf {

namespace {

template <class S, class H, class C = ConceptMask>
struct Instance {
  using Sample = S;
  using Hyp = H;

  std::function<LearnerOutcome<H>(const S&)> learner;
  std::function<Verdict<S>(const H&)> teacher;
  DomainContract<S, H, C> domain;
  HypPrinter<H> print;
  std::function<H(const std::string&)> parse;
  std::function<S(const Json&, const std::string&)> decode;
  /// Target concepts for the honesty audit; unset when there is no oracle.
  std::function<std::vector<C>(const Trace<S, H>&)> targets;
  std::string no_targets_reason;
  std::function<S(gen::Rng&)> random_sample;
};

std::vector<Point> target_points(const BoxTarget& t) {
  std::vector<Point> pts(t.required.begin(), t.required.end());
  pts.insert(pts.end(), t.forbidden.begin(), t.forbidden.end());
  return pts;
}

constexpr std::size_t kMaxUniversePoints = 20;
constexpr std::size_t kMaxUniverseStates = 16;

template <class H, class Universe>
void attach_box_universe(Instance<PNSample, H>& inst, const BoxParams& p, Universe make_universe) {
  auto pts = target_points(p.target);
  if (pts.size() > kMaxUniversePoints) {
    inst.no_targets_reason = "target has more than 20 points";
    return;
  }
  inst.domain.universe = make_universe(pts);
  inst.targets = [pts, p](const Trace<PNSample, H>&) {
    return box_target_concepts(pts, p.target, p.dim);
  };
  auto shared = std::make_shared<std::vector<Point>>(pts);
  inst.random_sample = [shared](gen::Rng& rng) { return gen::pn_sample(rng, *shared, 3); };
}

Instance<PNSample, Interval> interval_instance(const BoxParams& p) {
  Instance<PNSample, Interval> inst;
  inst.learner = [](const PNSample& s) {
    return interval_occam_learn(s, Rank{std::numeric_limits<std::uint64_t>::max()});
  };
  inst.teacher = [target = p.target](const Interval& h) { return box_teacher(target, h); };
  inst.domain = interval_domain();
  inst.print = [](const Interval& h) { return to_string(h); };
  inst.parse = [](const std::string& t) { return parse_interval(t); };
  inst.decode = pn_from_json;
  attach_box_universe(inst, p, [](std::vector<Point> pts) { return interval_universe(std::move(pts)); });
  return inst;
}

Instance<PNSample, Rect> rect_instance(const BoxParams& p) {
  Instance<PNSample, Rect> inst;
  inst.learner = [dim = p.dim](const PNSample& s) { return rect_wqo_learner(s, dim); };
  inst.teacher = [target = p.target](const Rect& h) { return box_teacher(target, h); };
  inst.domain = rect_domain();
  inst.print = [](const Rect& h) { return to_string(h); };
  inst.parse = [dim = p.dim](const std::string& t) { return parse_rect(t, dim); };
  inst.decode = pn_from_json;
  attach_box_universe(inst, p, [](std::vector<Point> pts) { return rect_universe(std::move(pts)); });
  return inst;
}

ConjHypothesis parse_conj(const PredicateList& preds, const std::string& text) {
  ConjHypothesis h;
  if (text == "true") return h;
  std::size_t from = 0, next = 0;
  for (;;) {
    const std::size_t cut = text.find(" && ", from);
    const std::string part = text.substr(from, cut == std::string::npos ? std::string::npos : cut - from);
    while (next < preds.size() && preds.sources[next] != part) ++next;
    if (next == preds.size()) throw std::invalid_argument("unknown or out-of-order predicate '" + part + "'");
    h.chosen.push_back(next++);
    if (cut == std::string::npos) break;
    from = cut + 4;
  }
  return h;
}

Instance<ICESample, ConjHypothesis> program_instance(const ProgramParams& p, const std::string& learner) {
  Instance<ICESample, ConjHypothesis> inst;
  auto preds = std::make_shared<PredicateList>(p.predicates);
  if (learner == "houdini") {
    inst.learner = [preds](const ICESample& s) { return houdini_learn(*preds, s); };
  } else {
    const auto ordering = conj_ordering(preds->size());
    inst.learner = [preds, ordering](const ICESample& s) {
      return occam_learn(
          ordering,
          [&](const ConjHypothesis& h, const ICESample& x) { return conj_consistent(*preds, h, x); },
          s, Rank{preds->size()});
    };
  }
  auto prog = std::make_shared<LoopProgram>(p.program);
  inst.teacher = [prog, preds](const ConjHypothesis& h) {
    return ice_teacher(*prog, [&](const Point& s) { return conj_holds(*preds, h, s); });
  };
  inst.domain = conj_domain(*prog, *preds, kMaxUniverseStates);
  inst.print = [preds](const ConjHypothesis& h) { return to_string(*preds, h); };
  inst.parse = [preds](const std::string& t) { return parse_conj(*preds, t); };
  inst.decode = ice_from_json;
  if (inst.domain.universe) {
    inst.targets = [prog](const Trace<ICESample, ConjHypothesis>&) {
      return enumerate_adequate_invariants(*prog, kMaxUniverseStates);
    };
    inst.random_sample = [prog](gen::Rng& rng) { return gen::ice_sample(rng, prog->space, 3); };
  } else {
    inst.no_targets_reason = "program has more than 16 states";
  }
  return inst;
}

template <class Learner, class Teacher, class Targets>
Instance<ICESample, Rect> state_box_instance(std::shared_ptr<TransitionSystem> ts, Learner learner,
                                             Teacher teacher, Targets targets) {
  Instance<ICESample, Rect> inst;
  const std::size_t dim = ts->space.arity();
  inst.learner = std::move(learner);
  inst.teacher = std::move(teacher);
  inst.domain = box_state_domain(ts->space, kMaxUniverseStates);
  inst.print = [](const Rect& h) { return to_string(h); };
  inst.parse = [dim](const std::string& t) { return parse_rect(t, dim); };
  inst.decode = ice_from_json;
  if (inst.domain.universe) {
    inst.targets = [ts, targets](const Trace<ICESample, Rect>&) { return targets(*ts); };
    inst.random_sample = [ts](gen::Rng& rng) { return gen::ice_sample(rng, ts->space, 3); };
  } else {
    inst.no_targets_reason = "system has more than 16 states";
  }
  return inst;
}

Instance<ICESample, Rect> fixpoint_instance(const FixpointParams& p) {
  auto ts = std::make_shared<TransitionSystem>(p.system);
  const std::size_t dim = ts->space.arity();
  return state_box_instance(
      ts, [dim](const ICESample& s) { return box_hull_learn(s, dim); },
      [ts](const Rect& h) { return fixpoint_teacher(*ts, h); },
      [](const TransitionSystem& sys) { return enumerate_adequate_fixpoints(sys, kMaxUniverseStates); });
}

Instance<ICESample, Rect> abstract_post_instance(const AbstractPostParams& p) {
  auto ts = std::make_shared<TransitionSystem>(p.system);
  const std::size_t dim = ts->space.arity();
  const Rect xhat = p.xhat;
  return state_box_instance(
      ts,
      [dim](const ICESample& s) -> LearnerOutcome<Rect> {
        return Proposal<Rect>{alpha_join_learner(s, dim)};
      },
      [ts, xhat](const Rect& h) { return abstract_post_teacher(*ts, xhat, h); },
      [xhat](const TransitionSystem& sys) {
        return abstract_post_targets(sys, xhat, kMaxUniverseStates);
      });
}

Instance<GroundedSample, expr::Expr, expr::Expr> sygus_instance(const SygusParams& p) {
  Instance<GroundedSample, expr::Expr, expr::Expr> inst;
  auto spec = std::make_shared<SynthSpec>(p.spec);
  auto en = std::make_shared<ExprEnumerator>(spec->arity(), spec->constants);
  const Rank cap{p.max_size};
  inst.learner = [spec, en, cap](const GroundedSample& s) { return synth_learn(*spec, en, s, cap); };
  inst.teacher = [spec](const expr::Expr& e) { return cegis_teacher(*spec, e); };
  inst.domain = synth_domain(*spec);

  // Small concepts for the law audit; honesty only uses `contains`.
  std::vector<expr::Expr> small;
  for (std::size_t n = 1; n <= 3; ++n) {
    const auto& batch = en->of_size(n);
    small.insert(small.end(), batch.begin(), batch.end());
  }
  inst.domain.universe = synth_universe(*spec, std::move(small));

  const auto names = spec->input_names();
  inst.print = [names](const expr::Expr& e) { return expr::print(*e, names); };
  inst.parse = [names](const std::string& t) { return expr::parse(t, names); };
  inst.decode = grounded_from_json;
  // Targets: every grammar expression, up to the largest proposed size,
  // that passes exhaustive verification.
  inst.targets = [spec, en](const Trace<GroundedSample, expr::Expr>& t) {
    std::size_t limit = 0;
    for (const auto& st : t.steps) limit = std::max(limit, expr::size(*st.hypothesis));
    std::vector<expr::Expr> out;
    for (std::size_t n = 1; n <= limit; ++n) {
      const auto& batch = en->of_size(n);
      const auto ok = par::matches(batch.size(), [&](std::size_t i) {
        return accepted(cegis_teacher(*spec, batch[i]));
      });
      for (auto i : ok) out.push_back(batch[i]);
    }
    return out;
  };
  inst.random_sample = [spec](gen::Rng& rng) {
    return gen::grounded_sample(rng, StateSpace(spec->inputs), 3);
  };
  return inst;
}

template <class F>
decltype(auto) with_instance(const InstanceConfig& cfg, F&& f) {
  switch (cfg.kind) {
    case Kind::Interval: {
      const auto& p = std::get<BoxParams>(cfg.params);
      if (cfg.learner == "wqo") return f(rect_instance(p));
      return f(interval_instance(p));
    }
    case Kind::Rectangle: return f(rect_instance(std::get<BoxParams>(cfg.params)));
    case Kind::Houdini:
    case Kind::IceInvariant:
      return f(program_instance(std::get<ProgramParams>(cfg.params), cfg.learner));
    case Kind::AdequateFixpoint: return f(fixpoint_instance(std::get<FixpointParams>(cfg.params)));
    case Kind::AbstractPost:
      return f(abstract_post_instance(std::get<AbstractPostParams>(cfg.params)));
    case Kind::SygusLite: return f(sygus_instance(std::get<SygusParams>(cfg.params)));
  }
  throw std::logic_error("unhandled instance kind");
}

template <class S, class H, class C>
Trace<S, H> execute(const InstanceConfig& cfg, const Instance<S, H, C>& inst) {
  return run_instance<S, H>(inst.domain.lattice, inst.learner, inst.teacher,
                            inst.domain.lattice.bottom(), cfg.budget);
}

template <class S, class H, class C>
Json trace_document(const InstanceConfig& cfg, const Instance<S, H, C>& inst, const Trace<S, H>& t) {
  return Json{{"config_digest", cfg.digest},
              {"kind", kind_name(cfg.kind)},
              {"learner", cfg.learner},
              {"seed", cfg.seed},
              {"budget", cfg.budget},
              {"rounds", rounds_to_json(t, inst.print)},
              {"outcome", outcome_to_json(t.outcome, inst.print)}};
}

}  // namespace

int RunReport::exit_code() const {
  if (status == "converged") return kExitConverged;
  if (status == "budget-exhausted") return kExitBudget;
  if (status == "unrealizable") return kExitUnrealizable;
  return kExitError;
}

std::string dump_trace(const Json& trace) { return trace.dump(2) + "\n"; }

RunReport run_config(const InstanceConfig& cfg, bool checked) {
  return with_instance(cfg, [&](const auto& inst) {
    const auto trace = execute(cfg, inst);
    RunReport r;
    r.trace = trace_document(cfg, inst, trace);
    const auto& outcome = r.trace["outcome"];
    r.status = outcome["status"].template get<std::string>();
    if (outcome.contains("rounds")) r.rounds = outcome["rounds"].template get<std::size_t>();
    else r.rounds = trace.steps.size();
    if (outcome.contains("hypothesis")) r.hypothesis = outcome["hypothesis"].template get<std::string>();
    if (checked) {
      r.audited = true;
      r.violations = verify_progress(trace, inst.domain);
      if (inst.targets) {
        const auto targets = inst.targets(trace);
        auto honesty = verify_honesty(trace, inst.domain, std::span(targets));
        r.violations.insert(r.violations.end(), honesty.begin(), honesty.end());
      } else {
        r.skipped.push_back("honesty: " + inst.no_targets_reason);
      }
    }
    return r;
  });
}

std::vector<Violation> check_trace(const InstanceConfig& cfg, const Json& doc) {
  return with_instance(cfg, [&](const auto& inst) {
    std::vector<Violation> out;
    if (!doc.is_object() || doc.value("config_digest", std::string{}) != cfg.digest) {
      out.push_back({0, "config-digest", "trace was not produced from this config"});
    }
    using I = std::decay_t<decltype(inst)>;
    const auto decoded =
        trace_from_json<typename I::Sample, typename I::Hyp>(doc, inst.decode, inst.parse);
    auto progress = verify_progress(decoded, inst.domain);
    out.insert(out.end(), progress.begin(), progress.end());

    const Json replay = trace_document(cfg, inst, execute(cfg, inst));
    if (!doc.contains("outcome") || doc["outcome"] != replay["outcome"]) {
      out.push_back({decoded.steps.size(), "replay-outcome",
                     "replayed outcome " + replay["outcome"].dump() + " differs"});
    }
    if (doc["rounds"] != replay["rounds"]) {
      std::size_t i = 0;
      const auto& a = doc["rounds"];
      const auto& b = replay["rounds"];
      while (i < a.size() && i < b.size() && a[i] == b[i]) ++i;
      out.push_back({i, "replay-rounds", "recorded round differs from the replay"});
    }
    return out;
  });
}

LawReport check_laws(const InstanceConfig& cfg, std::size_t pairs) {
  return with_instance(cfg, [&](const auto& inst) {
    if (!inst.domain.universe || !inst.random_sample) {
      throw std::invalid_argument("instance has no finite universe: " + inst.no_targets_reason);
    }
    using S = typename std::decay_t<decltype(inst)>::Sample;
    gen::Rng rng(cfg.seed);
    const auto& lat = inst.domain.lattice;
    std::vector<std::pair<S, S>> ps;
    ps.emplace_back(lat.bottom(), lat.bottom());
    while (ps.size() < pairs) {
      S a = inst.random_sample(rng);
      S b = inst.random_sample(rng);
      // Every third pair is ordered so that monotonicity is exercised.
      if (ps.size() % 3 == 0) b = lat.join(a, b);
      ps.emplace_back(std::move(a), std::move(b));
    }
    LawReport r;
    r.concepts = inst.domain.universe->concepts.size();
    r.pairs = ps.size();
    r.violations = verify_kappa_laws(inst.domain, std::span<const std::pair<S, S>>(ps));

    std::vector<S> few;
    for (std::size_t i = 0; i < ps.size() && few.size() < 12; ++i) few.push_back(ps[i].first);
    auto lattice = verify_lattice_laws(lat, std::span<const S>(few));
    r.violations.insert(r.violations.end(), lattice.begin(), lattice.end());
    return r;
  });
}

}  // namespace alf
