// Acceptance harness: one PASS/FAIL line per criterion. Time limits and
// instance counts are pinned below; the exit status is 1 if any line fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "alf/boxes.hpp"
#include "alf/config.hpp"
#include "alf/gen.hpp"
#include "alf/instance.hpp"
#include "alf/invgen.hpp"
#include "alf/synth.hpp"

namespace fs = std::filesystem;
using namespace alf;

namespace {

struct Result {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

int failures = 0;

void criterion(int id, const char* name, double limit_s, const std::function<Result()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Result r;
  try {
    r = body();
  } catch (const std::exception& e) {
    r.fail(std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (r.ok && secs > limit_s) r.fail("over time limit");
  if (!r.ok) ++failures;
  std::printf("%s %2d %-28s %8.3fs / %5.1fs  %s\n", r.ok ? "PASS" : "FAIL", id, name, secs, limit_s,
              r.detail.c_str());
  std::fflush(stdout);
}

std::vector<fs::path> shipped_configs() {
  std::vector<fs::path> out;
  for (const auto& de : fs::directory_iterator(ALF_CONFIG_DIR))
    if (de.path().extension() == ".json") out.push_back(de.path());
  std::sort(out.begin(), out.end());
  return out;
}

Rect bbox(const PointSet& pts, std::size_t dim) {
  Rect r = Rect::empty(dim);
  for (const auto& p : pts) r = hull(r, Rect::point(p));
  return r;
}

/// Pushing any finite face outward by one admits a point of N.
bool facewise_maximal(const Rect& r, const PNSample& s) {
  for (std::size_t d = 0; d < r.dim(); ++d) {
    for (bool high : {false, true}) {
      auto f = r.factors();
      const ExtInt end = high ? f[d].hi() : f[d].lo();
      if (!end.finite()) continue;
      f[d] = high ? Interval::closed(f[d].lo(), end.value() + 1) : Interval::closed(end.value() - 1, f[d].hi());
      const Rect grown = Rect::product(f);
      if (std::none_of(s.N.begin(), s.N.end(), [&](const Point& n) { return grown.contains(n); })) return false;
    }
  }
  return true;
}

bool in_mask(const StateSpace& sp, ConceptMask x, const Point& p) {
  const auto i = sp.index(p);
  return i && ((x >> *i) & 1);
}

bool consistent_with_all(const StateSpace& sp, const ICESample& s, const std::vector<ConceptMask>& xs) {
  return std::all_of(xs.begin(), xs.end(), [&](ConceptMask x) {
    return ice_consistent([&](const Point& p) { return in_mask(sp, x, p); }, s);
  });
}

Result example_one() {
  Result r;
  const auto out = interval_occam_learn(PNSample{{{-2}, {5}}, {{-8}}}, Rank{1000});
  const auto* p = std::get_if<Proposal<Interval>>(&out);
  if (!p || to_string(p->hypothesis) != "[-2, inf]") r.fail("learner did not return [-2, inf]");
  if (interval_cmp(parse_interval("[-4, inf]"), parse_interval("[1, 7]")) != std::weak_ordering::less)
    r.fail("cmp([-4, inf], [1, 7]) is not Less");
  r.detail = r.ok ? "[-2, inf]; cmp Less" : r.detail;
  return r;
}

Result kappa_laws() {
  Result r;
  gen::Rng rng(2024);
  std::size_t pairs_total = 0;
  for (Coord states = 1; states <= 6; ++states) {
    const StateSpace sp(states <= 3 ? std::vector<VarDecl>{{"x", 0, states - 1}}
                                    : std::vector<VarDecl>{{"x", 0, 1}, {"y", 0, states / 2 - 1}});
    const auto dom = box_state_domain(sp);
    std::vector<std::pair<ICESample, ICESample>> pairs;
    for (int i = 0; i < 250; ++i) {
      auto a = gen::ice_sample(rng, sp, 3);
      auto b = gen::ice_sample(rng, sp, 3);
      if (i % 3 == 0) b = ice_lattice().join(a, b);
      pairs.emplace_back(std::move(a), std::move(b));
    }
    pairs_total += pairs.size();
    const auto vs = verify_kappa_laws(dom, std::span<const std::pair<ICESample, ICESample>>(pairs));
    if (!vs.empty()) r.fail(std::to_string(sp.size()) + " states: " + vs[0].clause);
  }
  const auto law = check_laws(load_config(fs::path(ALF_CONFIG_DIR) / "ice_small.json"), 200);
  if (!law.violations.empty()) r.fail("ice_small.json: " + law.violations[0].clause);
  if (r.ok) r.detail = std::to_string(pairs_total + law.pairs) + " pairs, 0 violations";
  return r;
}

Result progress_honesty_audits() {
  Result r;
  std::size_t n = 0;
  for (const auto& path : shipped_configs()) {
    const auto rep = run_config(load_config(path), true);
    ++n;
    if (!rep.audited) r.fail(path.filename().string() + ": not audited");
    if (!rep.skipped.empty()) r.fail(path.filename().string() + ": skipped " + rep.skipped[0]);
    if (!rep.violations.empty()) r.fail(path.filename().string() + ": " + rep.violations[0].clause);
  }
  if (r.ok) r.detail = std::to_string(n) + " configs, 0 violations";
  return r;
}

Result occam_convergence() {
  Result r;
  gen::Rng rng(4);
  std::vector<ExtInt> ends{ExtInt::neg_inf(), ExtInt::pos_inf()};
  for (Coord v = -21; v <= 21; ++v) ends.emplace_back(v);
  const int n = 300;
  for (int i = 0; i < n && r.ok; ++i) {
    const auto target = gen::box_target(rng, 1, -20, 20);
    const PNSample tgt{target.required, target.forbidden};
    const auto t = run_instance<PNSample, Interval>(
        pn_lattice(), [](const PNSample& s) { return interval_occam_learn(s, Rank{1000}); },
        [&](const Interval& h) { return box_teacher(target, h); }, PNSample{}, 200);
    const auto* c = std::get_if<Converged<Interval>>(&t.outcome);
    if (!c) {
      r.fail("instance " + std::to_string(i) + " did not converge");
      break;
    }
    std::uint64_t best = ~0ull;
    for (auto lo : ends)
      for (auto hi : ends) {
        if (!(lo <= hi) || lo == ExtInt::pos_inf() || hi == ExtInt::neg_inf()) continue;
        const auto cand = Interval::closed(lo, hi);
        if (interval_consistent(cand, tgt)) best = std::min(best, interval_complexity(cand));
      }
    if (!interval_consistent(c->hypothesis, tgt)) r.fail("instance " + std::to_string(i) + " left the target set");
    if (interval_complexity(c->hypothesis) != best)
      r.fail("instance " + std::to_string(i) + ": " + to_string(c->hypothesis) + " is not minimal");
  }
  if (r.ok) r.detail = std::to_string(n) + " instances minimal";
  return r;
}

Result wqo_maximality() {
  Result r;
  gen::Rng rng(5);
  const int n = 300;
  std::size_t checked = 0;
  for (int i = 0; i < n && r.ok; ++i) {
    const std::size_t dim = 1 + static_cast<std::size_t>(i % 3);
    const auto target = gen::box_target(rng, dim, -10, 10);
    const auto t = run_instance<PNSample, Rect>(
        pn_lattice(), [dim](const PNSample& s) { return rect_wqo_learner(s, dim); },
        [&](const Rect& h) { return box_teacher(target, h); }, PNSample{}, 200);
    if (!std::holds_alternative<Converged<Rect>>(t.outcome)) {
      r.fail("instance " + std::to_string(i) + " did not converge");
      break;
    }
    for (const auto& step : t.steps) {
      if (step.round == 0 || step.sample.P.empty()) continue;
      ++checked;
      if (!facewise_maximal(step.hypothesis, step.sample))
        r.fail("instance " + std::to_string(i) + " round " + std::to_string(step.round) + ": " +
               to_string(step.hypothesis) + " not maximal");
    }
  }
  if (r.ok) r.detail = std::to_string(n) + " instances, " + std::to_string(checked) + " hypotheses maximal";
  return r;
}

Result houdini_bounds() {
  Result r;
  gen::Rng rng(6);
  const int n = 200;
  for (int i = 0; i < n && r.ok; ++i) {
    const std::size_t m = 1 + static_cast<std::size_t>(i % 10);
    const auto pp = gen::planted_program(rng, m);
    const auto& q = pp.predicates;
    const auto t = run_instance<ICESample, ConjHypothesis>(
        ice_lattice(), [&](const ICESample& s) { return houdini_learn(q, s); },
        [&](const ConjHypothesis& h) {
          return ice_teacher(pp.program, [&](const Point& p) { return conj_holds(q, h, p); });
        },
        ICESample{}, 100);
    const auto* c = std::get_if<Converged<ConjHypothesis>>(&t.outcome);
    if (!c) r.fail("instance " + std::to_string(i) + " did not converge");
    else if (c->rounds > m + 1) r.fail("instance " + std::to_string(i) + " took " + std::to_string(c->rounds) + " proposals");
    for (const auto& step : t.steps)
      if (const auto* fb = std::get_if<Feedback<ICESample>>(&step.verdict); fb && !fb->sample.N.empty())
        r.fail("instance " + std::to_string(i) + " received a negative example");
  }
  if (r.ok) r.detail = std::to_string(n) + " planted programs, m <= 10";
  return r;
}

Result ice_teacher_honesty() {
  Result r;
  gen::Rng rng(7);
  std::size_t answers = 0;
  for (int i = 0; i < 300 && r.ok; ++i) {
    const auto prog = gen::small_program(rng, 16);
    const auto& sp = prog.space;
    const auto xs = enumerate_adequate_invariants(prog);
    for (int k = 0; k < 20; ++k) {
      const ConceptMask h = gen::state_subset(rng, sp);
      const auto v = ice_teacher(prog, [&](const Point& p) { return in_mask(sp, h, p); });
      ++answers;
      if (const auto* fb = std::get_if<Feedback<ICESample>>(&v)) {
        if (!consistent_with_all(sp, fb->sample, xs)) r.fail("program " + std::to_string(i) + ": dishonest feedback");
      } else if (std::find(xs.begin(), xs.end(), h) == xs.end()) {
        r.fail("program " + std::to_string(i) + ": accepted a non-invariant");
      }
    }
  }
  if (r.ok) r.detail = std::to_string(answers) + " answers consistent with every adequate invariant";
  return r;
}

Result pn_insufficiency() {
  Result r;
  const std::vector<std::string> x{"x"};
  auto px = [&](const char* s) { return expr::parse(s, x); };
  const LoopProgram w{StateSpace({{"x", 0, 15}}), px("(= x 0)"), px("(< x 10)"), px("(= x 10)"), {px("(+ x 2)")}};
  const auto& sp = w.space;
  const auto xs = enumerate_adequate_invariants(w);
  auto h = [](const Point& p) { return p[0] <= 8; };
  std::vector<std::string> refuting;
  for (std::size_t i = 0; i < sp.size(); ++i) {
    const Point p = sp.state(i);
    const bool everywhere = std::all_of(xs.begin(), xs.end(), [&](ConceptMask m) { return in_mask(sp, m, p); });
    const bool nowhere = std::none_of(xs.begin(), xs.end(), [&](ConceptMask m) { return in_mask(sp, m, p); });
    if (everywhere && !h(p)) refuting.push_back("+" + std::to_string(p[0]));
    if (nowhere && h(p)) refuting.push_back("-" + std::to_string(p[0]));
  }
  const ICESample imp{{}, {}, {{Point{8}, Point{10}}}};
  if (!consistent_with_all(sp, imp, xs) || ice_consistent(h, imp)) r.fail("implication (8,10) is not an honest refutation");
  if (!refuting.empty()) {
    std::string list;
    for (const auto& s : refuting) list += (list.empty() ? "" : " ") + s;
    r.fail("honest PN examples refute x <= 8: " + list);
  }
  if (r.ok) r.detail = "only the implication refutes x <= 8";
  return r;
}

Result abstract_post() {
  Result r;
  gen::Rng rng(9);
  const int n = 60;
  for (int i = 0; i < n && r.ok; ++i) {
    const auto ts = gen::transition_system(rng, 64);
    const auto xhat = gen::box_in(rng, ts.space);
    const std::size_t dim = ts.space.arity();
    Rect direct = Rect::empty(dim);
    for (std::size_t k = 0; k < ts.space.size(); ++k) {
      const Point s = ts.space.state(k);
      if (xhat.contains(s))
        for (const auto& t : ts.post(s)) direct = hull(direct, Rect::point(t));
    }
    const auto t = run_instance<ICESample, Rect>(
        ice_lattice(),
        [&](const ICESample& s) -> LearnerOutcome<Rect> { return Proposal<Rect>{alpha_join_learner(s, dim)}; },
        [&](const Rect& h) { return abstract_post_teacher(ts, xhat, h); }, ICESample{}, 200);
    const auto* c = std::get_if<Converged<Rect>>(&t.outcome);
    if (!c) r.fail("instance " + std::to_string(i) + " did not converge");
    else if (!(c->hypothesis == direct))
      r.fail("instance " + std::to_string(i) + ": " + to_string(c->hypothesis) + " != " + to_string(direct));
  }
  if (r.ok) r.detail = std::to_string(n) + " abstract elements";
  return r;
}

Result sygus() {
  Result r;
  struct Case {
    const char* name;
    SynthSpec spec;
  };
  const std::vector<Case> cases{
      {"abs", make_spec({{"x", -8, 8}}, "(and (>= (f x) x) (>= (f x) (- x)) (or (= (f x) x) (= (f x) (- x))))")},
      {"max", make_spec({{"x", -8, 8}, {"y", -8, 8}},
                        "(and (>= (f x y) x) (>= (f x y) y) (or (= (f x y) x) (= (f x y) y)))")}};
  for (const auto& [name, spec] : cases) {
    auto en = std::make_shared<ExprEnumerator>(spec.arity(), spec.constants);
    const auto t = run_instance<GroundedSample, expr::Expr>(
        grounded_lattice(), [&](const GroundedSample& s) { return synth_learn(spec, en, s, Rank{12}); },
        [&](const expr::Expr& e) { return cegis_teacher(spec, e); }, GroundedSample{}, 200);
    const auto* c = std::get_if<Converged<expr::Expr>>(&t.outcome);
    if (!c) {
      r.fail(std::string(name) + " did not converge");
      continue;
    }
    if (!accepted(cegis_teacher(spec, c->hypothesis))) r.fail(std::string(name) + " fails verification");
    const std::size_t sz = expr::size(*c->hypothesis);
    for (std::size_t s = 1; s < sz; ++s)
      for (const auto& e : en->of_size(s))
        if (accepted(cegis_teacher(spec, e))) r.fail(std::string(name) + ": smaller solution exists");
    if (r.ok) r.detail += std::string(r.detail.empty() ? "" : "; ") + name + " = " +
                          expr::print(*c->hypothesis, spec.input_names()) + " (size " + std::to_string(sz) + ")";
  }
  return r;
}

Result determinism() {
  Result r;
  std::size_t n = 0;
  for (const auto& path : shipped_configs()) {
    const auto cfg = load_config(path);
    ++n;
    if (dump_trace(run_config(cfg, false).trace) != dump_trace(run_config(cfg, false).trace))
      r.fail(path.filename().string() + " traces differ");
  }
  if (r.ok) r.detail = std::to_string(n) + " configs byte-identical";
  return r;
}

}  // namespace

int main() {
  criterion(1, "example-1", 1, example_one);
  criterion(2, "kappa-laws", 5, kappa_laws);
  criterion(3, "progress-honesty-audit", 10, progress_honesty_audits);
  criterion(4, "occam-convergence", 30, occam_convergence);
  criterion(5, "wqo-maximality", 60, wqo_maximality);
  criterion(6, "houdini-bounds", 30, houdini_bounds);
  criterion(7, "ice-teacher-honesty", 30, ice_teacher_honesty);
  criterion(8, "pn-insufficiency", 5, pn_insufficiency);
  criterion(9, "best-abstract-post", 10, abstract_post);
  criterion(10, "sygus-lite", 60, sygus);
  criterion(11, "determinism", 10, determinism);
  std::printf("%d of 11 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
