#pragma once

// The learning-framework contracts: sample lattices, consistency, verdicts,
// learner outcomes, the iterated learning loop and its trace audits.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include "alf/par.hpp"

namespace alf {

/// Lexicographically compared complexity rank.
using Rank = std::vector<std::uint64_t>;

std::string to_string(const Rank& r);

/// Bit i set iff universe element i belongs to the concept.
using ConceptMask = std::uint64_t;

/// Broken teacher or learner contract detected by the loop.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

template <class S>
struct SampleLattice {
  std::function<S()> bottom;
  std::function<S(const S&, const S&)> join;
  std::function<bool(const S&, const S&)> leq;

  bool equivalent(const S& a, const S& b) const { return leq(a, b) && leq(b, a); }
};

/// Finite view of a concept space: an enumeration of concepts, membership of
/// a concept in kappa(sample), and gamma on hypotheses.
template <class S, class H, class C = ConceptMask>
struct FiniteUniverse {
  std::vector<C> concepts;
  std::function<bool(const S&, const C&)> contains;
  std::function<C(const H&)> gamma;

  /// kappa(s) as a membership vector indexed like `concepts`.
  std::vector<char> kappa(const S& s) const {
    return par::tabulate(concepts.size(),
                         [&](std::size_t i) { return contains(s, concepts[i]); });
  }
};

template <class S, class H, class C = ConceptMask>
struct DomainContract {
  SampleLattice<S> lattice;
  std::function<bool(const H&, const S&)> consistent;
  std::optional<FiniteUniverse<S, H, C>> universe;
};

// ---------------------------------------------------------------- verdicts

struct Accept {
  bool operator==(const Accept&) const = default;
};

template <class S>
struct Feedback {
  S sample;
};

/// Accept stands for the teacher answering with the bottom sample.
template <class S>
using Verdict = std::variant<Accept, Feedback<S>>;

template <class S>
bool accepted(const Verdict<S>& v) {
  return std::holds_alternative<Accept>(v);
}

// -------------------------------------------------------- learner outcomes

template <class H>
struct Proposal {
  H hypothesis;
};

struct Unrealizable {};

struct CapExhausted {
  Rank cap;
};

template <class H>
using LearnerOutcome = std::variant<Proposal<H>, Unrealizable, CapExhausted>;

// ------------------------------------------------------------ run outcomes

template <class H>
struct Converged {
  H hypothesis;
  std::size_t rounds;
};

struct UnrealizableAt {
  std::size_t rounds;
};

struct BudgetExhausted {
  std::size_t budget;
};

struct CapExhaustedAt {
  Rank cap;
  std::size_t rounds;
};

template <class H>
using RunOutcome = std::variant<Converged<H>, UnrealizableAt, BudgetExhausted,
                                CapExhaustedAt>;

template <class S, class H>
struct Step {
  std::size_t round;
  S sample;
  H hypothesis;
  Verdict<S> verdict;
};

template <class S, class H>
struct Trace {
  std::vector<Step<S, H>> steps;
  RunOutcome<H> outcome = BudgetExhausted{0};
};

/// Iterates S <- S join teacher(learner(S)) from `initial` for at most
/// `budget` rounds.
///
/// Learner: const S& -> LearnerOutcome<H>. Teacher: const H& -> Verdict<S>.
/// Throws ContractViolation when the teacher answers Feedback with a sample
/// equivalent to bottom.
template <class S, class H, class Learner, class Teacher>
Trace<S, H> run_instance(const SampleLattice<S>& lattice, Learner&& learner,
                         Teacher&& teacher, S initial, std::size_t budget) {
  Trace<S, H> trace;
  const S bottom = lattice.bottom();
  S current = std::move(initial);
  for (std::size_t round = 0; round < budget; ++round) {
    LearnerOutcome<H> out = learner(static_cast<const S&>(current));
    if (std::holds_alternative<Unrealizable>(out)) {
      trace.outcome = UnrealizableAt{round};
      return trace;
    }
    if (auto* cap = std::get_if<CapExhausted>(&out)) {
      trace.outcome = CapExhaustedAt{cap->cap, round};
      return trace;
    }
    H hyp = std::get<Proposal<H>>(std::move(out)).hypothesis;
    Verdict<S> verdict = teacher(static_cast<const H&>(hyp));
    if (const auto* fb = std::get_if<Feedback<S>>(&verdict)) {
      if (lattice.leq(fb->sample, bottom)) {
        throw ContractViolation("teacher returned the bottom sample as feedback in round " +
                                std::to_string(round));
      }
      S next = lattice.join(current, fb->sample);
      trace.steps.push_back(Step<S, H>{round, std::move(current), std::move(hyp),
                                       std::move(verdict)});
      current = std::move(next);
      continue;
    }
    trace.steps.push_back(
        Step<S, H>{round, std::move(current), hyp, std::move(verdict)});
    trace.outcome = Converged<H>{std::move(hyp), round + 1};
    return trace;
  }
  trace.outcome = BudgetExhausted{budget};
  return trace;
}

// ------------------------------------------------------------------ audits

struct Violation {
  std::size_t index;  ///< round for trace audits, pair index for law audits
  std::string clause;
  std::string detail;
};

/// Checks that every non-final round makes progress: the proposed hypothesis
/// is inconsistent with the next sample, which lies above the current one.
/// Also checks round numbering, that Accept only ends a trace, and that the
/// recorded next sample equals the join of the current sample and feedback.
template <class S, class H, class C>
std::vector<Violation> verify_progress(const Trace<S, H>& trace,
                                       const DomainContract<S, H, C>& domain) {
  std::vector<Violation> out;
  const auto& lat = domain.lattice;
  const S bottom = lat.bottom();
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const auto& step = trace.steps[i];
    if (step.round != i) {
      out.push_back({i, "round-index",
                     "expected round " + std::to_string(i) + ", found " +
                         std::to_string(step.round)});
    }
    const auto* fb = std::get_if<Feedback<S>>(&step.verdict);
    if (!fb) {
      if (i + 1 != trace.steps.size()) {
        out.push_back({i, "accept-not-final", "rounds continue after Accept"});
      }
      continue;
    }
    if (lat.leq(fb->sample, bottom)) {
      out.push_back({i, "bottom-feedback", "feedback equals the bottom sample"});
    }
    const S next = lat.join(step.sample, fb->sample);
    if (i + 1 < trace.steps.size()) {
      const S& recorded = trace.steps[i + 1].sample;
      if (!lat.leq(step.sample, recorded)) {
        out.push_back({i, "sample-monotone", "next sample is not above the current one"});
      }
      if (!lat.equivalent(recorded, next)) {
        out.push_back({i, "join-replay", "next sample differs from current joined with feedback"});
      }
    }
    if (domain.consistent(step.hypothesis, next)) {
      out.push_back({i, "progress", "hypothesis is still consistent with the next sample"});
    }
  }
  return out;
}

/// Checks that every feedback sample keeps every target concept consistent.
/// Throws std::invalid_argument when the domain has no finite universe.
template <class S, class H, class C>
std::vector<Violation> verify_honesty(const Trace<S, H>& trace,
                                      const DomainContract<S, H, C>& domain,
                                      std::span<const C> targets) {
  if (!domain.universe) {
    throw std::invalid_argument("verify_honesty needs a finite-universe descriptor");
  }
  const auto& contains = domain.universe->contains;
  std::vector<Violation> out;
  for (const auto& step : trace.steps) {
    const auto* fb = std::get_if<Feedback<S>>(&step.verdict);
    if (!fb) continue;
    const std::size_t bad = par::first_match(
        targets.size(), [&](std::size_t t) { return !contains(fb->sample, targets[t]); });
    if (bad != npos) {
      out.push_back({step.round, "honesty",
                     "feedback excludes target concept #" + std::to_string(bad)});
    }
  }
  return out;
}

inline constexpr std::size_t kDefaultUniverseCap = std::size_t{1} << 20;

/// Checks kappa(bottom) = all concepts and, per pair, the join law
/// kappa(S1 join S2) = kappa(S1) ∩ kappa(S2) plus monotonicity of kappa
/// along leq.
template <class S, class H, class C>
std::vector<Violation> verify_kappa_laws(const DomainContract<S, H, C>& domain,
                                         std::span<const std::pair<S, S>> pairs,
                                         std::size_t cap = kDefaultUniverseCap) {
  if (!domain.universe) {
    throw std::invalid_argument("verify_kappa_laws needs a finite-universe descriptor");
  }
  const auto& u = *domain.universe;
  if (u.concepts.size() > cap) {
    throw std::invalid_argument("concept universe of size " +
                                std::to_string(u.concepts.size()) +
                                " exceeds the cap " + std::to_string(cap));
  }
  const auto& lat = domain.lattice;
  std::vector<Violation> out;

  const auto kb = u.kappa(lat.bottom());
  for (std::size_t c = 0; c < kb.size(); ++c) {
    if (!kb[c]) {
      out.push_back({0, "kappa-bottom",
                     "concept #" + std::to_string(c) + " missing from kappa(bottom)"});
      break;
    }
  }

  for (std::size_t p = 0; p < pairs.size(); ++p) {
    const auto& [s1, s2] = pairs[p];
    const S joined = lat.join(s1, s2);
    const auto k1 = u.kappa(s1);
    const auto k2 = u.kappa(s2);
    const auto kj = u.kappa(joined);
    for (std::size_t c = 0; c < kj.size(); ++c) {
      if (static_cast<bool>(kj[c]) != (k1[c] && k2[c])) {
        out.push_back({p, "join-law",
                       "concept #" + std::to_string(c) + ": kappa(join)=" +
                           std::to_string(kj[c]) + ", kappa(S1)∩kappa(S2)=" +
                           std::to_string(k1[c] && k2[c])});
        break;
      }
    }
    if (!lat.leq(s1, joined) || !lat.leq(s2, joined)) {
      out.push_back({p, "join-upper-bound", "join is not above both operands"});
    }
    // Remark 1: leq(a, b) implies kappa(b) ⊆ kappa(a).
    auto monotone = [&](const std::vector<char>& ka, const std::vector<char>& kb2) {
      for (std::size_t c = 0; c < ka.size(); ++c) {
        if (kb2[c] && !ka[c]) return c;
      }
      return npos;
    };
    if (lat.leq(s1, s2)) {
      if (auto c = monotone(k1, k2); c != npos) {
        out.push_back({p, "monotonicity",
                       "S1 ⊑ S2 but concept #" + std::to_string(c) + " in kappa(S2) only"});
      }
    }
    if (lat.leq(s2, s1)) {
      if (auto c = monotone(k2, k1); c != npos) {
        out.push_back({p, "monotonicity",
                       "S2 ⊑ S1 but concept #" + std::to_string(c) + " in kappa(S1) only"});
      }
    }
    if (auto c = monotone(k1, kj); c != npos) {
      out.push_back({p, "monotonicity",
                     "concept #" + std::to_string(c) + " in kappa(join) but not kappa(S1)"});
    }
  }
  return out;
}

/// Checks consistent(h, s) == gamma(h) ∈ kappa(s) on every combination.
template <class S, class H, class C>
std::vector<Violation> verify_gamma_agreement(const DomainContract<S, H, C>& domain,
                                              std::span<const H> hypotheses,
                                              std::span<const S> samples) {
  if (!domain.universe) {
    throw std::invalid_argument("verify_gamma_agreement needs a finite-universe descriptor");
  }
  const auto& u = *domain.universe;
  std::vector<Violation> out;
  for (std::size_t si = 0; si < samples.size(); ++si) {
    for (std::size_t hi = 0; hi < hypotheses.size(); ++hi) {
      const bool by_h = domain.consistent(hypotheses[hi], samples[si]);
      const bool by_c = u.contains(samples[si], u.gamma(hypotheses[hi]));
      if (by_h != by_c) {
        out.push_back({si, "gamma-agreement",
                       "hypothesis #" + std::to_string(hi) + " disagrees with its concept"});
      }
    }
  }
  return out;
}

/// Semilattice laws on every pair/triple drawn from `samples`:
/// commutativity, associativity, idempotence, bottom identity, and
/// leq(a,b) iff join(a,b) ≡ b.
template <class S>
std::vector<Violation> verify_lattice_laws(const SampleLattice<S>& lat,
                                           std::span<const S> samples) {
  std::vector<Violation> out;
  const S bottom = lat.bottom();
  const std::size_t n = samples.size();
  for (std::size_t i = 0; i < n; ++i) {
    const S& a = samples[i];
    if (!lat.equivalent(lat.join(a, a), a)) out.push_back({i, "idempotence", ""});
    if (!lat.equivalent(lat.join(bottom, a), a)) out.push_back({i, "bottom-identity", ""});
    if (!lat.leq(bottom, a)) out.push_back({i, "bottom-least", ""});
    for (std::size_t j = 0; j < n; ++j) {
      const S& b = samples[j];
      const S ab = lat.join(a, b);
      if (!lat.equivalent(ab, lat.join(b, a))) out.push_back({i, "commutativity", ""});
      if (lat.leq(a, b) != lat.equivalent(ab, b)) out.push_back({i, "leq-join", ""});
      for (std::size_t k = 0; k < n; ++k) {
        const S& c = samples[k];
        if (!lat.equivalent(lat.join(ab, c), lat.join(a, lat.join(b, c)))) {
          out.push_back({i, "associativity", ""});
        }
      }
    }
  }
  return out;
}

}  // namespace alf
