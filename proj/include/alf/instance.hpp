#pragma once

// Dispatch from a validated config to a concrete learner/teacher pair: run
// the loop, emit the trace document, audit traces, and check the kappa laws
// of the instance's sample space.

#include <cstddef>
#include <string>
#include <vector>

#include "alf/codec.hpp"
#include "alf/config.hpp"
#include "alf/core.hpp"

namespace alf {

enum ExitCode : int { kExitConverged = 0, kExitError = 1, kExitBudget = 2, kExitUnrealizable = 3 };

struct RunReport {
  /// converged | unrealizable | budget-exhausted | cap-exhausted
  std::string status;
  std::size_t rounds = 0;
  /// Final hypothesis when converged, otherwise empty.
  std::string hypothesis;
  /// Trace document: config_digest, kind, learner, seed, budget, rounds,
  /// outcome.
  Json trace;
  bool audited = false;
  std::vector<Violation> violations;
  /// Audits that could not run, with the reason.
  std::vector<std::string> skipped;

  int exit_code() const;
};

/// Runs the instance. With `checked`, the trace is audited for progress and,
/// when the instance has a finite universe, for honesty against its target
/// set. CapExhausted is reported as status cap-exhausted.
RunReport run_config(const InstanceConfig& cfg, bool checked);

/// Trace document as written by `run --trace`: two-space indented JSON with
/// a trailing newline.
std::string dump_trace(const Json& trace);

/// Decodes `trace`, checks its digest against `cfg`, audits it for progress,
/// and replays the instance to compare rounds and outcome.
std::vector<Violation> check_trace(const InstanceConfig& cfg, const Json& trace);

struct LawReport {
  std::size_t concepts = 0;
  std::size_t pairs = 0;
  std::vector<Violation> violations;
};

/// Draws `pairs` random sample pairs (seeded by the config) over the
/// instance's finite universe and runs the kappa-law and lattice-law audits.
/// Throws std::invalid_argument when the instance has no finite universe.
LawReport check_laws(const InstanceConfig& cfg, std::size_t pairs = 200);

}  // namespace alf
