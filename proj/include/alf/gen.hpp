#pragma once

// Seeded random instance generators for property tests and `suite --random`.
// Learners and teachers never draw randomness; only these helpers do.

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "alf/boxes.hpp"
#include "alf/codec.hpp"
#include "alf/invgen.hpp"
#include "alf/samples.hpp"
#include "alf/space.hpp"

namespace alf::gen {

using Rng = std::mt19937_64;

Coord uniform(Rng& rng, Coord lo, Coord hi);

/// Realizable by construction: up to three required points in [lo, hi]^dim
/// and up to four forbidden points outside their bounding box.
BoxTarget box_target(Rng& rng, std::size_t dim, Coord lo, Coord hi);

/// A program whose conjunction of `planted` predicates is an adequate
/// invariant. The guard conjoins the invariant's weakest precondition under
/// the body (with in-bounds checks), so inductiveness holds by construction.
struct PlantedProgram {
  LoopProgram program;
  PredicateList predicates;
  ConjHypothesis planted;
};

PlantedProgram planted_program(Rng& rng, std::size_t predicate_count);

/// Unconstrained program over at most `max_states` states.
LoopProgram small_program(Rng& rng, std::size_t max_states = 16);

/// Random atomic predicates over the program's variables.
PredicateList random_predicates(Rng& rng, const StateSpace& space, std::size_t count);

TransitionSystem transition_system(Rng& rng, std::size_t max_states);

/// A random box over the space's bounds, occasionally Empty or unbounded on
/// one side.
Rect box_in(Rng& rng, const StateSpace& space);

PNSample pn_sample(Rng& rng, std::span<const Point> universe, std::size_t max_each);
ICESample ice_sample(Rng& rng, const StateSpace& space, std::size_t max_each);
GroundedSample grounded_sample(Rng& rng, const StateSpace& space, std::size_t max_count);

/// Random subset of the space's states as a mask (space of at most 64 states).
ConceptMask state_subset(Rng& rng, const StateSpace& space);

/// A config document for a random interval or rectangle instance.
Json box_config(Rng& rng, std::size_t dim, std::size_t budget);

}  // namespace alf::gen
