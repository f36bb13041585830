#pragma once

// Concrete sample lattices: positive/negative, ICE (with implications), and
// grounded input valuations. Sets are std::set so iteration, equality and
// serialization are canonical.

#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "alf/core.hpp"

namespace alf {

using Coord = std::int64_t;

struct Point {
  std::vector<Coord> coords;

  Point() = default;
  explicit Point(std::vector<Coord> c) : coords(std::move(c)) {}
  Point(std::initializer_list<Coord> c) : coords(c) {}

  std::size_t dim() const { return coords.size(); }
  Coord operator[](std::size_t i) const { return coords[i]; }

  auto operator<=>(const Point&) const = default;
  bool operator==(const Point&) const = default;
};

std::string to_string(const Point& p);

using PointSet = std::set<Point>;
using Implication = std::pair<Point, Point>;

struct PNSample {
  PointSet P;
  PointSet N;

  bool operator==(const PNSample&) const = default;
};

struct ICESample {
  PointSet P;
  PointSet N;
  std::set<Implication> I;

  bool operator==(const ICESample&) const = default;
};

struct GroundedSample {
  PointSet V;

  bool operator==(const GroundedSample&) const = default;
};

PNSample pn_join(const PNSample& a, const PNSample& b);
bool pn_leq(const PNSample& a, const PNSample& b);

ICESample ice_join(const ICESample& a, const ICESample& b);
bool ice_leq(const ICESample& a, const ICESample& b);

GroundedSample grounded_join(const GroundedSample& a, const GroundedSample& b);
bool grounded_leq(const GroundedSample& a, const GroundedSample& b);

SampleLattice<PNSample> pn_lattice();
SampleLattice<ICESample> ice_lattice();
SampleLattice<GroundedSample> grounded_lattice();

using Membership = std::function<bool(const Point&)>;

/// P ⊆ C, N ∩ C = ∅, and C is closed under every implication.
bool ice_consistent(const Membership& in_concept, const ICESample& s);
bool ice_consistent(const PointSet& members, const ICESample& s);

/// P ⊆ C and N ∩ C = ∅.
bool pn_consistent(const Membership& in_concept, const PNSample& s);

/// PN samples are ICE samples without implications.
ICESample to_ice(const PNSample& s);

/// Grounded valuations translated as positive examples.
ICESample to_ice(const GroundedSample& s);

}  // namespace alf
