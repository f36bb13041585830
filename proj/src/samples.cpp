#include "alf/samples.hpp"

#include <algorithm>
#include <sstream>

namespace alf {

namespace {

template <class T>
std::set<T> unite(const std::set<T>& a, const std::set<T>& b) {
  std::set<T> out = a;
  out.insert(b.begin(), b.end());
  return out;
}

template <class T>
bool subset(const std::set<T>& a, const std::set<T>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

std::string to_string(const Point& p) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < p.dim(); ++i) os << (i ? "," : "") << p[i];
  os << ')';
  return os.str();
}

PNSample pn_join(const PNSample& a, const PNSample& b) {
  return {unite(a.P, b.P), unite(a.N, b.N)};
}

bool pn_leq(const PNSample& a, const PNSample& b) {
  return subset(a.P, b.P) && subset(a.N, b.N);
}

ICESample ice_join(const ICESample& a, const ICESample& b) {
  return {unite(a.P, b.P), unite(a.N, b.N), unite(a.I, b.I)};
}

bool ice_leq(const ICESample& a, const ICESample& b) {
  return subset(a.P, b.P) && subset(a.N, b.N) && subset(a.I, b.I);
}

GroundedSample grounded_join(const GroundedSample& a, const GroundedSample& b) {
  return {unite(a.V, b.V)};
}

bool grounded_leq(const GroundedSample& a, const GroundedSample& b) {
  return subset(a.V, b.V);
}

SampleLattice<PNSample> pn_lattice() {
  return {[] { return PNSample{}; }, pn_join, pn_leq};
}

SampleLattice<ICESample> ice_lattice() {
  return {[] { return ICESample{}; }, ice_join, ice_leq};
}

SampleLattice<GroundedSample> grounded_lattice() {
  return {[] { return GroundedSample{}; }, grounded_join, grounded_leq};
}

bool ice_consistent(const Membership& in_concept, const ICESample& s) {
  for (const auto& p : s.P) {
    if (!in_concept(p)) return false;
  }
  for (const auto& n : s.N) {
    if (in_concept(n)) return false;
  }
  for (const auto& [from, to] : s.I) {
    if (in_concept(from) && !in_concept(to)) return false;
  }
  return true;
}

bool ice_consistent(const PointSet& members, const ICESample& s) {
  return ice_consistent([&](const Point& p) { return members.contains(p); }, s);
}

bool pn_consistent(const Membership& in_concept, const PNSample& s) {
  for (const auto& p : s.P) {
    if (!in_concept(p)) return false;
  }
  for (const auto& n : s.N) {
    if (in_concept(n)) return false;
  }
  return true;
}

ICESample to_ice(const PNSample& s) { return {s.P, s.N, {}}; }

ICESample to_ice(const GroundedSample& s) { return {s.V, {}, {}}; }

}  // namespace alf
