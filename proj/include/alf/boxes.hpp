#pragma once

// Intervals and hyperrectangles over Z ∪ {-inf, +inf}: the complexity
// ordering of intervals (max absolute finite endpoint) with its Occam learner,
// the facewise maximal consistent rectangle and the wqo learner built on it,
// and a deterministic teacher for hidden box targets.

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "alf/core.hpp"
#include "alf/occam.hpp"
#include "alf/samples.hpp"

namespace alf {

class ExtInt {
 public:
  enum class Kind : std::uint8_t { NegInf, Finite, PosInf };

  constexpr ExtInt(Coord v) : kind_(Kind::Finite), value_(v) {}  // NOLINT
  static constexpr ExtInt neg_inf() { return ExtInt(Kind::NegInf); }
  static constexpr ExtInt pos_inf() { return ExtInt(Kind::PosInf); }

  constexpr Kind kind() const { return kind_; }
  constexpr bool finite() const { return kind_ == Kind::Finite; }
  constexpr Coord value() const { return value_; }

  constexpr auto operator<=>(const ExtInt&) const = default;

 private:
  constexpr explicit ExtInt(Kind k) : kind_(k), value_(0) {}
  Kind kind_;
  Coord value_;
};

std::string to_string(ExtInt e);

class Interval {
 public:
  static Interval empty() { return Interval(); }
  /// Throws std::invalid_argument unless lo <= hi, lo != +inf, hi != -inf.
  static Interval closed(ExtInt lo, ExtInt hi);
  static Interval everything() { return closed(ExtInt::neg_inf(), ExtInt::pos_inf()); }

  bool is_empty() const { return empty_; }
  ExtInt lo() const { return lo_; }
  ExtInt hi() const { return hi_; }
  bool contains(Coord x) const { return !empty_ && lo_ <= ExtInt(x) && ExtInt(x) <= hi_; }

  bool operator==(const Interval&) const = default;

 private:
  Interval() = default;
  bool empty_ = true;
  ExtInt lo_ = ExtInt::pos_inf();
  ExtInt hi_ = ExtInt::neg_inf();
};

std::string to_string(const Interval& iv);
/// Accepts `Empty` and `[l, r]` with `inf`/`-inf` endpoints.
Interval parse_interval(std::string_view text);

/// Max |x| over finite endpoints; 0 when there is none and for Empty.
std::uint64_t interval_complexity(const Interval& iv);
std::weak_ordering interval_cmp(const Interval& a, const Interval& b);

bool interval_consistent(const Interval& iv, const PNSample& s);
/// Some interval contains all of P and none of N (1-D points).
bool interval_realizable(const PNSample& s);

/// Non-empty intervals of complexity exactly c in enumeration order: for
/// c = 0, [-inf, inf] first; then by (lo, hi) lexicographically, -inf least.
std::vector<Interval> intervals_of_complexity(std::uint64_t c);

/// The Occam ordering on non-empty intervals; rank is (complexity).
ComplexityOrdering<Interval> interval_ordering();

LearnerOutcome<Interval> interval_occam_learn(const PNSample& s, const Rank& rank_cap);

class Rect {
 public:
  static Rect empty(std::size_t dim);
  /// Collapses to Empty when any factor is empty.
  static Rect product(std::vector<Interval> factors);
  static Rect point(const Point& p);
  static Rect everything(std::size_t dim);

  std::size_t dim() const { return dim_; }
  bool is_empty() const { return factors_.empty(); }
  /// Empty vector for the empty rectangle.
  const std::vector<Interval>& factors() const { return factors_; }
  bool contains(const Point& p) const;

  bool operator==(const Rect&) const = default;

 private:
  std::size_t dim_ = 1;
  std::vector<Interval> factors_;
};

/// Componentwise interval hull; Empty is the identity.
Rect hull(const Rect& a, const Rect& b);

std::string to_string(const Rect& r);
/// Accepts `Empty` or factors joined by ` x `. `dim` is used for Empty.
Rect parse_rect(std::string_view text, std::size_t dim);

bool rect_consistent(const Rect& r, const PNSample& s);

struct Face {
  std::size_t dim;
  bool high;

  bool operator==(const Face&) const = default;
};

/// Dimensions ascending, low face before high face.
std::vector<Face> canonical_face_order(std::size_t dim);

/// Starts from the bounding box of P and pushes each face outward, in
/// `face_order`, as far as it goes without admitting a point of N. Returns
/// nullopt iff some point of N lies in the bounding box of P. Throws
/// std::invalid_argument when P is empty or face_order is not a permutation
/// of the 2n faces.
std::optional<Rect> maximal_consistent_rect(const PNSample& s, std::size_t dim,
                                            std::span<const Face> face_order);

/// Empty for a sample without positives, otherwise the canonical-order
/// maximal consistent rectangle.
LearnerOutcome<Rect> rect_wqo_learner(const PNSample& s, std::size_t dim);

struct BoxTarget {
  PointSet required;
  PointSet forbidden;
};

/// The bounding box of the required points excludes every forbidden point.
bool box_target_realizable(const BoxTarget& t);

/// Smallest required point outside h as a positive example, else the
/// smallest forbidden point inside h as a negative example, else Accept.
Verdict<PNSample> box_teacher(const BoxTarget& target, const Rect& h);
Verdict<PNSample> box_teacher(const BoxTarget& target, const Interval& h);

DomainContract<PNSample, Interval> interval_domain();
DomainContract<PNSample, Rect> rect_domain();

/// Concepts are all subsets of `universe` (at most 20 points). A sample
/// point outside the universe counts as a point no concept contains.
FiniteUniverse<PNSample, Interval> interval_universe(std::vector<Point> universe);
FiniteUniverse<PNSample, Rect> rect_universe(std::vector<Point> universe);

/// Traces of every rectangle containing target.required and excluding
/// target.forbidden on `universe`, deduplicated, ascending.
std::vector<ConceptMask> box_target_concepts(std::span<const Point> universe,
                                             const BoxTarget& target, std::size_t dim);

}  // namespace alf
