#include "alf/boxes.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <map>
#include <memory>
#include <set>
#include <stdexcept>

namespace alf {

std::string to_string(ExtInt e) {
  switch (e.kind()) {
    case ExtInt::Kind::NegInf: return "-inf";
    case ExtInt::Kind::PosInf: return "inf";
    case ExtInt::Kind::Finite: break;
  }
  return std::to_string(e.value());
}

Interval Interval::closed(ExtInt lo, ExtInt hi) {
  if (lo == ExtInt::pos_inf() || hi == ExtInt::neg_inf() || hi < lo) {
    throw std::invalid_argument("invalid interval [" + to_string(lo) + ", " +
                                to_string(hi) + "]");
  }
  Interval iv;
  iv.empty_ = false;
  iv.lo_ = lo;
  iv.hi_ = hi;
  return iv;
}

std::string to_string(const Interval& iv) {
  if (iv.is_empty()) return "Empty";
  return "[" + to_string(iv.lo()) + ", " + to_string(iv.hi()) + "]";
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return s;
}

ExtInt parse_endpoint(std::string_view s) {
  s = trim(s);
  if (s == "inf" || s == "+inf") return ExtInt::pos_inf();
  if (s == "-inf") return ExtInt::neg_inf();
  Coord v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw std::invalid_argument("bad interval endpoint '" + std::string(s) + "'");
  }
  return ExtInt(v);
}

std::uint64_t magnitude(Coord v) {
  return v < 0 ? static_cast<std::uint64_t>(-(v + 1)) + 1 : static_cast<std::uint64_t>(v);
}

}  // namespace

Interval parse_interval(std::string_view text) {
  text = trim(text);
  if (text == "Empty") return Interval::empty();
  if (text.size() < 2 || text.front() != '[' || text.back() != ']') {
    throw std::invalid_argument("bad interval '" + std::string(text) + "'");
  }
  const auto body = text.substr(1, text.size() - 2);
  const auto comma = body.find(',');
  if (comma == std::string_view::npos) {
    throw std::invalid_argument("bad interval '" + std::string(text) + "'");
  }
  return Interval::closed(parse_endpoint(body.substr(0, comma)),
                          parse_endpoint(body.substr(comma + 1)));
}

std::uint64_t interval_complexity(const Interval& iv) {
  if (iv.is_empty()) return 0;
  std::uint64_t c = 0;
  if (iv.lo().finite()) c = std::max(c, magnitude(iv.lo().value()));
  if (iv.hi().finite()) c = std::max(c, magnitude(iv.hi().value()));
  return c;
}

std::weak_ordering interval_cmp(const Interval& a, const Interval& b) {
  return interval_complexity(a) <=> interval_complexity(b);
}

bool interval_consistent(const Interval& iv, const PNSample& s) {
  return pn_consistent([&](const Point& p) { return iv.contains(p[0]); }, s);
}

bool interval_realizable(const PNSample& s) {
  if (s.P.empty()) return true;
  const Coord lo = s.P.begin()->coords.at(0);
  const Coord hi = s.P.rbegin()->coords.at(0);
  for (const auto& n : s.N) {
    if (lo <= n[0] && n[0] <= hi) return false;
  }
  return true;
}

std::vector<Interval> intervals_of_complexity(std::uint64_t c) {
  const auto bound = static_cast<Coord>(c);
  std::vector<ExtInt> values;
  values.push_back(ExtInt::neg_inf());
  for (Coord v = -bound; v <= bound; ++v) values.push_back(ExtInt(v));
  values.push_back(ExtInt::pos_inf());

  std::vector<Interval> out;
  if (c == 0) out.push_back(Interval::everything());
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] == ExtInt::pos_inf()) continue;
    for (std::size_t j = i; j < values.size(); ++j) {
      if (values[j] == ExtInt::neg_inf()) continue;
      const Interval iv = Interval::closed(values[i], values[j]);
      if (c == 0 && iv == Interval::everything()) continue;
      if (interval_complexity(iv) == c) out.push_back(iv);
    }
  }
  return out;
}

ComplexityOrdering<Interval> interval_ordering() {
  ComplexityOrdering<Interval> ord;
  ord.rank = [](const Interval& iv) { return Rank{interval_complexity(iv)}; };
  ord.stream = [] {
    struct State {
      std::uint64_t level = 0;
      std::size_t pos = 0;
      std::vector<Interval> batch = intervals_of_complexity(0);
    };
    auto st = std::make_shared<State>();
    return ComplexityOrdering<Interval>::Cursor([st]() -> std::optional<Interval> {
      while (st->pos == st->batch.size()) {
        st->batch = intervals_of_complexity(++st->level);
        st->pos = 0;
      }
      return st->batch[st->pos++];
    });
  };
  ord.exhaustive = false;
  return ord;
}

LearnerOutcome<Interval> interval_occam_learn(const PNSample& s, const Rank& rank_cap) {
  if (!interval_realizable(s)) return Unrealizable{};
  return occam_learn(interval_ordering(), interval_consistent, s, rank_cap);
}

// -------------------------------------------------------------------- Rect

Rect Rect::empty(std::size_t dim) {
  if (dim == 0) throw std::invalid_argument("rectangle dimension must be >= 1");
  Rect r;
  r.dim_ = dim;
  return r;
}

Rect Rect::product(std::vector<Interval> factors) {
  if (factors.empty()) throw std::invalid_argument("rectangle dimension must be >= 1");
  Rect r;
  r.dim_ = factors.size();
  if (std::none_of(factors.begin(), factors.end(),
                   [](const Interval& iv) { return iv.is_empty(); })) {
    r.factors_ = std::move(factors);
  }
  return r;
}

Rect Rect::point(const Point& p) {
  std::vector<Interval> f;
  f.reserve(p.dim());
  for (Coord c : p.coords) f.push_back(Interval::closed(c, c));
  return product(std::move(f));
}

Rect Rect::everything(std::size_t dim) {
  return product(std::vector<Interval>(dim, Interval::everything()));
}

bool Rect::contains(const Point& p) const {
  if (factors_.empty() || p.dim() != dim_) return false;
  for (std::size_t d = 0; d < dim_; ++d) {
    if (!factors_[d].contains(p[d])) return false;
  }
  return true;
}

Rect hull(const Rect& a, const Rect& b) {
  if (a.is_empty()) return b;
  if (b.is_empty()) return a;
  if (a.dim() != b.dim()) throw std::invalid_argument("hull of rectangles of different dimension");
  std::vector<Interval> f;
  for (std::size_t d = 0; d < a.dim(); ++d) {
    const auto& x = a.factors()[d];
    const auto& y = b.factors()[d];
    f.push_back(Interval::closed(std::min(x.lo(), y.lo()), std::max(x.hi(), y.hi())));
  }
  return Rect::product(std::move(f));
}

std::string to_string(const Rect& r) {
  if (r.is_empty()) return "Empty";
  std::string out;
  for (std::size_t d = 0; d < r.dim(); ++d) {
    if (d) out += " x ";
    out += to_string(r.factors()[d]);
  }
  return out;
}

Rect parse_rect(std::string_view text, std::size_t dim) {
  text = trim(text);
  if (text == "Empty") return Rect::empty(dim);
  std::vector<Interval> f;
  for (;;) {
    const auto sep = text.find(" x ");
    f.push_back(parse_interval(text.substr(0, sep)));
    if (sep == std::string_view::npos) break;
    text.remove_prefix(sep + 3);
  }
  if (f.size() != dim) {
    throw std::invalid_argument("expected a " + std::to_string(dim) +
                                "-dimensional rectangle, got " + std::to_string(f.size()));
  }
  return Rect::product(std::move(f));
}

bool rect_consistent(const Rect& r, const PNSample& s) {
  return pn_consistent([&](const Point& p) { return r.contains(p); }, s);
}

std::vector<Face> canonical_face_order(std::size_t dim) {
  std::vector<Face> out;
  for (std::size_t d = 0; d < dim; ++d) {
    out.push_back({d, false});
    out.push_back({d, true});
  }
  return out;
}

std::optional<Rect> maximal_consistent_rect(const PNSample& s, std::size_t dim,
                                            std::span<const Face> face_order) {
  if (s.P.empty()) throw std::invalid_argument("maximal_consistent_rect needs a positive point");
  if (face_order.size() != 2 * dim) throw std::invalid_argument("face order must list 2n faces");
  std::set<std::pair<std::size_t, bool>> seen;
  for (const auto& f : face_order) {
    if (f.dim >= dim || !seen.insert({f.dim, f.high}).second) {
      throw std::invalid_argument("face order is not a permutation of the faces");
    }
  }

  std::vector<ExtInt> lo, hi;
  for (std::size_t d = 0; d < dim; ++d) {
    Coord mn = s.P.begin()->coords.at(d), mx = mn;
    for (const auto& p : s.P) {
      mn = std::min(mn, p.coords.at(d));
      mx = std::max(mx, p.coords.at(d));
    }
    lo.emplace_back(mn);
    hi.emplace_back(mx);
  }

  auto inside_except = [&](const Point& n, std::size_t skip) {
    for (std::size_t e = 0; e < dim; ++e) {
      if (e == skip) continue;
      if (ExtInt(n[e]) < lo[e] || hi[e] < ExtInt(n[e])) return false;
    }
    return true;
  };

  for (const auto& n : s.N) {
    if (inside_except(n, dim) ) return std::nullopt;
  }

  for (const auto& f : face_order) {
    const std::size_t d = f.dim;
    std::optional<Coord> block;
    for (const auto& n : s.N) {
      if (!inside_except(n, d)) continue;
      if (!f.high && ExtInt(n[d]) < lo[d]) {
        block = block ? std::max(*block, n[d]) : n[d];
      } else if (f.high && hi[d] < ExtInt(n[d])) {
        block = block ? std::min(*block, n[d]) : n[d];
      }
    }
    if (f.high) {
      hi[d] = block ? ExtInt(*block - 1) : ExtInt::pos_inf();
    } else {
      lo[d] = block ? ExtInt(*block + 1) : ExtInt::neg_inf();
    }
  }

  std::vector<Interval> factors;
  for (std::size_t d = 0; d < dim; ++d) factors.push_back(Interval::closed(lo[d], hi[d]));
  return Rect::product(std::move(factors));
}

LearnerOutcome<Rect> rect_wqo_learner(const PNSample& s, std::size_t dim) {
  if (s.P.empty()) return Proposal<Rect>{Rect::empty(dim)};
  const auto order = canonical_face_order(dim);
  auto r = maximal_consistent_rect(s, dim, order);
  if (!r) return Unrealizable{};
  return Proposal<Rect>{*r};
}

bool box_target_realizable(const BoxTarget& t) {
  if (t.required.empty()) return true;
  PNSample s{t.required, t.forbidden};
  const std::size_t dim = t.required.begin()->dim();
  return maximal_consistent_rect(s, dim, canonical_face_order(dim)).has_value();
}

Verdict<PNSample> box_teacher(const BoxTarget& target, const Rect& h) {
  for (const auto& p : target.required) {
    if (!h.contains(p)) return Feedback<PNSample>{{{p}, {}}};
  }
  for (const auto& n : target.forbidden) {
    if (h.contains(n)) return Feedback<PNSample>{{{}, {n}}};
  }
  return Accept{};
}

Verdict<PNSample> box_teacher(const BoxTarget& target, const Interval& h) {
  return box_teacher(target, Rect::product({h}));
}

DomainContract<PNSample, Interval> interval_domain() {
  return {pn_lattice(), interval_consistent, std::nullopt};
}

DomainContract<PNSample, Rect> rect_domain() {
  return {pn_lattice(), rect_consistent, std::nullopt};
}

namespace {

template <class H, class Contains>
FiniteUniverse<PNSample, H> point_universe(std::vector<Point> universe, Contains contains_h) {
  if (universe.size() > 20) throw std::invalid_argument("point universe larger than 20 points");
  std::sort(universe.begin(), universe.end());
  universe.erase(std::unique(universe.begin(), universe.end()), universe.end());
  auto index = std::make_shared<std::map<Point, std::size_t>>();
  for (std::size_t i = 0; i < universe.size(); ++i) (*index)[universe[i]] = i;

  FiniteUniverse<PNSample, H> u;
  u.concepts.resize(std::size_t{1} << universe.size());
  for (std::size_t m = 0; m < u.concepts.size(); ++m) u.concepts[m] = m;
  u.contains = [index](const PNSample& s, const ConceptMask& c) {
    auto in = [&](const Point& p) {
      auto it = index->find(p);
      return it != index->end() && ((c >> it->second) & 1U);
    };
    return pn_consistent(in, s);
  };
  auto pts = std::make_shared<std::vector<Point>>(std::move(universe));
  u.gamma = [pts, contains_h](const H& h) {
    ConceptMask m = 0;
    for (std::size_t i = 0; i < pts->size(); ++i) {
      if (contains_h(h, (*pts)[i])) m |= ConceptMask{1} << i;
    }
    return m;
  };
  return u;
}

}  // namespace

FiniteUniverse<PNSample, Interval> interval_universe(std::vector<Point> universe) {
  return point_universe<Interval>(std::move(universe), [](const Interval& iv, const Point& p) {
    return iv.contains(p[0]);
  });
}

FiniteUniverse<PNSample, Rect> rect_universe(std::vector<Point> universe) {
  return point_universe<Rect>(std::move(universe),
                              [](const Rect& r, const Point& p) { return r.contains(p); });
}

std::vector<ConceptMask> box_target_concepts(std::span<const Point> universe_in,
                                             const BoxTarget& target, std::size_t dim) {
  std::vector<Point> universe(universe_in.begin(), universe_in.end());
  std::sort(universe.begin(), universe.end());
  universe.erase(std::unique(universe.begin(), universe.end()), universe.end());
  if (universe.size() > 20) throw std::invalid_argument("point universe larger than 20 points");

  // Per dimension, the traces of intervals on the universe coordinates are
  // the contiguous runs of distinct coordinate values, plus the empty run.
  std::vector<std::vector<ConceptMask>> per_dim(dim);
  for (std::size_t d = 0; d < dim; ++d) {
    std::vector<Coord> vals;
    for (const auto& p : universe) vals.push_back(p[d]);
    std::sort(vals.begin(), vals.end());
    vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
    std::set<ConceptMask> masks{0};
    for (std::size_t i = 0; i < vals.size(); ++i) {
      for (std::size_t j = i; j < vals.size(); ++j) {
        ConceptMask m = 0;
        for (std::size_t k = 0; k < universe.size(); ++k) {
          if (vals[i] <= universe[k][d] && universe[k][d] <= vals[j]) m |= ConceptMask{1} << k;
        }
        masks.insert(m);
      }
    }
    per_dim[d].assign(masks.begin(), masks.end());
  }

  ConceptMask need = 0, avoid = 0;
  for (std::size_t k = 0; k < universe.size(); ++k) {
    if (target.required.contains(universe[k])) need |= ConceptMask{1} << k;
    if (target.forbidden.contains(universe[k])) avoid |= ConceptMask{1} << k;
  }

  std::set<ConceptMask> out;
  const ConceptMask all = universe.empty() ? 0 : (ConceptMask{1} << universe.size()) - 1;
  std::vector<std::size_t> idx(dim, 0);
  for (;;) {
    ConceptMask m = all;
    for (std::size_t d = 0; d < dim; ++d) m &= per_dim[d][idx[d]];
    if ((m & need) == need && (m & avoid) == 0) out.insert(m);
    std::size_t d = 0;
    while (d < dim && ++idx[d] == per_dim[d].size()) idx[d++] = 0;
    if (d == dim) break;
  }
  return {out.begin(), out.end()};
}

}  // namespace alf
