#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "alf/samples.hpp"

namespace alf {

struct VarDecl {
  std::string name;
  Coord lo;
  Coord hi;
};

/// Default exhaustive-scan cap; ALFSYNTH_MAX_STATES overrides it.
inline constexpr std::size_t kDefaultMaxStates = std::size_t{1} << 20;
std::size_t max_states();

/// A bounded box of integer valuations, indexed in lexicographic order (the
/// first variable is most significant), so the smallest index is the
/// lexicographically smallest state. A variable with lo > hi makes the space
/// empty.
class StateSpace {
 public:
  /// Throws std::invalid_argument when the space holds more than `cap` states.
  explicit StateSpace(std::vector<VarDecl> vars, std::size_t cap = max_states());

  std::size_t size() const { return size_; }
  std::size_t arity() const { return vars_.size(); }
  const std::vector<VarDecl>& vars() const { return vars_; }
  const std::vector<std::string>& names() const { return names_; }

  Point state(std::size_t index) const;
  std::optional<std::size_t> index(const Point& p) const;
  bool contains(const Point& p) const;
  Point clamp(Point p) const;

 private:
  std::vector<VarDecl> vars_;
  std::vector<std::string> names_;
  std::vector<std::size_t> strides_;
  std::size_t size_ = 0;
};

}  // namespace alf
