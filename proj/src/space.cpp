#include "alf/space.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace alf {

std::size_t max_states() {
  if (const char* env = std::getenv("ALFSYNTH_MAX_STATES")) {
    try {
      const auto v = std::stoull(env);
      if (v > 0) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
  }
  return kDefaultMaxStates;
}

StateSpace::StateSpace(std::vector<VarDecl> vars, std::size_t cap) : vars_(std::move(vars)) {
  strides_.assign(vars_.size(), 0);
  std::size_t total = 1;
  for (std::size_t i = vars_.size(); i-- > 0;) {
    names_.insert(names_.begin(), vars_[i].name);
    strides_[i] = total;
    if (vars_[i].hi < vars_[i].lo) {
      total = 0;
      continue;
    }
    const auto width = static_cast<std::size_t>(vars_[i].hi - vars_[i].lo) + 1;
    if (total != 0 && width > cap / total) {
      throw std::invalid_argument("state space exceeds the scan cap of " +
                                  std::to_string(cap) + " states");
    }
    total *= width;
  }
  if (total > cap) {
    throw std::invalid_argument("state space exceeds the scan cap of " +
                                std::to_string(cap) + " states");
  }
  size_ = total;
}

Point StateSpace::state(std::size_t index) const {
  Point p;
  p.coords.resize(vars_.size());
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    const auto width = static_cast<std::size_t>(vars_[i].hi - vars_[i].lo) + 1;
    p.coords[i] = vars_[i].lo + static_cast<Coord>((index / strides_[i]) % width);
  }
  return p;
}

std::optional<std::size_t> StateSpace::index(const Point& p) const {
  if (!contains(p)) return std::nullopt;
  std::size_t idx = 0;
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    idx += static_cast<std::size_t>(p[i] - vars_[i].lo) * strides_[i];
  }
  return idx;
}

bool StateSpace::contains(const Point& p) const {
  if (p.dim() != vars_.size() || size_ == 0) return false;
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (p[i] < vars_[i].lo || p[i] > vars_[i].hi) return false;
  }
  return true;
}

Point StateSpace::clamp(Point p) const {
  for (std::size_t i = 0; i < vars_.size() && i < p.dim(); ++i) {
    p.coords[i] = std::clamp(p.coords[i], vars_[i].lo, vars_[i].hi);
  }
  return p;
}

}  // namespace alf
