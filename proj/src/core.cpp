#include "alf/core.hpp"

namespace alf {

std::string to_string(const Rank& r) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < r.size(); ++i) os << (i ? ", " : "") << r[i];
  os << ')';
  return os.str();
}

}  // namespace alf
