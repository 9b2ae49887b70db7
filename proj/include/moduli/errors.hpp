#pragma once

#include <stdexcept>
#include <string>

namespace moduli {

/// Caller asked for something outside the supported domain: an unstable
/// (g,n), a budget overrun, malformed input.
class RefusalError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Two routes that must agree did not. Always a bug, never bad input.
class ConsistencyError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

inline bool is_stable(int g, int n) { return g >= 0 && n >= 1 && 2 * g - 2 + n > 0; }

inline void require_stable(int g, int n) {
  if (!is_stable(g, n))
    throw RefusalError("unstable type (g,n) = (" + std::to_string(g) + "," +
                       std::to_string(n) + "): need g >= 0, n >= 1, 2g-2+n > 0");
}

}  // namespace moduli
