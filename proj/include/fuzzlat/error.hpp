#pragma once

#include <stdexcept>
#include <string>

namespace fuzzlat {

// Input: malformed or inconsistent data (bad tables, universe mismatch,
// cross-lattice degrees, structures that fail their preconditions).
// Budget: an enumeration refused because it exceeds the configured bound.
enum class ErrorKind { Input, Budget };

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& msg)
      : std::runtime_error(msg), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

[[noreturn]] inline void throw_input(const std::string& msg) {
  throw Error(ErrorKind::Input, msg);
}

[[noreturn]] inline void throw_budget(const std::string& msg) {
  throw Error(ErrorKind::Budget, msg);
}

} // namespace fuzzlat
