#pragma once

#include <stdexcept>
#include <string>

namespace cyclo {

// Base class for all errors thrown by the library.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Mismatched contexts: wrong ring size r, wrong group rank n, indices out of
// range.  Distinct from mathematical precondition violations so callers can
// map it to a usage error.
struct ConfigError : Error {
  explicit ConfigError(const std::string& msg) : Error(msg) {}
};

// A mathematical precondition failed (element not a distinguished
// representative, generator outside a subalgebra, q specialized to 0, ...).
struct DomainError : Error {
  explicit DomainError(const std::string& msg) : Error(msg) {}
};

// An internal invariant that the theory guarantees failed to hold; always a
// bug in this library rather than in the caller.
struct InternalError : Error {
  explicit InternalError(const std::string& msg) : Error(msg) {}
};

}  // namespace cyclo
