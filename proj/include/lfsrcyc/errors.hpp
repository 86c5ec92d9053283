#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lfsrcyc {

// Precondition violated by the caller: mismatched fields, zero divisor,
// reducible input where an irreducible one is required, and so on.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Malformed textual input. position is a 0-based character offset.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position);
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// A configured cap (state count, trial-division bound, period) was exceeded,
// or an integer quantity does not fit in 64 bits.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A search over a caller-supplied candidate list came up empty.
class NotFoundError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A mathematical guarantee failed to hold. Never expected to fire.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace lfsrcyc
