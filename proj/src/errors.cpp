#include "lfsrcyc/errors.hpp"

namespace lfsrcyc {

ParseError::ParseError(const std::string& what, std::size_t position)
    : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
      position_(position) {}

}  // namespace lfsrcyc
