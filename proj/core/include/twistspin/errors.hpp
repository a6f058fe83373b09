#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace twistspin {

// Malformed textual input. `position` is a byte offset into the parsed text.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " (at offset " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// Well-formed input that violates a mathematical precondition
// (non-coprime parameters, multi-component diagrams, m = 0 where it is excluded...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A computation refused because it would exceed a configured work ceiling.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace twistspin
