#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace greenp {

// Bad prime, index out of range, or an operation applied to an input outside
// its domain (e.g. a virtual element where a genuine module is required).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A configured resource guard was exceeded (oracle caps, enumeration caps).
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public DomainError {
 public:
  ParseError(const std::string& what, std::size_t position)
      : DomainError(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Signals a broken internal invariant in the oracle, never bad user input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace greenp
