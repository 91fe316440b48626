#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace skein {

/// Precondition violated by an argument (zero vector, pole, n < 1, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An invariant the library relies on failed; always a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " at offset " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace skein
