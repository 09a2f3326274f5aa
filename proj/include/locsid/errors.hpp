#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace locsid {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on the inputs was violated.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Malformed serialized input. `position` is a byte offset when known.
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what, std::size_t position = 0)
      : Error(what), position_(position)
  {
  }
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// A configured size cap was exceeded; `required` reports what would have
/// been needed (edges, nodes, blocks, contraction width, ...).
class CapExceeded : public Error {
 public:
  CapExceeded(const std::string& what, std::uint64_t required, std::uint64_t cap)
      : Error(what + " (required " + std::to_string(required) + ", cap " + std::to_string(cap) + ")"),
        required_(required),
        cap_(cap)
  {
  }
  std::uint64_t required() const { return required_; }
  std::uint64_t cap() const { return cap_; }

 private:
  std::uint64_t required_;
  std::uint64_t cap_;
};

}  // namespace locsid
