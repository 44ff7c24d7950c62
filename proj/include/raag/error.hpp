#ifndef RAAG_ERROR_HPP_
#define RAAG_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace raag {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed graph file or word token. `line` is 1-based, 0 when unknown.
class ParseError : public Error {
 public:
  ParseError(std::string const& what, std::size_t line = 0)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class UnknownVertex : public Error {
 public:
  explicit UnknownVertex(std::string const& name)
      : Error("unknown vertex '" + name + "'") {}
};

class GraphMismatch : public Error {
 public:
  GraphMismatch() : Error("elements belong to different defining graphs") {}
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Raised when an exhaustive enumeration visits more states than allowed.
// This signals a desk-scale limit, not bad input.
class CapExceeded : public Error {
 public:
  explicit CapExceeded(std::size_t cap)
      : Error("enumeration cap of " + std::to_string(cap) + " exceeded"),
        cap_(cap) {}

  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t cap_;
};

class SamplingExhausted : public Error {
 public:
  using Error::Error;
};

// Something the theory guarantees did not happen.
class InternalError : public Error {
 public:
  using Error::Error;
};

inline constexpr std::size_t kDefaultCap = 1'000'000;

}  // namespace raag

#endif  // RAAG_ERROR_HPP_
