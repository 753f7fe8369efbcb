#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace boxdom {

// Base type for everything this library throws on purpose.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed textual input (graph6, config files, ...). Carries the byte
// offset of the first offending byte.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " (byte " + std::to_string(offset) + ")"),
        offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// A caller-supplied value is outside an operation's domain.
class ArgumentError : public Error {
 public:
  using Error::Error;
};

// A documented precondition between components was violated (for example a
// set that was promised to dominate does not).
class ContractError : public Error {
 public:
  using Error::Error;
};

// Input exceeds a hard size cap of the implementation.
class LimitError : public Error {
 public:
  using Error::Error;
};

// An exact computation ran out of budget. Carries the best bounds known at
// the moment the deadline fired.
class TimeoutError : public Error {
 public:
  TimeoutError(const std::string& what, int lower, int upper)
      : Error(what + " (bounds [" + std::to_string(lower) + ", " +
              std::to_string(upper) + "])"),
        lower_(lower),
        upper_(upper) {}
  int lower_bound() const { return lower_; }
  int upper_bound() const { return upper_; }

 private:
  int lower_;
  int upper_;
};

}  // namespace boxdom
