#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace spexgraph {

// Bad arguments: arity, ranges, overlapping sets, non-partitions.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed or inconsistent input data (graph6 streams, mixed vertex counts).
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// graph6 parse failure; `offset` is the zero-based byte position in the line.
class ParseError : public DataError {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : DataError(what + " at byte " + std::to_string(offset)), reason_(what), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }
  const std::string& reason() const noexcept { return reason_; }

 private:
  std::string reason_;
  std::size_t offset_;
};

// Request exceeds a configured cap (e.g. enumeration order).
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace spexgraph
