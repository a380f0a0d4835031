#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace diffgraph {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidName : public Error {
 public:
  using Error::Error;
};

class UnknownVertex : public Error {
 public:
  using Error::Error;
};

class InvalidGraph : public Error {
 public:
  using Error::Error;
};

// A query vertex appears in its own conditioning set.
class OverlapError : public Error {
 public:
  using Error::Error;
};

class CyclicGraph : public Error {
 public:
  using Error::Error;
};

class VertexSetMismatch : public Error {
 public:
  using Error::Error;
};

class TooManyVertices : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class EstimationError : public Error {
 public:
  using Error::Error;
};

// Positivity violated empirically: an (x, w) cell has no rows.
class PositivityViolation : public EstimationError {
 public:
  using EstimationError::EstimationError;
};

class SingularDesign : public EstimationError {
 public:
  using EstimationError::EstimationError;
};

class NotIdentifiableInput : public Error {
 public:
  using Error::Error;
};

}  // namespace diffgraph
