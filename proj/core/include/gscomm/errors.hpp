#pragma once

#include <stdexcept>
#include <string>

namespace gscomm {

/// Base class for all toolkit errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operand shapes do not admit the requested operation.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// invert() was asked for the inverse of a rectangular matrix.
class NonSquareError : public Error {
 public:
  using Error::Error;
};

/// The matrix has no inverse over GF(2) (rank below dimension).
class SingularError : public Error {
 public:
  using Error::Error;
};

/// A graph file could not be parsed; carries the 1-based line number.
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

/// The reduced adjacency matrix is singular, so the graph supports neither
/// deterministic dense coding nor faithful teleportation.
class NotViableError : public Error {
 public:
  NotViableError()
      : Error("reduced adjacency matrix is singular over GF(2); "
              "graph is not viable") {}
};

/// A state-vector request exceeds the brute-force size cap.
class SizeLimitError : public Error {
 public:
  using Error::Error;
};

}  // namespace gscomm
