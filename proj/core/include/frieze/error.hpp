#pragma once

#include <stdexcept>
#include <string>

namespace frieze {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class KindMismatch : public Error {
 public:
  using Error::Error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& msg, int line = 0, int column = 0)
      : Error(line > 0 ? msg + " (line " + std::to_string(line) + ", column " +
                             std::to_string(column) + ")"
                       : msg),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

// Propagation needed to divide by a zero entry at doubled index (I, J).
class ZeroPivot : public Error {
 public:
  ZeroPivot(int I, int J)
      : Error("zero pivot at (" + std::to_string(I) + "," + std::to_string(J) + ")"),
        I(I),
        J(J) {}
  int I, J;
};

class NotClosed : public Error {
 public:
  using Error::Error;
};

class NotSuperperiodic : public Error {
 public:
  NotSuperperiodic(int diagonal, int index)
      : Error("closure fails on diagonal " + std::to_string(diagonal) + " at index " +
              std::to_string(index)),
        diagonal(diagonal),
        index(index) {}
  int diagonal, index;
};

class Underdetermined : public Error {
 public:
  using Error::Error;
};

class ZeroParameter : public Error {
 public:
  using Error::Error;
};

class MinorCondition : public Error {
 public:
  using Error::Error;
};

class WidthParity : public Error {
 public:
  using Error::Error;
};

class NonLaurentQuotient : public Error {
 public:
  using Error::Error;
};

class NotBipartite : public Error {
 public:
  using Error::Error;
};

class NotSkewSymmetrizable : public Error {
 public:
  using Error::Error;
};

class NormalizationViolated : public Error {
 public:
  using Error::Error;
};

class EvenPeriod : public Error {
 public:
  using Error::Error;
};

class DegenerateGamma : public Error {
 public:
  explicit DegenerateGamma(int i)
      : Error("degenerate gamma at index " + std::to_string(i)), index(i) {}
  int index;
};

class SingularFrame : public Error {
 public:
  explicit SingularFrame(int i)
      : Error("singular frame ending at vertex " + std::to_string(i)), index(i) {}
  int index;
};

class WidthMismatch : public Error {
 public:
  using Error::Error;
};

class ZeroSubstitution : public Error {
 public:
  using Error::Error;
};

}  // namespace frieze
