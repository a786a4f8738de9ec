#ifndef RELGW_ERRORS_HPP
#define RELGW_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace relgw {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

/// A product of two expressions that both carry unknowns.
class NonlinearTerm : public Error {
 public:
  explicit NonlinearTerm(const std::string& detail) : Error("nonlinear term: " + detail) {}
};

class BoundMismatch : public Error {
 public:
  BoundMismatch(int lhs, int rhs)
      : Error("truncation bound mismatch: " + std::to_string(lhs) + " vs " + std::to_string(rhs)) {}
};

/// Concrete lookup of an invariant whose degree has not been committed yet.
class UnsolvedDegree : public Error {
 public:
  UnsolvedDegree(int degree, int solved)
      : Error("unsolved degree " + std::to_string(degree) + " (table solved through " +
              std::to_string(solved) + ")"),
        degree_(degree) {}
  int degree() const noexcept { return degree_; }

 private:
  int degree_;
};

class CommitError : public Error {
 public:
  using Error::Error;
};

class MissingCoefficient : public Error {
 public:
  explicit MissingCoefficient(int degree)
      : Error("coefficient not configured for d=" + std::to_string(degree)), degree_(degree) {}
  int degree() const noexcept { return degree_; }

 private:
  int degree_;
};

/// A punctured query whose contact orders do not satisfy p + q - r = 3d.
class GradingViolation : public Error {
 public:
  using Error::Error;
};

/// Malformed input: bad JSON, illegal keys, out-of-range options.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace relgw

#endif  // RELGW_ERRORS_HPP
