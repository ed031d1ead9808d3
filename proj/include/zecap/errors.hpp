#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace zecap {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input data violates a mathematical invariant (state, channel, POVM, classical matrix).
/// The CLI maps these to exit code 1.
class ValidationError : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class NonFinite : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class NotHermitian : public ValidationError {
 public:
  NotHermitian(double deviation)
      : ValidationError("matrix is not Hermitian (max |M - M^dagger| = " + std::to_string(deviation) + ")"),
        deviation_(deviation) {}
  double deviation() const { return deviation_; }

 private:
  double deviation_;
};

class NotPsd : public ValidationError {
 public:
  NotPsd(double min_eigenvalue)
      : ValidationError("matrix is not positive semidefinite (min eigenvalue " + std::to_string(min_eigenvalue) + ")"),
        min_eigenvalue_(min_eigenvalue) {}
  double min_eigenvalue() const { return min_eigenvalue_; }

 private:
  double min_eigenvalue_;
};

class TraceNotOne : public ValidationError {
 public:
  TraceNotOne(double actual)
      : ValidationError("trace is " + std::to_string(actual) + ", expected 1"), actual_(actual) {}
  double actual() const { return actual_; }

 private:
  double actual_;
};

class NotTracePreserving : public ValidationError {
 public:
  NotTracePreserving(double deviation)
      : ValidationError("Kraus operators are not trace preserving (||sum K^dagger K - I||_F = " +
                        std::to_string(deviation) + ")"),
        deviation_(deviation) {}
  double deviation() const { return deviation_; }

 private:
  double deviation_;
};

class PovmIncomplete : public ValidationError {
 public:
  PovmIncomplete(double deviation)
      : ValidationError("POVM elements do not sum to identity (||sum E_j - I||_F = " + std::to_string(deviation) +
                        ")"),
        deviation_(deviation) {}
  double deviation() const { return deviation_; }

 private:
  double deviation_;
};

class NotStochastic : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// Every probability of a row fell below the support threshold.
class EmptySupport : public Error {
 public:
  using Error::Error;
};

/// A construction or enumeration would exceed its configured size cap.
class SizeLimit : public Error {
 public:
  SizeLimit(const std::string& what, std::size_t requested, std::size_t limit)
      : Error(what + ": size " + std::to_string(requested) + " exceeds limit " + std::to_string(limit)),
        requested_(requested),
        limit_(limit) {}
  std::size_t requested() const { return requested_; }
  std::size_t limit() const { return limit_; }

 private:
  std::size_t requested_;
  std::size_t limit_;
};

class NotConverged : public Error {
 public:
  NotConverged(std::size_t iterations, double gap)
      : Error("SDP solver did not converge after " + std::to_string(iterations) + " iterations (gap " +
              std::to_string(gap) + ")"),
        iterations_(iterations),
        gap_(gap) {}
  std::size_t iterations() const { return iterations_; }
  double gap() const { return gap_; }

 private:
  std::size_t iterations_;
  double gap_;
};

/// Two codewords share a reachable output word, so the code is not zero-error.
class AmbiguousSupports : public Error {
 public:
  AmbiguousSupports(std::size_t first, std::size_t second)
      : Error("codewords " + std::to_string(first) + " and " + std::to_string(second) +
              " share a reachable output word"),
        first_(first),
        second_(second) {}
  std::size_t first() const { return first_; }
  std::size_t second() const { return second_; }

 private:
  std::size_t first_;
  std::size_t second_;
};

}  // namespace zecap
