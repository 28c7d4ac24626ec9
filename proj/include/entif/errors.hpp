#pragma once

#include <stdexcept>
#include <string>

namespace entif {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operand shapes do not fit the operation (non-square determinant, row
/// count mismatch in an adjoin, ...).
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Empty or out-of-range index set.
class IndexError : public Error {
 public:
  using Error::Error;
};

/// A documented precondition on the arguments does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// The requested object provably does not exist, or the requested parameters
/// fall outside what the construction can reach. `citation()` names the
/// obstruction.
class InfeasibleError : public Error {
 public:
  InfeasibleError(std::string citation, const std::string& what)
      : Error(what), citation_(std::move(citation)) {}
  const std::string& citation() const noexcept { return citation_; }

 private:
  std::string citation_;
};

/// A Hadamard order the implemented constructions cannot produce. This is not
/// a claim that no Hadamard matrix of that order exists.
class UnsupportedOrderError : public Error {
 public:
  using Error::Error;
};

/// Rank-deficient input where a frame is required.
class NotAFrameError : public Error {
 public:
  using Error::Error;
};

/// The almost-tight construction ran out of its denominator budget.
class BudgetError : public Error {
 public:
  using Error::Error;
};

/// Numeric eigenvalue estimates could not be certified to the requested
/// relative accuracy.
class CertificationError : public Error {
 public:
  using Error::Error;
};

/// Malformed frame file.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace entif
