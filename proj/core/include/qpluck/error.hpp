#pragma once

#include <stdexcept>
#include <string>

namespace qpluck {

/// Base class for all errors raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed input (bad index, unparsable text, empty factor list, ...).
struct InvalidInput : Error {
  using Error::Error;
};

/// Exact polynomial division left a remainder or a negative quotient coefficient.
struct NotDivisible : Error {
  using Error::Error;
};

/// Coefficient vector is not palindromic.
struct NotSymmetric : Error {
  using Error::Error;
};

/// Coefficient vector is not unimodal (some row multiplicity would be negative).
struct NotUnimodal : Error {
  using Error::Error;
};

/// Shape comparison between polynomials of different degree.
struct DegreeMismatch : Error {
  using Error::Error;
};

/// Product cannot be the plucking polynomial of any rooted tree.
/// `witness` is a repeated q-integer index in the reduced numerator (0 if none applies).
struct NotRealizable : Error {
  explicit NotRealizable(const std::string& what, int witness_index = 0)
      : Error(what), witness(witness_index) {}
  int witness;
};

/// Enumeration or search would exceed the configured desk-scale budget.
struct BudgetExceeded : Error {
  using Error::Error;
};

/// Parameter combination the underlying statement explicitly excludes.
struct ExcludedCase : Error {
  using Error::Error;
};

}  // namespace qpluck
