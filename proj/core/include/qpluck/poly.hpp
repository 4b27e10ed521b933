#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <vector>

#include "qpluck/error.hpp"

namespace qpluck {

using Coeff = mpz_class;

/// Dense univariate polynomial in q with nonnegative arbitrary-precision
/// integer coefficients, coeffs[i] = coefficient of q^i.
///
/// Invariants: the coefficient vector is never empty, the last entry is
/// nonzero unless the polynomial is zero, and zero is stored as the single
/// entry [0]. Values are immutable after construction and safe to share
/// across threads.
class Poly {
 public:
  /// The zero polynomial.
  Poly() : c_{Coeff(0)} {}

  /// Takes ownership of a coefficient vector (lowest degree first).
  /// Trailing zeros are trimmed. Throws InvalidInput on a negative entry.
  explicit Poly(std::vector<Coeff> coeffs);

  static Poly zero() { return Poly(); }
  static Poly one() { return Poly(std::vector<Coeff>{Coeff(1)}); }

  /// Parses a comma-separated list of decimal coefficients, lowest first.
  static Poly from_csv(const std::string& text);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.size() == 1 && c_[0] == 0; }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }

  /// Coefficient of q^i; zero beyond the degree.
  const Coeff& operator[](int i) const;

  const std::vector<Coeff>& coeffs() const { return c_; }

  /// Multiplication by q^k.
  Poly shifted(int k) const;

  /// Value at q = 1 (the sum of the coefficients).
  Coeff eval_one() const;

  /// Comma-separated decimal coefficients, lowest degree first.
  std::string to_csv() const;

  bool operator==(const Poly&) const = default;

 private:
  std::vector<Coeff> c_;
};

Poly operator+(const Poly& a, const Poly& b);
Poly operator*(const Poly& a, const Poly& b);

/// Exact division: returns c with b*c == a. Throws NotDivisible when the
/// remainder is nonzero or the quotient would have a negative coefficient,
/// InvalidInput when b is zero.
Poly poly_divexact(const Poly& a, const Poly& b);

std::ostream& operator<<(std::ostream& os, const Poly& p);

}  // namespace qpluck
