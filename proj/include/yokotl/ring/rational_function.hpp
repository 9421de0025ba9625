#pragma once

#include <map>
#include <stdexcept>
#include <string>

#include "yokotl/ring/laurent.hpp"

namespace yokotl {

/// Raised when an exact computation would divide by zero.
class PoleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A quotient num/den of Laurent polynomials.
///
/// The denominator is kept free of monomial factors and has leading
/// coefficient 1; a unit denominator is always folded into the numerator.
/// No gcd is taken, so equality is decided by cross-multiplication.
class RationalFunction {
 public:
  RationalFunction() = default;
  RationalFunction(long c) : num_(c) {}                                    // NOLINT
  RationalFunction(const Rational& c) : num_(c) {}                         // NOLINT
  RationalFunction(const CycloRational& c) : num_(c) {}                    // NOLINT
  RationalFunction(LaurentPolynomial p) : num_(std::move(p)) {}           // NOLINT
  RationalFunction(LaurentPolynomial num, LaurentPolynomial den);

  const LaurentPolynomial& num() const { return num_; }
  const LaurentPolynomial& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_one(); }

  RationalFunction operator-() const;
  RationalFunction& operator+=(const RationalFunction& o);
  RationalFunction& operator-=(const RationalFunction& o);
  RationalFunction& operator*=(const RationalFunction& o);
  RationalFunction& operator/=(const RationalFunction& o);
  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }

  RationalFunction pow(int e) const;

  /// Divides num and den by `factor` as long as both are divisible.
  RationalFunction& reduce_by(const LaurentPolynomial& factor);
  /// Collapses to a polynomial when den divides num exactly.
  RationalFunction& simplify();

  /// The polynomial value; throws std::domain_error if den does not divide num.
  LaurentPolynomial to_laurent() const;

  friend bool operator==(const RationalFunction& a, const RationalFunction& b);
  friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

  /// `num` when den = 1, otherwise `(num)/(den)`.
  std::string str() const;

 private:
  void normalize();

  LaurentPolynomial num_;
  LaurentPolynomial den_{1};
};

/// Exact substitution of rational functions for variables of p.  Unbound
/// variables are kept.  Throws PoleError if a variable with a negative
/// exponent is bound to zero.
RationalFunction poly_substitute(const LaurentPolynomial& p, const std::map<VarId, RationalFunction>& bindings);
RationalFunction poly_substitute(const RationalFunction& f, const std::map<VarId, RationalFunction>& bindings);

}  // namespace yokotl
