#pragma once

#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "yokotl/ring/cyclotomic.hpp"

namespace yokotl {

using VarId = std::uint16_t;

/// Interned variable names.  The fixed prefix q, sqrt_lambda, E, u, z,
/// x_1 … x_32 is registered first and fixes the canonical printing order;
/// other names are appended in order of first use.
VarId var_id(std::string_view name);
const std::string& var_name(VarId id);

namespace vars {
VarId q();
VarId sqrt_lambda();
VarId E();
VarId u();
VarId z();
VarId x(int s);  // x_s, s >= 1
VarId sqrt_u();
VarId sqrt_w();
}  // namespace vars

/// A monomial with integer (possibly negative) exponents.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(VarId v, int e = 1);

  int degree() const { return degree_; }
  int exponent(VarId v) const;
  const std::vector<std::pair<VarId, int>>& powers() const { return powers_; }
  bool is_one() const { return powers_.empty(); }

  Monomial operator*(const Monomial& o) const;
  Monomial inverse() const;
  Monomial pow(int e) const;
  /// Exponent-wise minimum / maximum (gcd / lcm in the Laurent sense).
  static Monomial min(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.powers_ == b.powers_; }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }
  /// Graded by total degree, then lexicographic in variable order.
  friend bool operator<(const Monomial& a, const Monomial& b);

  std::string str() const;

 private:
  std::vector<std::pair<VarId, int>> powers_;
  int degree_ = 0;
};

/// Exact multivariate Laurent polynomial with cyclotomic coefficients.
/// Terms are kept in canonical (ascending graded-lex) order with no zero
/// coefficients.
class LaurentPolynomial {
 public:
  using Terms = std::map<Monomial, CycloRational>;

  LaurentPolynomial() = default;
  LaurentPolynomial(long c);                  // NOLINT
  LaurentPolynomial(const Rational& c);       // NOLINT
  LaurentPolynomial(const CycloRational& c);  // NOLINT
  LaurentPolynomial(const CycloRational& c, const Monomial& m);

  static LaurentPolynomial variable(VarId v, int e = 1);
  static LaurentPolynomial variable(std::string_view name, int e = 1) { return variable(var_id(name), e); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  bool is_constant() const;
  /// A single term c·m with c ≠ 0: exactly the units of the Laurent ring
  /// (up to the coefficient being a field element).
  bool is_term() const { return terms_.size() == 1; }
  CycloRational constant_term() const;
  std::size_t size() const { return terms_.size(); }

  const Monomial& leading_monomial() const { return terms_.rbegin()->first; }
  const CycloRational& leading_coefficient() const { return terms_.rbegin()->second; }

  /// Variables occurring with nonzero exponent, in canonical order.
  std::vector<VarId> variables() const;
  bool contains(VarId v) const;
  /// Minimum / maximum exponent of v over all terms (0 for the zero poly).
  std::pair<int, int> exponent_range(VarId v) const;
  /// Exponent-wise minimum over all terms.
  Monomial monomial_content() const;

  LaurentPolynomial operator-() const;
  LaurentPolynomial& operator+=(const LaurentPolynomial& o);
  LaurentPolynomial& operator-=(const LaurentPolynomial& o);
  LaurentPolynomial& operator*=(const LaurentPolynomial& o);
  LaurentPolynomial& operator*=(const CycloRational& c);
  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);

  /// Adds c·m·p to *this without materializing the product.
  void add_scaled(const LaurentPolynomial& p, const CycloRational& c, const Monomial& m);
  void add_term(const Monomial& m, const CycloRational& c);

  LaurentPolynomial times(const Monomial& m) const;
  /// Non-negative powers of any polynomial; negative powers of terms.
  LaurentPolynomial pow(int e) const;
  /// Inverse of a single term; throws std::domain_error otherwise.
  LaurentPolynomial inverse_term() const;

  /// Exact quotient if `d` divides *this in the Laurent ring, else nullopt.
  std::optional<LaurentPolynomial> exact_divide(const LaurentPolynomial& d) const;

  /// Substitutes Laurent polynomials for variables.  Negative exponents of a
  /// bound variable require its image to be a single term.
  LaurentPolynomial substitute(const std::map<VarId, LaurentPolynomial>& bindings) const;

  /// Coefficients with respect to powers of v: c_k with Σ c_k v^k = *this.
  std::map<int, LaurentPolynomial> coefficients_in(VarId v) const;

  friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const LaurentPolynomial& a, const LaurentPolynomial& b) { return !(a == b); }

  /// Canonical text form, e.g. `-1*q^-2 + 2*q^3*E^-1`.
  std::string str() const;

 private:
  Terms terms_;
};

inline LaurentPolynomial operator*(const LaurentPolynomial& a, const CycloRational& c) {
  LaurentPolynomial r = a;
  r *= c;
  return r;
}

}  // namespace yokotl
