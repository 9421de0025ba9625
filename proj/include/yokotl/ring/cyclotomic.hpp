#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace yokotl {

using Integer = mpz_class;
using Rational = mpq_class;

/// Coefficients of the d-th cyclotomic polynomial, lowest degree first.
/// Cached; safe to call concurrently.
const std::vector<Integer>& cyclotomic_phi(int d);

/// Euler's totient, i.e. deg Φ_d.
int totient(int d);

/// An exact element of ℚ(ζ_d), stored as ℚ[x]/(Φ_d) with ζ_d ↦ x.
///
/// Values that happen to be rational are always demoted to conductor 1, so
/// equality is a plain comparison of conductor and coefficient vector.  Two
/// non-rational values of different conductors cannot be combined.
class CycloRational {
 public:
  CycloRational() : conductor_(1), coeffs_(1) {}
  CycloRational(long v) : conductor_(1), coeffs_{Rational(v)} {}  // NOLINT
  CycloRational(Rational r) : conductor_(1), coeffs_{std::move(r)} {}  // NOLINT
  CycloRational(int conductor, std::vector<Rational> coeffs);

  /// ζ_d^k, reduced mod Φ_d.
  static CycloRational root_of_unity(int d, long k);

  int conductor() const { return conductor_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const { return conductor_ == 1; }
  const Rational& rational_value() const;

  CycloRational operator-() const;
  CycloRational& operator+=(const CycloRational& o);
  CycloRational& operator-=(const CycloRational& o);
  CycloRational& operator*=(const CycloRational& o);
  CycloRational& operator/=(const CycloRational& o);

  friend CycloRational operator+(CycloRational a, const CycloRational& b) { return a += b; }
  friend CycloRational operator-(CycloRational a, const CycloRational& b) { return a -= b; }
  friend CycloRational operator*(CycloRational a, const CycloRational& b) { return a *= b; }
  friend CycloRational operator/(CycloRational a, const CycloRational& b) { return a /= b; }

  /// Multiplicative inverse; throws std::domain_error on zero.
  CycloRational inverse() const;
  CycloRational pow(long e) const;

  friend bool operator==(const CycloRational& a, const CycloRational& b) {
    return a.conductor_ == b.conductor_ && a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const CycloRational& a, const CycloRational& b) { return !(a == b); }

  /// Rational values print as `-3/4`; others as `(1/2 + 1/2*zeta3)`.
  std::string str() const;

 private:
  void normalize();
  int common_conductor(const CycloRational& o) const;
  std::vector<Rational> lifted(int conductor) const;

  int conductor_;
  std::vector<Rational> coeffs_;
};

/// ζ_d^k as a free function, mirroring the library's character notation.
inline CycloRational root_of_unity_power(int d, long k) { return CycloRational::root_of_unity(d, k); }

}  // namespace yokotl
