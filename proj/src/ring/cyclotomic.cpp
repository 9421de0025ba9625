#include "yokotl/ring/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace yokotl {

namespace {

using IntPoly = std::vector<Integer>;
using RatPoly = std::vector<Rational>;

// Exact quotient of monic integer polynomials.
IntPoly divide_exact(IntPoly num, const IntPoly& den) {
  const std::size_t dn = den.size() - 1;
  IntPoly quot(num.size() - dn, 0);
  for (std::size_t k = num.size(); k-- > dn;) {
    Integer c = num[k];
    quot[k - dn] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dn; ++j) num[k - dn + j] -= c * den[j];
  }
  return quot;
}

IntPoly multiply(const IntPoly& a, const IntPoly& b) {
  IntPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

void trim(RatPoly& p) {
  while (p.size() > 1 && p.back() == 0) p.pop_back();
}

// Remainder of p modulo the monic polynomial m.
void reduce_mod(RatPoly& p, const IntPoly& m) {
  const std::size_t deg = m.size() - 1;
  for (std::size_t k = p.size(); k-- > deg;) {
    if (p[k] == 0) continue;
    Rational c = p[k];
    for (std::size_t j = 0; j <= deg; ++j) p[k - deg + j] -= c * m[j];
  }
  p.resize(deg, 0);
}

// Polynomial division over ℚ: a = q*b + r.
void divmod(const RatPoly& a, const RatPoly& b, RatPoly& q, RatPoly& r) {
  r = a;
  trim(r);
  const std::size_t db = b.size() - 1;
  if (r.size() < b.size()) {
    q.assign(1, 0);
    return;
  }
  q.assign(r.size() - db, 0);
  for (std::size_t k = r.size(); k-- > db;) {
    if (r[k] == 0) continue;
    Rational c = r[k] / b[db];
    q[k - db] = c;
    for (std::size_t j = 0; j <= db; ++j) r[k - db + j] -= c * b[j];
  }
  r.resize(db ? db : 1);
  trim(r);
}

bool is_zero_poly(const RatPoly& p) {
  for (const auto& c : p)
    if (c != 0) return false;
  return true;
}

RatPoly poly_mul(const RatPoly& a, const RatPoly& b) {
  RatPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

RatPoly poly_sub(const RatPoly& a, const RatPoly& b) {
  RatPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

}  // namespace

const std::vector<Integer>& cyclotomic_phi(int d) {
  if (d < 1) throw std::invalid_argument("cyclotomic_phi: d must be positive");
  static std::mutex mutex;
  static std::map<int, IntPoly> cache;
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(d);
    if (it != cache.end()) return it->second;
  }
  // x^d - 1 divided by Φ_e for every proper divisor e.
  IntPoly num(d + 1, 0);
  num[0] = -1;
  num[d] = 1;
  IntPoly den{1};
  for (int e = 1; e < d; ++e)
    if (d % e == 0) den = multiply(den, cyclotomic_phi(e));
  IntPoly phi = divide_exact(std::move(num), den);
  std::lock_guard<std::mutex> lock(mutex);
  return cache.emplace(d, std::move(phi)).first->second;
}

int totient(int d) { return static_cast<int>(cyclotomic_phi(d).size()) - 1; }

CycloRational::CycloRational(int conductor, std::vector<Rational> coeffs)
    : conductor_(conductor), coeffs_(std::move(coeffs)) {
  if (conductor < 1) throw std::invalid_argument("CycloRational: conductor must be positive");
  if (coeffs_.empty()) coeffs_.assign(1, 0);
  normalize();
}

CycloRational CycloRational::root_of_unity(int d, long k) {
  if (d < 1) throw std::invalid_argument("root_of_unity: d must be positive");
  long e = k % d;
  if (e < 0) e += d;
  std::vector<Rational> c(e + 1, 0);
  c[e] = 1;
  return CycloRational(d, std::move(c));
}

void CycloRational::normalize() {
  const IntPoly& phi = cyclotomic_phi(conductor_);
  if (coeffs_.size() >= phi.size()) reduce_mod(coeffs_, phi);
  coeffs_.resize(phi.size() - 1, 0);
  bool rational = true;
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) {
      rational = false;
      break;
    }
  if (rational) {
    conductor_ = 1;
    coeffs_.resize(1);
  }
}

bool CycloRational::is_zero() const { return conductor_ == 1 && coeffs_[0] == 0; }
bool CycloRational::is_one() const { return conductor_ == 1 && coeffs_[0] == 1; }

const Rational& CycloRational::rational_value() const {
  if (conductor_ != 1) throw std::domain_error("CycloRational: value is not rational");
  return coeffs_[0];
}

int CycloRational::common_conductor(const CycloRational& o) const {
  if (conductor_ == 1) return o.conductor_;
  if (o.conductor_ == 1 || o.conductor_ == conductor_) return conductor_;
  throw std::invalid_argument("CycloRational: incompatible conductors " + std::to_string(conductor_) +
                              " and " + std::to_string(o.conductor_));
}

std::vector<Rational> CycloRational::lifted(int conductor) const {
  std::vector<Rational> c = coeffs_;
  c.resize(totient(conductor), 0);
  return c;
}

CycloRational CycloRational::operator-() const {
  CycloRational r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

CycloRational& CycloRational::operator+=(const CycloRational& o) {
  if (conductor_ == 1 && o.conductor_ == 1) {
    coeffs_[0] += o.coeffs_[0];
    return *this;
  }
  const int m = common_conductor(o);
  coeffs_ = lifted(m);
  conductor_ = m;
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  normalize();
  return *this;
}

CycloRational& CycloRational::operator-=(const CycloRational& o) { return *this += -o; }

CycloRational& CycloRational::operator*=(const CycloRational& o) {
  if (conductor_ == 1 && o.conductor_ == 1) {
    coeffs_[0] *= o.coeffs_[0];
    return *this;
  }
  const int m = common_conductor(o);
  coeffs_ = poly_mul(coeffs_, o.coeffs_);
  conductor_ = m;
  normalize();
  return *this;
}

CycloRational CycloRational::inverse() const {
  if (is_zero()) throw std::domain_error("CycloRational: division by zero");
  if (conductor_ == 1) return CycloRational(Rational(1) / coeffs_[0]);
  // Extended Euclid on (a, Φ_d): s*a ≡ gcd = const (mod Φ_d).
  const IntPoly& phi = cyclotomic_phi(conductor_);
  RatPoly r0(phi.begin(), phi.end()), r1 = coeffs_;
  trim(r1);
  RatPoly s0{0}, s1{1};
  while (!(r1.size() == 1)) {
    RatPoly q, r;
    divmod(r0, r1, q, r);
    RatPoly s = poly_sub(s0, poly_mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
    if (is_zero_poly(r1)) throw std::domain_error("CycloRational: non-invertible element");
  }
  for (auto& c : s1) c /= r1[0];
  return CycloRational(conductor_, s1);
}

CycloRational& CycloRational::operator/=(const CycloRational& o) {
  if (conductor_ == 1 && o.conductor_ == 1) {
    if (o.coeffs_[0] == 0) throw std::domain_error("CycloRational: division by zero");
    coeffs_[0] /= o.coeffs_[0];
    return *this;
  }
  return *this *= o.inverse();
}

CycloRational CycloRational::pow(long e) const {
  CycloRational base = e < 0 ? inverse() : *this;
  unsigned long k = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  CycloRational result(1);
  while (k) {
    if (k & 1u) result *= base;
    k >>= 1;
    if (k) base *= base;
  }
  return result;
}

std::string CycloRational::str() const {
  if (conductor_ == 1) return coeffs_[0].get_str();
  std::ostringstream out;
  out << '(';
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (c == 0) continue;
    if (first) {
      out << c.get_str();
    } else {
      out << (c < 0 ? " - " : " + ") << Rational(abs(c)).get_str();
    }
    if (i > 0) {
      out << "*zeta" << conductor_;
      if (i > 1) out << '^' << i;
    }
    first = false;
  }
  out << ')';
  return out.str();
}

}  // namespace yokotl
