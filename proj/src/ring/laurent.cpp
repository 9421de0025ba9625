#include "yokotl/ring/laurent.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <mutex>
#include <shared_mutex>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace yokotl {

namespace {

constexpr int kFixedX = 32;

struct Registry {
  std::shared_mutex mutex;
  std::deque<std::string> names;
  std::unordered_map<std::string, VarId> ids;

  Registry() {
    for (const char* n : {"q", "sqrt_lambda", "E", "u", "z"}) add(n);
    for (int s = 1; s <= kFixedX; ++s) add("x_" + std::to_string(s));
    add("sqrt_u");
    add("sqrt_w");
  }

  VarId add(const std::string& name) {
    if (names.size() >= std::numeric_limits<VarId>::max())
      throw std::length_error("too many variables");
    const auto id = static_cast<VarId>(names.size());
    names.push_back(name);
    ids.emplace(name, id);
    return id;
  }
};

Registry& registry() {
  static Registry r;
  return r;
}

bool valid_name(std::string_view name) {
  if (name.empty()) return false;
  auto alpha = [](char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_'; };
  if (!alpha(name[0])) return false;
  for (char c : name)
    if (!alpha(c) && !(c >= '0' && c <= '9')) return false;
  return true;
}

}  // namespace

VarId var_id(std::string_view name) {
  Registry& r = registry();
  std::string key(name);
  {
    std::shared_lock lock(r.mutex);
    auto it = r.ids.find(key);
    if (it != r.ids.end()) return it->second;
  }
  if (!valid_name(name)) throw std::invalid_argument("invalid variable name '" + key + "'");
  std::unique_lock lock(r.mutex);
  auto it = r.ids.find(key);
  if (it != r.ids.end()) return it->second;
  return r.add(key);
}

const std::string& var_name(VarId id) {
  Registry& r = registry();
  std::shared_lock lock(r.mutex);
  if (id >= r.names.size()) throw std::out_of_range("unknown variable id");
  return r.names[id];  // deque references are stable
}

namespace vars {
VarId q() { return 0; }
VarId sqrt_lambda() { return 1; }
VarId E() { return 2; }
VarId u() { return 3; }
VarId z() { return 4; }
VarId x(int s) {
  if (s < 1) throw std::invalid_argument("x_s needs s >= 1");
  if (s <= kFixedX) return static_cast<VarId>(4 + s);
  return var_id("x_" + std::to_string(s));
}
VarId sqrt_u() { return static_cast<VarId>(5 + kFixedX); }
VarId sqrt_w() { return static_cast<VarId>(6 + kFixedX); }
}  // namespace vars

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(VarId v, int e) {
  if (e != 0) {
    powers_.emplace_back(v, e);
    degree_ = e;
  }
}

int Monomial::exponent(VarId v) const {
  for (const auto& [var, e] : powers_)
    if (var == v) return e;
  return 0;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  r.powers_.reserve(powers_.size() + o.powers_.size());
  auto a = powers_.begin(), b = o.powers_.begin();
  while (a != powers_.end() || b != o.powers_.end()) {
    if (b == o.powers_.end() || (a != powers_.end() && a->first < b->first)) {
      r.powers_.push_back(*a++);
    } else if (a == powers_.end() || b->first < a->first) {
      r.powers_.push_back(*b++);
    } else {
      int e = a->second + b->second;
      if (e != 0) r.powers_.emplace_back(a->first, e);
      ++a;
      ++b;
    }
  }
  r.degree_ = degree_ + o.degree_;
  return r;
}

Monomial Monomial::inverse() const { return pow(-1); }

Monomial Monomial::pow(int e) const {
  Monomial r;
  if (e == 0) return r;
  r.powers_ = powers_;
  for (auto& p : r.powers_) p.second *= e;
  r.degree_ = degree_ * e;
  return r;
}

Monomial Monomial::min(const Monomial& a, const Monomial& b) {
  Monomial r;
  auto i = a.powers_.begin(), j = b.powers_.begin();
  while (i != a.powers_.end() || j != b.powers_.end()) {
    if (j == b.powers_.end() || (i != a.powers_.end() && i->first < j->first)) {
      if (i->second < 0) r.powers_.push_back(*i);
      ++i;
    } else if (i == a.powers_.end() || j->first < i->first) {
      if (j->second < 0) r.powers_.push_back(*j);
      ++j;
    } else {
      r.powers_.emplace_back(i->first, std::min(i->second, j->second));
      ++i;
      ++j;
    }
  }
  r.degree_ = 0;
  for (const auto& p : r.powers_) r.degree_ += p.second;
  return r;
}

bool operator<(const Monomial& a, const Monomial& b) {
  if (a.degree_ != b.degree_) return a.degree_ < b.degree_;
  auto i = a.powers_.begin(), j = b.powers_.begin();
  while (i != a.powers_.end() || j != b.powers_.end()) {
    if (j == b.powers_.end() || (i != a.powers_.end() && i->first < j->first)) return i->second < 0;
    if (i == a.powers_.end() || j->first < i->first) return j->second > 0;
    if (i->second != j->second) return i->second < j->second;
    ++i;
    ++j;
  }
  return false;
}

std::string Monomial::str() const {
  std::string s;
  for (const auto& [v, e] : powers_) {
    if (!s.empty()) s += '*';
    s += var_name(v);
    if (e != 1) s += '^' + std::to_string(e);
  }
  return s;
}

// ------------------------------------------------------- LaurentPolynomial

LaurentPolynomial::LaurentPolynomial(long c) : LaurentPolynomial(CycloRational(c)) {}
LaurentPolynomial::LaurentPolynomial(const Rational& c) : LaurentPolynomial(CycloRational(c)) {}
LaurentPolynomial::LaurentPolynomial(const CycloRational& c) {
  if (!c.is_zero()) terms_.emplace(Monomial(), c);
}
LaurentPolynomial::LaurentPolynomial(const CycloRational& c, const Monomial& m) {
  if (!c.is_zero()) terms_.emplace(m, c);
}

LaurentPolynomial LaurentPolynomial::variable(VarId v, int e) { return LaurentPolynomial(CycloRational(1), Monomial(v, e)); }

bool LaurentPolynomial::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first.is_one() && terms_.begin()->second.is_one();
}

bool LaurentPolynomial::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one()); }

CycloRational LaurentPolynomial::constant_term() const {
  auto it = terms_.find(Monomial());
  return it == terms_.end() ? CycloRational() : it->second;
}

std::vector<VarId> LaurentPolynomial::variables() const {
  std::vector<VarId> out;
  for (const auto& [m, c] : terms_)
    for (const auto& p : m.powers()) out.push_back(p.first);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool LaurentPolynomial::contains(VarId v) const {
  for (const auto& [m, c] : terms_)
    if (m.exponent(v) != 0) return true;
  return false;
}

std::pair<int, int> LaurentPolynomial::exponent_range(VarId v) const {
  if (terms_.empty()) return {0, 0};
  int lo = std::numeric_limits<int>::max(), hi = std::numeric_limits<int>::min();
  for (const auto& [m, c] : terms_) {
    int e = m.exponent(v);
    lo = std::min(lo, e);
    hi = std::max(hi, e);
  }
  return {lo, hi};
}

Monomial LaurentPolynomial::monomial_content() const {
  if (terms_.empty()) return Monomial();
  // min over all terms, including the positive side: seed with the first term
  Monomial acc = terms_.begin()->first;
  for (const auto& [m, c] : terms_) {
    // Monomial::min keeps only negative exponents for one-sided variables,
    // which is the exponent-wise minimum with implicit zeros.
    acc = Monomial::min(acc, m);
  }
  return acc;
}

LaurentPolynomial LaurentPolynomial::operator-() const {
  LaurentPolynomial r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

void LaurentPolynomial::add_term(const Monomial& m, const CycloRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator*=(const CycloRational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

void LaurentPolynomial::add_scaled(const LaurentPolynomial& p, const CycloRational& c, const Monomial& m) {
  if (c.is_zero()) return;
  for (const auto& [pm, pc] : p.terms_) add_term(pm * m, pc * c);
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  LaurentPolynomial r;
  const LaurentPolynomial& small = a.size() <= b.size() ? a : b;
  const LaurentPolynomial& large = a.size() <= b.size() ? b : a;
  for (const auto& [m, c] : small.terms_) r.add_scaled(large, c, m);
  return r;
}

LaurentPolynomial& LaurentPolynomial::operator*=(const LaurentPolynomial& o) {
  *this = *this * o;
  return *this;
}

LaurentPolynomial LaurentPolynomial::times(const Monomial& m) const {
  LaurentPolynomial r;
  for (const auto& [pm, pc] : terms_) r.terms_.emplace_hint(r.terms_.end(), pm * m, pc);
  return r;
}

LaurentPolynomial LaurentPolynomial::inverse_term() const {
  if (terms_.size() != 1) throw std::domain_error("inverse of a non-unit Laurent polynomial");
  const auto& [m, c] = *terms_.begin();
  return LaurentPolynomial(c.inverse(), m.inverse());
}

LaurentPolynomial LaurentPolynomial::pow(int e) const {
  if (e < 0) return inverse_term().pow(-e);
  LaurentPolynomial base = *this, result(1);
  while (e) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

std::optional<LaurentPolynomial> LaurentPolynomial::exact_divide(const LaurentPolynomial& d) const {
  if (d.is_zero()) throw std::domain_error("exact_divide: division by zero");
  if (is_zero()) return LaurentPolynomial();
  if (d.is_term()) return *this * d.inverse_term();
  // Shift both sides to honest polynomials with no monomial factor in the
  // divisor; the quotient is then a polynomial and term-order division is
  // exact iff the remainder vanishes.
  const Monomial dshift = d.monomial_content().inverse();
  const Monomial nshift = monomial_content().inverse();
  LaurentPolynomial divisor = d.times(dshift);
  LaurentPolynomial rem = times(nshift);
  const Monomial& lm = divisor.leading_monomial();
  const CycloRational lc_inv = divisor.leading_coefficient().inverse();
  LaurentPolynomial quot;
  while (!rem.is_zero()) {
    const Monomial& rm = rem.leading_monomial();
    Monomial qm = rm * lm.inverse();
    for (const auto& p : qm.powers())
      if (p.second < 0) return std::nullopt;
    CycloRational qc = rem.leading_coefficient() * lc_inv;
    quot.add_term(qm, qc);
    rem.add_scaled(divisor, -qc, qm);
  }
  return quot.times(nshift.inverse() * dshift);
}

LaurentPolynomial LaurentPolynomial::substitute(const std::map<VarId, LaurentPolynomial>& bindings) const {
  LaurentPolynomial out;
  std::map<std::pair<VarId, int>, LaurentPolynomial> powers;
  for (const auto& [m, c] : terms_) {
    LaurentPolynomial term(c);
    Monomial rest;
    for (const auto& [v, e] : m.powers()) {
      auto b = bindings.find(v);
      if (b == bindings.end()) {
        rest = rest * Monomial(v, e);
        continue;
      }
      auto key = std::make_pair(v, e);
      auto it = powers.find(key);
      if (it == powers.end()) it = powers.emplace(key, b->second.pow(e)).first;
      term *= it->second;
    }
    out.add_scaled(term, CycloRational(1), rest);
  }
  return out;
}

std::map<int, LaurentPolynomial> LaurentPolynomial::coefficients_in(VarId v) const {
  std::map<int, LaurentPolynomial> out;
  for (const auto& [m, c] : terms_) {
    int e = m.exponent(v);
    out[e].add_term(m * Monomial(v, -e), c);
  }
  return out;
}

std::string LaurentPolynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    std::string coeff;
    if (!first) {
      if (c.is_rational() && c.rational_value() < 0) {
        out << " - ";
        coeff = Rational(-c.rational_value()).get_str();
      } else {
        out << " + ";
        coeff = c.str();
      }
    } else {
      coeff = c.str();
    }
    out << coeff;
    if (!m.is_one()) out << '*' << m.str();
    first = false;
  }
  return out.str();
}

}  // namespace yokotl
