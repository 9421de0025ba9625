#include "yokotl/ring/rational_function.hpp"

#include <algorithm>

namespace yokotl {

RationalFunction::RationalFunction(LaurentPolynomial num, LaurentPolynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
  normalize();
}

void RationalFunction::normalize() {
  if (den_.is_zero()) throw PoleError("rational function with zero denominator");
  if (num_.is_zero()) {
    den_ = LaurentPolynomial(1);
    return;
  }
  if (den_.is_term()) {
    num_ *= den_.inverse_term();
    den_ = LaurentPolynomial(1);
    return;
  }
  const Monomial content = den_.monomial_content();
  if (!content.is_one()) {
    const Monomial inv = content.inverse();
    den_ = den_.times(inv);
    num_ = num_.times(inv);
  }
  const CycloRational lc = den_.leading_coefficient();
  if (!lc.is_one()) {
    const CycloRational inv = lc.inverse();
    den_ *= inv;
    num_ *= inv;
  }
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
  }
  normalize();
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) { return *this += -o; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
  num_ *= o.num_;
  if (!o.den_.is_one()) den_ *= o.den_;
  normalize();
  return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) {
  if (o.is_zero()) throw PoleError("division by zero rational function");
  num_ *= o.den_;
  den_ *= o.num_;
  normalize();
  return *this;
}

RationalFunction RationalFunction::pow(int e) const {
  if (e < 0) {
    if (is_zero()) throw PoleError("negative power of zero");
    return RationalFunction(den_.pow(-e), num_.pow(-e));
  }
  RationalFunction r;
  r.num_ = num_.pow(e);
  r.den_ = den_.pow(e);
  r.normalize();
  return r;
}

RationalFunction& RationalFunction::reduce_by(const LaurentPolynomial& factor) {
  if (factor.is_zero() || factor.is_term()) return *this;
  while (!den_.is_one()) {
    auto d = den_.exact_divide(factor);
    if (!d) break;
    auto n = num_.exact_divide(factor);
    if (!n) break;
    num_ = std::move(*n);
    den_ = std::move(*d);
    normalize();
  }
  return *this;
}

RationalFunction& RationalFunction::simplify() {
  if (den_.is_one()) return *this;
  if (auto q = num_.exact_divide(den_)) {
    num_ = std::move(*q);
    den_ = LaurentPolynomial(1);
  }
  return *this;
}

LaurentPolynomial RationalFunction::to_laurent() const {
  if (den_.is_one()) return num_;
  if (auto q = num_.exact_divide(den_)) return *q;
  throw std::domain_error("rational function is not a Laurent polynomial: " + str());
}

bool operator==(const RationalFunction& a, const RationalFunction& b) {
  if (a.den_ == b.den_) return a.num_ == b.num_;
  return a.num_ * b.den_ == b.num_ * a.den_;
}

std::string RationalFunction::str() const {
  if (den_.is_one()) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

RationalFunction poly_substitute(const LaurentPolynomial& p, const std::map<VarId, RationalFunction>& bindings) {
  // Clear denominators variable by variable: with e ranging over
  // [lo, hi] ∋ 0, the term v^e ↦ N^e D^-e is rewritten as
  // N^(e-lo) D^(hi-e) over the common denominator N^-lo D^hi.
  struct Range {
    const RationalFunction* value;
    int lo, hi;
  };
  std::map<VarId, Range> ranges;
  for (const auto& [v, f] : bindings) {
    auto [lo, hi] = p.exponent_range(v);
    lo = std::min(lo, 0);
    hi = std::max(hi, 0);
    if (lo == 0 && hi == 0) continue;
    if (lo < 0 && f.is_zero()) throw PoleError("substituting 0 for " + var_name(v) + " with negative exponent");
    ranges.emplace(v, Range{&f, lo, hi});
  }
  if (ranges.empty()) return RationalFunction(p);

  std::map<std::pair<VarId, int>, LaurentPolynomial> num_pow, den_pow;
  auto power = [](auto& cache, VarId v, const LaurentPolynomial& base, int e) -> const LaurentPolynomial& {
    auto key = std::make_pair(v, e);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, base.pow(e)).first;
    return it->second;
  };

  LaurentPolynomial num;
  for (const auto& [m, c] : p.terms()) {
    LaurentPolynomial term(c);
    Monomial rest;
    for (const auto& [v, e] : m.powers()) {
      auto r = ranges.find(v);
      if (r == ranges.end()) {
        rest = rest * Monomial(v, e);
        continue;
      }
      const auto& [f, lo, hi] = r->second;
      term *= power(num_pow, v, f->num(), e - lo);
      term *= power(den_pow, v, f->den(), hi - e);
    }
    // bound variables absent from this monomial have e = 0
    for (const auto& [v, range] : ranges) {
      if (m.exponent(v) != 0) continue;
      term *= power(num_pow, v, range.value->num(), -range.lo);
      term *= power(den_pow, v, range.value->den(), range.hi);
    }
    num.add_scaled(term, CycloRational(1), rest);
  }
  LaurentPolynomial den(1);
  for (const auto& [v, r] : ranges) {
    den *= power(num_pow, v, r.value->num(), -r.lo);
    den *= power(den_pow, v, r.value->den(), r.hi);
  }
  return RationalFunction(std::move(num), std::move(den));
}

RationalFunction poly_substitute(const RationalFunction& f, const std::map<VarId, RationalFunction>& bindings) {
  return poly_substitute(f.num(), bindings) / poly_substitute(f.den(), bindings);
}

}  // namespace yokotl
