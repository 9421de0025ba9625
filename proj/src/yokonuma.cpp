#include "yokotl/yokonuma.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "yokotl/limits.hpp"

namespace yokotl {

namespace {

void accumulate(AlgebraElement::Terms& terms, const NormalWord& w, const LaurentPolynomial& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  }
}

LaurentPolynomial quadratic_coefficient(const Presentation& p) {
  if (p.kind == Presentation::Kind::U) return p.param - LaurentPolynomial(1);
  return p.param - p.param.inverse_term();
}

LaurentPolynomial inverse_coefficient(const Presentation& p) {
  if (p.kind == Presentation::Kind::U) return p.param.inverse_term() - LaurentPolynomial(1);
  return -quadratic_coefficient(p);
}

}  // namespace

Presentation Presentation::u_form() { return u_form(LaurentPolynomial::variable(vars::u())); }

Presentation Presentation::u_form(LaurentPolynomial u_value) {
  if (!u_value.is_term()) throw std::invalid_argument("presentation parameter must be a single term");
  return {Kind::U, std::move(u_value)};
}

Presentation Presentation::q_form() { return q_form(LaurentPolynomial::variable(vars::q())); }

Presentation Presentation::q_form(LaurentPolynomial q_value) {
  if (!q_value.is_term()) throw std::invalid_argument("presentation parameter must be a single term");
  return {Kind::Q, std::move(q_value)};
}

// ---------------------------------------------------------------- NormalWord

NormalWord::NormalWord(int n) {
  if (n < 1 || n > 255) throw std::invalid_argument("strand count must lie in 1..255");
  data_.assign(2 * n, 0);
  for (int j = 0; j < n; ++j) data_[n + j] = static_cast<std::uint8_t>(j);
}

NormalWord::NormalWord(std::vector<int> framing, std::vector<int> perm, int d) {
  const int n = static_cast<int>(perm.size());
  if (n < 1 || n > 255 || static_cast<int>(framing.size()) != n)
    throw std::invalid_argument("framing and permutation must have equal length in 1..255");
  if (d < 1 || d > 256) throw std::invalid_argument("framing modulus must lie in 1..256");
  std::vector<char> seen(n, 0);
  data_.resize(2 * n);
  for (int j = 0; j < n; ++j) {
    if (perm[j] < 0 || perm[j] >= n || seen[perm[j]]) throw std::invalid_argument("not a permutation");
    seen[perm[j]] = 1;
    data_[j] = static_cast<std::uint8_t>(((framing[j] % d) + d) % d);
    data_[n + j] = static_cast<std::uint8_t>(perm[j]);
  }
}

std::vector<int> NormalWord::framing_vector() const {
  return std::vector<int>(data_.begin(), data_.begin() + strands());
}

std::vector<int> NormalWord::permutation() const {
  return std::vector<int>(data_.begin() + strands(), data_.end());
}

std::vector<std::pair<int, int>> NormalWord::stair_runs() const {
  std::vector<int> w = permutation();
  std::vector<std::pair<int, int>> runs;
  for (int k = strands(); k >= 2; --k) {
    int p = static_cast<int>(std::find(w.begin(), w.end(), k - 1) - w.begin());
    if (p != k - 1) runs.emplace_back(k - 1, p + 1);
    w.erase(w.begin() + p);
  }
  std::reverse(runs.begin(), runs.end());
  return runs;
}

std::vector<int> NormalWord::reduced_word() const {
  std::vector<int> out;
  for (auto [top, bottom] : stair_runs())
    for (int i = top; i >= bottom; --i) out.push_back(i);
  return out;
}

int NormalWord::length() const {
  int inv = 0;
  const int n = strands();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) inv += perm(a) > perm(b);
  return inv;
}

NormalWord NormalWord::truncated() const {
  const int n = strands();
  if (n < 2 || perm(n - 1) != n - 1) throw std::logic_error("truncated: last strand is not fixed");
  NormalWord out;
  out.data_.reserve(2 * (n - 1));
  out.data_.insert(out.data_.end(), data_.begin(), data_.begin() + n - 1);
  out.data_.insert(out.data_.end(), data_.begin() + n, data_.end() - 1);
  return out;
}

std::string NormalWord::str() const {
  std::string s = "t^[";
  for (int j = 0; j < strands(); ++j) s += (j ? "," : "") + std::to_string(framing(j));
  s += "] g[";
  bool first = true;
  for (int i : reduced_word()) {
    s += (first ? "" : ",") + std::to_string(i);
    first = false;
  }
  return s + "]";
}

std::size_t NormalWordHash::operator()(const NormalWord& w) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (std::uint8_t b : w.raw()) h = (h ^ b) * 1099511628211ull;
  return h;
}

std::vector<NormalWord> enumerate_basis(int d, int n) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int>> perms;
  do perms.push_back(perm);
  while (std::next_permutation(perm.begin(), perm.end()));
  std::vector<NormalWord> out;
  std::vector<int> a(n, 0);
  for (;;) {
    for (const auto& p : perms) out.emplace_back(a, p, d);
    int j = n - 1;
    while (j >= 0 && a[j] == d - 1) a[j--] = 0;
    if (j < 0) break;
    ++a[j];
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------- AlgebraElement

AlgebraElement::AlgebraElement(int d, int n, Presentation p) : d_(d), n_(n), pres_(std::move(p)) {
  if (d < 1 || d > 256) throw std::invalid_argument("framing modulus must lie in 1..256");
  if (n < 1 || n > 255) throw std::invalid_argument("strand count must lie in 1..255");
}

AlgebraElement AlgebraElement::identity(int d, int n, const Presentation& p) {
  AlgebraElement a(d, n, p);
  a.terms_.emplace(NormalWord(n), LaurentPolynomial(1));
  return a;
}

AlgebraElement AlgebraElement::basis(const NormalWord& w, int d, const Presentation& p) {
  AlgebraElement a(d, w.strands(), p);
  for (int j = 0; j < w.strands(); ++j)
    if (w.framing(j) >= d) throw std::invalid_argument("framing exceeds the modulus");
  a.terms_.emplace(w, LaurentPolynomial(1));
  return a;
}

AlgebraElement AlgebraElement::braiding(int i, int d, int n, const Presentation& p) {
  return identity(d, n, p).mul_braiding(i);
}

AlgebraElement AlgebraElement::framing(int j, int d, int n, const Presentation& p) {
  return identity(d, n, p).mul_framing(j, 1);
}

void AlgebraElement::add_term(const NormalWord& w, const LaurentPolynomial& c) {
  if (w.strands() != n_) throw std::invalid_argument("basis word has the wrong strand count");
  accumulate(terms_, w, c);
}

template <class F>
void AlgebraElement::for_each_idempotent_shift(const NormalWord& w, int pos, F&& f) const {
  // t^a g_w e_i = (1/d) Σ_s t^a t_{w(i)}^s t_{w(i+1)}^{-s} g_w
  const int ja = w.perm(pos), jb = w.perm(pos + 1);
  NormalWord v = w;
  for (int s = 0; s < d_; ++s) {
    v.set_framing(ja, (w.framing(ja) + s) % d_);
    v.set_framing(jb, (w.framing(jb) - s + d_) % d_);
    f(v);
  }
}

AlgebraElement& AlgebraElement::mul_braiding(int i) {
  if (i < 1 || i >= n_) throw std::out_of_range("braiding generator index out of range");
  const int pos = i - 1;
  const bool u_form = pres_.kind == Presentation::Kind::U;
  LaurentPolynomial k = quadratic_coefficient(pres_) * CycloRational(Rational(1, d_));
  Terms out;
  for (const auto& [w, c] : terms_) {
    NormalWord ws = w;
    ws.swap_perm(pos);
    accumulate(out, ws, c);
    if (w.perm(pos) < w.perm(pos + 1)) continue;
    LaurentPolynomial kc = c * k;
    // g_w g_i = g_{ws} g_i^2 with the quadratic relation expanded
    for_each_idempotent_shift(ws, pos, [&](const NormalWord& v) {
      NormalWord back = v;
      back.swap_perm(pos);
      accumulate(out, back, kc);
      if (u_form) accumulate(out, v, kc);
    });
  }
  terms_ = std::move(out);
  return *this;
}

AlgebraElement& AlgebraElement::mul_braiding_inverse(int i) {
  if (i < 1 || i >= n_) throw std::out_of_range("braiding generator index out of range");
  const LaurentPolynomial c = inverse_coefficient(pres_);
  AlgebraElement xe = *this;
  xe.mul_idempotent(i);
  mul_braiding(i);
  if (pres_.kind == Presentation::Kind::U) {
    AlgebraElement xeg = xe;
    xeg.mul_braiding(i);
    xe += xeg;
  }
  xe *= c;
  *this += xe;
  return *this;
}

AlgebraElement& AlgebraElement::mul_framing(int j, int power) {
  if (j < 1 || j > n_) throw std::out_of_range("framing generator index out of range");
  const int p = ((power % d_) + d_) % d_;
  if (p == 0) return *this;
  Terms out;
  for (const auto& [w, c] : terms_) {
    NormalWord v = w;
    const int at = w.perm(j - 1);
    v.set_framing(at, (w.framing(at) + p) % d_);
    accumulate(out, v, c);
  }
  terms_ = std::move(out);
  return *this;
}

AlgebraElement& AlgebraElement::mul_idempotent(int i) {
  if (i < 1 || i >= n_) throw std::out_of_range("idempotent index out of range");
  const CycloRational inv_d(Rational(1, d_));
  Terms out;
  for (const auto& [w, c] : terms_) {
    LaurentPolynomial cd = c * inv_d;
    for_each_idempotent_shift(w, i - 1, [&](const NormalWord& v) { accumulate(out, v, cd); });
  }
  terms_ = std::move(out);
  return *this;
}

void AlgebraElement::check_compatible(const AlgebraElement& o) const {
  if (d_ != o.d_ || n_ != o.n_ || pres_ != o.pres_)
    throw std::invalid_argument("algebra elements live in different algebras");
}

AlgebraElement AlgebraElement::operator-() const {
  AlgebraElement r = *this;
  for (auto& [w, c] : r.terms_) c = -c;
  return r;
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  check_compatible(o);
  for (const auto& [w, c] : o.terms_) accumulate(terms_, w, c);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
  check_compatible(o);
  for (const auto& [w, c] : o.terms_) accumulate(terms_, w, -c);
  return *this;
}

AlgebraElement& AlgebraElement::operator*=(const LaurentPolynomial& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, v] : terms_) v *= c;
  return *this;
}

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
  a.check_compatible(b);
  AlgebraElement out(a.d_, a.n_, a.pres_);
  for (const auto& [v, c] : b.terms_) {
    AlgebraElement x = a;
    for (int j = 0; j < v.strands(); ++j) x.mul_framing(j + 1, v.framing(j));
    for (int i : v.reduced_word()) x.mul_braiding(i);
    x *= c;
    out += x;
  }
  return out;
}

AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) { return a * b; }

AlgebraElement AlgebraElement::embedded(int extra_strands) const {
  if (extra_strands < 0) throw std::invalid_argument("cannot embed into fewer strands");
  const int m = n_ + extra_strands;
  AlgebraElement out(d_, m, pres_);
  for (const auto& [w, c] : terms_) {
    std::vector<int> a = w.framing_vector(), p = w.permutation();
    for (int j = n_; j < m; ++j) {
      a.push_back(0);
      p.push_back(j);
    }
    out.terms_.emplace(NormalWord(a, p, d_), c);
  }
  return out;
}

AlgebraElement AlgebraElement::with_coefficients(const std::map<VarId, LaurentPolynomial>& bindings,
                                                 Presentation target) const {
  AlgebraElement out(d_, n_, std::move(target));
  for (const auto& [w, c] : terms_) accumulate(out.terms_, w, c.substitute(bindings));
  return out;
}

bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
  return a.d_ == b.d_ && a.n_ == b.n_ && a.pres_ == b.pres_ && a.terms_ == b.terms_;
}

std::string AlgebraElement::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [w, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += "(" + c.str() + ")";
    for (int j = 0; j < n_; ++j)
      if (w.framing(j) != 0) s += "*t" + std::to_string(j + 1) + "^" + std::to_string(w.framing(j));
    for (int i : w.reduced_word()) s += "*g" + std::to_string(i);
  }
  return s;
}

AlgebraElement embed_braid(const BraidWord& b, int d, const Presentation& p) {
  AlgebraElement x = AlgebraElement::identity(d, b.strands(), p);
  for (int l : b.letters()) {
    if (l > 0) {
      x.mul_braiding(l);
    } else {
      x.mul_braiding_inverse(-l);
    }
  }
  return x;
}

AlgebraElement embed_braid(const FramedBraid& b, const Presentation& p) {
  AlgebraElement x = AlgebraElement::identity(b.modulus(), b.strands(), p);
  for (int j = 0; j < b.strands(); ++j) x.mul_framing(j + 1, b.framings()[j]);
  for (int l : b.word().letters()) {
    if (l > 0) {
      x.mul_braiding(l);
    } else {
      x.mul_braiding_inverse(-l);
    }
  }
  return x;
}

AlgebraElement idempotent_e(int i, int d, int n, const Presentation& p) {
  return AlgebraElement::identity(d, n, p).mul_idempotent(i);
}

AlgebraElement convert_presentation(const AlgebraElement& a) {
  const int d = a.modulus(), n = a.strands();
  const Presentation& src = a.presentation();
  std::map<VarId, LaurentPolynomial> bindings;
  Presentation target;
  LaurentPolynomial shift;  // g = g' + shift·e g'  (U→Q)  or  g' = g + shift·e g  (Q→U)
  if (src.kind == Presentation::Kind::U) {
    const LaurentPolynomial q = LaurentPolynomial::variable(vars::q());
    if (src.param == LaurentPolynomial::variable(vars::u())) {
      bindings[vars::u()] = q.pow(2);
    } else if (src.param != q.pow(2)) {
      throw std::invalid_argument("U to Q conversion needs the U parameter to be u or q^2");
    }
    target = Presentation::q_form(q);
    shift = q - LaurentPolynomial(1);
  } else {
    target = Presentation::u_form(src.param.pow(2));
    shift = src.param.inverse_term() - LaurentPolynomial(1);
  }
  AlgebraElement out(d, n, target);
  for (const auto& [w, c] : a.terms()) {
    // the framing part t^a is the same in both presentations
    std::vector<int> id(n);
    std::iota(id.begin(), id.end(), 0);
    AlgebraElement x = AlgebraElement::basis(NormalWord(w.framing_vector(), id, d), d, target);
    for (int i : w.reduced_word()) {
      AlgebraElement xe = x;
      xe.mul_idempotent(i).mul_braiding(i);
      x.mul_braiding(i);
      xe *= shift;
      x += xe;
    }
    x *= bindings.empty() ? c : c.substitute(bindings);
    out += x;
  }
  return out;
}

// ---------------------------------------------------------------- trace

TraceParams TraceParams::generic(int d) {
  if (d < 1) throw std::invalid_argument("trace modulus must be positive");
  TraceParams p;
  p.d = d;
  p.x.assign(d, std::nullopt);
  p.x[0] = RationalFunction(1);
  return p;
}

TraceParams TraceParams::with_x(int d, const std::vector<CycloRational>& x, std::optional<RationalFunction> z) {
  if (static_cast<int>(x.size()) != d) throw std::invalid_argument("need exactly d trace parameters x_0..x_{d-1}");
  if (!x[0].is_one()) throw std::invalid_argument("x_0 must equal 1");
  TraceParams p = generic(d);
  for (int s = 1; s < d; ++s) p.x[s] = RationalFunction(x[s]);
  p.z = std::move(z);
  return p;
}

bool TraceParams::specialized() const {
  if (!z) return false;
  return std::all_of(x.begin(), x.end(), [](const auto& v) { return v.has_value(); });
}

MarkovTrace::MarkovTrace(TraceParams params, Presentation p) : params_(std::move(params)), pres_(std::move(p)) {
  if (static_cast<int>(params_.x.size()) != params_.d) throw std::invalid_argument("trace parameter count mismatch");
  x_poly_.resize(params_.d);
  x_poly_[0] = LaurentPolynomial(1);
  for (int s = 1; s < params_.d; ++s) {
    auto& v = params_.x[s];
    if (v) {
      RationalFunction r = *v;
      r.simplify();
      if (r.is_polynomial()) {
        x_poly_[s] = r.num();
        continue;
      }
      late_[vars::x(s)] = r;
    }
    x_poly_[s] = LaurentPolynomial::variable(vars::x(s));
  }
  if (params_.z) late_[vars::z()] = *params_.z;
}

LaurentPolynomial MarkovTrace::basis_trace(const NormalWord& w) const {
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = memo_.find(w);
    if (it != memo_.end()) return it->second;
  }
  const int n = w.strands();
  LaurentPolynomial value;
  if (n == 1) {
    value = x_poly_[w.framing(0)];
  } else {
    int p = 0;
    while (w.perm(p) != n - 1) ++p;
    if (p == n - 1) {
      value = x_poly_[w.framing(n - 1)] * basis_trace(w.truncated());
    } else {
      // t^a g_w = t^{a'} g_{w'} t_n^{a_n} g_{n-1} g_{n-2} … g_{p+1}
      std::vector<int> a = w.framing_vector(), perm = w.permutation();
      const int an = a.back();
      a.pop_back();
      perm.erase(perm.begin() + p);
      AlgebraElement x(params_.d, n - 1, pres_);
      x.add_term(NormalWord(a, perm, params_.d), LaurentPolynomial(1));
      x.mul_framing(n - 1, an);
      for (int i = n - 2; i >= p + 1; --i) x.mul_braiding(i);
      for (const auto& [v, c] : x.terms()) value += c * basis_trace(v);
      value *= LaurentPolynomial::variable(vars::z());
    }
  }
  std::lock_guard<std::mutex> lock(mutex_);
  if (const std::size_t cap = memo_limit(); cap && memo_.size() >= cap) memo_.clear();
  memo_.emplace(w, value);
  return value;
}

LaurentPolynomial MarkovTrace::symbolic(const AlgebraElement& a) const {
  if (a.modulus() != params_.d) throw std::invalid_argument("trace modulus does not match the algebra");
  if (a.presentation() != pres_) throw std::invalid_argument("trace presentation does not match the algebra");
  LaurentPolynomial out;
  for (const auto& [w, c] : a.terms()) out += c * basis_trace(w);
  return out;
}

RationalFunction MarkovTrace::specialize(const LaurentPolynomial& symbolic_value) const {
  if (late_.empty()) return RationalFunction(symbolic_value);
  return poly_substitute(symbolic_value, late_);
}

RationalFunction MarkovTrace::operator()(const AlgebraElement& a) const { return specialize(symbolic(a)); }

}  // namespace yokotl
