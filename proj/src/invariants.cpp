#include "yokotl/invariants.hpp"

#include <cstdlib>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include "yokotl/esystem.hpp"
#include "yokotl/limits.hpp"

namespace yokotl {

namespace {

LaurentPolynomial var(VarId v, int e = 1) { return LaurentPolynomial::variable(v, e); }
LaurentPolynomial q_poly() { return var(vars::q()); }
LaurentPolynomial s_poly() { return var(vars::sqrt_lambda()); }
LaurentPolynomial one() { return LaurentPolynomial(1); }

LaurentPolynomial sign(int k) { return LaurentPolynomial(k % 2 == 0 ? 1 : -1); }

// Shared trace engines, one per (presentation, modulus, D); basis values
// are memoized across calls.
class TraceCache {
 public:
  static const MarkovTrace& get(const Presentation& p, int modulus, const std::set<int>& D) {
    static TraceCache cache;
    std::lock_guard<std::mutex> lock(cache.mutex_);
    auto key = std::make_tuple(p.kind == Presentation::Kind::U, p.param.str(), modulus, D);
    auto it = cache.engines_.find(key);
    if (it == cache.engines_.end()) {
      ESolution sol = esolution(modulus, D);
      auto engine = std::make_unique<MarkovTrace>(sol.trace_params(), p);
      it = cache.engines_.emplace(key, std::move(engine)).first;
    }
    return *it->second;
  }

 private:
  std::mutex mutex_;
  std::map<std::tuple<bool, std::string, int, std::set<int>>, std::unique_ptr<MarkovTrace>> engines_;
};

std::set<int> full_set(int d) {
  std::set<int> D;
  for (int m = 0; m < d; ++m) D.insert(m);
  return D;
}

// tr(δ(b)) with z kept formal, as coefficients of z^k
std::map<int, LaurentPolynomial> trace_in_z(const BraidWord& b, const Presentation& p, int modulus,
                                            const std::set<int>& D) {
  const MarkovTrace& tr = TraceCache::get(p, modulus, D);
  return tr.symbolic(embed_braid(b, modulus, p)).coefficients_in(vars::z());
}

Rational e_of(const std::set<int>& D) {
  if (D.empty()) throw std::invalid_argument("D must be nonempty");
  return Rational(1, static_cast<long>(D.size()));
}

// Memoized d=1 sublink values.
template <class V>
class SublinkCache {
 public:
  V get(const BraidWord& b, const std::function<V(const BraidWord&)>& compute) {
    BraidWord key = b.freely_reduced();
    {
      std::lock_guard<std::mutex> lock(mutex_);
      auto it = values_.find(key);
      if (it != values_.end()) return it->second;
    }
    V v = compute(key);
    std::lock_guard<std::mutex> lock(mutex_);
    values_.emplace(key, v);
    return v;
  }

 private:
  std::mutex mutex_;
  std::map<BraidWord, V> values_;
};

SublinkCache<RationalFunction>& homflypt_cache() {
  static SublinkCache<RationalFunction> c;
  return c;
}
SublinkCache<LaurentPolynomial>& jones_cache() {
  static SublinkCache<LaurentPolynomial> c;
  return c;
}

RationalFunction homflypt_cached(const BraidWord& b) {
  return homflypt_cache().get(b, [](const BraidWord& w) { return theta_cap(w, 1); });
}
LaurentPolynomial jones_cached(const BraidWord& b) {
  return jones_cache().get(b, [](const BraidWord& w) { return theta_small(w, 1); });
}

std::set<int> as_set(const std::vector<int>& v) { return std::set<int>(v.begin(), v.end()); }

LaurentPolynomial E_inverse_value(const std::optional<CycloRational>& E) {
  if (!E) return var(vars::E(), -1);
  if (E->is_zero()) throw PoleError("E = 0 is a pole of the invariant");
  return LaurentPolynomial(E->inverse());
}

// ---------------------------------------------------------------- skein

struct SkeinRules {
  RationalFunction s;     // λ^{1/2}
  RationalFunction s_inv;
  RationalFunction mu;
  RationalFunction e_inv;
  std::function<RationalFunction(const BraidWord&)> knot_value;
};

class SkeinEvaluator {
 public:
  explicit SkeinEvaluator(SkeinRules rules) : rules_(std::move(rules)) {
    const LaurentPolynomial q = q_poly();
    delta_ = RationalFunction(q - q.inverse_term());
  }

  RationalFunction eval(const BraidWord& b, int depth = 0) {
    if (depth > depth_limit()) throw ResourceLimitError("skein recursion exceeded its depth bound");
    BraidWord key = b.freely_reduced();
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;

    const LinkClosure cl = closure_components(key);
    const auto [position, bad] = first_bad_crossing(key, cl);
    RationalFunction value;
    if (bad == 0) {
      const int r = cl.component_count();
      value = (rules_.mu * rules_.e_inv).pow(r - 1);
      for (int c = 0; c < r; ++c) value *= rules_.knot_value(delete_components(key, {c}));
    } else {
      std::vector<int> switched = key.letters(), smoothed = key.letters();
      const int letter = key.letters()[position];
      switched[position] = -letter;
      smoothed.erase(smoothed.begin() + static_cast<std::ptrdiff_t>(position));
      BraidWord sw(key.strands(), switched), sm(key.strands(), smoothed);
      check_progress(cl.component_count(), bad, sw, sm);
      RationalFunction a = eval(sw, depth + 1), z = eval(sm, depth + 1);
      if (letter > 0) {
        value = rules_.s * rules_.s * a + rules_.s * delta_ * z;
      } else {
        value = rules_.s_inv * rules_.s_inv * a - rules_.s_inv * delta_ * z;
      }
    }
    memo_.emplace(key, value);
    return value;
  }

 private:
  // A mixed crossing is bad when the over-strand belongs to the component
  // with the larger index; a diagram without bad crossings is layered and
  // hence split.  In σ_i the strand moving from position i to i+1 is over.
  static std::pair<std::size_t, int> first_bad_crossing(const BraidWord& b, const LinkClosure& cl) {
    std::vector<int> at(b.strands());
    std::iota(at.begin(), at.end(), 0);
    std::size_t first = 0;
    int count = 0;
    for (std::size_t k = 0; k < b.length(); ++k) {
      const int l = b.letters()[k];
      const int i = std::abs(l) - 1;
      const int left = cl.component_of_strand[at[i]], right = cl.component_of_strand[at[i + 1]];
      const int over = l > 0 ? left : right, under = l > 0 ? right : left;
      if (over > under) {
        if (count++ == 0) first = k;
      }
      std::swap(at[i], at[i + 1]);
    }
    return {first, count};
  }

  static void check_progress(int components, int bad, const BraidWord& switched, const BraidWord& smoothed) {
    const BraidWord sw = switched.freely_reduced();
    const LinkClosure a = closure_components(sw);
    if (a.component_count() != components || first_bad_crossing(sw, a).second >= bad)
      throw std::runtime_error("skein recursion: switching made no progress");
    if (closure_components(smoothed).component_count() >= components)
      throw std::runtime_error("skein recursion: smoothing made no progress");
  }

  SkeinRules rules_;
  RationalFunction delta_;
  std::map<BraidWord, RationalFunction> memo_;
};

}  // namespace

// ---------------------------------------------------------------- combinatorics

std::vector<SetPartition> set_partitions(int m) {
  if (m < 0) throw std::invalid_argument("set_partitions: negative size");
  std::vector<SetPartition> out;
  SetPartition cur;
  std::function<void(int)> rec = [&](int e) {
    if (e == m) {
      out.push_back(cur);
      return;
    }
    for (std::size_t b = 0; b < cur.size(); ++b) {
      cur[b].push_back(e);
      rec(e + 1);
      cur[b].pop_back();
    }
    cur.push_back({e});
    rec(e + 1);
    cur.pop_back();
  };
  rec(0);
  return out;
}

int nu(const SetPartition& pi, const std::vector<std::vector<int>>& linking) {
  std::vector<int> block_of(linking.size(), -1);
  for (std::size_t b = 0; b < pi.size(); ++b)
    for (int c : pi[b]) {
      if (c < 0 || c >= static_cast<int>(linking.size())) throw std::out_of_range("nu: component out of range");
      block_of[c] = static_cast<int>(b);
    }
  int total = 0;
  for (std::size_t i = 0; i < linking.size(); ++i)
    for (std::size_t j = i + 1; j < linking.size(); ++j)
      if (block_of[i] != block_of[j]) total += linking[i][j];
  return total;
}

LaurentPolynomial E_k(int k) {
  if (k < 1) throw std::invalid_argument("E_k needs k >= 1");
  LaurentPolynomial r = one();
  const LaurentPolynomial e_inv = var(vars::E(), -1);
  for (int j = 1; j < k; ++j) r *= e_inv - LaurentPolynomial(j);
  return r;
}

RationalFunction mu_cap() {
  const LaurentPolynomial q = q_poly(), s = s_poly();
  return RationalFunction(s.inverse_term() - s, q - q.inverse_term());
}

LaurentPolynomial mu_small() {
  const LaurentPolynomial q = q_poly();
  return -(q + q.inverse_term());
}

RationalFunction canonical_form(RationalFunction f) {
  f.simplify();
  if (f.is_polynomial()) return f;
  f.reduce_by(q_poly().pow(2) - one());
  f.reduce_by(s_poly().pow(2) - one());
  f.simplify();
  return f;
}

LaurentPolynomial lambda_to_q4(const RationalFunction& f) {
  const LaurentPolynomial q2 = q_poly().pow(2);
  RationalFunction g = poly_substitute(f, {{vars::sqrt_lambda(), RationalFunction(q2)}});
  g.reduce_by(q2 - one());
  g.reduce_by(q2 + one());
  return canonical_form(g).to_laurent();
}

LaurentPolynomial bind_E(const LaurentPolynomial& p, const CycloRational& E) {
  if (E.is_zero()) throw PoleError("E = 0 is a pole of the invariant");
  return p.substitute({{vars::E(), LaurentPolynomial(E)}});
}

RationalFunction bind_E(const RationalFunction& f, const CycloRational& E) {
  if (E.is_zero()) throw PoleError("E = 0 is a pole of the invariant");
  return canonical_form(poly_substitute(f, {{vars::E(), RationalFunction(E)}}));
}

// ---------------------------------------------------------------- trace route

RationalFunction theta_cap(const BraidWord& b, int modulus, const std::set<int>& D) {
  const int n = b.strands();
  const Rational E = e_of(D);
  const LaurentPolynomial q = q_poly(), s = s_poly();
  const LaurentPolynomial q2m1 = q.pow(2) - one(), one_m_s2 = one() - s.pow(2);
  // P^{n-1} z'^k = (1-s^2)^{n-1-k} s^{1-n} (δ E)^{k-n+1}, δ = (q^2-1)/q
  LaurentPolynomial num;
  for (const auto& [k, c] : trace_in_z(b, Presentation::q_form(), modulus, D))
    num += c * one_m_s2.pow(n - 1 - k) * q2m1.pow(k) * s.pow(1 - n) * q.pow(n - 1 - k) *
           LaurentPolynomial(CycloRational(E).pow(k - n + 1));
  num = num * s.pow(exponent_sum(b));
  return canonical_form(RationalFunction(num, q2m1.pow(n - 1)));
}

RationalFunction theta_cap(const BraidWord& b, int d) { return theta_cap(b, d, full_set(d)); }

LaurentPolynomial theta_small(const BraidWord& b, int modulus, const std::set<int>& D) {
  const int n = b.strands();
  const CycloRational E(e_of(D));
  const LaurentPolynomial q = q_poly(), q2p1 = q.pow(2) + one();
  // P^{n-1} z'^k = (-1)^{n-1+k} (1+q^2)^{n-1-k} q^{-k-n+1} E^{k-n+1}
  LaurentPolynomial out;
  for (const auto& [k, c] : trace_in_z(b, Presentation::q_form(), modulus, D))
    out += c * sign(n - 1 + k) * q2p1.pow(n - 1 - k) * q.pow(-k - n + 1) * LaurentPolynomial(E.pow(k - n + 1));
  return out * q.pow(2 * exponent_sum(b));
}

LaurentPolynomial theta_small(const BraidWord& b, int d) { return theta_small(b, d, full_set(d)); }

RationalFunction homflypt(const BraidWord& b) { return homflypt_cached(b); }

LaurentPolynomial jones(const BraidWord& b) { return jones_cached(b); }

LaurentPolynomial jones_u(const BraidWord& b) {
  return gamma_specialized(FramedBraid(1, b), {0});
}

// ---------------------------------------------------------------- framed

RationalFunction gamma_framed(const FramedBraid& fb, const std::set<int>& D) {
  const int n = fb.strands(), d = fb.modulus();
  const Presentation p = Presentation::u_form();
  const MarkovTrace& tr = TraceCache::get(p, d, D);
  const LaurentPolynomial t = tr.symbolic(embed_braid(fb, p));
  const LaurentPolynomial u = var(vars::u()), z = var(vars::z());
  const LaurentPolynomial size(static_cast<long>(D.size()));
  // (−(1−wu)|D|/(1−u)) simplifies to 1/z for this w
  const RationalFunction w(size * z + one() - u, u * z * size);
  const int k = exponent_sum(fb.word()) - n + 1;
  const int half = k >= 0 ? k / 2 : -((-k + 1) / 2);
  RationalFunction out = RationalFunction(t * z.pow(1 - n)) * w.pow(half);
  if (k - 2 * half == 1) out *= RationalFunction(var(vars::sqrt_w()));
  out.simplify();
  return out;
}

LaurentPolynomial gamma_specialized(const FramedBraid& fb, const std::set<int>& D) {
  const int n = fb.strands(), d = fb.modulus();
  const LaurentPolynomial r = var(vars::sqrt_u()), u = r.pow(2);
  const Presentation p = Presentation::u_form(u);
  const MarkovTrace& tr = TraceCache::get(p, d, D);
  const LaurentPolynomial size(static_cast<long>(D.size()));
  // P^{n-1} z^k = (-1)^{n-1+k} (1+u)^{n-1-k} |D|^{n-1-k} r^{-(n-1)}
  LaurentPolynomial out;
  for (const auto& [k, c] : tr.symbolic(embed_braid(fb, p)).coefficients_in(vars::z()))
    out += c * sign(n - 1 + k) * (u + one()).pow(n - 1 - k) * size.pow(n - 1 - k);
  return out * r.pow(exponent_sum(fb.word()) - n + 1);
}

RationalFunction delta(const BraidWord& b, int d, const std::set<int>& D) { return gamma_framed(FramedBraid(d, b), D); }

LaurentPolynomial delta_specialized(const BraidWord& b, int d, const std::set<int>& D) {
  return gamma_specialized(FramedBraid(d, b), D);
}

// ---------------------------------------------------------------- combinatorial route

RationalFunction theta_combinatorial(const BraidWord& b, std::optional<CycloRational> E) {
  const LinkClosure cl = closure_components(b);
  const LaurentPolynomial s = s_poly();
  const RationalFunction mu = mu_cap();
  std::map<std::vector<int>, RationalFunction> block_value;
  RationalFunction total;
  for (const auto& pi : set_partitions(cl.component_count())) {
    const int k = static_cast<int>(pi.size());
    RationalFunction term = mu.pow(k - 1) * RationalFunction(E_k(k) * s.pow(2 * nu(pi, cl.linking)));
    for (const auto& block : pi) {
      auto it = block_value.find(block);
      if (it == block_value.end())
        it = block_value.emplace(block, homflypt_cached(delete_components(b, as_set(block)))).first;
      term *= it->second;
    }
    total += term;
  }
  total = canonical_form(total);
  return E ? bind_E(total, *E) : total;
}

LaurentPolynomial theta2_combinatorial(const BraidWord& b, std::optional<CycloRational> E) {
  const LinkClosure cl = closure_components(b);
  const LaurentPolynomial q = q_poly(), mu = mu_small();
  std::map<std::vector<int>, LaurentPolynomial> block_value;
  LaurentPolynomial total;
  for (const auto& pi : set_partitions(cl.component_count())) {
    const int k = static_cast<int>(pi.size());
    LaurentPolynomial term = mu.pow(k - 1) * E_k(k) * q.pow(4 * nu(pi, cl.linking));
    for (const auto& block : pi) {
      auto it = block_value.find(block);
      if (it == block_value.end())
        it = block_value.emplace(block, jones_cached(delete_components(b, as_set(block)))).first;
      term *= it->second;
    }
    total += term;
  }
  return E ? bind_E(total, *E) : total;
}

// ---------------------------------------------------------------- skein route

RationalFunction theta_skein(const BraidWord& b, std::optional<CycloRational> E) {
  const LaurentPolynomial s = s_poly();
  SkeinRules rules{RationalFunction(s), RationalFunction(s.inverse_term()), mu_cap(), RationalFunction(E_inverse_value(E)),
                   [](const BraidWord& k) { return homflypt_cached(k); }};
  return canonical_form(SkeinEvaluator(std::move(rules)).eval(b));
}

LaurentPolynomial theta2_skein(const BraidWord& b, std::optional<CycloRational> E) {
  const LaurentPolynomial q2 = q_poly().pow(2);
  SkeinRules rules{RationalFunction(q2), RationalFunction(q2.inverse_term()), RationalFunction(mu_small()),
                   RationalFunction(E_inverse_value(E)),
                   [](const BraidWord& k) { return RationalFunction(jones_cached(k)); }};
  RationalFunction v = SkeinEvaluator(std::move(rules)).eval(b);
  v.simplify();
  return v.to_laurent();
}

}  // namespace yokotl
