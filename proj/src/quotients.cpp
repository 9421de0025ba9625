#include "yokotl/quotients.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace yokotl {

std::string to_string(QuotientKind k) {
  switch (k) {
    case QuotientKind::YTL: return "YTL";
    case QuotientKind::CTL: return "CTL";
    case QuotientKind::FTL: return "FTL";
  }
  return "?";
}

int DPartition::size() const {
  int s = 0;
  for (const auto& p : parts)
    for (int v : p) s += v;
  return s;
}

std::string DPartition::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) s += ",";
    s += "(";
    for (std::size_t j = 0; j < parts[i].size(); ++j) s += (j ? "," : "") + std::to_string(parts[i][j]);
    s += ")";
  }
  return s + ")";
}

Integer binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Integer catalan(int k) {
  if (k < 0) throw std::invalid_argument("catalan index must be nonnegative");
  return binomial(2 * k, k) / (k + 1);
}

Integer multinomial(const std::vector<int>& parts) {
  Integer r = 1;
  int total = 0;
  for (int p : parts) {
    total += p;
    r *= binomial(total, p);
  }
  return r;
}

static Integer factorial(int n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

AlgebraElement ideal_generator(QuotientKind kind, int d, int n, const Presentation& p) {
  if (n < 3) throw std::invalid_argument("ideal generators need at least 3 strands");
  AlgebraElement g12 = AlgebraElement::identity(d, n, p);
  for (const auto& w : std::vector<std::vector<int>>{{1}, {2}, {1, 2}, {2, 1}, {1, 2, 1}}) {
    AlgebraElement x = AlgebraElement::identity(d, n, p);
    for (int i : w) x.mul_braiding(i);
    g12 += x;
  }
  if (kind == QuotientKind::YTL) return g12;
  AlgebraElement framing_sum(d, n, p);
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b)
      for (int c = 0; c < d; ++c) {
        if (kind == QuotientKind::FTL && (a + b + c) % d != 0) continue;
        std::vector<int> f(n, 0), id(n);
        for (int j = 0; j < n; ++j) id[j] = j;
        f[0] = a;
        f[1] = b;
        f[2] = c;
        framing_sum.add_term(NormalWord(f, id, d), LaurentPolynomial(1));
      }
  return framing_sum * g12;
}

Integer dim_y(int d, int n) {
  Integer r = factorial(n);
  for (int i = 0; i < n; ++i) r *= d;
  return r;
}

Integer dim_ytl(int d, int n) {
  Integer s = 0;
  for (int k = 1; k < n; ++k) s += binomial(n, k) * binomial(n, k);
  return Integer(d) * catalan(n) + Integer(d * (d - 1) / 2) * s;
}

std::vector<Composition> compositions(int n, int d) {
  std::vector<Composition> out;
  Composition cur(d, 0);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == d - 1) {
      cur[i] = left;
      out.push_back(cur);
      return;
    }
    for (int v = left; v >= 0; --v) {
      cur[i] = v;
      rec(i + 1, left - v);
    }
  };
  if (d >= 1) rec(0, n);
  return out;
}

Integer dim_ctl(int d, int n) {
  Integer s = 0;
  for (const auto& mu : compositions(n, d)) {
    Integer m = multinomial(mu);
    Integer t = m * m * catalan(mu[0]);
    for (int i = 1; i < d; ++i) t *= factorial(mu[i]);
    s += t;
  }
  return s;
}

Integer dim_ftl(int d, int n) {
  Integer s = 0;
  for (const auto& mu : compositions(n, d)) {
    Integer m = multinomial(mu);
    Integer t = m * m;
    for (int v : mu) t *= catalan(v);
    s += t;
  }
  return s;
}

Integer dim_quotient(QuotientKind kind, int d, int n) {
  switch (kind) {
    case QuotientKind::YTL: return dim_ytl(d, n);
    case QuotientKind::CTL: return dim_ctl(d, n);
    case QuotientKind::FTL: return dim_ftl(d, n);
  }
  return 0;
}

std::vector<Partition> partitions(int n) {
  std::vector<Partition> out;
  Partition cur;
  std::function<void(int, int)> rec = [&](int left, int max_part) {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (int v = std::min(left, max_part); v >= 1; --v) {
      cur.push_back(v);
      rec(left - v, v);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

std::vector<DPartition> dpartitions(int d, int n) {
  std::vector<DPartition> out;
  for (const auto& mu : compositions(n, d)) {
    std::vector<std::vector<Partition>> choices;
    for (int v : mu) choices.push_back(partitions(v));
    std::vector<std::size_t> idx(d, 0);
    for (;;) {
      DPartition dp;
      for (int i = 0; i < d; ++i) dp.parts.push_back(choices[i][idx[i]]);
      out.push_back(std::move(dp));
      int i = d - 1;
      while (i >= 0 && idx[i] + 1 == choices[i].size()) idx[i--] = 0;
      if (i < 0) break;
      ++idx[i];
    }
  }
  return out;
}

Integer standard_tableaux_count(const Partition& p) {
  int n = 0;
  for (std::size_t r = 0; r < p.size(); ++r) {
    if (p[r] <= 0 || (r && p[r] > p[r - 1])) throw std::invalid_argument("not a partition");
    n += p[r];
  }
  Integer hooks = 1;
  for (std::size_t r = 0; r < p.size(); ++r)
    for (int c = 0; c < p[r]; ++c) {
      int below = 0;
      for (std::size_t r2 = r + 1; r2 < p.size() && p[r2] > c; ++r2) ++below;
      hooks *= p[r] - c - 1 + below + 1;
    }
  return factorial(n) / hooks;
}

Integer dpartition_dim(const DPartition& lambda) {
  std::vector<int> sizes;
  Integer r = 1;
  for (const auto& p : lambda.parts) {
    int s = 0;
    for (int v : p) s += v;
    sizes.push_back(s);
    r *= standard_tableaux_count(p);
  }
  return r * multinomial(sizes);
}

bool is_irrep(QuotientKind kind, const DPartition& lambda) {
  auto columns = [](const Partition& p) { return p.empty() ? 0 : p.front(); };
  switch (kind) {
    case QuotientKind::YTL: {
      int total = 0;
      for (const auto& p : lambda.parts) total += columns(p);
      return total <= 2;
    }
    case QuotientKind::CTL:
      return lambda.parts.empty() || columns(lambda.parts.front()) <= 2;
    case QuotientKind::FTL:
      return std::all_of(lambda.parts.begin(), lambda.parts.end(), [&](const Partition& p) { return columns(p) <= 2; });
  }
  return false;
}

bool factoring_check(QuotientKind kind, const TraceParams& params, FactoringOptions opts) {
  const int d = params.d, n = opts.n;
  const Presentation pres = Presentation::u_form();
  const MarkovTrace tr(params, pres);
  const AlgebraElement g = ideal_generator(kind, d, n, pres);
  const std::vector<NormalWord> basis = enumerate_basis(d, n);
  auto vanishes = [&](const AlgebraElement& x) { return tr(x).is_zero(); };
  if (!opts.exhaustive) {
    for (const auto& c : basis)
      if (!vanishes(g * AlgebraElement::basis(c, d, pres))) return false;
    return true;
  }
  for (const auto& a : basis) {
    const AlgebraElement ag = AlgebraElement::basis(a, d, pres) * g;
    for (const auto& b : basis)
      if (!vanishes(ag * AlgebraElement::basis(b, d, pres))) return false;
  }
  return true;
}

}  // namespace yokotl
