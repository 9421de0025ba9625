#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "gen.hpp"
#include "yokotl/catalog.hpp"
#include "yokotl/esystem.hpp"
#include "yokotl/invariants.hpp"
#include "yokotl/quotients.hpp"

using namespace yokotl;
using yokotl::testing::Gen;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Criterion {
  int id;
  std::string title;
  double budget_seconds;
  std::function<Outcome()> run;
};

class Tally {
 public:
  void check(bool ok, const std::string& what) {
    ++total_;
    if (!ok && failures_.size() < 3) failures_.push_back(what);
    if (!ok) ++failed_;
  }
  Outcome outcome(const std::string& summary) const {
    Outcome o{failed_ == 0, summary + ", " + std::to_string(total_ - failed_) + "/" + std::to_string(total_) + " checks"};
    for (const auto& f : failures_) o.detail += "; failed: " + f;
    return o;
  }

 private:
  int total_ = 0, failed_ = 0;
  std::vector<std::string> failures_;
};

LaurentPolynomial var(VarId v, int e = 1) { return LaurentPolynomial::variable(v, e); }
LaurentPolynomial Q(int e = 1) { return var(vars::q(), e); }
LaurentPolynomial S(int e = 1) { return var(vars::sqrt_lambda(), e); }

std::set<int> subset(unsigned mask, int d) {
  std::set<int> D;
  for (int m = 0; m < d; ++m)
    if (mask >> m & 1u) D.insert(m);
  return D;
}

// every word of length <= max_len on n strands
std::vector<BraidWord> all_braids(int n, int max_len) {
  std::vector<BraidWord> out{BraidWord(n)};
  std::vector<std::vector<int>> layer{{}};
  for (int len = 1; len <= max_len; ++len) {
    std::vector<std::vector<int>> next;
    for (const auto& w : layer)
      for (int g = 1; g < n; ++g)
        for (int l : {g, -g}) {
          auto v = w;
          v.push_back(l);
          next.push_back(v);
        }
    for (const auto& w : next) out.emplace_back(n, w);
    layer = std::move(next);
  }
  return out;
}

// Homflypt through the u-presentation trace at d = 1, where g = q g'.
RationalFunction homflypt_via_u(const BraidWord& b) {
  const int n = b.strands();
  const RationalFunction delta(Q() - Q(-1));
  const RationalFunction zq = delta / RationalFunction(LaurentPolynomial(1) - S(2));
  TraceParams params = TraceParams::generic(1);
  params.z = RationalFunction(Q()) * zq;
  const Presentation p = Presentation::u_form(Q(2));
  const MarkovTrace tr(params, p);
  const RationalFunction t = tr(embed_braid(b, 1, p));
  const RationalFunction pre = RationalFunction(LaurentPolynomial(1) - S(2)) / (RationalFunction(S()) * delta);
  return pre.pow(n - 1) * RationalFunction(S().pow(exponent_sum(b)) * Q().pow(-exponent_sum(b))) * t;
}

Outcome basis_dimension() {
  Tally t;
  for (auto [d, n] : std::vector<std::pair<int, int>>{{1, 3}, {2, 3}, {2, 4}, {3, 3}})
    t.check(Integer(static_cast<long>(enumerate_basis(d, n).size())) == dim_y(d, n),
            "(" + std::to_string(d) + "," + std::to_string(n) + ")");
  t.check(dim_y(2, 3) == 48, "dim_y(2,3) = 48");
  return t.outcome("basis counts");
}

Outcome dimension_oracle() {
  Tally t;
  auto squares = [](QuotientKind k, int d, int n) {
    Integer s = 0;
    for (const auto& lam : dpartitions(d, n))
      if (is_irrep(k, lam)) s += dpartition_dim(lam) * dpartition_dim(lam);
    return s;
  };
  for (auto [d, n] : std::vector<std::pair<int, int>>{{2, 3}, {2, 4}, {3, 3}}) {
    const std::string at = "(" + std::to_string(d) + "," + std::to_string(n) + ")";
    t.check(squares(QuotientKind::FTL, d, n) == dim_ftl(d, n), "FTL " + at);
    t.check(squares(QuotientKind::CTL, d, n) == dim_ctl(d, n), "CTL " + at);
  }
  t.check(dim_ftl(2, 3) == 46, "dim_ftl(2,3) = 46");
  t.check(dim_ctl(2, 3) == 47, "dim_ctl(2,3) = 47");
  t.check(dim_ytl(2, 3) == 28, "dim_ytl(2,3) = 28");
  return t.outcome("irreducible sums");
}

Outcome esystem_exhaustion() {
  Tally t;
  int solutions = 0;
  for (int d = 1; d <= 12; ++d)
    for (unsigned mask = 1; mask < (1u << d); ++mask) {
      const std::set<int> D = subset(mask, d);
      const ESolution s = esolution(d, D);
      t.check(verify_esystem(s.x), "E-system d=" + std::to_string(d));
      t.check(s.E == CycloRational(Rational(1, static_cast<long>(D.size()))), "E_D d=" + std::to_string(d));
      ++solutions;
    }
  return t.outcome(std::to_string(solutions) + " solutions");
}

Outcome trace_rules() {
  Tally t;
  Gen g(2024);
  const Presentation p = Presentation::q_form();
  const auto z = var(vars::z());
  int instances = 0;
  for (int d : {2, 3}) {
    const MarkovTrace generic(TraceParams::generic(d), p);
    t.check(generic.symbolic(AlgebraElement::identity(d, 3, p)) == LaurentPolynomial(1), "tr(1) = 1");
    for (int k = 0; k < 100; ++k, ++instances) {
      const int n = g.uniform(2, 3);
      const AlgebraElement a = g.element(d, n, p, 2), b = g.element(d, n, p, 2);
      t.check(generic.symbolic(a * b) == generic.symbolic(b * a), "tr(ab) = tr(ba)");
      const AlgebraElement c = g.element(d, n - 1, p, 3);
      const AlgebraElement up = c.embedded();
      t.check(generic.symbolic(up * AlgebraElement::braiding(n - 1, d, n, p)) == z * generic.symbolic(c),
              "tr(a g_n) = z tr(a)");
      const int s = g.uniform(0, d - 1);
      const AlgebraElement ts = AlgebraElement::identity(d, n, p).mul_framing(n, s);
      const LaurentPolynomial xs = s == 0 ? LaurentPolynomial(1) : var(vars::x(s));
      t.check(generic.symbolic(up * ts) == xs * generic.symbolic(c), "tr(a t^s) = x_s tr(a)");

      // substituted rules for an E-system solution
      std::set<int> D;
      while (D.empty()) D = subset(static_cast<unsigned>(g.uniform(1, (1 << d) - 1)), d);
      const ESolution sol = esolution(d, D);
      const MarkovTrace special(sol.trace_params(), p);
      const AlgebraElement e = idempotent_e(n - 1, d, n, p);
      const RationalFunction tc = special(c);
      t.check(special(up * e) == RationalFunction(LaurentPolynomial(sol.E)) * tc, "tr(a e_n) = E tr(a)");
      t.check(special(up * e * AlgebraElement::braiding(n - 1, d, n, p)) == special.specialize(z) * tc,
              "tr(a e_n g_n) = z tr(a)");
    }
  }
  return t.outcome(std::to_string(instances) + " instances in Y_{2,n}, Y_{3,n}");
}

Outcome factoring() {
  Tally t;
  t.check(factoring_check(QuotientKind::YTL, ytl_params(2, YtlCase::RootsOfUnity, 1).trace_params(), {3, true}),
          "YTL d=2 case (i)");
  for (int d : {2, 3})
    for (unsigned mask = 1; mask < (1u << d); ++mask)
      t.check(factoring_check(QuotientKind::FTL, ftl_params(d, {}, subset(mask, d)).trace_params(), {3, d == 2}),
              "FTL d=" + std::to_string(d));
  t.check(!factoring_check(QuotientKind::FTL, esolution(2, {0, 1}).trace_params(), {3, true}), "FTL generic z");
  return t.outcome("factoring checks");
}

Outcome route_agreement() {
  Tally t;
  int braids = 0;
  for (int n : {2, 3})
    for (const BraidWord& b : all_braids(n, 5)) {
      ++braids;
      for (int d = 1; d <= 3; ++d) {
        const CycloRational E(Rational(1, d));
        const LaurentPolynomial small = theta_small(b, d);
        t.check(small == theta2_combinatorial(b, E), "θ comb " + b.str());
        t.check(small == theta2_skein(b, E), "θ skein " + b.str());
        const RationalFunction cap = theta_cap(b, d);
        t.check(cap == theta_combinatorial(b, E), "Θ comb " + b.str());
        t.check(cap == theta_skein(b, E), "Θ skein " + b.str());
      }
    }
  return t.outcome(std::to_string(braids) + " braids x d=1..3");
}

Outcome collapses() {
  Tally t;
  const CycloRational one(1);
  int braids = 0;
  for (int n : {2, 3})
    for (const BraidWord& b : all_braids(n, 5)) {
      ++braids;
      const RationalFunction P = homflypt(b);
      const LaurentPolynomial V = jones(b);
      t.check(theta_cap(b, 1) == homflypt_via_u(b), "Θ_1 = P " + b.str());
      t.check(theta_small(b, 1) == jones_u(b).substitute({{vars::sqrt_u(), Q()}}), "θ_1 = V " + b.str());
      t.check(theta_combinatorial(b, one) == P, "Θ|E=1 " + b.str());
      t.check(theta2_combinatorial(b, one) == V, "θ|E=1 " + b.str());
    }
  return t.outcome(std::to_string(braids) + " braids");
}

Outcome markov() {
  Tally t;
  Gen g(99);
  for (int k = 0; k < 100; ++k) {
    const int n = g.uniform(1, 3);
    const BraidWord b = g.braid(n, 5);
    const bool conj = g.coin();
    const BraidWord m = conj ? markov_conjugate(b, g.braid(n, 3)) : markov_stabilize(b, g.coin() ? 1 : -1);
    const int d = g.uniform(1, 3);
    const std::string at = b.str() + " -> " + m.str();
    t.check(theta_small(m, d) == theta_small(b, d), "θ_d " + at);
    t.check(theta_cap(m, d) == theta_cap(b, d), "Θ_d " + at);
    t.check(theta2_combinatorial(m) == theta2_combinatorial(b), "θ " + at);
    t.check(theta_combinatorial(m) == theta_combinatorial(b), "Θ " + at);
    t.check(theta2_skein(m) == theta2_skein(b), "θ skein " + at);
    t.check(homflypt(m) == homflypt(b), "P " + at);
    t.check(jones(m) == jones(b), "V " + at);
    const std::set<int> D = d == 1 ? std::set<int>{0} : std::set<int>{0, d - 1};
    t.check(delta(m, d, D) == delta(b, d, D), "Δ " + at);
    t.check(delta_specialized(m, d, D) == delta_specialized(b, d, D), "Δ(u,u) " + at);
    const int c = g.uniform(0, d - 1);
    std::vector<int> fb(n, c), fm(m.strands(), c);
    if (!conj) fm.back() = 0;
    t.check(gamma_framed(FramedBraid(d, fm, m), D) == gamma_framed(FramedBraid(d, fb, b), D), "Γ " + at);
  }
  return t.outcome("100 moves");
}

Outcome paper_pairs(const std::string& data) {
  std::ostringstream out, err;
  const int code =
      cli::run({"yokotl", "pairs", "--catalog", data + "/catalog.jsonl", "--pairs", data + "/pairs.jsonl"}, out, err);
  const auto results = evaluate_pairs(load_catalog(data + "/catalog.jsonl"), load_pairs(data + "/pairs.jsonl"));
  int match = 0, negated = 0, mismatch = 0;
  std::string which;
  for (std::size_t i = 0; i < results.size(); ++i) {
    switch (results[i].verdict) {
      case Verdict::Match: ++match; break;
      case Verdict::Negated: ++negated; break;
      default: ++mismatch; break;
    }
    which += (i ? " " : "") + to_string(results[i].verdict);
  }
  Outcome o;
  o.pass = code == 0 && match == static_cast<int>(results.size());
  o.detail = std::to_string(match) + "/" + std::to_string(results.size()) + " exact, " + std::to_string(negated) +
             " equal up to sign, " + std::to_string(mismatch) + " different [" + which + "]";
  return o;
}

Outcome known_values() {
  Tally t;
  const BraidWord hopf(2, {1, 1});
  const LaurentPolynomial Ei = var(vars::E(), -1);
  const LaurentPolynomial expect = Q(3) - Q() - (Q(5) + Q(3)) * Ei;
  t.check(theta2_combinatorial(hopf) == expect, "combinatorial");
  t.check(theta2_skein(hopf) == expect, "skein");
  for (int d = 1; d <= 4; ++d)
    t.check(theta_small(hopf, d) == bind_E(expect, CycloRational(Rational(1, d))), "trace d=" + std::to_string(d));
  return t.outcome("Hopf link");
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> known_failures;
  std::string data = YOKOTL_DATA_DIR;
  for (int i = 1; i < argc; ++i) {
    const std::string a = argv[i];
    if (a == "--known-failure" && i + 1 < argc) {
      known_failures.insert(std::atoi(argv[++i]));
    } else if (a == "--data" && i + 1 < argc) {
      data = argv[++i];
    } else {
      std::cerr << "usage: acceptance [--known-failure N]... [--data DIR]\n";
      return 1;
    }
  }

  const std::vector<Criterion> criteria{
      {1, "basis/dimension exactness", 1, basis_dimension},
      {2, "dimension oracle", 5, dimension_oracle},
      {3, "E-system exhaustion", 30, esystem_exhaustion},
      {4, "trace-rule compliance", 60, trace_rules},
      {5, "factoring at n=3", 600, factoring},
      {6, "triple-route agreement", 600, route_agreement},
      {7, "collapses", 600, collapses},
      {8, "Markov invariance", 600, markov},
      {9, "catalog pair differences", 1800, [&] { return paper_pairs(data); }},
      {10, "known-value spot checks", 60, known_values},
  };

  int unexpected = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.budget_seconds) {
      o.pass = false;
      o.detail += "; over the time budget";
    }
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(2);
    line << (o.pass ? "[PASS] " : "[FAIL] ") << c.id << ". " << c.title << " (" << secs << " s): " << o.detail;
    if (!o.pass && known_failures.count(c.id)) line << " (known failure)";
    std::cout << line.str() << std::endl;
    if (o.pass == static_cast<bool>(known_failures.count(c.id))) ++unexpected;
  }
  return unexpected == 0 ? 0 : 1;
}
