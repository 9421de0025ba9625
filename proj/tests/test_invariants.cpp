#include <doctest.h>

#include "gen.hpp"
#include "yokotl/invariants.hpp"
#include "yokotl/ring/parse.hpp"

using namespace yokotl;
using yokotl::testing::Gen;

namespace {

LaurentPolynomial var(VarId v, int e = 1) { return LaurentPolynomial::variable(v, e); }
LaurentPolynomial Q(int e = 1) { return var(vars::q(), e); }
LaurentPolynomial S(int e = 1) { return var(vars::sqrt_lambda(), e); }
LaurentPolynomial Ei(int e = -1) { return var(vars::E(), e); }
LaurentPolynomial P(const char* text) { return parse_polynomial(text); }
BraidWord B(int n, std::vector<int> l) { return BraidWord(n, std::move(l)); }
CycloRational R(long num, long den) { return CycloRational(Rational(num, den)); }

RationalFunction mu() { return RationalFunction(S(-1) - S(), Q() - Q(-1)); }

// Torus links T(2,k) from the crossing-change recursion
//   P_k = λ P_{k-2} + √λ (q − q^{-1}) P_{k-1},  P_0 = μ, P_1 = 1.
RationalFunction torus_homflypt(int k) {
  RationalFunction a = mu(), b = RationalFunction(1);
  if (k == 0) return a;
  for (int j = 2; j <= k; ++j) {
    RationalFunction c = RationalFunction(S(2)) * a + RationalFunction(S() * (Q() - Q(-1))) * b;
    a = b;
    b = c;
  }
  return b;
}

LaurentPolynomial torus_jones(int k) {
  LaurentPolynomial a = -(Q() + Q(-1)), b = LaurentPolynomial(1);
  if (k == 0) return a;
  for (int j = 2; j <= k; ++j) {
    LaurentPolynomial c = Q(4) * a + Q(2) * (Q() - Q(-1)) * b;
    a = b;
    b = c;
  }
  return b;
}

RationalFunction at_s_q2(const RationalFunction& f) {
  return poly_substitute(f, {{vars::sqrt_lambda(), RationalFunction(Q(2))}});
}

std::set<int> all_of(int d) {
  std::set<int> D;
  for (int m = 0; m < d; ++m) D.insert(m);
  return D;
}

}  // namespace

TEST_CASE("set partitions and linking sums") {
  const long bell[] = {1, 1, 2, 5, 15, 52, 203};
  for (int m = 0; m <= 6; ++m) CHECK(static_cast<long>(set_partitions(m).size()) == bell[m]);
  for (const auto& pi : set_partitions(5)) {
    std::vector<int> seen;
    for (const auto& block : pi) seen.insert(seen.end(), block.begin(), block.end());
    std::sort(seen.begin(), seen.end());
    CHECK(seen == std::vector<int>{0, 1, 2, 3, 4});
  }
  const auto lk = closure_components(B(2, {1, 1})).linking;
  CHECK(nu({{0}, {1}}, lk) == 1);
  CHECK(nu({{0, 1}}, lk) == 0);
  CHECK(E_k(1) == LaurentPolynomial(1));
  CHECK(E_k(2) == Ei() - LaurentPolynomial(1));
  CHECK(E_k(3) == (Ei() - LaurentPolynomial(1)) * (Ei() - LaurentPolynomial(2)));
  CHECK(mu_small() == -(Q() + Q(-1)));
}

TEST_CASE("unknots and unlinks") {
  const BraidWord unknot(1);
  CHECK(theta_small(unknot, 3) == LaurentPolynomial(1));
  CHECK(theta_cap(unknot, 2) == RationalFunction(1));
  CHECK(jones(unknot) == LaurentPolynomial(1));
  CHECK(homflypt(unknot) == RationalFunction(1));
  CHECK(gamma_specialized(FramedBraid(2, unknot), {0, 1}) == LaurentPolynomial(1));
  CHECK(delta(unknot, 3, {1}) == RationalFunction(1));

  const BraidWord unlink(2);
  for (int d = 1; d <= 3; ++d) CHECK(theta_cap(unlink, d) == mu() * RationalFunction(d));
  CHECK(theta_combinatorial(unlink) == mu() * RationalFunction(Ei()));
  CHECK(theta2_combinatorial(unlink) == -(Q() + Q(-1)) * Ei());
  const LaurentPolynomial su = var(vars::sqrt_u());
  CHECK(jones_u(unlink) == -(su + su.inverse_term()));
}

TEST_CASE("Hopf link and trefoil") {
  const BraidWord hopf = B(2, {1, 1});
  for (int d = 1; d <= 4; ++d) CHECK(theta_small(hopf, d) == Q(3) - Q() - (Q(5) + Q(3)) * LaurentPolynomial(d));
  const LaurentPolynomial expect = Q(3) - Q() - (Q(5) + Q(3)) * Ei();
  CHECK(theta2_combinatorial(hopf) == expect);
  CHECK(theta2_skein(hopf) == expect);
  // one crossing change: L− is the unlink, L0 the unknot
  CHECK(theta2_skein(hopf) == Q(2) * (Q() - Q(-1)) + Q(4) * theta2_combinatorial(B(2, {})));

  const BraidWord trefoil = B(2, {1, 1, 1});
  CHECK(jones(trefoil) == Q(2) + Q(6) - Q(8));
  CHECK(jones_u(trefoil).substitute({{vars::sqrt_u(), Q()}}) == jones(trefoil));
  CHECK(theta_cap(trefoil, 1) == homflypt(trefoil));
}

TEST_CASE("torus links against the crossing-change recursion") {
  for (int k = 0; k <= 7; ++k) {
    std::vector<int> w(k, 1);
    const BraidWord b(2, w);
    CHECK(homflypt(b) == torus_homflypt(k));
    CHECK(jones(b) == torus_jones(k));
    CHECK(jones_u(b).substitute({{vars::sqrt_u(), Q()}}) == torus_jones(k));
    std::vector<int> m(k, -1);
    CHECK(jones(BraidWord(2, m)) == torus_jones(k).substitute({{vars::q(), Q(-1)}}));
  }
}

TEST_CASE("routes agree on random braids") {
  Gen g(41);
  for (int t = 0; t < 40; ++t) {
    const BraidWord b = g.braid(g.uniform(1, 3), 5);
    const int d = g.uniform(1, 3);
    const CycloRational E = R(1, d);
    const LaurentPolynomial small = theta_small(b, d);
    CHECK(small == theta2_combinatorial(b, E));
    CHECK(small == theta2_skein(b, E));
    const RationalFunction cap = theta_cap(b, d);
    CHECK(cap == theta_combinatorial(b, E));
    CHECK(cap == theta_skein(b, E));
    CHECK(at_s_q2(cap) == RationalFunction(small));
    CHECK(lambda_to_q4(cap) == small);
    // generic E
    CHECK(theta2_combinatorial(b) == theta2_skein(b));
    CHECK(bind_E(theta2_combinatorial(b), E) == small);
  }
}

TEST_CASE("collapses") {
  Gen g(43);
  for (int t = 0; t < 30; ++t) {
    const BraidWord b = g.braid(g.uniform(1, 4), 6);
    CHECK(theta_cap(b, 1) == homflypt(b));
    CHECK(theta_small(b, 1) == jones(b));
    CHECK(theta_combinatorial(b, CycloRational(1)) == homflypt(b));
    CHECK(theta2_combinatorial(b, CycloRational(1)) == jones(b));
    CHECK(gamma_specialized(FramedBraid(1, b), {0}).substitute({{vars::sqrt_u(), Q()}}) == jones(b));
    CHECK(delta_specialized(b, 1, {0}) == jones_u(b));
  }
}

TEST_CASE("knots see only the Homflypt polynomial") {
  Gen g(47);
  for (int t = 0; t < 20; ++t) {
    const BraidWord b = g.braid(3, 6);
    if (closure_components(b).component_count() != 1) continue;
    CHECK(theta_combinatorial(b) == homflypt(b));
    CHECK(theta2_skein(b) == jones(b));
  }
}

TEST_CASE("dependence on D only through its size") {
  Gen g(53);
  for (int t = 0; t < 15; ++t) {
    const BraidWord b = g.braid(3, 5);
    CHECK(theta_cap(b, 3, {0, 1}) == theta_cap(b, 3, {1, 2}));
    CHECK(theta_cap(b, 3, {0, 1}) == theta_cap(b, 2));
    CHECK(theta_small(b, 4, {1, 3}) == theta_small(b, 2));
    CHECK(theta_small(b, 3, {2}) == jones(b));
  }
  CHECK_THROWS_AS(theta_cap(B(2, {1}), 3, {}), std::invalid_argument);
  CHECK_THROWS_AS(gamma_framed(FramedBraid(2, B(2, {1})), {}), std::invalid_argument);
}

TEST_CASE("skein relation on mixed crossings") {
  Gen g(59);
  int tested = 0;
  while (tested < 50) {
    const BraidWord b = g.braid(3, 5);
    const auto mixed = mixed_crossing_positions(b);
    if (mixed.empty()) continue;
    const auto t = conway_triple(b, mixed[g.uniform(0, static_cast<int>(mixed.size()) - 1)]);
    const int d = g.uniform(1, 3);
    const RationalFunction lhs = RationalFunction(S(-1)) * theta_cap(t.plus, d) - RationalFunction(S()) * theta_cap(t.minus, d);
    CHECK(lhs == RationalFunction(Q() - Q(-1)) * theta_cap(t.zero, d));
    const LaurentPolynomial small = Q(-2) * theta_small(t.plus, d) - Q(2) * theta_small(t.minus, d);
    CHECK(small == (Q() - Q(-1)) * theta_small(t.zero, d));
    ++tested;
  }
}

TEST_CASE("Markov invariance") {
  Gen g(61);
  for (int t = 0; t < 100; ++t) {
    const int n = g.uniform(1, 3);
    const BraidWord b = g.braid(n, 5);
    const BraidWord moved = g.coin() ? markov_conjugate(b, g.braid(n, 3)) : markov_stabilize(b, g.coin() ? 1 : -1);
    const int d = g.uniform(1, 3);
    CHECK(theta_small(moved, d) == theta_small(b, d));
    if (t % 4 == 0) CHECK(theta_cap(moved, d) == theta_cap(b, d));
    CHECK(theta2_combinatorial(moved) == theta2_combinatorial(b));
    if (t % 5 == 0) {
      const std::set<int> D = d == 1 ? std::set<int>{0} : std::set<int>{1};
      CHECK(delta(moved, d, D) == delta(b, d, D));
      CHECK(delta_specialized(moved, d, D) == delta_specialized(b, d, D));
    }
  }
}

TEST_CASE("framed invariants") {
  Gen g(67);
  for (int t = 0; t < 25; ++t) {
    const int n = g.uniform(1, 3), d = g.uniform(2, 3);
    const BraidWord b = g.braid(n, 4);
    const int c = g.uniform(0, d - 1);
    const std::set<int> D = g.coin() ? all_of(d) : std::set<int>{0, d - 1};
    const FramedBraid fb(d, std::vector<int>(n, c), b);
    const RationalFunction value = gamma_framed(fb, D);

    // constant framings are preserved by conjugation
    const FramedBraid conj(d, std::vector<int>(n, c), markov_conjugate(b, g.braid(n, 3)));
    CHECK(gamma_framed(conj, D) == value);
    std::vector<int> fr(n + 1, c);
    fr[n] = 0;
    const FramedBraid stab(d, fr, markov_stabilize(b, g.coin() ? 1 : -1));
    CHECK(gamma_framed(stab, D) == value);

    // at z = −1/((u+1)|D|) the rescaling factor is u
    const LaurentPolynomial su = var(vars::sqrt_u());
    const RationalFunction z(LaurentPolynomial(-1),
                             (var(vars::u()) + LaurentPolynomial(1)) * LaurentPolynomial(static_cast<long>(D.size())));
    RationalFunction at = poly_substitute(value, {{vars::z(), z}});
    at = poly_substitute(at, {{vars::u(), RationalFunction(su.pow(2))}, {vars::sqrt_w(), RationalFunction(su)}});
    CHECK(at == RationalFunction(gamma_specialized(fb, D)));

    CHECK(delta(b, d, D) == gamma_framed(FramedBraid(d, b), D));
  }
}

TEST_CASE("poles and errors") {
  CHECK_THROWS_AS(theta2_combinatorial(B(2, {}), CycloRational(0)), PoleError);
  CHECK_THROWS_AS(theta2_skein(B(2, {}), CycloRational(0)), PoleError);
  CHECK_THROWS_AS(nu({{0}, {5}}, closure_components(B(2, {1, 1})).linking), std::out_of_range);
}
