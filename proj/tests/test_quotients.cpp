#include <doctest.h>

#include <functional>

#include "yokotl/esystem.hpp"
#include "yokotl/quotients.hpp"

using namespace yokotl;

namespace {

const Presentation kU = Presentation::u_form();

// Standard Young tableaux by repeatedly removing a corner box.
Integer count_tableaux(Partition p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  if (p.empty()) return 1;
  Integer total = 0;
  for (std::size_t r = 0; r < p.size(); ++r) {
    const bool corner = r + 1 == p.size() || p[r + 1] < p[r];
    if (!corner) continue;
    Partition q = p;
    --q[r];
    total += count_tableaux(q);
  }
  return total;
}

Integer factorial(int n) { return n <= 1 ? Integer(1) : n * factorial(n - 1); }

Integer sum_of_squares(int d, int n, const std::function<bool(const DPartition&)>& keep) {
  Integer s = 0;
  for (const auto& lam : dpartitions(d, n))
    if (keep(lam)) {
      const Integer dim = dpartition_dim(lam);
      s += dim * dim;
    }
  return s;
}

AlgebraElement word(int d, std::vector<int> gens) {
  AlgebraElement x = AlgebraElement::identity(d, 3, kU);
  for (int i : gens) x.mul_braiding(i);
  return x;
}

}  // namespace

TEST_CASE("combinatorial numbers") {
  CHECK(catalan(0) == 1);
  CHECK(catalan(3) == 5);
  CHECK(catalan(4) == 14);
  for (int k = 0; k <= 15; ++k) CHECK(catalan(k) * (k + 1) == binomial(2 * k, k));
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(3, 5) == 0);
  CHECK(multinomial({2, 1}) == 3);
  CHECK(multinomial({1, 1, 1}) == 6);
}

TEST_CASE("tableaux") {
  CHECK(standard_tableaux_count({2, 1}) == 2);
  for (int n = 1; n <= 6; ++n) CHECK(standard_tableaux_count({n}) == 1);
  for (int n = 1; n <= 8; ++n) {
    Integer s = 0;
    for (const auto& p : partitions(n)) {
      CHECK(standard_tableaux_count(p) == count_tableaux(p));
      s += standard_tableaux_count(p) * standard_tableaux_count(p);
    }
    CHECK(s == factorial(n));
  }
}

TEST_CASE("compositions and d-partitions") {
  CHECK(compositions(3, 2).size() == 4);
  for (const auto& c : compositions(5, 3)) {
    int s = 0;
    for (int v : c) s += v;
    CHECK(s == 5);
  }
  for (const auto& lam : dpartitions(3, 4)) {
    CHECK(lam.size() == 4);
    CHECK(lam.parts.size() == 3);
  }
  for (auto [d, n] : std::vector<std::pair<int, int>>{{2, 3}, {3, 3}, {2, 4}, {1, 5}, {3, 4}})
    CHECK(sum_of_squares(d, n, [](const DPartition&) { return true; }) == dim_y(d, n));
}

TEST_CASE("quotient dimensions") {
  CHECK(dim_y(2, 3) == 48);
  CHECK(dim_ytl(2, 3) == 28);
  CHECK(dim_ftl(2, 3) == 46);
  CHECK(dim_ctl(2, 3) == 47);
  for (int n = 3; n <= 7; ++n) {
    CHECK(dim_ytl(1, n) == catalan(n));
    CHECK(dim_ctl(1, n) == catalan(n));
    CHECK(dim_ftl(1, n) == catalan(n));
  }
  for (int d = 1; d <= 4; ++d)
    for (int n = 3; n <= 5; ++n) {
      CHECK(dim_ctl(d, n) >= dim_ftl(d, n));
      CHECK(dim_ftl(d, n) >= dim_ytl(d, n));
      CHECK(dim_y(d, n) >= dim_ctl(d, n));
      CHECK(dim_quotient(QuotientKind::FTL, d, n) == dim_ftl(d, n));
    }
}

TEST_CASE("dimensions agree with the surviving irreducibles") {
  for (auto [d, n] : std::vector<std::pair<int, int>>{{2, 3}, {2, 4}, {3, 3}, {3, 4}, {2, 5}}) {
    CHECK(sum_of_squares(d, n, [](const DPartition& l) { return is_irrep(QuotientKind::FTL, l); }) == dim_ftl(d, n));
    CHECK(sum_of_squares(d, n, [](const DPartition& l) { return is_irrep(QuotientKind::CTL, l); }) == dim_ctl(d, n));
    CHECK(sum_of_squares(d, n, [](const DPartition& l) { return is_irrep(QuotientKind::YTL, l); }) == dim_ytl(d, n));
  }
}

TEST_CASE("irreducible classifiers") {
  CHECK(is_irrep(QuotientKind::YTL, DPartition{{{1, 1, 1}, {1, 1}, {}}}));
  CHECK_FALSE(is_irrep(QuotientKind::CTL, DPartition{{{3, 1, 1}, {3, 1}}}));
  CHECK_FALSE(is_irrep(QuotientKind::FTL, DPartition{{{2, 1}, {3}, {1}}}));
  CHECK(is_irrep(QuotientKind::CTL, DPartition{{{2, 2}, {5}}}));
  CHECK_FALSE(is_irrep(QuotientKind::YTL, DPartition{{{1}, {1}, {1}}}));
  CHECK(is_irrep(QuotientKind::FTL, DPartition{{{1}, {1}, {1}}}));
}

TEST_CASE("ideal generators") {
  const AlgebraElement expect = word(1, {}) + word(1, {1}) + word(1, {2}) + word(1, {1, 2}) + word(1, {2, 1}) +
                                word(1, {1, 2, 1});
  CHECK(ideal_generator(QuotientKind::YTL, 1, 3) == expect);
  CHECK(ideal_generator(QuotientKind::FTL, 1, 3) == expect);
  CHECK(ideal_generator(QuotientKind::CTL, 1, 3) == expect);
  CHECK(ideal_generator(QuotientKind::CTL, 2, 3).size() == 48);
  CHECK(ideal_generator(QuotientKind::FTL, 2, 3).size() == 24);
  CHECK(ideal_generator(QuotientKind::FTL, 3, 3).size() == 54);
  CHECK_THROWS(ideal_generator(QuotientKind::YTL, 2, 2));
}

TEST_CASE("trace factoring at n = 3") {
  CHECK(factoring_check(QuotientKind::YTL, ytl_params(2, YtlCase::RootsOfUnity, 1).trace_params()));
  CHECK(factoring_check(QuotientKind::YTL, ytl_params(2, YtlCase::RootsOfUnity, 0).trace_params()));
  CHECK(factoring_check(QuotientKind::FTL, ftl_params(2, {}, {0, 1}).trace_params()));
  CHECK(factoring_check(QuotientKind::FTL, ftl_params(2, {0}, {1}).trace_params()));
  CHECK_FALSE(factoring_check(QuotientKind::FTL, esolution(2, {0, 1}).trace_params()));
  CHECK_FALSE(factoring_check(QuotientKind::YTL, esolution(2, {0, 1}).trace_params()));
  // the ideal-pair form agrees with the one-sided form
  CHECK(factoring_check(QuotientKind::FTL, ftl_params(2, {}, {1}).trace_params(), {3, true}));
  CHECK_FALSE(factoring_check(QuotientKind::FTL, esolution(2, {0, 1}).trace_params(), {3, true}));
  // d = 1: the Temperley-Lieb value of z
  CHECK(factoring_check(QuotientKind::YTL, ftl_params(1, {}, {0}).trace_params()));
}
