#include "yokotl/esystem.hpp"

#include <stdexcept>

namespace yokotl {

namespace {

void check_subset(int d, const std::set<int>& s, const char* what) {
  for (int m : s)
    if (m < 0 || m >= d) throw std::invalid_argument(std::string(what) + " contains an element outside 0..d-1");
}

CycloRational character_sum(int d, const std::set<int>& s, int k) {
  CycloRational acc;
  for (int m : s) acc += CycloRational::root_of_unity(d, static_cast<long>(m) * k);
  return acc;
}

LaurentPolynomial u_var() { return LaurentPolynomial::variable(vars::u()); }

}  // namespace

ESolution esolution(int d, const std::set<int>& D) {
  if (d < 1) throw std::invalid_argument("modulus must be positive");
  if (D.empty()) throw std::invalid_argument("D must be nonempty");
  check_subset(d, D, "D");
  ESolution out;
  out.d = d;
  out.D = D;
  const CycloRational inv(Rational(1, static_cast<long>(D.size())));
  for (int s = 0; s < d; ++s) out.x.push_back(character_sum(d, D, s) * inv);
  out.E = e_value(out.x);
  if (!verify_esystem(out.x)) throw std::logic_error("constructed values fail the E-system");
  return out;
}

CycloRational e_value(const std::vector<CycloRational>& x) {
  const int d = static_cast<int>(x.size());
  CycloRational acc;
  for (int s = 0; s < d; ++s) acc += x[s] * x[(d - s) % d];
  return acc / CycloRational(d);
}

bool verify_esystem(const std::vector<CycloRational>& x) {
  const int d = static_cast<int>(x.size());
  if (d == 0 || !x[0].is_one()) throw std::invalid_argument("E-system needs x_0 = 1");
  CycloRational base;
  for (int s = 0; s < d; ++s) base += x[s] * x[(d - s) % d];
  for (int m = 1; m < d; ++m) {
    CycloRational lhs;
    for (int s = 0; s < d; ++s) lhs += x[(m + s) % d] * x[(d - s) % d];
    if (lhs != x[m] * base) return false;
  }
  return true;
}

TraceParams FtlCondition::trace_params() const {
  TraceParams p = TraceParams::generic(d);
  for (int s = 1; s < d; ++s) p.x[s] = x[s];
  p.z = z;
  return p;
}

FtlCondition ftl_params(int d, const std::set<int>& sup1, const std::set<int>& sup2) {
  if (d < 1) throw std::invalid_argument("modulus must be positive");
  if (sup1.empty() && sup2.empty()) throw std::invalid_argument("supports must not both be empty");
  check_subset(d, sup1, "Sup1");
  check_subset(d, sup2, "Sup2");
  for (int m : sup1)
    if (sup2.count(m)) throw std::invalid_argument("supports must be disjoint");
  FtlCondition out;
  out.d = d;
  out.sup1 = sup1;
  out.sup2 = sup2;
  const LaurentPolynomial u1 = u_var() + LaurentPolynomial(1);
  const LaurentPolynomial den = LaurentPolynomial(static_cast<long>(sup1.size())) + u1 * LaurentPolynomial(static_cast<long>(sup2.size()));
  out.z = RationalFunction(LaurentPolynomial(-1), den);
  for (int k = 0; k < d; ++k) {
    LaurentPolynomial num = LaurentPolynomial(character_sum(d, sup1, k)) + u1 * LaurentPolynomial(character_sum(d, sup2, k));
    RationalFunction xk(num, den);
    xk.simplify();
    out.x.push_back(std::move(xk));
  }
  return out;
}

YtlCondition ytl_params(int d, YtlCase which, int m1, int m2) {
  if (d < 1) throw std::invalid_argument("modulus must be positive");
  if (m1 < 0 || m1 >= d) throw std::invalid_argument("character index outside 0..d-1");
  YtlCondition out;
  out.d = d;
  out.which = which;
  switch (which) {
    case YtlCase::RootsOfUnity:
    case YtlCase::RootsOfUnityUnitZ:
      for (int l = 0; l < d; ++l) out.x.push_back(CycloRational::root_of_unity(d, static_cast<long>(m1) * l));
      out.z = which == YtlCase::RootsOfUnity
                  ? RationalFunction(LaurentPolynomial(-1), u_var() + LaurentPolynomial(1))
                  : RationalFunction(-1);
      break;
    case YtlCase::TwoCharacters:
      if (m2 < 0 || m2 >= d || m2 == m1) throw std::invalid_argument("need two distinct character indices");
      for (int l = 0; l < d; ++l)
        out.x.push_back((CycloRational::root_of_unity(d, static_cast<long>(m1) * l) +
                         CycloRational::root_of_unity(d, static_cast<long>(m2) * l)) /
                        CycloRational(2));
      out.z = RationalFunction(Rational(-1, 2));
      break;
  }
  return out;
}

}  // namespace yokotl
