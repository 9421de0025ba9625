#pragma once

#include <optional>
#include <set>
#include <vector>

#include "yokotl/braid.hpp"
#include "yokotl/yokonuma.hpp"

namespace yokotl {

/// A set partition of {0..m-1}; blocks sorted, each block sorted.
using SetPartition = std::vector<std::vector<int>>;

/// All Bell(m) set partitions of {0..m-1}.
std::vector<SetPartition> set_partitions(int m);
/// Sum of lk(i,j) over pairs of components lying in different blocks.
int nu(const SetPartition& pi, const std::vector<std::vector<int>>& linking);
/// E_1 = 1, E_k = Π_{j=1}^{k-1} (E^{-1} - j), as a polynomial in E^{-1}.
LaurentPolynomial E_k(int k);

/// μ = (λ^{-1/2} − λ^{1/2}) / (q − q^{-1}).
RationalFunction mu_cap();
/// μ at λ = q^4, i.e. −(q + q^{-1}).
LaurentPolynomial mu_small();

/// Θ_d in (q, sqrt_lambda), from the trace on Y_{d,n}(q) with E_D = 1/|D|.
/// Divided through by the common factors (q^2 − 1) and (sqrt_lambda^2 − 1).
RationalFunction theta_cap(const BraidWord& b, int modulus, const std::set<int>& D);
RationalFunction theta_cap(const BraidWord& b, int d);
/// θ_d(q) = Θ_d(q, q^4).
LaurentPolynomial theta_small(const BraidWord& b, int modulus, const std::set<int>& D);
LaurentPolynomial theta_small(const BraidWord& b, int d);

/// P = Θ_1 in (q, sqrt_lambda).
RationalFunction homflypt(const BraidWord& b);
/// V = θ_1 in q.
LaurentPolynomial jones(const BraidWord& b);
/// V from the Iwahori-Hecke trace at z = −1/(u+1), in sqrt_u; it equals
/// jones(b) under sqrt_u = q.
LaurentPolynomial jones_u(const BraidWord& b);

/// Θ(q,λ,E) by the set-partition formula; E is the variable E unless a
/// value is given.
RationalFunction theta_combinatorial(const BraidWord& b, std::optional<CycloRational> E = {});
/// θ(q,E) by the set-partition formula with Jones sublink values.
LaurentPolynomial theta2_combinatorial(const BraidWord& b, std::optional<CycloRational> E = {});

/// Skein-recursive evaluation on mixed crossings down to split unions of
/// knots, whose value is (μ/E)^{r-1} Π P(K_i).
RationalFunction theta_skein(const BraidWord& b, std::optional<CycloRational> E = {});
LaurentPolynomial theta2_skein(const BraidWord& b, std::optional<CycloRational> E = {});

/// Γ_{d,D} for framed links, as a rational function of u, z and the
/// formal square root sqrt_w of the rescaling factor
///   w = (|D|z + 1 − u) / (u z |D|).
RationalFunction gamma_framed(const FramedBraid& fb, const std::set<int>& D);
/// Γ_{d,D} at z = −1/((u+1)|D|), where w = u; a Laurent polynomial in sqrt_u.
LaurentPolynomial gamma_specialized(const FramedBraid& fb, const std::set<int>& D);
/// Γ on the zero-framing lift of a classical braid.
RationalFunction delta(const BraidWord& b, int d, const std::set<int>& D);
LaurentPolynomial delta_specialized(const BraidWord& b, int d, const std::set<int>& D);

/// Divides out the factors (q^2 − 1) and (sqrt_lambda^2 − 1) shared by
/// numerator and denominator, then collapses polynomial values.
RationalFunction canonical_form(RationalFunction f);

/// sqrt_lambda ↦ q^2 followed by canonical_form; must be polynomial.
LaurentPolynomial lambda_to_q4(const RationalFunction& f);

/// Binds E to a value in a polynomial or rational function.
LaurentPolynomial bind_E(const LaurentPolynomial& p, const CycloRational& E);
RationalFunction bind_E(const RationalFunction& f, const CycloRational& E);

}  // namespace yokotl
