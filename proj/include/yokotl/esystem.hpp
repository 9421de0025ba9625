#pragma once

#include <set>
#include <vector>

#include "yokotl/yokonuma.hpp"

namespace yokotl {

/// A solution of the E-system indexed by a nonempty D ⊆ ℤ/dℤ:
/// x_s = (1/|D|) Σ_{m∈D} ζ_d^{ms}, with E_D = (1/d) Σ_s x_s x_{d-s}.
struct ESolution {
  int d = 1;
  std::set<int> D;
  std::vector<CycloRational> x;
  CycloRational E;

  TraceParams trace_params(std::optional<RationalFunction> z = {}) const { return TraceParams::with_x(d, x, std::move(z)); }
};

/// Throws std::invalid_argument for an empty D or an element outside 0..d-1.
ESolution esolution(int d, const std::set<int>& D);

/// (1/d) Σ_s x_s x_{d-s}, the trace of any e_i.
CycloRational e_value(const std::vector<CycloRational>& x);

/// True iff Σ_s x_{m+s} x_{d-s} = x_m Σ_s x_s x_{d-s} for every m.
bool verify_esystem(const std::vector<CycloRational>& x);

/// Parameters under which the trace passes to FTL_{d,n}(u):
///   x_k = −z (Σ_{Sup1} χ_m(t^k) + (u+1) Σ_{Sup2} χ_m(t^k)),
///   z   = −1 / (|Sup1| + (u+1)|Sup2|).
struct FtlCondition {
  int d = 1;
  std::set<int> sup1, sup2;
  std::vector<RationalFunction> x;
  RationalFunction z;

  TraceParams trace_params() const;
};

FtlCondition ftl_params(int d, const std::set<int>& sup1, const std::set<int>& sup2);

/// The parameter families under which the trace passes to YTL_{d,n}(u).
enum class YtlCase {
  RootsOfUnity,         // x_l = ζ^{ml}, z = −1/(u+1)
  RootsOfUnityUnitZ,    // x_l = ζ^{ml}, z = −1
  TwoCharacters,        // x_l = (ζ^{m1 l} + ζ^{m2 l})/2, z = −1/2
};

struct YtlCondition {
  int d = 1;
  YtlCase which = YtlCase::RootsOfUnity;
  std::vector<CycloRational> x;
  RationalFunction z;

  TraceParams trace_params() const { return TraceParams::with_x(d, x, z); }
};

/// `m2` is only read for TwoCharacters and must differ from `m1`.
YtlCondition ytl_params(int d, YtlCase which, int m1 = 0, int m2 = 1);

}  // namespace yokotl
