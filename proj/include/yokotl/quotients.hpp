#pragma once

#include <string>
#include <vector>

#include "yokotl/yokonuma.hpp"

namespace yokotl {

enum class QuotientKind { YTL, CTL, FTL };

std::string to_string(QuotientKind k);

/// An integer partition, parts weakly decreasing and positive.
using Partition = std::vector<int>;

/// A d-tuple of partitions with total size n.
struct DPartition {
  std::vector<Partition> parts;

  int size() const;
  std::string str() const;
};

/// A d-composition of n.
using Composition = std::vector<int>;

Integer catalan(int k);
Integer binomial(int n, int k);
Integer multinomial(const std::vector<int>& parts);

/// Principal generator of the defining ideal on strands 1..3, in the
/// U presentation by default:
///   YTL  g_{1,2} = 1 + g_1 + g_2 + g_1g_2 + g_2g_1 + g_1g_2g_1
///   CTL  Σ_{α,β,γ} t_1^α t_2^β t_3^γ · g_{1,2}
///   FTL  Σ_{α+β+γ≡0} t_1^α t_2^β t_3^γ · g_{1,2}
AlgebraElement ideal_generator(QuotientKind kind, int d, int n, const Presentation& p = Presentation::u_form());

Integer dim_y(int d, int n);
Integer dim_ytl(int d, int n);
Integer dim_ctl(int d, int n);
Integer dim_ftl(int d, int n);
Integer dim_quotient(QuotientKind kind, int d, int n);

std::vector<Composition> compositions(int n, int d);
std::vector<Partition> partitions(int n);
std::vector<DPartition> dpartitions(int d, int n);

/// Hook-length count of standard Young tableaux.
Integer standard_tableaux_count(const Partition& p);
/// multinomial(n; |λ^(i)|) · Π standard_tableaux_count(λ^(i)).
Integer dpartition_dim(const DPartition& lambda);

/// Whether the irreducible Y_{d,n}-module of λ survives in the quotient:
/// YTL: at most two columns in total; CTL: λ^(1) has at most two columns;
/// FTL: every λ^(i) has at most two columns.
bool is_irrep(QuotientKind kind, const DPartition& lambda);

struct FactoringOptions {
  int n = 3;
  /// Check tr(a·G·b) = 0 over all basis pairs instead of tr(G·c) = 0 over
  /// basis words c; the two agree because the trace is a class function.
  bool exhaustive = false;
};

/// True iff the trace with `params` vanishes on the ideal generated by
/// ideal_generator(kind, d, n), in the U presentation with parameter u.
bool factoring_check(QuotientKind kind, const TraceParams& params, FactoringOptions opts = {});

}  // namespace yokotl
