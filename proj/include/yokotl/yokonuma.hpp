#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "yokotl/braid.hpp"
#include "yokotl/ring/rational_function.hpp"

namespace yokotl {

/// Which quadratic relation the braiding generators satisfy.
///
///  U:  g_i^2 = 1 + (u-1) e_i + (u-1) e_i g_i
///  Q:  g_i^2 = 1 + (q-q^{-1}) e_i g_i
///
/// `param` is the value of u (resp. q) in the coefficient ring and must be
/// a single term.  The default U parameter is the variable u; converting
/// from Q yields a U presentation with param q^2.
struct Presentation {
  enum class Kind { U, Q };

  Kind kind = Kind::U;
  LaurentPolynomial param;

  static Presentation u_form();
  static Presentation u_form(LaurentPolynomial u_value);
  static Presentation q_form();
  static Presentation q_form(LaurentPolynomial q_value);

  friend bool operator==(const Presentation& a, const Presentation& b) {
    return a.kind == b.kind && a.param == b.param;
  }
  friend bool operator!=(const Presentation& a, const Presentation& b) { return !(a == b); }
};

/// Basis word t_1^{a_1} … t_n^{a_n} · g_w of Y_{d,n}.
///
/// The permutation is stored as a function (perm[j] = w(j), 0-based); its
/// canonical reduced expression is the stair form returned by stair_runs().
class NormalWord {
 public:
  NormalWord() = default;
  explicit NormalWord(int n);  // identity
  NormalWord(std::vector<int> framing, std::vector<int> perm, int d);

  int strands() const { return static_cast<int>(data_.size() / 2); }
  int framing(int j) const { return data_[j]; }
  int perm(int j) const { return data_[strands() + j]; }
  std::vector<int> framing_vector() const;
  std::vector<int> permutation() const;

  /// Descending runs (top, bottom), 1-based generator indices, for
  /// w = (s_{i1} … s_{j1})(s_{i2} … s_{j2}) … with i1 < i2 < ….
  std::vector<std::pair<int, int>> stair_runs() const;
  /// The stair form flattened into generator indices.
  std::vector<int> reduced_word() const;
  int length() const;

  // raw mutation used by the multiplication kernels
  void set_framing(int j, int v) { data_[j] = static_cast<std::uint8_t>(v); }
  void swap_perm(int i) { std::swap(data_[strands() + i], data_[strands() + i + 1]); }
  NormalWord truncated() const;  // drop the last strand (it must be fixed)

  friend bool operator==(const NormalWord& a, const NormalWord& b) { return a.data_ == b.data_; }
  friend bool operator<(const NormalWord& a, const NormalWord& b) { return a.data_ < b.data_; }
  const std::vector<std::uint8_t>& raw() const { return data_; }

  std::string str() const;

 private:
  std::vector<std::uint8_t> data_;
};

struct NormalWordHash {
  std::size_t operator()(const NormalWord& w) const noexcept;
};

/// All n!·d^n basis words of Y_{d,n}, in canonical order.
std::vector<NormalWord> enumerate_basis(int d, int n);

/// A finite linear combination of NormalWords with Laurent coefficients.
class AlgebraElement {
 public:
  using Terms = std::map<NormalWord, LaurentPolynomial>;

  AlgebraElement(int d, int n, Presentation p);  // zero element

  static AlgebraElement identity(int d, int n, const Presentation& p);
  static AlgebraElement basis(const NormalWord& w, int d, const Presentation& p);
  static AlgebraElement braiding(int i, int d, int n, const Presentation& p);  // g_i
  static AlgebraElement framing(int j, int d, int n, const Presentation& p);   // t_j

  int modulus() const { return d_; }
  int strands() const { return n_; }
  const Presentation& presentation() const { return pres_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add_term(const NormalWord& w, const LaurentPolynomial& c);

  /// In-place right multiplication by g_i, g_i^{-1}, t_j^power, e_i.
  /// Generator indices are 1-based as in the algebra's presentation.
  AlgebraElement& mul_braiding(int i);
  AlgebraElement& mul_braiding_inverse(int i);
  AlgebraElement& mul_framing(int j, int power = 1);
  AlgebraElement& mul_idempotent(int i);

  AlgebraElement operator-() const;
  AlgebraElement& operator+=(const AlgebraElement& o);
  AlgebraElement& operator-=(const AlgebraElement& o);
  AlgebraElement& operator*=(const LaurentPolynomial& c);
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator*(AlgebraElement a, const LaurentPolynomial& c) { return a *= c; }
  friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);

  /// The same element viewed in Y_{d,n+extra}.
  AlgebraElement embedded(int extra_strands = 1) const;

  /// Applies a coefficient substitution and relabels the presentation.
  AlgebraElement with_coefficients(const std::map<VarId, LaurentPolynomial>& bindings, Presentation target) const;

  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b);
  friend bool operator!=(const AlgebraElement& a, const AlgebraElement& b) { return !(a == b); }

  /// `coeff * t1^a1...tn^an * g[i..j]...`, terms in canonical order.
  std::string str() const;

 private:
  void check_compatible(const AlgebraElement& o) const;
  // t^a g_w e_i expanded into basis words
  template <class F>
  void for_each_idempotent_shift(const NormalWord& w, int pos, F&& f) const;

  int d_, n_;
  Presentation pres_;
  Terms terms_;
};

AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b);

/// Image of a braid (σ_i ↦ g_i, σ_i^{-1} ↦ g_i^{-1}) in Y_{d,n}.
AlgebraElement embed_braid(const BraidWord& b, int d, const Presentation& p);
/// Image of t^a · σ.
AlgebraElement embed_braid(const FramedBraid& b, const Presentation& p);

/// e_i = (1/d) Σ_s t_i^s t_{i+1}^{-s}.
AlgebraElement idempotent_e(int i, int d, int n, const Presentation& p);

/// U → Q (substituting u = q^2 when the U parameter is the variable u) or
/// Q → U (the resulting U presentation has param q^2).
AlgebraElement convert_presentation(const AlgebraElement& a);

/// Parameters of the Markov trace tr_d.  Unset entries are kept as the
/// formal variables z and x_s.
struct TraceParams {
  int d = 1;
  std::optional<RationalFunction> z;
  std::vector<std::optional<RationalFunction>> x;  // x[0] is always 1

  static TraceParams generic(int d);
  static TraceParams with_x(int d, const std::vector<CycloRational>& x, std::optional<RationalFunction> z = {});
  bool specialized() const;
};

/// Inductive evaluator of tr_d on Y_{d,n}: strand peeling over the stair
/// form, using tr(X g_{n-1} Y) = z tr(XY) and tr(X t_n^s) = x_s tr(X) for
/// X, Y in Y_{d,n-1}.  Basis values are memoized; one instance may be
/// shared between threads.
class MarkovTrace {
 public:
  MarkovTrace(TraceParams params, Presentation p);

  const TraceParams& params() const { return params_; }
  const Presentation& presentation() const { return pres_; }

  /// Trace with z (and any non-polynomial x_s) left as formal variables.
  LaurentPolynomial symbolic(const AlgebraElement& a) const;
  /// Trace with every parameter substituted.
  RationalFunction operator()(const AlgebraElement& a) const;
  /// Substitutes the parameters into a symbolic trace value.
  RationalFunction specialize(const LaurentPolynomial& symbolic_value) const;

 private:
  LaurentPolynomial basis_trace(const NormalWord& w) const;

  TraceParams params_;
  Presentation pres_;
  std::vector<LaurentPolynomial> x_poly_;  // x values usable inside the recursion
  std::map<VarId, RationalFunction> late_;  // substituted after the recursion
  mutable std::mutex mutex_;
  mutable std::unordered_map<NormalWord, LaurentPolynomial, NormalWordHash> memo_;
};

}  // namespace yokotl
