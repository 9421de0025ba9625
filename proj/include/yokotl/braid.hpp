#pragma once

#include <set>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

namespace yokotl {

/// A braid word on n strands.  Letter i > 0 is σ_i, letter -i is σ_i^{-1}.
class BraidWord {
 public:
  BraidWord() = default;
  explicit BraidWord(int strands, std::vector<int> letters = {});

  int strands() const { return strands_; }
  const std::vector<int>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  /// The same braid with adjacent σ_i σ_i^{-1} pairs cancelled.
  BraidWord freely_reduced() const;

  friend bool operator==(const BraidWord& a, const BraidWord& b) {
    return a.strands_ == b.strands_ && a.letters_ == b.letters_;
  }
  friend bool operator<(const BraidWord& a, const BraidWord& b) {
    return std::tie(a.strands_, a.letters_) < std::tie(b.strands_, b.letters_);
  }

  /// Whitespace-separated signed integers, as accepted by parse_braid.
  std::string str() const;

 private:
  int strands_ = 1;
  std::vector<int> letters_;
};

/// Parses whitespace/comma separated signed integers; throws ParseError.
BraidWord parse_braid(std::string_view text, int strands);

/// A braid word with a framing residue mod d on every strand, read as
/// t_1^{a_1} … t_n^{a_n} · σ.
class FramedBraid {
 public:
  FramedBraid(int d, std::vector<int> framings, BraidWord word);
  /// All framings zero.
  FramedBraid(int d, BraidWord word);

  int modulus() const { return d_; }
  const std::vector<int>& framings() const { return framings_; }
  const BraidWord& word() const { return word_; }
  int strands() const { return word_.strands(); }

 private:
  int d_;
  std::vector<int> framings_;
  BraidWord word_;
};

/// The closure of a braid: components (cycles of the underlying
/// permutation) and pairwise linking numbers.
struct LinkClosure {
  BraidWord word;
  /// component[s] for the strand starting at position s (0-based);
  /// components are numbered by their smallest starting position.
  std::vector<int> component_of_strand;
  std::vector<std::vector<int>> components;  // strand start positions per component
  std::vector<std::vector<int>> linking;     // symmetric, zero diagonal

  int component_count() const { return static_cast<int>(components.size()); }
};

int exponent_sum(const BraidWord& b);

/// Underlying permutation: perm[p] is the final position of the strand
/// starting at position p (0-based).
std::vector<int> braid_permutation(const BraidWord& b);

LinkClosure closure_components(const BraidWord& b);

/// g^{-1} b g.
BraidWord markov_conjugate(const BraidWord& b, const BraidWord& g);
/// b σ_n^{±1} on n+1 strands.
BraidWord markov_stabilize(const BraidWord& b, int sign);

struct ConwayTriple {
  BraidWord plus, minus, zero;
};
ConwayTriple conway_triple(const BraidWord& b, std::size_t position);

/// Letter positions where the two crossing strands lie on different
/// components of the closure.
std::vector<std::size_t> mixed_crossing_positions(const BraidWord& b);

/// The braid whose closure is the sublink formed by `keep` (component
/// indices as in closure_components).  Throws on an empty keep set.
BraidWord delete_components(const BraidWord& b, const std::set<int>& keep);

}  // namespace yokotl
