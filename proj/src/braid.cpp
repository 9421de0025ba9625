#include "yokotl/braid.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

#include "yokotl/ring/parse.hpp"

namespace yokotl {

BraidWord::BraidWord(int strands, std::vector<int> letters) : strands_(strands), letters_(std::move(letters)) {
  if (strands < 1) throw std::invalid_argument("braid needs at least one strand");
  for (int l : letters_)
    if (l == 0 || std::abs(l) > strands - 1)
      throw std::invalid_argument("braid letter " + std::to_string(l) + " out of range for " +
                                  std::to_string(strands) + " strands");
}

BraidWord BraidWord::freely_reduced() const {
  std::vector<int> out;
  for (int l : letters_) {
    if (!out.empty() && out.back() == -l) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return BraidWord(strands_, std::move(out));
}

std::string BraidWord::str() const {
  std::string s;
  for (int l : letters_) {
    if (!s.empty()) s += ' ';
    s += std::to_string(l);
  }
  return s;
}

BraidWord parse_braid(std::string_view text, int strands) {
  std::vector<int> letters;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto step = [&] {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    ++i;
  };
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
      step();
      continue;
    }
    int l0 = line, c0 = col;
    bool neg = false;
    if (c == '-' || c == '+') {
      neg = c == '-';
      step();
    }
    if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
      throw ParseError("expected a braid letter", l0, c0);
    long v = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      v = v * 10 + (text[i] - '0');
      if (v > 100000) throw ParseError("braid letter too large", l0, c0);
      step();
    }
    if (v == 0) throw ParseError("braid letter 0 is not a generator", l0, c0);
    if (v > strands - 1)
      throw ParseError("braid letter " + std::to_string(v) + " needs more than " + std::to_string(strands) +
                           " strands",
                       l0, c0);
    letters.push_back(neg ? -static_cast<int>(v) : static_cast<int>(v));
  }
  return BraidWord(strands, std::move(letters));
}

FramedBraid::FramedBraid(int d, std::vector<int> framings, BraidWord word)
    : d_(d), framings_(std::move(framings)), word_(std::move(word)) {
  if (d < 1) throw std::invalid_argument("framing modulus must be positive");
  if (static_cast<int>(framings_.size()) != word_.strands())
    throw std::invalid_argument("framing vector length must equal the strand count");
  for (int& a : framings_) a = ((a % d) + d) % d;
}

FramedBraid::FramedBraid(int d, BraidWord word) : FramedBraid(d, std::vector<int>(word.strands(), 0), word) {}

int exponent_sum(const BraidWord& b) {
  int s = 0;
  for (int l : b.letters()) s += l > 0 ? 1 : -1;
  return s;
}

std::vector<int> braid_permutation(const BraidWord& b) {
  std::vector<int> at(b.strands());
  std::iota(at.begin(), at.end(), 0);
  for (int l : b.letters()) {
    int i = std::abs(l) - 1;
    std::swap(at[i], at[i + 1]);
  }
  std::vector<int> perm(b.strands());
  for (int p = 0; p < b.strands(); ++p) perm[at[p]] = p;
  return perm;
}

LinkClosure closure_components(const BraidWord& b) {
  LinkClosure out;
  out.word = b;
  const int n = b.strands();
  const std::vector<int> perm = braid_permutation(b);
  out.component_of_strand.assign(n, -1);
  for (int s = 0; s < n; ++s) {
    if (out.component_of_strand[s] >= 0) continue;
    const int c = static_cast<int>(out.components.size());
    out.components.emplace_back();
    for (int t = s; out.component_of_strand[t] < 0; t = perm[t]) {
      out.component_of_strand[t] = c;
      out.components.back().push_back(t);
    }
    std::sort(out.components.back().begin(), out.components.back().end());
  }
  const int m = out.component_count();
  out.linking.assign(m, std::vector<int>(m, 0));
  std::vector<int> at(n);
  std::iota(at.begin(), at.end(), 0);
  for (int l : b.letters()) {
    int i = std::abs(l) - 1;
    int ca = out.component_of_strand[at[i]], cb = out.component_of_strand[at[i + 1]];
    if (ca != cb) {
      int s = l > 0 ? 1 : -1;
      out.linking[ca][cb] += s;
      out.linking[cb][ca] += s;
    }
    std::swap(at[i], at[i + 1]);
  }
  for (auto& row : out.linking)
    for (int& v : row) v /= 2;
  return out;
}

BraidWord markov_conjugate(const BraidWord& b, const BraidWord& g) {
  if (b.strands() != g.strands()) throw std::invalid_argument("conjugation needs equal strand counts");
  std::vector<int> letters;
  for (auto it = g.letters().rbegin(); it != g.letters().rend(); ++it) letters.push_back(-*it);
  letters.insert(letters.end(), b.letters().begin(), b.letters().end());
  letters.insert(letters.end(), g.letters().begin(), g.letters().end());
  return BraidWord(b.strands(), std::move(letters));
}

BraidWord markov_stabilize(const BraidWord& b, int sign) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("stabilization sign must be +1 or -1");
  std::vector<int> letters = b.letters();
  letters.push_back(sign * b.strands());
  return BraidWord(b.strands() + 1, std::move(letters));
}

ConwayTriple conway_triple(const BraidWord& b, std::size_t position) {
  if (position >= b.length()) throw std::out_of_range("conway_triple: position out of range");
  std::vector<int> plus = b.letters(), minus = b.letters(), zero = b.letters();
  const int g = std::abs(b.letters()[position]);
  plus[position] = g;
  minus[position] = -g;
  zero.erase(zero.begin() + static_cast<std::ptrdiff_t>(position));
  return {BraidWord(b.strands(), plus), BraidWord(b.strands(), minus), BraidWord(b.strands(), zero)};
}

std::vector<std::size_t> mixed_crossing_positions(const BraidWord& b) {
  const LinkClosure cl = closure_components(b);
  std::vector<int> at(b.strands());
  std::iota(at.begin(), at.end(), 0);
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < b.length(); ++k) {
    int i = std::abs(b.letters()[k]) - 1;
    if (cl.component_of_strand[at[i]] != cl.component_of_strand[at[i + 1]]) out.push_back(k);
    std::swap(at[i], at[i + 1]);
  }
  return out;
}

BraidWord delete_components(const BraidWord& b, const std::set<int>& keep) {
  if (keep.empty()) throw std::invalid_argument("delete_components: keep set is empty");
  const LinkClosure cl = closure_components(b);
  for (int c : keep)
    if (c < 0 || c >= cl.component_count()) throw std::out_of_range("delete_components: no such component");
  const int n = b.strands();
  std::vector<char> kept(n);
  int new_n = 0;
  for (int s = 0; s < n; ++s) {
    kept[s] = keep.count(cl.component_of_strand[s]) ? 1 : 0;
    new_n += kept[s];
  }
  std::vector<int> at(n);
  std::iota(at.begin(), at.end(), 0);
  std::vector<int> letters;
  for (int l : b.letters()) {
    int i = std::abs(l) - 1;
    if (kept[at[i]] && kept[at[i + 1]]) {
      int below = 0;
      for (int p = 0; p < i; ++p) below += kept[at[p]];
      letters.push_back(l > 0 ? below + 1 : -(below + 1));
    }
    std::swap(at[i], at[i + 1]);
  }
  return BraidWord(new_n, std::move(letters));
}

}  // namespace yokotl
