#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "yokotl/braid.hpp"
#include "yokotl/ring/rational_function.hpp"

namespace yokotl {

/// One line of a link catalog:
///   {"name": "L11n358{0,1}", "strands": 4, "word": [-1, -2, ...],
///    "orientation_tag": "{0,1}", "source": "..."}
struct CatalogEntry {
  std::string name;
  BraidWord word;
  std::string orientation_tag;
  std::string source;
};

/// A pair of catalog names with an optional expected θ(a) − θ(b):
///   {"a": "...", "b": "...", "reference": "(1-E)*(q-1)^5/(E*q^18)"}
struct PairSpec {
  std::string a, b;
  std::optional<std::string> reference;
};

class CatalogError : public std::runtime_error {
 public:
  explicit CatalogError(const std::string& what) : std::runtime_error(what) {}
};

/// Line-delimited JSON; blank lines and lines starting with '#' are skipped.
/// Errors name the offending line.
std::vector<CatalogEntry> read_catalog(std::istream& in);
std::vector<CatalogEntry> load_catalog(const std::string& path);
std::vector<PairSpec> read_pairs(std::istream& in);
std::vector<PairSpec> load_pairs(const std::string& path);

const CatalogEntry& find_entry(const std::vector<CatalogEntry>& catalog, const std::string& name);

enum class Verdict { None, Match, Negated, Mismatch };
std::string to_string(Verdict v);

struct PairResult {
  PairSpec spec;
  LaurentPolynomial difference;  // θ(a) − θ(b) in q, E
  std::optional<RationalFunction> reference;
  Verdict verdict = Verdict::None;
};

/// Evaluates θ(q,E) for every named entry (on `jobs` threads) and compares
/// each difference with its reference.  Results follow the input order.
std::vector<PairResult> evaluate_pairs(const std::vector<CatalogEntry>& catalog, const std::vector<PairSpec>& pairs,
                                       int jobs = 1);

}  // namespace yokotl
