#include "yokotl/catalog.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <istream>
#include <map>
#include <thread>

#include <json.hpp>

#include "yokotl/invariants.hpp"
#include "yokotl/ring/parse.hpp"

namespace yokotl {

namespace {

using nlohmann::json;

template <class F>
void for_each_record(std::istream& in, F&& f) {
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    try {
      f(json::parse(line));
    } catch (const std::exception& e) {
      throw CatalogError("line " + std::to_string(number) + ": " + e.what());
    }
  }
}

std::ifstream open(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CatalogError("cannot open " + path);
  return in;
}

}  // namespace

std::vector<CatalogEntry> read_catalog(std::istream& in) {
  std::vector<CatalogEntry> out;
  for_each_record(in, [&](const json& j) {
    CatalogEntry e;
    e.name = j.at("name").get<std::string>();
    e.word = BraidWord(j.at("strands").get<int>(), j.at("word").get<std::vector<int>>());
    e.orientation_tag = j.value("orientation_tag", "");
    e.source = j.value("source", "");
    out.push_back(std::move(e));
  });
  return out;
}

std::vector<CatalogEntry> load_catalog(const std::string& path) {
  auto in = open(path);
  return read_catalog(in);
}

std::vector<PairSpec> read_pairs(std::istream& in) {
  std::vector<PairSpec> out;
  for_each_record(in, [&](const json& j) {
    PairSpec p{j.at("a").get<std::string>(), j.at("b").get<std::string>(), std::nullopt};
    if (j.contains("reference") && !j.at("reference").is_null()) p.reference = j.at("reference").get<std::string>();
    out.push_back(std::move(p));
  });
  return out;
}

std::vector<PairSpec> load_pairs(const std::string& path) {
  auto in = open(path);
  return read_pairs(in);
}

const CatalogEntry& find_entry(const std::vector<CatalogEntry>& catalog, const std::string& name) {
  for (const auto& e : catalog)
    if (e.name == name) return e;
  throw CatalogError("no catalog entry named " + name);
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::None: return "NONE";
    case Verdict::Match: return "MATCH";
    case Verdict::Negated: return "NEGATED";
    case Verdict::Mismatch: return "MISMATCH";
  }
  return "?";
}

std::vector<PairResult> evaluate_pairs(const std::vector<CatalogEntry>& catalog, const std::vector<PairSpec>& pairs,
                                       int jobs) {
  std::vector<std::string> names;
  std::map<std::string, std::size_t> slot;
  for (const auto& p : pairs)
    for (const auto* n : {&p.a, &p.b}) {
      find_entry(catalog, *n);
      if (slot.emplace(*n, names.size()).second) names.push_back(*n);
    }

  std::vector<LaurentPolynomial> values(names.size());
  std::vector<std::exception_ptr> errors(names.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < names.size();) {
      try {
        values[i] = theta2_combinatorial(find_entry(catalog, names[i]).word);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const int threads = std::max(1, std::min<int>(jobs, static_cast<int>(names.size())));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);

  std::vector<PairResult> out;
  for (const auto& p : pairs) {
    PairResult r{p, values[slot[p.a]] - values[slot[p.b]], std::nullopt, Verdict::None};
    if (p.reference) {
      r.reference = parse_expression(*p.reference);
      const RationalFunction diff(r.difference);
      if (diff == *r.reference)
        r.verdict = Verdict::Match;
      else if (diff == -*r.reference)
        r.verdict = Verdict::Negated;
      else
        r.verdict = Verdict::Mismatch;
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace yokotl
