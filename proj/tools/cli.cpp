#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <ostream>
#include <set>
#include <sstream>

#include "yokotl/catalog.hpp"
#include "yokotl/esystem.hpp"
#include "yokotl/invariants.hpp"
#include "yokotl/limits.hpp"
#include "yokotl/quotients.hpp"
#include "yokotl/ring/parse.hpp"

namespace yokotl::cli {

namespace {

using nlohmann::ordered_json;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

std::vector<int> parse_ints(const std::string& text, const std::string& what) {
  std::string cleaned = text;
  for (char& c : cleaned)
    if (c == ',' || c == '{' || c == '}' || c == '[' || c == ']') c = ' ';
  std::istringstream in(cleaned);
  std::vector<int> out;
  std::string tok;
  while (in >> tok) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size()) throw UsageError(what + ": '" + tok + "' is not an integer");
    out.push_back(v);
  }
  return out;
}

std::set<int> parse_D(const std::string& text, int d) {
  std::set<int> D;
  for (int m : parse_ints(text, "--D")) {
    if (m < 0 || m >= d) throw UsageError("--D: " + std::to_string(m) + " is not in 0.." + std::to_string(d - 1));
    D.insert(m);
  }
  if (D.empty()) throw UsageError("--D must be a nonempty subset of 0.." + std::to_string(d - 1));
  return D;
}

CycloRational parse_E(const std::string& text) {
  RationalFunction f = parse_expression(text);
  f.simplify();
  if (!f.is_polynomial() || !f.num().is_constant()) throw UsageError("--E must be a constant, e.g. 1/3");
  CycloRational E = f.num().constant_term();
  if (E.is_zero()) throw UsageError("--E = 0 is a pole of the invariant");
  return E;
}

std::string set_str(const std::set<int>& D) {
  std::string s = "{";
  for (int m : D) s += (s.size() > 1 ? "," : "") + std::to_string(m);
  return s + "}";
}

// ---------------------------------------------------------------- invariant

struct InvariantArgs {
  std::string braid, inv, route, D, E, framing, z = "generic";
  int strands = 1;
  int d = 0;
  bool json = false;
};

struct RouteValue {
  std::string route;
  RationalFunction value;
};

std::string render(const RationalFunction& f) {
  RationalFunction g = canonical_form(f);
  return g.is_polynomial() ? g.num().str() : g.str();
}

int cmd_invariant(const InvariantArgs& a, std::ostream& out) {
  static const std::set<std::string> kInvariants{"gamma", "delta", "Theta", "theta", "jones", "homflypt"};
  static const std::set<std::string> kRoutes{"trace", "skein", "comb", "all"};
  if (!kInvariants.count(a.inv)) throw UsageError("--inv must be one of gamma, delta, Theta, theta, jones, homflypt");
  if (!a.route.empty() && !kRoutes.count(a.route)) throw UsageError("--route must be trace, skein, comb or all");
  if (a.strands < 1) throw UsageError("--strands must be positive");
  if (a.d < 0) throw UsageError("--d must be positive");
  const BraidWord b = parse_braid(a.braid, a.strands);
  const bool framed = a.inv == "gamma" || a.inv == "delta";
  const bool classical_only = a.inv == "jones" || a.inv == "homflypt";

  if (!a.framing.empty() && a.inv != "gamma") throw UsageError("--framing only applies to gamma");
  if (a.z != "generic" && a.z != "ftl") throw UsageError("--z must be generic or ftl");
  if (a.z != "generic" && !framed) throw UsageError("--z only applies to gamma and delta");

  // resolve d, D and E
  int d = a.d;
  std::optional<CycloRational> E;
  if (!a.E.empty()) {
    if (framed || classical_only) throw UsageError("--E does not apply to " + a.inv);
    E = parse_E(a.E);
  }
  if (d == 0 && E && E->is_rational()) {
    const Rational inv = 1 / E->rational_value();
    if (inv.get_den() == 1 && inv > 0 && inv <= 256) d = static_cast<int>(inv.get_num().get_si());
  }
  if (framed && d == 0) throw UsageError(a.inv + " needs --d");
  if (!a.D.empty() && a.d == 0) throw UsageError("--D needs --d");
  if (classical_only && d > 1) throw UsageError("--d does not apply to " + a.inv);
  std::set<int> D;
  if (d > 0) {
    if (!a.D.empty()) {
      D = parse_D(a.D, d);
    } else {
      for (int m = 0; m < d; ++m) D.insert(m);
    }
    const CycloRational ED(Rational(1, static_cast<long>(D.size())));
    if (E && *E != ED) throw UsageError("--E disagrees with 1/|D| = " + ED.str());
    if (!framed && !classical_only) E = ED;
  }

  std::vector<std::string> routes;
  const std::string route = a.route.empty() ? (framed || d > 0 || classical_only ? "trace" : "comb") : a.route;
  if (route == "all") {
    if (framed) throw UsageError("route all is not supported for " + a.inv + ": only the trace route exists");
    if (d > 0 || classical_only) routes.push_back("trace");
    routes.push_back("comb");
    routes.push_back("skein");
  } else {
    routes.push_back(route);
  }
  for (const auto& r : routes) {
    if (framed && r != "trace") throw UsageError("route " + r + " is not supported for " + a.inv);
    if (r == "trace" && !framed && !classical_only && d == 0)
      throw UsageError("the trace route needs --d, or --E = 1/d");
  }

  const CycloRational one(1);
  std::vector<RouteValue> values;
  for (const auto& r : routes) {
    RationalFunction v;
    if (a.inv == "theta") {
      if (r == "trace") v = theta_small(b, d, D);
      if (r == "comb") v = theta2_combinatorial(b, E);
      if (r == "skein") v = theta2_skein(b, E);
    } else if (a.inv == "Theta") {
      if (r == "trace") v = theta_cap(b, d, D);
      if (r == "comb") v = theta_combinatorial(b, E);
      if (r == "skein") v = theta_skein(b, E);
    } else if (a.inv == "jones") {
      if (r == "trace") v = jones(b);
      if (r == "comb") v = theta2_combinatorial(b, one);
      if (r == "skein") v = theta2_skein(b, one);
    } else if (a.inv == "homflypt") {
      if (r == "trace") v = homflypt(b);
      if (r == "comb") v = theta_combinatorial(b, one);
      if (r == "skein") v = theta_skein(b, one);
    } else {
      std::vector<int> fr(b.strands(), 0);
      if (!a.framing.empty()) fr = parse_ints(a.framing, "--framing");
      if (static_cast<int>(fr.size()) != b.strands()) throw UsageError("--framing needs one value per strand");
      const FramedBraid fb(d, fr, b);
      if (a.z == "ftl")
        v = gamma_specialized(fb, D);
      else
        v = gamma_framed(fb, D);
    }
    values.push_back({r, v});
  }

  bool agree = true;
  for (const auto& v : values) agree = agree && v.value == values.front().value;
  const bool verdict = values.size() > 1;

  if (a.json) {
    ordered_json j;
    j["invariant"] = a.inv;
    j["strands"] = b.strands();
    j["braid"] = b.letters();
    if (d > 0) {
      j["d"] = d;
      j["D"] = std::vector<int>(D.begin(), D.end());
    }
    if (E) j["E"] = E->str();
    ordered_json rv = ordered_json::object();
    for (const auto& v : values) rv[v.route] = render(v.value);
    j["routes"] = rv;
    if (verdict) j["verdict"] = agree ? "AGREE" : "DISAGREE";
    out << j.dump() << "\n";
  } else if (!verdict) {
    out << render(values.front().value) << "\n";
  } else {
    for (const auto& v : values) out << v.route << ": " << render(v.value) << "\n";
    out << (agree ? "AGREE" : "DISAGREE") << "\n";
  }
  return agree ? kOk : kMismatch;
}

// ---------------------------------------------------------------- tables

struct TablesArgs {
  std::string table;
  int d = 1, n = 3;
  bool json = false;
};

int cmd_tables(const TablesArgs& a, std::ostream& out) {
  if (a.d < 1) throw UsageError("--d must be positive");
  if (a.n < 1) throw UsageError("--n must be positive");
  if (a.table == "dims") {
    const std::vector<std::pair<std::string, Integer>> rows{
        {"Y", dim_y(a.d, a.n)}, {"YTL", dim_ytl(a.d, a.n)}, {"CTL", dim_ctl(a.d, a.n)}, {"FTL", dim_ftl(a.d, a.n)}};
    if (a.json) {
      ordered_json j{{"d", a.d}, {"n", a.n}};
      for (const auto& [k, v] : rows) j[k] = v.get_str();
      out << j.dump() << "\n";
    } else {
      for (const auto& [k, v] : rows) out << k << " " << v.get_str() << "\n";
    }
    return kOk;
  }
  if (a.table == "esystem") {
    if (a.d > 16) throw UsageError("--table esystem supports d <= 16");
    std::vector<std::set<int>> subsets;
    for (unsigned mask = 1; mask < (1u << a.d); ++mask) {
      std::set<int> D;
      for (int m = 0; m < a.d; ++m)
        if (mask >> m & 1u) D.insert(m);
      subsets.push_back(D);
    }
    std::stable_sort(subsets.begin(), subsets.end(), [](const auto& x, const auto& y) {
      return x.size() != y.size() ? x.size() < y.size() : x < y;
    });
    ordered_json rows = ordered_json::array();
    for (const auto& D : subsets) {
      const ESolution s = esolution(a.d, D);
      std::vector<std::string> xs;
      for (const auto& v : s.x) xs.push_back(v.str());
      if (a.json) {
        rows.push_back({{"D", std::vector<int>(D.begin(), D.end())}, {"x", xs}, {"E", s.E.str()}});
        continue;
      }
      out << "D=" << set_str(D) << " x=[";
      for (std::size_t i = 0; i < xs.size(); ++i) out << (i ? ", " : "") << xs[i];
      out << "] E=" << s.E.str() << "\n";
    }
    if (a.json) out << ordered_json{{"d", a.d}, {"solutions", rows}}.dump() << "\n";
    return kOk;
  }
  if (a.table == "irreps") {
    if (a.d > 6 || a.n > 10) throw UsageError("--table irreps supports d <= 6 and n <= 10");
    ordered_json rows = ordered_json::array();
    for (const auto& lam : dpartitions(a.d, a.n)) {
      const Integer dim = dpartition_dim(lam);
      const bool y = is_irrep(QuotientKind::YTL, lam), c = is_irrep(QuotientKind::CTL, lam),
                 f = is_irrep(QuotientKind::FTL, lam);
      if (a.json) {
        rows.push_back({{"lambda", lam.str()}, {"dim", dim.get_str()}, {"YTL", y}, {"CTL", c}, {"FTL", f}});
      } else {
        out << lam.str() << " dim=" << dim.get_str() << " YTL=" << y << " CTL=" << c << " FTL=" << f << "\n";
      }
    }
    if (a.json) out << ordered_json{{"d", a.d}, {"n", a.n}, {"irreps", rows}}.dump() << "\n";
    return kOk;
  }
  throw UsageError("--table must be dims, esystem or irreps");
}

// ---------------------------------------------------------------- pairs

struct PairsArgs {
  std::string catalog, pairs;
  int jobs = 1;
  bool json = false;
};

int cmd_pairs(const PairsArgs& a, std::ostream& out) {
  if (a.jobs < 1) throw UsageError("--jobs must be positive");
  const auto catalog = load_catalog(a.catalog);
  const auto pairs = load_pairs(a.pairs);
  const auto results = evaluate_pairs(catalog, pairs, a.jobs);
  bool ok = true;
  for (const auto& r : results) {
    const std::string lhs = "theta(" + r.spec.a + ") - theta(" + r.spec.b + ")";
    if (a.json) {
      ordered_json j{{"a", r.spec.a}, {"b", r.spec.b}, {"difference", r.difference.str()}};
      if (r.reference) {
        j["reference"] = *r.spec.reference;
        j["verdict"] = to_string(r.verdict);
      }
      out << j.dump() << "\n";
    } else {
      out << lhs << " = " << r.difference.str() << "\n";
      if (r.reference) out << "  reference " << *r.spec.reference << ": " << to_string(r.verdict) << "\n";
    }
    if (r.reference && r.verdict != Verdict::Match) ok = false;
  }
  return ok ? kOk : kMismatch;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Link invariants from Yokonuma-Hecke traces"};
  app.require_subcommand(1);
  app.footer("Exit codes: 0 success, 1 usage error, 2 computation error, 3 verification mismatch.\n"
             "YOKOTL_MEMO_LIMIT caps memoized trace values per engine; YOKOTL_DEPTH_LIMIT bounds skein recursion.");

  InvariantArgs inv;
  auto* si = app.add_subcommand("invariant", "Evaluate an invariant of a braid closure");
  si->add_option("--braid", inv.braid, "Signed generator indices, e.g. \"1 -2 1\"")->required();
  si->add_option("--strands", inv.strands, "Strand count")->required();
  si->add_option("--inv", inv.inv, "gamma|delta|Theta|theta|jones|homflypt")->required();
  si->add_option("--d", inv.d, "Framing modulus");
  si->add_option("--D", inv.D, "Subset of Z/d, e.g. \"0,1\" (default: all of Z/d)");
  si->add_option("--route", inv.route, "trace|skein|comb|all");
  si->add_option("--E", inv.E, "Value of E for the skein and combinatorial routes, e.g. 1/3");
  si->add_option("--framing", inv.framing, "Framing residues per strand (gamma)");
  si->add_option("--z", inv.z, "generic|ftl: leave z formal or use the FTL value (gamma, delta)");
  si->add_flag("--json", inv.json, "Print JSON");

  TablesArgs tab;
  auto* st = app.add_subcommand("tables", "Dimension, E-system and irreducible-module tables");
  st->add_option("--table", tab.table, "dims|esystem|irreps")->required();
  st->add_option("--d", tab.d, "Framing modulus");
  st->add_option("--n", tab.n, "Strand count");
  st->add_flag("--json", tab.json, "Print JSON");

  PairsArgs pr;
  auto* sp = app.add_subcommand("pairs", "Differences of theta(q,E) over catalog pairs");
  sp->add_option("--catalog", pr.catalog, "Catalog file (JSON lines)")->required();
  sp->add_option("--pairs", pr.pairs, "Pairs file (JSON lines)")->required();
  sp->add_option("--jobs", pr.jobs, "Worker threads");
  sp->add_flag("--json", pr.json, "Print JSON");

  std::vector<const char*> argv;
  for (const auto& s : args) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (si->parsed()) return cmd_invariant(inv, out);
    if (st->parsed()) return cmd_tables(tab, out);
    return cmd_pairs(pr, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const CatalogError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kComputation;
  }
}

}  // namespace yokotl::cli
