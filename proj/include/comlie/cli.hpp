#pragma once

// Command-line front end. run_cli takes the arguments after the program name
// and writes to the given streams, so it can be driven in-process.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "coinvariants.hpp"
#include "group.hpp"
#include "multisym.hpp"
#include "poincare.hpp"
#include "qseries.hpp"
#include "repa.hpp"
#include "report.hpp"
#include "toriposet.hpp"
#include "version.hpp"

namespace comlie {

enum ExitCode : int { kExitOk = 0, kExitCheckFailed = 1, kExitUsage = 2, kExitResourceCap = 3 };

/// Thrown for bad option combinations that CLI11 cannot catch itself.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct RunConfig {
  std::string group;
  int rank = 0;
  std::string what = "ecom";
  int maxdeg = 40;
  bool maxdeg_given = false;
  std::string format = "text";
  std::string cache_dir;
  std::string suite = "all";
  bool oracle = false;
  std::vector<int> ivals;
};

namespace cli_detail {

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

inline nlohmann::json json_integer(const Integer& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

inline GroupSpec group_of(const RunConfig& c) {
  if (c.group.empty()) throw UsageError("--group is required");
  if (c.rank < 1) throw UsageError("--rank must be >= 1");
  return GroupSpec(parse_family(c.group), c.rank);
}

inline std::string cache_dir(const RunConfig& c) {
  if (!c.cache_dir.empty()) return c.cache_dir;
  const char* env = std::getenv("COMLIE_CACHE_DIR");
  return env ? std::string(env) : std::string();
}

inline std::filesystem::path cache_path(const std::string& dir, const SeriesMetadata& meta, int maxdeg) {
  return std::filesystem::path(dir) / ("series-" + meta.family + "-" + std::to_string(meta.n) + "-" + meta.quantity +
                                       "-d" + std::to_string(maxdeg) + "-v" + kVersion + ".json");
}

inline std::optional<TruncatedSeries> cache_load(const std::filesystem::path& p, const SeriesMetadata& meta, int maxdeg) {
  std::ifstream in(p);
  if (!in) return std::nullopt;
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    SeriesMetadata got;
    TruncatedSeries s = series_from_json(buf.str(), &got);
    if (got.family != meta.family || got.n != meta.n || got.quantity != meta.quantity || s.trunc() != maxdeg)
      return std::nullopt;
    return s;
  } catch (const std::exception&) {
    return std::nullopt;  // unreadable entry; recompute and overwrite
  }
}

inline void cache_store(const std::filesystem::path& p, const std::string& json) {
  std::error_code ec;
  std::filesystem::create_directories(p.parent_path(), ec);
  const std::filesystem::path tmp = p.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out) return;
    out << json;
    if (!out) return;
  }
  std::filesystem::rename(tmp, p, ec);
}

inline TruncatedSeries compute_series(const RunConfig& c, SeriesMetadata& meta) {
  const Family f = parse_family(c.group);
  if (c.what == "stable") {
    meta = {to_string(f), 0, "stable"};
    return stable_bcom(f, c.maxdeg);
  }
  const GroupSpec g = group_of(c);
  meta = {to_string(f), g.n, c.what};
  if (c.what == "bg") return expand(bg_series(g), c.maxdeg);
  if (c.oracle) return c.what == "ecom" ? oracle_ecom(g, c.maxdeg) : oracle_bcom(g, c.maxdeg);
  if (c.what == "ecom") return TruncatedSeries::from_poly(ecom_numerator(g), c.maxdeg);
  return expand(bcom_series(g), c.maxdeg);
}

inline int cmd_series(const RunConfig& c, std::ostream& out) {
  if (c.group.empty()) throw UsageError("--group is required");
  if (c.what != "stable" && c.rank < 1) throw UsageError("--rank must be >= 1");
  parse_family(c.group);

  SeriesMetadata meta{to_string(parse_family(c.group)), c.what == "stable" ? 0 : c.rank, c.what};
  const std::string dir = cache_dir(c);
  std::optional<TruncatedSeries> series;
  std::filesystem::path path;
  if (!dir.empty()) {
    path = cache_path(dir, meta, c.maxdeg);
    series = cache_load(path, meta, c.maxdeg);
  }
  if (!series) {
    series = compute_series(c, meta);
    if (!dir.empty()) cache_store(path, to_json(*series, &meta));
  }

  const TruncatedSeries& s = *series;
  if (c.format == "json") {
    out << to_json(s, &meta) << "\n";
  } else if (c.format == "csv") {
    out << "degree,coefficient\n";
    for (int d = 0; d <= s.trunc(); ++d) out << d << "," << s[d].get_str() << "\n";
  } else {
    const std::string who = c.what == "stable" ? "stable " + meta.family : GroupSpec(parse_family(c.group), c.rank).name();
    out << who << " " << meta.quantity << " through degree " << s.trunc() << "\n";
    out << QPoly::from_dense(s.coeffs()).to_string() << "\n";
  }
  return kExitOk;
}

struct SuiteResult {
  std::vector<CheckReport> checks;
  std::vector<std::string> skipped;
  nlohmann::json extra = nlohmann::json::object();
};

inline void run_suite(const std::string& suite, const GroupSpec& g, const RunConfig& c, SuiteResult& res) {
  const WeylKind kind = g.weyl_kind();
  const int poly_deg = c.maxdeg_given ? c.maxdeg : g.top_ecom_degree() / 2;
  if (suite == "oracle") {
    const QPoly num = ecom_numerator(g);
    const TruncatedSeries closed_e = TruncatedSeries::from_poly(num, c.maxdeg);
    const TruncatedSeries closed_b = expand(bcom_series(g), c.maxdeg);
    for (const auto& [name, lhs, rhs] : {std::tuple{"oracle ecom ", closed_e, oracle_ecom(g, c.maxdeg)},
                                         std::tuple{"oracle bcom ", closed_b, oracle_bcom(g, c.maxdeg)}}) {
      CheckReport r{name + g.name(), false, lhs.first_mismatch(rhs), ""};
      r.passed = r.first_mismatch < 0;
      r.detail = r.passed ? "closed form = class-sum oracle through degree " + std::to_string(c.maxdeg)
                          : "first mismatch at degree " + std::to_string(r.first_mismatch);
      res.checks.push_back(r);
    }
  } else if (suite == "product") {
    res.checks.push_back(verify_product_relation(g, c.maxdeg));
    res.checks.push_back(verify_numerator_shape(g));
  } else if (suite == "basis") {
    FreeBasisReport rep = verify_free_basis(kind, g.n, poly_deg);
    for (auto& r : rep.checks) {
      r.name += " " + g.name();
      res.checks.push_back(r);
    }
    nlohmann::json elems = nlohmann::json::array();
    for (const auto& e : rep.elements)
      elems.push_back({{"w", e.element}, {"degree", 2 * e.degree}, {"monomial", e.monomial.to_string()}});
    res.extra["basis"] = elems;
  } else if (suite == "generation") {
    CheckReport r = verify_power_sum_generation(kind, g.n, poly_deg);
    r.name += " " + g.name();
    res.checks.push_back(r);
  } else if (suite == "fakedeg") {
    if (g.family == Family::Sp) throw UsageError("the fakedeg suite applies to type A groups (u, su)");
    for (const auto& r : verify_fake_degree_identities(g.n)) res.checks.push_back(r);
  } else if (suite == "stable") {
    const int ranks[] = {g.n};
    res.checks.push_back(verify_stabilization(g.family, ranks, c.maxdeg_given ? c.maxdeg : stable_range(g.family, g.n)));
  } else {
    throw UsageError("unknown suite '" + suite + "'");
  }
}

inline int cmd_verify(const RunConfig& c, std::ostream& out) {
  const GroupSpec g = group_of(c);
  std::vector<std::string> suites;
  if (c.suite == "all") {
    suites = {"oracle", "product", "basis", "generation", "fakedeg", "stable"};
    if (g.family == Family::Sp) suites.erase(std::find(suites.begin(), suites.end(), "fakedeg"));
  } else {
    suites = {c.suite};
  }

  SuiteResult res;
  for (const auto& s : suites) {
    try {
      run_suite(s, g, c, res);
    } catch (const SizeError& e) {
      if (suites.size() == 1) throw;
      res.skipped.push_back(s + ": " + e.what());
    }
  }
  const bool passed = all_passed(res.checks);

  if (c.format == "json") {
    nlohmann::json j = {{"suite", c.suite}, {"group", g.name()}, {"passed", passed}};
    j["checks"] = nlohmann::json::array();
    for (const auto& r : res.checks) j["checks"].push_back(to_json(r));
    j["skipped"] = res.skipped;
    for (const auto& [k, v] : res.extra.items()) j[k] = v;
    out << j.dump() << "\n";
  } else if (c.format == "csv") {
    out << "name,passed,first_mismatch,detail\n";
    for (const auto& r : res.checks)
      out << csv_field(r.name) << "," << (r.passed ? "true" : "false") << ","
          << (r.first_mismatch >= 0 ? std::to_string(r.first_mismatch) : "") << "," << csv_field(r.detail) << "\n";
  } else {
    for (const auto& r : res.checks) out << (r.passed ? "PASS " : "FAIL ") << r.name << ": " << r.detail << "\n";
    for (const auto& s : res.skipped) out << "SKIP " << s << "\n";
    if (res.extra.contains("basis")) {
      const auto& b = res.extra["basis"];
      out << "basis: " << b.size() << " elements, degrees";
      std::vector<int> degs;
      for (const auto& e : b) degs.push_back(e["degree"].get<int>());
      std::sort(degs.begin(), degs.end());
      for (std::size_t i = 0; i < degs.size(); ++i) out << (i ? "," : " ") << degs[i];
      out << "\n";
    }
    const auto npass = std::count_if(res.checks.begin(), res.checks.end(), [](const CheckReport& r) { return r.passed; });
    out << npass << "/" << res.checks.size() << " checks passed\n";
  }
  if (!passed) return kExitCheckFailed;
  return res.skipped.empty() ? kExitOk : kExitResourceCap;
}

inline int cmd_poset(const RunConfig& c, std::ostream& out) {
  if (c.rank < 1) throw UsageError("--rank must be >= 1");
  if (c.rank > 30) throw SizeError("poset tables are limited to rank <= 30");
  if (!c.ivals.empty()) {
    const auto classes = chain_classes(c.rank, c.ivals);
    if (c.format == "json") {
      nlohmann::json j = {{"rank", c.rank}, {"ivals", c.ivals}, {"count", classes.size()}};
      j["classes"] = nlohmann::json::array();
      for (const auto& cl : classes) {
        nlohmann::json chain = nlohmann::json::array();
        for (const auto& p : cl.representative) chain.push_back(p.blocks());
        j["classes"].push_back({{"chain", chain}, {"orbit_size", cl.orbit_size}});
      }
      out << j.dump() << "\n";
    } else {
      if (c.format == "csv") out << "chain,orbit_size\n";
      for (const auto& cl : classes) {
        std::string chain;
        for (const auto& p : cl.representative) chain += (chain.empty() ? "" : " >= ") + p.to_string();
        if (c.format == "csv") out << csv_field(chain) << "," << cl.orbit_size << "\n";
        else out << chain << "  (" << cl.orbit_size << " chains)\n";
      }
      if (c.format == "text") out << classes.size() << " classes\n";
    }
    return kExitOk;
  }

  const auto comps = components(c.rank);
  if (c.format == "json") {
    nlohmann::json j = {{"rank", c.rank}};
    j["components"] = nlohmann::json::array();
    for (const auto& comp : comps) {
      nlohmann::json coeffs = nlohmann::json::array();
      for (int d = 0; d <= comp.flag_poincare.degree(); ++d) coeffs.push_back(json_integer(comp.flag_poincare.coeff(d)));
      j["components"].push_back({{"lambda", comp.lambda.parts()},
                                 {"flag_poincare", coeffs},
                                 {"real_dimension", comp.real_dimension},
                                 {"stabilizer_order", comp.stabilizer_order}});
    }
    out << j.dump() << "\n";
  } else if (c.format == "csv") {
    out << "lambda,flag_poincare,real_dimension,stabilizer_order\n";
    for (const auto& comp : comps)
      out << csv_field(comp.lambda.to_string()) << "," << csv_field(comp.flag_poincare.to_string("q")) << ","
          << comp.real_dimension << "," << comp.stabilizer_order << "\n";
  } else {
    for (const auto& comp : comps)
      out << comp.lambda.to_string() << "  dim " << comp.real_dimension << "  |S_lambda| " << comp.stabilizer_order
          << "  P(q) = " << comp.flag_poincare.to_string("q") << "\n";
  }
  return kExitOk;
}

inline int cmd_catalog(const RunConfig& c, std::ostream& out) {
  if (c.group.empty()) throw UsageError("--family is required");
  const GeneratorCatalog cat = generator_catalog(parse_family(c.group), c.maxdeg);
  if (c.format == "json") {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& ab : cat.pairs) rows.push_back({{"a", ab.first}, {"b", ab.second}, {"degree", GeneratorCatalog::degree(ab)}});
    out << nlohmann::json{{"family", to_string(cat.family)}, {"maxdeg", c.maxdeg}, {"generators", rows}}.dump() << "\n";
  } else {
    if (c.format == "csv") out << "a,b,degree\n";
    for (const auto& ab : cat.pairs) {
      if (c.format == "csv") out << ab.first << "," << ab.second << "," << GeneratorCatalog::degree(ab) << "\n";
      else out << "(" << ab.first << "," << ab.second << ")  degree " << GeneratorCatalog::degree(ab) << "\n";
    }
    if (c.format == "text") out << cat.pairs.size() << " generators\n";
  }
  return kExitOk;
}

}  // namespace cli_detail

inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Poincare series of spaces of commuting elements in U(n), SU(n), Sp(n)", "comlie"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);
  RunConfig c;

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
  };
  auto add_group = [&](CLI::App* sub) {
    sub->add_option("--group", c.group, "Group family")->check(CLI::IsMember({"u", "su", "sp"}));
    sub->add_option("--rank", c.rank, "Rank n");
  };
  auto add_maxdeg = [&](CLI::App* sub, const std::string& help) {
    return sub->add_option("--maxdeg", c.maxdeg, help)->check(CLI::NonNegativeNumber);
  };

  CLI::App* series = app.add_subcommand("series", "Print a Poincare series");
  add_group(series);
  series->add_option("--what", c.what, "Quantity")->check(CLI::IsMember({"ecom", "bcom", "bg", "stable"}));
  add_maxdeg(series, "Truncation t-degree (default 40)");
  add_format(series);
  series->add_option("--cache-dir", c.cache_dir, "Result cache directory (default $COMLIE_CACHE_DIR)");
  series->add_flag("--oracle", c.oracle, "Use the Weyl class-sum oracle instead of enumeration");

  CLI::App* verify = app.add_subcommand("verify", "Run verification suites");
  add_group(verify);
  verify->add_option("--suite", c.suite, "Suite to run")
      ->check(CLI::IsMember({"oracle", "product", "basis", "generation", "fakedeg", "stable", "all"}));
  CLI::Option* verify_maxdeg =
      add_maxdeg(verify, "t-degree for series suites; polynomial degree for basis and generation");
  add_format(verify);
  verify->add_flag("--oracle", c.oracle, "Accepted for symmetry with series; the oracle suite always uses it");

  CLI::App* poset = app.add_subcommand("poset", "Components of the torus poset of U(n)");
  poset->add_option("--rank", c.rank, "Rank n")->required();
  poset->add_option("--chains", c.ivals, "Comma-separated rank values; lists chain classes instead")->delimiter(',');
  add_format(poset);

  CLI::App* catalog = app.add_subcommand("catalog", "Stable generator catalog");
  catalog->add_option("--family", c.group, "Group family")->required()->check(CLI::IsMember({"u", "su", "sp"}));
  add_maxdeg(catalog, "Largest generator degree 2(a+b) (default 40)");
  add_format(catalog);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  c.maxdeg_given = verify_maxdeg->count() > 0;

  try {
    if (*series) return cli_detail::cmd_series(c, out);
    if (*verify) return cli_detail::cmd_verify(c, out);
    if (*poset) return cli_detail::cmd_poset(c, out);
    return cli_detail::cmd_catalog(c, out);
  } catch (const SizeError& e) {
    err << "resource cap: " << e.what() << "\n";
    if (*series && (c.what == "ecom" || c.what == "bcom") && !c.oracle) err << "rerun with --oracle to use the class-sum path\n";
    return kExitResourceCap;
  } catch (const IntegrityError& e) {
    err << "integrity failure: " << e.what() << "\n";
    return kExitCheckFailed;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace comlie
