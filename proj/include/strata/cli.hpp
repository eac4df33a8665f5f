#pragma once

#include <cstdlib>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "strata/bounds.hpp"
#include "strata/catalog.hpp"
#include "strata/cover.hpp"
#include "strata/error.hpp"
#include "strata/exponents.hpp"
#include "strata/hyperelliptic.hpp"
#include "strata/rational.hpp"
#include "strata/serialize.hpp"
#include "strata/stratum.hpp"

namespace strata {

/// Every public library operation, used to audit that each one is reachable
/// from the command line.
inline std::vector<std::string> library_operations() {
  return {"parse_stratum",       "genus",
          "cover_data",          "nonvarying_spectrum",
          "genus_zero_spectrum", "select_partition",
          "splitting_summands",  "filtration_spectrum",
          "sums_and_ekz",        "hn_polygon",
          "polygon_dominates",   "family_data",
          "hyp_anti_spectrum",   "hyp_inv_spectrum",
          "asymptotic_exponent", "generic_h0",
          "generic_upper_bounds","bound_indices",
          "abelian_partition",   "conjecture_predicate",
          "cms_lplus",           "load_catalog",
          "verify_entry"};
}

namespace cli {

/// Which verb exposes each library operation.
inline const std::map<std::string, std::string>& operation_coverage() {
  static const std::map<std::string, std::string> coverage = {
      {"parse_stratum", "parse"},
      {"genus", "parse"},
      {"cover_data", "cover"},
      {"nonvarying_spectrum", "exponents"},
      {"genus_zero_spectrum", "exponents"},
      {"select_partition", "exponents"},
      {"splitting_summands", "exponents"},
      {"filtration_spectrum", "exponents"},
      {"sums_and_ekz", "exponents"},
      {"hn_polygon", "polygon"},
      {"polygon_dominates", "polygon"},
      {"family_data", "hyp"},
      {"hyp_anti_spectrum", "hyp"},
      {"hyp_inv_spectrum", "hyp"},
      {"asymptotic_exponent", "asympt"},
      {"generic_h0", "bounds"},
      {"generic_upper_bounds", "bounds"},
      {"bound_indices", "bounds"},
      {"abelian_partition", "bounds"},
      {"conjecture_predicate", "conjecture"},
      {"cms_lplus", "conjecture"},
      {"load_catalog", "verify"},
      {"verify_entry", "verify"}};
  return coverage;
}

namespace detail {

inline nlohmann::json rational_list(const std::vector<Rational>& values) {
  nlohmann::json j = nlohmann::json::array();
  for (const Rational& v : values) j.push_back(v.str());
  return j;
}

inline nlohmann::json approx_list(const std::vector<Rational>& values) {
  nlohmann::json j = nlohmann::json::array();
  for (const Rational& v : values) j.push_back(v.approx());
  return j;
}

inline std::vector<Rational> parse_rational_csv(const std::string& text) {
  std::vector<Rational> out;
  if (text.empty()) return out;
  std::istringstream in(text);
  std::string piece;
  while (std::getline(in, piece, ',')) out.push_back(Rational::parse(piece));
  return out;
}

inline std::string scalar_text(const nlohmann::json& j) {
  if (j.is_string()) return j.get<std::string>();
  return j.dump();
}

/// Flattens a JSON document into (path, value) rows: nested objects join
/// their keys with '.', arrays of scalars join their items with ','.
inline void flatten(const nlohmann::json& j, const std::string& prefix,
                    std::vector<std::pair<std::string, std::string>>& rows) {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      flatten(value, prefix.empty() ? key : prefix + "." + key, rows);
    }
    return;
  }
  if (j.is_array()) {
    bool scalar_only = true;
    for (const auto& item : j) {
      if (item.is_object() || item.is_array()) scalar_only = false;
    }
    if (scalar_only) {
      std::string joined;
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i > 0) joined += ",";
        joined += scalar_text(j.at(i));
      }
      rows.emplace_back(prefix, joined);
    } else {
      for (std::size_t i = 0; i < j.size(); ++i) {
        flatten(j.at(i), prefix + "[" + std::to_string(i) + "]", rows);
      }
    }
    return;
  }
  rows.emplace_back(prefix, scalar_text(j));
}

inline void emit(const nlohmann::json& j, const std::string& format,
                 std::ostream& out) {
  if (format == "json") {
    out << j.dump(2) << "\n";
    return;
  }
  std::vector<std::pair<std::string, std::string>> rows;
  flatten(j, "", rows);
  for (const auto& [key, value] : rows) {
    if (format == "tsv") {
      out << key << "\t" << value << "\n";
    } else {
      out << key << ": " << value << "\n";
    }
  }
}

inline H0Table load_h0_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ValidationError("cannot open section-count table " + path);
  }
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError("section-count table " + path +
                          " is not valid JSON: " + e.what());
  }
  return j.get<H0Table>();
}

struct VerbOptions {
  std::string stratum;
  std::string format = "json";
  bool allow_marked = false;
  bool partition = false;
  bool summands = false;
  bool approx = false;
  bool spectrum = false;
  int family = 0;
  int g = 0;
  int k = 0;
  int m = 1;
  int param = 0;
  int cms = 0;
  std::string oracle = "generic";
  std::string against;
  std::string asympt_family;
  std::string side;
  std::string vary = "g";
  std::string lplus;
  std::string catalog;
  bool against_given = false;
  bool cms_given = false;
  bool lplus_given = false;
  bool catalog_given = false;
};

inline int run_parse(const VerbOptions& opt, std::ostream& out) {
  Stratum s = Stratum::parse(opt.stratum, opt.allow_marked);
  nlohmann::json j{
      {"kind", s.kind() == DiffKind::Quadratic ? "quadratic" : "abelian"},
      {"orders", s.orders()},
      {"component", component_name(s.component())},
      {"genus", s.genus()},
      {"g_eff", s.g_eff()},
      {"canonical", s.canonical().str()}};
  emit(j, opt.format, out);
  return 0;
}

inline int run_exponents(const VerbOptions& opt, std::ostream& out,
                         std::ostream& err) {
  Stratum s = Stratum::parse(opt.stratum, opt.allow_marked);
  if (s.kind() != DiffKind::Quadratic) {
    err << "error: exponent spectra are computed for quadratic signatures; "
        << "got " << s.str() << "\n";
    return 1;
  }
  ExponentSpectrum sp;
  if (s.genus() == 0) {
    sp = genus_zero_spectrum(s);
  } else if (s.component() == Component::Irr) {
    std::optional<H0Table> table = recorded_h0_table(s);
    if (!table.has_value()) {
      err << "error: no recorded section-count table for " << s.str()
          << "\n";
      return 1;
    }
    sp = filtration_spectrum(s.canonical(), *table);
  } else if (s.component() == Component::Hyp) {
    std::optional<HypFamily> fam = classify_induced(s);
    if (!fam.has_value()) {
      err << "error: " << s.str()
          << " is not induced by a recorded hyperelliptic family\n";
      return 1;
    }
    FamilyData fd = family_data(fam->family, fam->g, fam->k);
    sp.w_plus = hyp_inv_spectrum(fd.profile);
    sp.w_minus = hyp_anti_spectrum(fd.profile);
  } else {
    sp = nonvarying_spectrum(s);
  }
  SpectrumSums sums = sums_and_ekz(sp, s);
  nlohmann::json j{{"stratum", s.str(true)},
                   {"w_plus", rational_list(sp.w_plus)},
                   {"w_minus", rational_list(sp.w_minus)},
                   {"L_plus", sums.l_plus.str()},
                   {"L_minus", sums.l_minus.str()},
                   {"ekz_rhs", sums.ekz_rhs.str()},
                   {"defect", sums.defect.str()}};
  if (opt.partition || opt.summands) {
    std::vector<int> partition = select_partition(s);
    if (opt.partition) j["partition"] = partition;
    if (opt.summands) {
      SummandList list = splitting_summands(s, partition);
      auto summand_json = [](const std::vector<Summand>& side) {
        nlohmann::json rows = nlohmann::json::array();
        for (const Summand& item : side) {
          rows.push_back({{"singularity", item.singularity},
                          {"level", item.level},
                          {"degree", item.degree.str()},
                          {"tautological", item.tautological}});
        }
        return rows;
      };
      j["summands"] = {{"invariant", summand_json(list.invariant)},
                       {"anti_invariant", summand_json(list.anti_invariant)}};
    }
  }
  if (opt.approx) {
    j["w_plus_approx"] = approx_list(sp.w_plus);
    j["w_minus_approx"] = approx_list(sp.w_minus);
  }
  emit(j, opt.format, out);
  return 0;
}

inline int run_cover(const VerbOptions& opt, std::ostream& out) {
  Stratum s = Stratum::parse(opt.stratum, opt.allow_marked);
  CoverData c = cover_data(s);
  std::string display = "H(";
  bool first = true;
  for (int m : c.orders) {
    if (m == 0) continue;
    if (!first) display += ",";
    display += std::to_string(m);
    first = false;
  }
  display += ")";
  nlohmann::json j{{"stratum", s.str(true)},
                   {"cover", display},
                   {"marked", c.marked_points()},
                   {"g", c.g},
                   {"g_eff", c.g_eff},
                   {"cover_genus", c.cover_genus()},
                   {"k", c.k}};
  emit(j, opt.format, out);
  return 0;
}

inline int run_hyp(const VerbOptions& opt, std::ostream& out) {
  FamilyData fd = family_data(opt.family, opt.g, opt.k);
  nlohmann::json j{{"base", fd.profile.base.str()},
                   {"induced", fd.induced.str()},
                   {"po", fd.profile.po_count()},
                   {"cover_genus", fd.profile.cover_genus()}};
  if (opt.spectrum) {
    j["w_plus"] = rational_list(hyp_inv_spectrum(fd.profile));
    j["w_minus"] = rational_list(hyp_anti_spectrum(fd.profile));
  }
  emit(j, opt.format, out);
  return 0;
}

inline int run_bounds(const VerbOptions& opt, std::ostream& out) {
  Stratum s = Stratum::parse(opt.stratum, opt.allow_marked);
  if (s.kind() == DiffKind::Abelian) {
    nlohmann::json j{{"stratum", s.str(true)},
                     {"partition", abelian_partition(s)},
                     {"genus", s.genus()}};
    emit(j, opt.format, out);
    return 0;
  }
  H0Oracle oracle = H0Oracle::generic(s.genus());
  if (opt.oracle.rfind("table:", 0) == 0) {
    oracle = H0Oracle::table(load_h0_table(opt.oracle.substr(6)));
  } else if (opt.oracle != "generic") {
    throw ValidationError("unknown oracle '" + opt.oracle +
                          "'; use generic or table:PATH");
  }
  BoundReport report = bound_indices(s, oracle);
  nlohmann::json j{{"stratum", s.str(true)},
                   {"oracle", opt.oracle},
                   {"n_indices", report.n_indices},
                   {"h_indices", report.h_indices},
                   {"w_plus_bounds", rational_list(report.w_plus_bounds)},
                   {"w_minus_bounds", rational_list(report.w_minus_bounds)}};
  try {
    ExponentSpectrum ub = generic_upper_bounds(s);
    j["upper_bounds"] = {{"w_plus", rational_list(ub.w_plus)},
                         {"w_minus", rational_list(ub.w_minus)}};
  } catch (const ValidationError&) {
    // Hypothesis fails; the generic upper bound is not certified.
  }
  emit(j, opt.format, out);
  return 0;
}

inline int run_polygon(const VerbOptions& opt, std::ostream& out) {
  std::vector<Rational> w = parse_rational_csv(opt.stratum);
  HNPolygon p = hn_polygon(w);
  nlohmann::json vertices = nlohmann::json::array();
  for (std::size_t i = 0; i < p.sums.size(); ++i) {
    vertices.push_back(nlohmann::json::array(
        {static_cast<int>(i), p.sums[i].str()}));
  }
  nlohmann::json j{{"vertices", vertices}, {"concave", p.concave()}};
  if (opt.against_given) {
    HNPolygon other = hn_polygon(parse_rational_csv(opt.against));
    j["dominates"] = polygon_dominates(p, other);
  }
  emit(j, opt.format, out);
  return 0;
}

inline int run_asympt(const VerbOptions& opt, std::ostream& out) {
  AsympFamily family;
  if (opt.asympt_family == "poles") {
    family = AsympFamily::GenusOnePoles;
  } else if (opt.asympt_family == "zero-poles") {
    family = AsympFamily::GenusOneZeroPoles;
  } else if (opt.asympt_family == "hyp1") {
    family = AsympFamily::Hyp1;
  } else if (opt.asympt_family == "hyp2") {
    family = AsympFamily::Hyp2;
  } else if (opt.asympt_family == "hyp3") {
    family = AsympFamily::Hyp3;
  } else {
    throw ValidationError("unknown family '" + opt.asympt_family +
                          "'; use poles, zero-poles, hyp1, hyp2, or hyp3");
  }
  Side side;
  if (opt.side == "plus") {
    side = Side::Plus;
  } else if (opt.side == "minus") {
    side = Side::Minus;
  } else {
    throw ValidationError("unknown side '" + opt.side +
                          "'; use plus or minus");
  }
  if (opt.vary.size() != 1) {
    throw ValidationError("--vary takes a single parameter letter, got '" +
                          opt.vary + "'");
  }
  Rational value =
      asymptotic_exponent(family, side, opt.m, opt.param, opt.vary[0]);
  Stratum s = asymptotic_stratum(family, opt.param, opt.vary[0]);
  nlohmann::json j{{"family", opt.asympt_family},
                   {"side", opt.side},
                   {"m", opt.m},
                   {"param", opt.param},
                   {"stratum", s.str(true)},
                   {"value", value.str()}};
  emit(j, opt.format, out);
  return 0;
}

inline int run_conjecture(const VerbOptions& opt, std::ostream& out) {
  if (opt.cms_given == opt.lplus_given) {
    throw ValidationError(
        "pass exactly one of --cms N or --lplus VALUE");
  }
  Stratum s = Stratum::parse(opt.stratum, opt.allow_marked);
  Rational claimed =
      opt.cms_given ? cms_lplus(opt.cms) : Rational::parse(opt.lplus);
  nlohmann::json j{{"stratum", s.str(true)},
                   {"claimed", claimed.str()},
                   {"matches", conjecture_predicate(s, claimed)}};
  emit(j, opt.format, out);
  return 0;
}

inline int run_verify(const VerbOptions& opt, std::ostream& out) {
  std::vector<CatalogEntry> catalog;
  if (opt.catalog_given) {
    catalog = load_catalog(opt.catalog);
  } else if (const char* env = std::getenv("STRATA_CATALOG")) {
    catalog = load_catalog(env);
  } else {
    catalog = default_catalog();
  }
  std::vector<VerifyReport> reports = verify_all(catalog);
  int failed = 0;
  for (const VerifyReport& r : reports) {
    if (!r.passed()) ++failed;
  }
  if (opt.format == "json") {
    nlohmann::json rows = nlohmann::json::array();
    for (const VerifyReport& r : reports) {
      rows.push_back({{"stratum", r.stratum.str(true)},
                      {"source", r.source.str()},
                      {"pass", r.passed()},
                      {"failures", r.failures}});
    }
    nlohmann::json j{{"entries", static_cast<int>(reports.size())},
                     {"passed", static_cast<int>(reports.size()) - failed},
                     {"failed", failed},
                     {"reports", std::move(rows)}};
    out << j.dump(2) << "\n";
  } else {
    for (const VerifyReport& r : reports) {
      std::string status = r.passed() ? "pass" : "FAIL";
      std::string note =
          r.failures.empty() ? "" : (opt.format == "tsv" ? "\t" : " — ") +
                                        r.failures.front();
      if (opt.format == "tsv") {
        out << r.stratum.str(true) << "\t" << r.source.str() << "\t"
            << status << note << "\n";
      } else {
        out << status << "  " << r.stratum.str(true) << "  ["
            << r.source.str() << "]" << note << "\n";
      }
    }
  }
  return failed > 0 ? 2 : 0;
}

}  // namespace detail

/// Runs the command-line interface on the given arguments (without the
/// program name).  Returns 0 on success, 1 on input or usage errors, 2 when
/// verification finds failing entries.
inline int run(const std::vector<std::string>& args, std::ostream& out,
               std::ostream& err) {
  CLI::App app{"exact exponent spectra of half-translation signatures"};
  app.require_subcommand(1);

  detail::VerbOptions opt;

  auto add_format = [&opt](CLI::App* sub) {
    sub->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"json", "tsv", "pretty"}));
  };

  CLI::App* parse_cmd =
      app.add_subcommand("parse", "parse and validate a signature");
  parse_cmd->add_option("stratum", opt.stratum, "signature text")->required();
  parse_cmd->add_flag("--allow-marked", opt.allow_marked,
                      "accept marked points (order 0)");
  add_format(parse_cmd);

  CLI::App* exponents_cmd =
      app.add_subcommand("exponents", "exponent spectrum of a signature");
  exponents_cmd->add_option("stratum", opt.stratum, "signature text")
      ->required();
  exponents_cmd->add_flag("--allow-marked", opt.allow_marked,
                          "accept marked points (order 0)");
  exponents_cmd->add_flag("--partition", opt.partition,
                          "include the splitting partition");
  exponents_cmd->add_flag("--summands", opt.summands,
                          "include the splitting summands");
  exponents_cmd->add_flag("--approx", opt.approx,
                          "include floating-point approximations");
  add_format(exponents_cmd);

  CLI::App* cover_cmd =
      app.add_subcommand("cover", "canonical double-cover data");
  cover_cmd->add_option("stratum", opt.stratum, "signature text")->required();
  cover_cmd->add_flag("--allow-marked", opt.allow_marked,
                      "accept marked points (order 0)");
  add_format(cover_cmd);

  CLI::App* hyp_cmd =
      app.add_subcommand("hyp", "hyperelliptic family construction");
  hyp_cmd->add_option("--family", opt.family, "family number (1-3)")
      ->required();
  hyp_cmd->add_option("--g", opt.g, "cover genus")->required();
  hyp_cmd->add_option("--k", opt.k, "family parameter k")->required();
  hyp_cmd->add_flag("--spectrum", opt.spectrum, "include both spectra");
  add_format(hyp_cmd);

  CLI::App* bounds_cmd = app.add_subcommand(
      "bounds", "upper-bound indices (or the recorded abelian partition)");
  bounds_cmd->add_option("stratum", opt.stratum, "signature text")
      ->required();
  bounds_cmd->add_flag("--allow-marked", opt.allow_marked,
                       "accept marked points (order 0)");
  bounds_cmd->add_option("--oracle", opt.oracle,
                         "section-count oracle: generic or table:PATH");
  add_format(bounds_cmd);

  CLI::App* polygon_cmd =
      app.add_subcommand("polygon", "partial-sum polygon of exponents");
  polygon_cmd->add_option("exponents", opt.stratum,
                          "comma-separated weakly decreasing rationals")
      ->required();
  CLI::Option* against_opt = polygon_cmd->add_option(
      "--against", opt.against, "second exponent list to compare against");
  add_format(polygon_cmd);

  CLI::App* verify_cmd =
      app.add_subcommand("verify", "check every catalog entry");
  CLI::Option* catalog_opt = verify_cmd->add_option(
      "--catalog", opt.catalog, "catalog JSON file (default: built-in)");
  add_format(verify_cmd);

  CLI::App* asympt_cmd = app.add_subcommand(
      "asympt", "closed-form exponents along one-parameter families");
  asympt_cmd
      ->add_option("--family", opt.asympt_family,
                   "poles, zero-poles, hyp1, hyp2, or hyp3")
      ->required();
  asympt_cmd->add_option("--side", opt.side, "plus or minus")->required();
  asympt_cmd->add_option("--m", opt.m, "1-based exponent index");
  asympt_cmd->add_option("--param", opt.param, "family parameter")
      ->required();
  asympt_cmd->add_option("--vary", opt.vary,
                         "which parameter varies (g or k)");
  add_format(asympt_cmd);

  CLI::App* conjecture_cmd = app.add_subcommand(
      "conjecture", "test a claimed smallest-exponent sum");
  conjecture_cmd->add_option("stratum", opt.stratum, "signature text")
      ->required();
  conjecture_cmd->add_flag("--allow-marked", opt.allow_marked,
                           "accept marked points (order 0)");
  CLI::Option* cms_opt = conjecture_cmd->add_option(
      "--cms", opt.cms, "claim the closed form at this n");
  CLI::Option* lplus_opt = conjecture_cmd->add_option(
      "--lplus", opt.lplus, "claim this exact rational");
  add_format(conjecture_cmd);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  opt.against_given = against_opt->count() > 0;
  opt.cms_given = cms_opt->count() > 0;
  opt.lplus_given = lplus_opt->count() > 0;
  opt.catalog_given = catalog_opt->count() > 0;

  try {
    if (parse_cmd->parsed()) return detail::run_parse(opt, out);
    if (exponents_cmd->parsed()) return detail::run_exponents(opt, out, err);
    if (cover_cmd->parsed()) return detail::run_cover(opt, out);
    if (hyp_cmd->parsed()) return detail::run_hyp(opt, out);
    if (bounds_cmd->parsed()) return detail::run_bounds(opt, out);
    if (polygon_cmd->parsed()) return detail::run_polygon(opt, out);
    if (verify_cmd->parsed()) return detail::run_verify(opt, out);
    if (asympt_cmd->parsed()) return detail::run_asympt(opt, out);
    if (conjecture_cmd->parsed()) return detail::run_conjecture(opt, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  err << "error: no verb selected\n";
  return 1;
}

}  // namespace cli
}  // namespace strata
