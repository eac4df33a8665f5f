#pragma once

#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "strata/bounds.hpp"
#include "strata/error.hpp"
#include "strata/exponents.hpp"
#include "strata/hyperelliptic.hpp"
#include "strata/rational.hpp"
#include "strata/stratum.hpp"

namespace strata {

/// Where a catalog entry comes from; family sources carry their parameters.
struct CatalogSource {
  enum class Kind {
    Fixed,
    Irregular,
    Genus0Family,
    Genus1Family,
    HypFamily,
    Abelian,
  };

  Kind kind = Kind::Fixed;
  std::optional<int> n;
  std::optional<int> family;
  std::optional<int> g;
  std::optional<int> k;

  std::string str() const {
    switch (kind) {
      case Kind::Fixed:
        return "fixed";
      case Kind::Irregular:
        return "irregular";
      case Kind::Genus0Family:
        return n.has_value()
                   ? "genus0-family(" + std::to_string(*n) + ")"
                   : "genus0-family";
      case Kind::Genus1Family:
        return n.has_value()
                   ? "genus1-family(" + std::to_string(*n) + ")"
                   : "genus1-family";
      case Kind::HypFamily:
        if (family.has_value() && g.has_value() && k.has_value()) {
          return "hyp-family(" + std::to_string(*family) + "," +
                 std::to_string(*g) + "," + std::to_string(*k) + ")";
        }
        return "hyp-family";
      case Kind::Abelian:
        return "abelian";
    }
    return "fixed";
  }

  static CatalogSource parse(const std::string& text) {
    std::string name = text;
    std::vector<int> args;
    std::size_t open = text.find('(');
    if (open != std::string::npos) {
      if (text.back() != ')') {
        throw ParseError("unterminated parameter list in catalog source '" +
                         text + "'", open);
      }
      name = text.substr(0, open);
      std::string inner = text.substr(open + 1, text.size() - open - 2);
      std::istringstream in(inner);
      std::string piece;
      while (std::getline(in, piece, ',')) {
        try {
          std::size_t used = 0;
          int value = std::stoi(piece, &used);
          if (used != piece.size()) throw std::invalid_argument(piece);
          args.push_back(value);
        } catch (const std::exception&) {
          throw ParseError("bad parameter '" + piece +
                           "' in catalog source '" + text + "'", open);
        }
      }
    }
    CatalogSource source;
    if (name == "fixed") {
      source.kind = Kind::Fixed;
    } else if (name == "irregular") {
      source.kind = Kind::Irregular;
    } else if (name == "genus0-family") {
      source.kind = Kind::Genus0Family;
      if (args.size() == 1) source.n = args[0];
      else if (!args.empty()) {
        throw ParseError("genus0-family takes at most one parameter", 0);
      }
    } else if (name == "genus1-family") {
      source.kind = Kind::Genus1Family;
      if (args.size() == 1) source.n = args[0];
      else if (!args.empty()) {
        throw ParseError("genus1-family takes at most one parameter", 0);
      }
    } else if (name == "hyp-family") {
      source.kind = Kind::HypFamily;
      if (args.size() == 3) {
        source.family = args[0];
        source.g = args[1];
        source.k = args[2];
      } else if (!args.empty()) {
        throw ParseError("hyp-family takes three parameters", 0);
      }
    } else if (name == "abelian") {
      source.kind = Kind::Abelian;
    } else {
      throw ParseError("unknown catalog source '" + text + "'", 0);
    }
    return source;
  }

  friend bool operator==(const CatalogSource&, const CatalogSource&) = default;

  friend std::ostream& operator<<(std::ostream& os, const CatalogSource& s) {
    return os << s.str();
  }
};

/// One catalog row: a signature, how it got into the catalog, and any
/// recorded section-count table or golden spectrum to check against.
struct CatalogEntry {
  Stratum stratum;
  CatalogSource source;
  std::optional<H0Table> h0;
  std::optional<ExponentSpectrum> expected;

  friend bool operator==(const CatalogEntry&, const CatalogEntry&) = default;
};

/// The recorded section-count tables for the four signatures whose spectra
/// are not given by the generic count.  Keys follow the canonical order of
/// the singularities.
inline std::optional<H0Table> recorded_h0_table(const Stratum& s) {
  const std::string key = s.canonical().str();
  if (key == "Q(9,-1)^irr") {
    return H0Table(3, {{{1, 0}, 1},
                       {{2, 0}, 1},
                       {{3, 0}, 2},
                       {{4, 0}, 2},
                       {{5, 0}, 3}});
  }
  if (key == "Q(6,3,-1)^irr") {
    return H0Table(3, {{{1, 0, 0}, 1},
                       {{1, 1, 0}, 1},
                       {{2, 1, 0}, 2},
                       {{3, 1, 0}, 2},
                       {{3, 2, 0}, 3}});
  }
  if (key == "Q(12)^irr") {
    return H0Table(
        4, {{{1}, 1}, {{2}, 1}, {{3}, 1}, {{4}, 2}, {{5}, 2}, {{6}, 3}});
  }
  if (key == "Q(9,3)^irr") {
    return H0Table(4, {{{1, 0}, 1},
                       {{2, 0}, 1},
                       {{2, 1}, 1},
                       {{3, 1}, 2},
                       {{4, 1}, 2},
                       {{4, 2}, 3},
                       {{5, 2}, 4}});
  }
  return std::nullopt;
}

namespace detail {

inline std::vector<Rational> parse_rationals(const std::string& csv) {
  std::vector<Rational> out;
  std::istringstream in(csv);
  std::string piece;
  while (std::getline(in, piece, ',')) out.push_back(Rational::parse(piece));
  return out;
}

inline ExponentSpectrum make_spectrum(const std::string& plus,
                                      const std::string& minus) {
  ExponentSpectrum sp;
  if (!plus.empty()) sp.w_plus = parse_rationals(plus);
  sp.w_minus = parse_rationals(minus);
  return sp;
}

}  // namespace detail

/// The shipped catalog: the recorded non-varying signatures of genus 2-4,
/// the four irregular signatures with their section tables, the genus-0 and
/// genus-1 pole families, the three hyperelliptic families over their full
/// recorded parameter ranges, and the abelian signatures with recorded
/// partitions.
inline std::vector<CatalogEntry> default_catalog() {
  std::vector<CatalogEntry> cat;

  auto fixed = [&cat](const char* text) {
    cat.push_back(CatalogEntry{Stratum::parse(text),
                               CatalogSource{CatalogSource::Kind::Fixed}});
  };
  auto fixed_golden = [&cat](const char* text, const char* plus,
                             const char* minus) {
    CatalogEntry entry{Stratum::parse(text),
                       CatalogSource{CatalogSource::Kind::Fixed}};
    entry.expected = detail::make_spectrum(plus, minus);
    cat.push_back(std::move(entry));
  };

  // Genus 2.
  fixed("Q(5,-1)");
  fixed("Q(6,-1,-1)^nonhyp");
  fixed("Q(5,1,-1,-1)");
  fixed_golden("Q(7,-1^3)", "4/9,2/9", "1,1/3,1/9");
  fixed("Q(3,2,-1)");
  fixed("Q(2,2,1,-1)");
  fixed("Q(4,1,-1)");
  fixed("Q(4,2,-1,-1)");
  fixed("Q(3,1,1,-1)");
  fixed("Q(3,3,-1,-1)^nonhyp");
  fixed("Q(3,2,1,-1,-1)");
  fixed("Q(4,3,-1,-1,-1)");
  // Genus 3.
  fixed_golden("Q(4,3,2,-1)", "1/2,2/5,1/3", "1,1/3,1/5");
  fixed("Q(4,2,2)");
  fixed("Q(3,3,2)^nonhyp");
  fixed("Q(3,3,1,1)^nonhyp");
  fixed("Q(4,3,1)");
  fixed("Q(3,2,2,1)");
  fixed("Q(3,3,3,-1)^reg");
  fixed("Q(6,2)^nonhyp");
  fixed("Q(4,4)");
  fixed("Q(5,3)");
  fixed("Q(5,2,1)");
  fixed("Q(6,1,1)^nonhyp");
  fixed("Q(5,4,-1)");
  fixed("Q(5,3,1,-1)");
  fixed("Q(7,1)");
  fixed("Q(7,2,-1)");
  fixed("Q(7,3,-1,-1)");
  fixed("Q(6,3,-1)^reg");
  fixed("Q(9,-1)^reg");
  fixed("Q(8)");
  fixed("Q(8,1,-1)");
  fixed("Q(10,-1,-1)^nonhyp");
  // Genus 4.
  fixed_golden("Q(5,4,3)", "4/7,2/5,1/3,2/7", "1,1/3,1/5,1/7");
  fixed("Q(7,3,2)");
  fixed("Q(6,3,3)^reg");
  fixed("Q(13,-1)");
  fixed("Q(11,1)");
  fixed("Q(12)^reg");
  fixed("Q(8,3,1)");
  fixed("Q(10,2)^nonhyp");
  fixed("Q(8,4)");
  fixed("Q(9,3)^reg");
  fixed("Q(7,5)");
  fixed("Q(6,6)^reg");
  fixed("Q(3,3,3,3)^reg");

  // Irregular signatures with recorded section-count tables.
  auto irregular = [&cat](const char* text, const char* plus,
                          const char* minus) {
    Stratum s = Stratum::parse(text);
    CatalogEntry entry{s, CatalogSource{CatalogSource::Kind::Irregular}};
    entry.h0 = recorded_h0_table(s);
    entry.expected = detail::make_spectrum(plus, minus);
    cat.push_back(std::move(entry));
  };
  irregular("Q(9,-1)^irr", "8/11,4/11,2/11", "1,5/11,1/11");
  irregular("Q(6,3,-1)^irr", "3/4,2/5,1/4", "1,1/2,1/5");
  irregular("Q(12)^irr", "5/7,3/7,2/7,1/7", "1,3/7,1/7");
  irregular("Q(9,3)^irr", "8/11,2/5,4/11,2/11", "1,5/11,1/5,1/11");

  // Genus-zero family: the minimal signature and Q(n, -1^{n+4}).
  {
    CatalogEntry minimal{Stratum::quadratic({-1, -1, -1, -1}),
                         CatalogSource{CatalogSource::Kind::Genus0Family}};
    cat.push_back(std::move(minimal));
    for (int n = 1; n <= 30; ++n) {
      std::vector<int> orders{n};
      orders.insert(orders.end(), n + 4, -1);
      cat.push_back(
          CatalogEntry{Stratum::quadratic(std::move(orders)),
                       CatalogSource{CatalogSource::Kind::Genus0Family}});
    }
  }

  // Genus-one families with goldens from the closed forms.
  for (int n = 1; n <= 30; ++n) {
    // Q(n, -1^n).
    {
      std::vector<int> orders{n};
      orders.insert(orders.end(), n, -1);
      Stratum s = Stratum::quadratic(std::move(orders));
      CatalogSource source{CatalogSource::Kind::Genus1Family};
      source.n = n;
      CatalogEntry entry{s, source};
      ExponentSpectrum sp;
      sp.w_plus.push_back(Rational(2, n + 2));
      sp.w_minus.push_back(Rational(1));
      for (int j = 1; j < s.g_eff(); ++j) {
        sp.w_minus.push_back(Rational(n - 2 * j, n + 2));
      }
      entry.expected = std::move(sp);
      cat.push_back(std::move(entry));
    }
    // Q(n, 1, -1^{n+1}).
    {
      std::vector<int> orders{n, 1};
      orders.insert(orders.end(), n + 1, -1);
      Stratum s = Stratum::quadratic(std::move(orders));
      CatalogSource source{CatalogSource::Kind::Genus1Family};
      source.n = n;
      CatalogEntry entry{s, source};
      ExponentSpectrum sp;
      sp.w_plus.push_back(Rational(2, n + 2));
      std::vector<Rational> candidates{Rational(1, 3)};
      for (int kk = 1; 2 * kk <= n + 1; ++kk) {
        candidates.push_back(Rational(n + 2 - 2 * kk, n + 2));
      }
      std::sort(candidates.rbegin(), candidates.rend());
      sp.w_minus.push_back(Rational(1));
      sp.w_minus.insert(sp.w_minus.end(), candidates.begin() + 1,
                        candidates.end());
      entry.expected = std::move(sp);
      cat.push_back(std::move(entry));
    }
  }

  // Hyperelliptic families over their recorded parameter ranges.
  for (int family = 1; family <= 3; ++family) {
    int g_lo = (family == 1) ? 2 : 1;
    for (int g = g_lo; g <= 10; ++g) {
      int k_lo = (family == 3) ? -1 : 0;
      int k_hi = (family == 2) ? g - 1 : g - 2;
      for (int k = k_lo; k <= k_hi; ++k) {
        FamilyData fd = family_data(family, g, k);
        CatalogSource source{CatalogSource::Kind::HypFamily};
        source.family = family;
        source.g = g;
        source.k = k;
        cat.push_back(CatalogEntry{std::move(fd.induced), source});
      }
    }
  }

  // Abelian signatures with recorded splitting partitions.
  for (const char* text :
       {"H(4)^odd", "H(3,1)", "H(2,2)^odd", "H(2,1,1)", "H(6)^odd", "H(5,1)",
        "H(4,2)^odd", "H(3,3)^nonhyp", "H(2,2,2)^odd", "H(3,2,1)", "H(8)^odd",
        "H(6,2)^odd", "H(5,3)"}) {
    cat.push_back(CatalogEntry{Stratum::parse(text),
                               CatalogSource{CatalogSource::Kind::Abelian}});
  }

  return cat;
}

/// The outcome of checking one catalog entry.  `failures` lists every check
/// that did not hold; an entry passes when the list is empty.
struct VerifyReport {
  Stratum stratum;
  CatalogSource source;
  std::optional<ExponentSpectrum> spectrum;
  std::optional<Rational> ekz_defect;
  std::optional<bool> golden_match;
  bool lengths_ok = true;
  bool identities_ok = true;
  bool all_nonzero = true;
  bool polygon_concave = true;
  std::vector<std::string> failures;

  bool passed() const { return failures.empty(); }
};

inline VerifyReport verify_entry(const CatalogEntry& entry) {
  VerifyReport report{entry.stratum, entry.source};
  const Stratum& s = entry.stratum;

  if (entry.source.kind == CatalogSource::Kind::Abelian) {
    try {
      std::vector<int> partition = abelian_partition(s);
      int sum = 0;
      for (int v : partition) sum += v;
      if (sum != s.genus() - 1) {
        report.identities_ok = false;
        report.failures.push_back("partition sums to " +
                                  std::to_string(sum) + ", expected " +
                                  std::to_string(s.genus() - 1));
      }
    } catch (const std::exception& e) {
      report.failures.push_back(e.what());
    }
    return report;
  }

  try {
    switch (entry.source.kind) {
      case CatalogSource::Kind::Fixed:
      case CatalogSource::Kind::Genus1Family:
        report.spectrum = nonvarying_spectrum(s);
        break;
      case CatalogSource::Kind::Genus0Family:
        report.spectrum = genus_zero_spectrum(s);
        break;
      case CatalogSource::Kind::Irregular: {
        std::optional<H0Table> table = entry.h0;
        if (!table.has_value()) table = recorded_h0_table(s);
        if (!table.has_value()) {
          report.failures.push_back("no section-count table for " + s.str());
          return report;
        }
        report.spectrum = filtration_spectrum(s, *table);
        break;
      }
      case CatalogSource::Kind::HypFamily: {
        if (!entry.source.family.has_value() ||
            !entry.source.g.has_value() || !entry.source.k.has_value()) {
          report.failures.push_back(
              "hyperelliptic entry lacks family parameters");
          return report;
        }
        FamilyData fd = family_data(*entry.source.family, *entry.source.g,
                                    *entry.source.k);
        if (!fd.induced.same_multiset(s)) {
          report.failures.push_back("family parameters induce " +
                                    fd.induced.str() + ", entry records " +
                                    s.str());
        }
        ExponentSpectrum sp;
        sp.w_plus = hyp_inv_spectrum(fd.profile);
        sp.w_minus = hyp_anti_spectrum(fd.profile);
        report.spectrum = std::move(sp);
        break;
      }
      case CatalogSource::Kind::Abelian:
        break;  // handled above
    }
  } catch (const std::exception& e) {
    report.failures.push_back(e.what());
    return report;
  }

  if (!report.spectrum.has_value()) return report;
  const ExponentSpectrum& sp = *report.spectrum;

  if (static_cast<int>(sp.w_plus.size()) != s.genus() ||
      static_cast<int>(sp.w_minus.size()) != s.g_eff()) {
    report.lengths_ok = false;
    report.failures.push_back(
        "spectrum sizes " + std::to_string(sp.w_plus.size()) + "/" +
        std::to_string(sp.w_minus.size()) + " do not match genus " +
        std::to_string(s.genus()) + " and effective genus " +
        std::to_string(s.g_eff()));
  }

  int k_sum = 0;
  for (int k : s.k_values()) k_sum += k;
  if (k_sum != s.g_eff() + s.genus() - 1) {
    report.identities_ok = false;
    report.failures.push_back("multiplicity sum identity fails");
  }

  SpectrumSums sums = sums_and_ekz(sp, s);
  report.ekz_defect = sums.defect;
  if (sums.defect != Rational(0)) {
    report.failures.push_back("sum rule defect " + sums.defect.str() +
                              " is nonzero");
  }

  for (const std::vector<Rational>* side : {&sp.w_plus, &sp.w_minus}) {
    for (const Rational& w : *side) {
      if (w == Rational(0)) report.all_nonzero = false;
    }
  }
  if (!report.all_nonzero) {
    report.failures.push_back("spectrum contains a zero exponent");
  }

  try {
    if (!hn_polygon(sp.w_plus).concave() ||
        !hn_polygon(sp.w_minus).concave()) {
      report.polygon_concave = false;
    }
  } catch (const std::exception&) {
    report.polygon_concave = false;
  }
  if (!report.polygon_concave) {
    report.failures.push_back("a spectrum polygon is not concave");
  }

  if (entry.expected.has_value()) {
    bool match = entry.expected->w_plus == sp.w_plus &&
                 entry.expected->w_minus == sp.w_minus;
    report.golden_match = match;
    if (!match) {
      report.failures.push_back("computed spectrum differs from the "
                                "recorded golden values");
    }
  }
  return report;
}

inline std::vector<VerifyReport> verify_all(
    const std::vector<CatalogEntry>& catalog) {
  std::vector<VerifyReport> reports;
  reports.reserve(catalog.size());
  for (const CatalogEntry& entry : catalog) {
    reports.push_back(verify_entry(entry));
  }
  return reports;
}

}  // namespace strata
