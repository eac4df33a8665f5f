#pragma once

#include <fstream>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "strata/catalog.hpp"
#include "strata/error.hpp"
#include "strata/exponents.hpp"
#include "strata/rational.hpp"
#include "strata/stratum.hpp"

namespace strata {

inline void to_json(nlohmann::json& j, const ExponentSpectrum& sp) {
  nlohmann::json plus = nlohmann::json::array();
  for (const Rational& w : sp.w_plus) plus.push_back(w.str());
  nlohmann::json minus = nlohmann::json::array();
  for (const Rational& w : sp.w_minus) minus.push_back(w.str());
  j = nlohmann::json{{"w_plus", std::move(plus)},
                     {"w_minus", std::move(minus)},
                     {"L_plus", sp.l_plus().str()},
                     {"L_minus", sp.l_minus().str()}};
}

inline void from_json(const nlohmann::json& j, ExponentSpectrum& sp) {
  sp.w_plus.clear();
  sp.w_minus.clear();
  for (const auto& item : j.at("w_plus")) {
    sp.w_plus.push_back(Rational::parse(item.get<std::string>()));
  }
  for (const auto& item : j.at("w_minus")) {
    sp.w_minus.push_back(Rational::parse(item.get<std::string>()));
  }
}

}  // namespace strata

namespace nlohmann {

/// Section-count tables serialize flat: a "genus" field plus one field per
/// multiplicity vector, keyed by its comma-joined components.
template <>
struct adl_serializer<strata::H0Table> {
  static void to_json(json& j, const strata::H0Table& table) {
    j = json::object();
    j["genus"] = table.genus();
    for (const auto& [key, value] : table.values()) {
      std::string name;
      for (std::size_t i = 0; i < key.size(); ++i) {
        if (i > 0) name += ",";
        name += std::to_string(key[i]);
      }
      j[name] = value;
    }
  }

  static strata::H0Table from_json(const json& j) {
    if (!j.is_object() || !j.contains("genus")) {
      throw strata::ValidationError(
          "a section-count table needs a \"genus\" field");
    }
    int genus = j.at("genus").get<int>();
    std::map<std::vector<int>, int> values;
    for (const auto& [name, value] : j.items()) {
      if (name == "genus") continue;
      std::vector<int> key;
      std::size_t start = 0;
      while (start <= name.size()) {
        std::size_t comma = name.find(',', start);
        std::string piece = name.substr(
            start, comma == std::string::npos ? std::string::npos
                                              : comma - start);
        try {
          std::size_t used = 0;
          key.push_back(std::stoi(piece, &used));
          if (used != piece.size()) throw std::invalid_argument(piece);
        } catch (const std::exception&) {
          throw strata::ValidationError("bad multiplicity vector \"" + name +
                                        "\" in section-count table");
        }
        if (comma == std::string::npos) break;
        start = comma + 1;
      }
      values[key] = value.get<int>();
    }
    return strata::H0Table(genus, std::move(values));
  }
};

}  // namespace nlohmann

namespace strata {

inline nlohmann::json catalog_to_json(const std::vector<CatalogEntry>& cat) {
  nlohmann::json j = nlohmann::json::array();
  for (const CatalogEntry& entry : cat) {
    nlohmann::json row{{"stratum", entry.stratum.str(true)},
                       {"source", entry.source.str()}};
    if (entry.h0.has_value()) row["h0"] = *entry.h0;
    if (entry.expected.has_value()) row["expected"] = *entry.expected;
    j.push_back(std::move(row));
  }
  return j;
}

inline std::vector<CatalogEntry> catalog_from_json(const nlohmann::json& j) {
  if (!j.is_array()) {
    throw ValidationError("a catalog file holds a JSON array of entries");
  }
  std::vector<CatalogEntry> cat;
  cat.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    try {
      const nlohmann::json& row = j.at(i);
      Stratum stratum = Stratum::parse(row.at("stratum").get<std::string>(),
                                       /*allow_marked=*/true);
      CatalogSource source =
          CatalogSource::parse(row.at("source").get<std::string>());
      CatalogEntry entry{std::move(stratum), source};
      if (row.contains("h0")) entry.h0 = row.at("h0").get<H0Table>();
      if (row.contains("expected")) {
        entry.expected = row.at("expected").get<ExponentSpectrum>();
      }
      cat.push_back(std::move(entry));
    } catch (const std::exception& e) {
      throw ValidationError("entry " + std::to_string(i) + ": " + e.what());
    }
  }
  return cat;
}

/// Reads a catalog from a JSON file; failures (missing file, bad JSON, bad
/// entries) all surface as ValidationError.
inline std::vector<CatalogEntry> load_catalog(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ValidationError("cannot open catalog file " + path);
  }
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError("catalog file " + path + " is not valid JSON: " +
                          e.what());
  }
  return catalog_from_json(j);
}

}  // namespace strata
