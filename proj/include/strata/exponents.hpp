#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "strata/error.hpp"
#include "strata/rational.hpp"
#include "strata/stratum.hpp"

namespace strata {

/// The two halves of a Weierstrass exponent spectrum: w_plus lives on the
/// invariant (genus g) side, w_minus on the anti-invariant (effective genus)
/// side; both are weakly decreasing and w_minus always starts with 1.
struct ExponentSpectrum {
  std::vector<Rational> w_plus;
  std::vector<Rational> w_minus;

  Rational l_plus() const {
    Rational sum(0);
    for (const Rational& w : w_plus) sum += w;
    return sum;
  }
  Rational l_minus() const {
    Rational sum(0);
    for (const Rational& w : w_minus) sum += w;
    return sum;
  }

  friend bool operator==(const ExponentSpectrum&,
                         const ExponentSpectrum&) = default;
};

namespace detail {

inline void require_quadratic(const Stratum& s, const char* what) {
  if (s.kind() != DiffKind::Quadratic) {
    throw ValidationError(std::string(what) +
                          " applies to quadratic signatures, got " + s.str());
  }
}

}  // namespace detail

/// The candidate multiset M = { 2k/(d_j+2) : 0 < 2k <= d_j+1 } over all
/// singularities, sorted ascending.  Its size is g + g_eff - 1.
inline std::vector<Rational> plus_multiset(const Stratum& s) {
  detail::require_quadratic(s, "the exponent candidate multiset");
  std::vector<Rational> m;
  for (int d : s.orders()) {
    for (int k = 1; 2 * k <= d + 1; ++k) m.emplace_back(2 * k, d + 2);
  }
  std::sort(m.begin(), m.end());
  return m;
}

/// Exponent spectrum of a non-varying stratum: w_plus is the g smallest
/// candidates (descending), w_minus is 1 followed by the g_eff - 1 smallest
/// values of { 1 - x } (descending), i.e. the complements of the largest
/// candidates.
inline ExponentSpectrum nonvarying_spectrum(const Stratum& s) {
  std::vector<Rational> m = plus_multiset(s);
  int g = s.genus();
  int g_eff = s.g_eff();
  ExponentSpectrum sp;
  sp.w_plus.assign(m.begin(), m.begin() + g);
  std::reverse(sp.w_plus.begin(), sp.w_plus.end());
  sp.w_minus.push_back(Rational(1));
  for (std::size_t j = m.size() - (g_eff - 1); j < m.size(); ++j) {
    sp.w_minus.push_back(Rational(1) - m[j]);
  }
  return sp;
}

/// Genus-zero specialization of the same rule (w_plus is empty).  Rejects
/// positive-genus input so the two entry points cannot be confused.
inline ExponentSpectrum genus_zero_spectrum(const Stratum& s) {
  detail::require_quadratic(s, "the genus-zero spectrum");
  if (s.genus() != 0) {
    throw ValidationError("genus-zero spectrum called on " + s.str() +
                          " of genus " + std::to_string(s.genus()));
  }
  return nonvarying_spectrum(s);
}

/// One step of the shared divisor chain: adding the (depth+1)-st copy of
/// singularity j contributes invariant degree (2*depth+2)/(d_j+2); the same
/// step read on the anti-invariant side contributes 1 minus that value.
struct ChainStep {
  int singularity = 0;
  int depth = 0;
  Rational degree;
};

/// All Sum(k_j) chain steps, ascending by (degree, singularity, depth).
inline std::vector<ChainStep> degree_chain(const Stratum& s) {
  detail::require_quadratic(s, "the degree chain");
  std::vector<ChainStep> chain;
  const std::vector<int>& orders = s.orders();
  for (std::size_t j = 0; j < orders.size(); ++j) {
    int d = orders[j];
    for (int i = 0; 2 * i + 2 <= d + 1; ++i) {
      chain.push_back(ChainStep{static_cast<int>(j), i,
                                Rational(2 * i + 2, d + 2)});
    }
  }
  std::sort(chain.begin(), chain.end(),
            [](const ChainStep& a, const ChainStep& b) {
              if (a.degree != b.degree) return a.degree < b.degree;
              if (a.singularity != b.singularity)
                return a.singularity < b.singularity;
              return a.depth < b.depth;
            });
  return chain;
}

/// The splitting partition (a_1, ..., a_n): how many of the g smallest chain
/// steps each singularity contributes (ties resolved toward the smaller
/// singularity index by the chain order).
inline std::vector<int> select_partition(const Stratum& s) {
  std::vector<ChainStep> chain = degree_chain(s);
  std::vector<int> a(s.orders().size(), 0);
  int g = s.genus();
  for (int l = 0; l < g; ++l) a[chain[l].singularity] += 1;
  return a;
}

/// One line-bundle summand of the splitting of the pushed-forward cover
/// bundle.  `tautological` marks the extra anti-invariant summand of
/// degree 1 that every splitting carries.
struct Summand {
  int singularity = -1;
  int level = 0;
  Rational degree;
  bool tautological = false;
};

struct SummandList {
  std::vector<Summand> invariant;
  std::vector<Summand> anti_invariant;

  std::vector<Rational> invariant_degrees() const {
    std::vector<Rational> out;
    out.reserve(invariant.size());
    for (const Summand& s : invariant) out.push_back(s.degree);
    return out;
  }
  std::vector<Rational> anti_degrees() const {
    std::vector<Rational> out;
    out.reserve(anti_invariant.size());
    for (const Summand& s : anti_invariant) out.push_back(s.degree);
    return out;
  }
};

/// The summands determined by a splitting partition: singularity j
/// contributes invariant levels 0..a_j-1 with degrees (2i+2)/(d_j+2) and
/// anti-invariant levels a_j+1..k_j with degrees 1 - 2m/(d_j+2); the
/// tautological degree-1 summand leads the anti-invariant list.
inline SummandList splitting_summands(const Stratum& s,
                                      const std::vector<int>& partition) {
  detail::require_quadratic(s, "the splitting summand list");
  const std::vector<int>& orders = s.orders();
  std::vector<int> k = s.k_values();
  if (partition.size() != orders.size()) {
    throw ValidationError("partition has " + std::to_string(partition.size()) +
                          " entries for " + std::to_string(orders.size()) +
                          " singularities");
  }
  long long sum = 0;
  for (std::size_t j = 0; j < partition.size(); ++j) {
    if (partition[j] < 0 || partition[j] > k[j]) {
      throw ValidationError("partition entry " + std::to_string(partition[j]) +
                            " at index " + std::to_string(j) +
                            " is outside [0, " + std::to_string(k[j]) + "]");
    }
    sum += partition[j];
  }
  if (sum != s.genus()) {
    throw ValidationError("partition sums to " + std::to_string(sum) +
                          ", expected the genus " +
                          std::to_string(s.genus()));
  }
  SummandList list;
  list.anti_invariant.push_back(Summand{-1, 0, Rational(1), true});
  for (std::size_t j = 0; j < orders.size(); ++j) {
    int d = orders[j];
    for (int i = 0; i < partition[j]; ++i) {
      list.invariant.push_back(
          Summand{static_cast<int>(j), i, Rational(2 * i + 2, d + 2), false});
    }
    for (int m = partition[j] + 1; m <= k[j]; ++m) {
      list.anti_invariant.push_back(
          Summand{static_cast<int>(j), m,
                  Rational(1) - Rational(2 * m, d + 2), false});
    }
  }
  return list;
}

/// A recorded table of section counts h0(D) for effective divisors supported
/// on the singularities, keyed by multiplicity vectors.  Construction checks
/// the universal constraints a section-count function must satisfy:
/// h0(0) = 1, unit monotone steps, the Riemann-Roch floor
/// h0 >= max(1, deg - g + 1), and Clifford's bound 2(h0-1) <= deg in the
/// special range 0 < deg <= 2g-2.
class H0Table {
 public:
  H0Table(int genus, std::map<std::vector<int>, int> values)
      : genus_(genus), values_(std::move(values)) {
    if (genus_ < 0) throw ValidationError("h0 table genus is negative");
    std::size_t key_length = 0;
    bool first = true;
    for (const auto& [key, value] : values_) {
      if (first) {
        key_length = key.size();
        first = false;
      } else if (key.size() != key_length) {
        throw ValidationError("h0 table mixes multiplicity vectors of "
                              "different lengths");
      }
      long long deg = 0;
      for (int mult : key) {
        if (mult < 0) {
          throw ValidationError("h0 table key " + key_text(key) +
                                " has a negative multiplicity");
        }
        deg += mult;
      }
      if (deg == 0 && value != 1) {
        throw ValidationError("h0 of the zero divisor must be 1, table says " +
                              std::to_string(value));
      }
      long long floor = std::max<long long>(1, deg - genus_ + 1);
      if (value < floor) {
        throw ValidationError("h0 table value " + std::to_string(value) +
                              " at " + key_text(key) +
                              " is below the Riemann-Roch floor " +
                              std::to_string(floor));
      }
      if (deg > 0 && deg <= 2LL * genus_ - 2 && 2LL * (value - 1) > deg) {
        throw ValidationError("h0 table value " + std::to_string(value) +
                              " at " + key_text(key) +
                              " violates Clifford's bound");
      }
    }
    // Unit monotonicity along every +e_j edge present in the table.
    for (const auto& [key, value] : values_) {
      std::vector<int> next = key;
      for (std::size_t j = 0; j < next.size(); ++j) {
        next[j] += 1;
        auto it = values_.find(next);
        if (it != values_.end()) {
          int diff = it->second - value;
          if (diff < 0 || diff > 1) {
            throw ValidationError("h0 table step from " + key_text(key) +
                                  " to " + key_text(next) + " changes by " +
                                  std::to_string(diff) +
                                  "; only +0 or +1 is possible");
          }
        }
        next[j] -= 1;
      }
    }
  }

  int genus() const { return genus_; }
  const std::map<std::vector<int>, int>& values() const { return values_; }

  int operator()(const std::vector<int>& key) const {
    auto it = values_.find(key);
    if (it == values_.end()) {
      throw ValidationError("h0 table has no entry for multiplicity vector " +
                            key_text(key));
    }
    return it->second;
  }

  friend bool operator==(const H0Table&, const H0Table&) = default;

 private:
  static std::string key_text(const std::vector<int>& key) {
    std::string out;
    for (std::size_t i = 0; i < key.size(); ++i) {
      if (i > 0) out += ",";
      out += std::to_string(key[i]);
    }
    return out;
  }

  int genus_;
  std::map<std::vector<int>, int> values_;
};

/// Section counts of a generic (non-special) curve: max(1, deg - g + 1).
struct GenericH0 {
  int genus = 0;
  int operator()(const std::vector<int>& key) const {
    long long deg = std::accumulate(key.begin(), key.end(), 0LL);
    return static_cast<int>(std::max<long long>(1, deg - genus + 1));
  }
};

/// Walks the divisor chain twice against a section-count oracle.
///
/// Invariant side: the rank after l steps is h0(a_l) - l + g - 1, starting
/// at g; each unit drop emits the degree of the step that caused it.  The
/// walk must end at rank 0 with exactly g emissions.
///
/// Anti-invariant side: the rank after l steps is h0(a_l) - 1, starting at 0;
/// each unit jump emits 1 minus the degree of the step.  Together with the
/// leading tautological exponent 1 the side must end with exactly g_eff
/// entries.  Any other rank behaviour marks the oracle as inconsistent with
/// the signature.
template <typename Oracle>
ExponentSpectrum filtration_spectrum(const Stratum& s, const Oracle& oracle) {
  detail::require_quadratic(s, "the filtration engine");
  std::vector<ChainStep> chain = degree_chain(s);
  const int g = s.genus();
  const int g_eff = s.g_eff();

  ExponentSpectrum sp;
  std::vector<int> acc(s.orders().size(), 0);
  int rank = g;
  for (std::size_t l = 1; l <= chain.size(); ++l) {
    acc[chain[l - 1].singularity] += 1;
    int h = oracle(acc);
    int next = h - static_cast<int>(l) + g - 1;
    int drop = rank - next;
    if (drop == 1) {
      sp.w_plus.push_back(chain[l - 1].degree);
    } else if (drop != 0) {
      throw ValidationError(
          "invariant filtration rank moved by " + std::to_string(-drop) +
          " at step " + std::to_string(l) + " on " + s.str() +
          "; the h0 oracle is inconsistent with the signature");
    }
    if (next < 0) {
      throw ValidationError("invariant filtration rank fell below zero on " +
                            s.str());
    }
    rank = next;
  }
  if (rank != 0 || static_cast<int>(sp.w_plus.size()) != g) {
    throw ValidationError(
        "invariant filtration on " + s.str() + " ended at rank " +
        std::to_string(rank) + " with " + std::to_string(sp.w_plus.size()) +
        " exponents (expected rank 0 and " + std::to_string(g) +
        "); the h0 oracle is inconsistent with the signature");
  }
  std::reverse(sp.w_plus.begin(), sp.w_plus.end());

  sp.w_minus.push_back(Rational(1));
  std::fill(acc.begin(), acc.end(), 0);
  rank = 0;
  for (std::size_t l = 1; l <= chain.size(); ++l) {
    acc[chain[l - 1].singularity] += 1;
    int h = oracle(acc);
    int next = h - 1;
    int jump = next - rank;
    if (jump == 1) {
      sp.w_minus.push_back(Rational(1) - chain[l - 1].degree);
    } else if (jump != 0) {
      throw ValidationError(
          "anti-invariant filtration rank moved by " + std::to_string(jump) +
          " at step " + std::to_string(l) + " on " + s.str() +
          "; the h0 oracle is inconsistent with the signature");
    }
    rank = next;
  }
  if (static_cast<int>(sp.w_minus.size()) != g_eff) {
    throw ValidationError(
        "anti-invariant filtration on " + s.str() + " produced " +
        std::to_string(sp.w_minus.size()) + " exponents (expected " +
        std::to_string(g_eff) +
        "); the h0 oracle is inconsistent with the signature");
  }
  return sp;
}

/// Both spectrum sums together with the sum-rule data: the right-hand side
/// (1/4) * Sum over odd orders of 1/(d+2), and the defect
/// (L_minus - L_plus) - rhs, which vanishes for every consistent spectrum.
struct SpectrumSums {
  Rational l_plus;
  Rational l_minus;
  Rational ekz_rhs;
  Rational defect;
};

inline SpectrumSums sums_and_ekz(const ExponentSpectrum& sp,
                                 const Stratum& s) {
  detail::require_quadratic(s, "the spectrum sum rule");
  Rational rhs(0);
  for (int d : s.orders()) {
    if (d % 2 != 0) rhs += Rational(1, d + 2);
  }
  rhs = rhs * Rational(1, 4);
  SpectrumSums sums{sp.l_plus(), sp.l_minus(), rhs, Rational(0)};
  sums.defect = (sums.l_minus - sums.l_plus) - sums.ekz_rhs;
  return sums;
}

/// The Harder-Narasimhan polygon of a weakly decreasing exponent list: the
/// piecewise-linear graph through the partial sums (0, w1, w1+w2, ...).
struct HNPolygon {
  std::vector<Rational> sums;

  /// True when the polygon is concave (second differences non-positive),
  /// which holds exactly when the defining slopes weakly decrease.
  bool concave() const {
    for (std::size_t i = 1; i + 1 < sums.size(); ++i) {
      if (sums[i] + sums[i] < sums[i - 1] + sums[i + 1]) return false;
    }
    return true;
  }
};

inline HNPolygon hn_polygon(const std::vector<Rational>& exponents) {
  for (std::size_t i = 1; i < exponents.size(); ++i) {
    if (exponents[i] > exponents[i - 1]) {
      throw ValidationError("polygon slopes must weakly decrease; " +
                            exponents[i].str() + " follows " +
                            exponents[i - 1].str());
    }
  }
  HNPolygon p;
  p.sums.reserve(exponents.size() + 1);
  p.sums.push_back(Rational(0));
  for (const Rational& w : exponents) p.sums.push_back(p.sums.back() + w);
  return p;
}

/// Pointwise comparison of two polygons over the same number of steps:
/// a dominates b when every vertex of a lies at or above the matching
/// vertex of b.
inline bool polygon_dominates(const HNPolygon& a, const HNPolygon& b) {
  if (a.sums.size() != b.sums.size()) {
    throw ValidationError("polygons compare pointwise; got " +
                          std::to_string(a.sums.size() - 1) + " and " +
                          std::to_string(b.sums.size() - 1) + " steps");
  }
  for (std::size_t i = 0; i < a.sums.size(); ++i) {
    if (a.sums[i] < b.sums[i]) return false;
  }
  return true;
}

}  // namespace strata
