#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "strata/error.hpp"
#include "strata/exponents.hpp"
#include "strata/rational.hpp"
#include "strata/stratum.hpp"

namespace strata {

/// Section count of a degree-d divisor on a generic genus-g curve:
/// max(1, d - g + 1).
inline int generic_h0(int degree, int genus) {
  if (degree < 0) {
    throw ValidationError("section counts are defined for effective "
                          "divisors; degree " + std::to_string(degree));
  }
  if (genus < 0) {
    throw ValidationError("genus must be non-negative, got " +
                          std::to_string(genus));
  }
  return std::max(1, degree - genus + 1);
}

/// The exponent spectrum as an upper bound, valid under the genericity
/// hypothesis: every zero order positive and at least g poles.  Pass
/// relax=true to compute the bound anyway.
inline ExponentSpectrum generic_upper_bounds(const Stratum& s,
                                             bool relax = false) {
  if (!relax) {
    bool marked = std::any_of(s.orders().begin(), s.orders().end(),
                              [](int d) { return d == 0; });
    if (marked) {
      throw ValidationError("the genericity hypothesis needs every zero "
                            "order positive; " + s.str() +
                            " has a marked point");
    }
    if (s.pole_count() < s.genus()) {
      throw ValidationError("the genericity hypothesis needs at least g "
                            "poles; " + s.str() + " has " +
                            std::to_string(s.pole_count()) + " for genus " +
                            std::to_string(s.genus()));
    }
  }
  return nonvarying_spectrum(s);
}

/// A section-count callable: either the generic closed form at a fixed
/// genus or lookup in a recorded table.
class H0Oracle {
 public:
  static H0Oracle generic(int genus) {
    if (genus < 0) {
      throw ValidationError("genus must be non-negative, got " +
                            std::to_string(genus));
    }
    return H0Oracle(GenericH0{genus});
  }

  static H0Oracle table(H0Table table) {
    return H0Oracle(std::move(table));
  }

  int operator()(const std::vector<int>& key) const { return fn_(key); }

 private:
  template <typename Callable>
  explicit H0Oracle(Callable fn) : fn_(std::move(fn)) {}

  std::function<int(const std::vector<int>&)> fn_;
};

/// Jump indices along the divisor chain and the exponent bounds they
/// certify: N_i is the last step where the invariant rank is still i (so
/// w_plus[i] <= degree of step N_i + 1), H_j is the first step where the
/// anti-invariant rank reaches j (so w_minus[j+1] <= 1 - degree of
/// step H_j).
struct BoundReport {
  std::vector<int> n_indices;
  std::vector<Rational> w_plus_bounds;
  std::vector<int> h_indices;
  std::vector<Rational> w_minus_bounds;
};

inline BoundReport bound_indices(const Stratum& s, const H0Oracle& oracle) {
  std::vector<ChainStep> chain = degree_chain(s);
  const int g = s.genus();
  const int g_eff = s.g_eff();

  // Invariant side: rank after l steps is h0(a_l) - l + g - 1, from g to 0.
  std::vector<int> inv_rank;
  inv_rank.reserve(chain.size() + 1);
  inv_rank.push_back(g);
  std::vector<int> acc(s.orders().size(), 0);
  for (std::size_t l = 1; l <= chain.size(); ++l) {
    acc[chain[l - 1].singularity] += 1;
    int next = oracle(acc) - static_cast<int>(l) + g - 1;
    int drop = inv_rank.back() - next;
    if (drop != 0 && drop != 1) {
      throw ValidationError("invariant rank moved by " +
                            std::to_string(-drop) + " at step " +
                            std::to_string(l) + " on " + s.str() +
                            "; the h0 oracle is inconsistent");
    }
    inv_rank.push_back(next);
  }
  if (inv_rank.back() != 0) {
    throw ValidationError("invariant rank ended at " +
                          std::to_string(inv_rank.back()) + " on " + s.str() +
                          "; the h0 oracle is inconsistent");
  }

  BoundReport report;
  for (int i = 1; i <= g; ++i) {
    int last = -1;
    for (std::size_t l = 0; l < inv_rank.size(); ++l) {
      if (inv_rank[l] == i) last = static_cast<int>(l);
    }
    report.n_indices.push_back(last);
    report.w_plus_bounds.push_back(chain[last].degree);
  }

  // Anti-invariant side: rank after l steps is h0(a_l) - 1, from 0 to
  // g_eff - 1.
  std::vector<int> anti_rank;
  anti_rank.reserve(chain.size() + 1);
  anti_rank.push_back(0);
  std::fill(acc.begin(), acc.end(), 0);
  for (std::size_t l = 1; l <= chain.size(); ++l) {
    acc[chain[l - 1].singularity] += 1;
    int next = oracle(acc) - 1;
    int jump = next - anti_rank.back();
    if (jump != 0 && jump != 1) {
      throw ValidationError("anti-invariant rank moved by " +
                            std::to_string(jump) + " at step " +
                            std::to_string(l) + " on " + s.str() +
                            "; the h0 oracle is inconsistent");
    }
    anti_rank.push_back(next);
  }
  if (anti_rank.back() != g_eff - 1) {
    throw ValidationError("anti-invariant rank ended at " +
                          std::to_string(anti_rank.back()) + " on " +
                          s.str() + "; the h0 oracle is inconsistent");
  }

  for (int j = 1; j <= g_eff - 1; ++j) {
    int first = -1;
    for (std::size_t l = 0; l < anti_rank.size(); ++l) {
      if (anti_rank[l] == j) {
        first = static_cast<int>(l);
        break;
      }
    }
    report.h_indices.push_back(first);
    report.w_minus_bounds.push_back(Rational(1) - chain[first - 1].degree);
  }
  return report;
}

/// Recorded splitting partitions for the low-genus abelian signatures whose
/// spectra are known to be constant.  Lookup is by canonical form
/// (orders sorted, component kept); the partition entries sum to g - 1.
inline std::vector<int> abelian_partition(const Stratum& s) {
  if (s.kind() != DiffKind::Abelian) {
    throw ValidationError("partition data is recorded for abelian "
                          "signatures, got " + s.str());
  }
  static const std::map<std::string, std::vector<int>> table = {
      {"H(4)^odd", {2}},
      {"H(3,1)", {1, 1}},
      {"H(2,2)^odd", {1, 1}},
      {"H(2,1,1)", {1, 1, 0}},
      {"H(6)^odd", {3}},
      {"H(5,1)", {2, 1}},
      {"H(4,2)^odd", {2, 1}},
      {"H(3,3)^nonhyp", {2, 1}},
      {"H(2,2,2)^odd", {1, 1, 1}},
      {"H(3,2,1)", {1, 1, 1}},
      {"H(8)^odd", {4}},
      {"H(6,2)^odd", {3, 1}},
      {"H(5,3)", {3, 1}},
  };
  auto it = table.find(s.canonical().str());
  if (it == table.end()) {
    throw ValidationError("no recorded partition for " + s.str());
  }
  return it->second;
}

/// Closed form for the smallest-exponent sum along the n-th principal
/// family: 2 / (1 + (2n-2)!! / (2n-3)!!).
inline Rational cms_lplus(int n) {
  if (n <= 1) {
    throw ValidationError("the closed form starts at n = 2, got " +
                          std::to_string(n));
  }
  BigInt even(1), odd(1);
  for (int i = 2 * n - 2; i >= 2; i -= 2) even *= i;
  for (int i = 2 * n - 3; i >= 1; i -= 2) odd *= i;
  return Rational(2) / (Rational(1) + Rational(even, odd));
}

/// Whether a claimed value of L_plus equals the sum of the g smallest
/// exponent candidates of the signature.
inline bool conjecture_predicate(const Stratum& s, const Rational& claimed) {
  std::vector<Rational> m = plus_multiset(s);
  Rational sum(0);
  for (int i = 0; i < s.genus(); ++i) sum += m[i];
  return claimed == sum;
}

}  // namespace strata
