#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "strata/error.hpp"
#include "strata/exponents.hpp"
#include "strata/rational.hpp"
#include "strata/stratum.hpp"

namespace strata {

/// A genus-zero quadratic signature plus, per singularity, whether the
/// double cover branches there.  Branch points must come in even number.
struct BranchProfile {
  Stratum base;
  std::vector<bool> branched;

  /// Genus of the branched double cover of the sphere.
  int cover_genus() const {
    int count = static_cast<int>(
        std::count(branched.begin(), branched.end(), true));
    return count / 2 - 1;
  }

  /// Number of parity obstructions: odd unbranched orders plus even
  /// branched orders.  The closed-form invariant spectrum needs exactly 2.
  int po_count() const {
    int count = 0;
    const std::vector<int>& orders = base.orders();
    for (std::size_t j = 0; j < orders.size(); ++j) {
      bool odd = orders[j] % 2 != 0;
      if (odd != branched[j]) ++count;
    }
    return count;
  }
};

inline BranchProfile make_profile(const Stratum& base,
                                  std::vector<bool> branched) {
  if (base.kind() != DiffKind::Quadratic) {
    throw ValidationError("branch profiles are built over quadratic "
                          "signatures, got " + base.str());
  }
  if (base.genus() != 0) {
    throw ValidationError("branch profiles are built over genus-zero "
                          "signatures; " + base.str() + " has genus " +
                          std::to_string(base.genus()));
  }
  if (branched.size() != base.orders().size()) {
    throw ValidationError("branch flags cover " +
                          std::to_string(branched.size()) +
                          " points but the signature has " +
                          std::to_string(base.orders().size()));
  }
  int count = static_cast<int>(
      std::count(branched.begin(), branched.end(), true));
  if (count < 2 || count % 2 != 0) {
    throw ValidationError("a double cover needs an even number (>= 2) of "
                          "branch points, got " + std::to_string(count));
  }
  return BranchProfile{base, std::move(branched)};
}

/// The quadratic signature induced on the double cover: a branched order d
/// lifts to one singularity of order 2d+2 (dropped when regular), an
/// unbranched order d lifts to two copies of order d (dropped when marked).
inline Stratum induced_stratum(const BranchProfile& profile) {
  std::vector<int> orders;
  const std::vector<int>& base_orders = profile.base.orders();
  for (std::size_t j = 0; j < base_orders.size(); ++j) {
    int d = base_orders[j];
    if (profile.branched[j]) {
      if (2 * d + 2 != 0) orders.push_back(2 * d + 2);
    } else if (d != 0) {
      orders.push_back(d);
      orders.push_back(d);
    }
  }
  return Stratum::quadratic(std::move(orders), Component::Hyp);
}

/// True when the profile is one of the three recorded one-parameter
/// constructions:
///   family 1: base (2(g-k)-4, 2k, -1^{2g}), every point branched;
///   family 2: base (2(g-k)-3, 2k, -1^{2g+1}), all but the first branched;
///   family 3: base (2(g-k)-3, 2k+1, -1^{2g+2}), all but the first two
///             branched.
inline bool matches_known_family(const BranchProfile& profile) {
  const std::vector<int>& orders = profile.base.orders();
  const std::vector<bool>& branched = profile.branched;
  std::size_t n = orders.size();
  auto tail_is_poles = [&](std::size_t from) {
    for (std::size_t j = from; j < n; ++j) {
      if (orders[j] != -1) return false;
    }
    return true;
  };
  auto branched_from = [&](std::size_t from) {
    for (std::size_t j = from; j < n; ++j) {
      if (!branched[j]) return false;
    }
    return true;
  };
  // family 1: all branched, two even designated orders, 2g poles.
  if (n >= 6 && n % 2 == 0 && branched_from(0) && orders[0] >= 0 &&
      orders[0] % 2 == 0 && orders[1] >= 0 && orders[1] % 2 == 0 &&
      tail_is_poles(2)) {
    return true;
  }
  // family 2: first point unbranched and odd, second even, 2g+1 poles.
  if (n >= 5 && n % 2 == 1 && !branched[0] && branched_from(1) &&
      orders[0] >= -1 && orders[0] % 2 != 0 && orders[1] >= 0 &&
      orders[1] % 2 == 0 && tail_is_poles(2)) {
    return true;
  }
  // family 3: first two points unbranched and odd, 2g+2 poles.
  if (n >= 6 && n % 2 == 0 && !branched[0] && !branched[1] &&
      branched_from(2) && orders[0] >= 1 && orders[0] % 2 != 0 &&
      orders[1] >= -1 && orders[1] % 2 != 0 && tail_is_poles(2)) {
    return true;
  }
  return false;
}

struct FamilyData {
  BranchProfile profile;
  Stratum induced;
};

/// Builds the branch profile and induced signature for one of the three
/// recorded families at parameters (g, k).
inline FamilyData family_data(int family, int g, int k) {
  std::vector<int> orders;
  std::vector<bool> branched;
  if (family == 1) {
    if (k < 0 || g < 2 || g - k < 2) {
      throw ValidationError("family 1 needs k >= 0, g >= 2, g-k >= 2; got g=" +
                            std::to_string(g) + ", k=" + std::to_string(k));
    }
    orders = {2 * (g - k) - 4, 2 * k};
    orders.insert(orders.end(), 2 * g, -1);
    branched.assign(orders.size(), true);
  } else if (family == 2) {
    if (k < 0 || g < 1 || g - k < 1) {
      throw ValidationError("family 2 needs k >= 0, g >= 1, g-k >= 1; got g=" +
                            std::to_string(g) + ", k=" + std::to_string(k));
    }
    orders = {2 * (g - k) - 3, 2 * k};
    orders.insert(orders.end(), 2 * g + 1, -1);
    branched.assign(orders.size(), true);
    branched[0] = false;
  } else if (family == 3) {
    if (k < -1 || g < 1 || g - k < 2) {
      throw ValidationError("family 3 needs k >= -1, g >= 1, g-k >= 2; got g=" +
                            std::to_string(g) + ", k=" + std::to_string(k));
    }
    orders = {2 * (g - k) - 3, 2 * k + 1};
    orders.insert(orders.end(), 2 * g + 2, -1);
    branched.assign(orders.size(), true);
    branched[0] = false;
    branched[1] = false;
  } else {
    throw ValidationError("unknown hyperelliptic family " +
                          std::to_string(family));
  }
  Stratum base =
      Stratum::quadratic(std::move(orders), Component::None,
                         /*allow_marked=*/true);
  BranchProfile profile{std::move(base), std::move(branched)};
  Stratum induced = induced_stratum(profile);
  return FamilyData{std::move(profile), std::move(induced)};
}

/// Anti-invariant exponents of a family profile: 1 followed by the
/// complements 1 - 2l/(d+2) over every base singularity, descending.  The
/// closed form is only proved on the recorded families, so membership is
/// required unless the caller assumes the section-count hypothesis; either
/// way the list length must equal the induced effective genus.
inline std::vector<Rational> hyp_anti_spectrum(
    const BranchProfile& profile, bool assume_h0_hypothesis = false) {
  if (!assume_h0_hypothesis && !matches_known_family(profile)) {
    throw ValidationError("the anti-invariant closed form is only available "
                          "on the recorded families; pass "
                          "assume_h0_hypothesis to override");
  }
  std::vector<Rational> values;
  values.push_back(Rational(1));
  for (int d : profile.base.orders()) {
    for (int l = 1; 2 * l <= d + 1; ++l) {
      values.push_back(Rational(1) - Rational(2 * l, d + 2));
    }
  }
  std::sort(values.rbegin(), values.rend());
  Stratum induced = induced_stratum(profile);
  if (static_cast<int>(values.size()) != induced.g_eff()) {
    throw ValidationError(
        "anti-invariant closed form yields " + std::to_string(values.size()) +
        " exponents but " + induced.str() + " has effective genus " +
        std::to_string(induced.g_eff()));
  }
  return values;
}

/// Invariant exponents of a family profile, available exactly when the
/// parity obstruction count is 2: unbranched orders contribute 2l/(d+2),
/// branched orders contribute (2l-1)/(d+2), descending.
inline std::vector<Rational> hyp_inv_spectrum(const BranchProfile& profile) {
  if (profile.po_count() != 2) {
    throw ValidationError("the invariant closed form needs parity "
                          "obstruction count 2, got " +
                          std::to_string(profile.po_count()));
  }
  std::vector<Rational> values;
  const std::vector<int>& orders = profile.base.orders();
  for (std::size_t j = 0; j < orders.size(); ++j) {
    int d = orders[j];
    if (profile.branched[j]) {
      for (int l = 1; 2 * l - 1 <= d + 1; ++l) {
        values.push_back(Rational(2 * l - 1, d + 2));
      }
    } else {
      for (int l = 1; 2 * l <= d + 1; ++l) {
        values.push_back(Rational(2 * l, d + 2));
      }
    }
  }
  std::sort(values.rbegin(), values.rend());
  Stratum induced = induced_stratum(profile);
  if (static_cast<int>(values.size()) != induced.genus()) {
    throw ValidationError(
        "invariant closed form yields " + std::to_string(values.size()) +
        " exponents but " + induced.str() + " has genus " +
        std::to_string(induced.genus()));
  }
  return values;
}

/// Family membership recovered from an induced signature.
struct HypFamily {
  int family = 0;
  int g = 0;
  int k = 0;
};

/// Recognizes the induced signature of a recorded family from its order
/// multiset (the component tag is ignored).  Equivalent parameter
/// assignments may be returned; they induce the same signature and spectra.
inline std::optional<HypFamily> classify_induced(const Stratum& s) {
  if (s.kind() != DiffKind::Quadratic) return std::nullopt;
  std::vector<int> orders = s.orders();
  std::sort(orders.rbegin(), orders.rend());
  if (orders.size() == 2) {
    int u = orders[0], v = orders[1];
    if (u >= 2 && v >= 2 && u % 4 == 2 && v % 4 == 2) {
      int k = (v - 2) / 4;
      return HypFamily{1, k + (u + 6) / 4, k};
    }
    return std::nullopt;
  }
  if (orders.size() == 3) {
    std::vector<int> evens, odds;
    for (int d : orders) (d % 2 == 0 ? evens : odds).push_back(d);
    if (evens.size() == 1 && odds.size() == 2 && odds[0] == odds[1] &&
        odds[0] >= -1 && evens[0] >= 2 && evens[0] % 4 == 2) {
      int k = (evens[0] - 2) / 4;
      return HypFamily{2, k + (odds[0] + 3) / 2, k};
    }
    return std::nullopt;
  }
  if (orders.size() == 4) {
    bool all_odd = std::all_of(orders.begin(), orders.end(),
                               [](int d) { return d % 2 != 0; });
    if (all_odd && orders[0] == orders[1] && orders[2] == orders[3] &&
        orders[0] >= 1 && orders[2] >= -1) {
      int k = (orders[2] - 1) / 2;
      return HypFamily{3, k + (orders[0] + 3) / 2, k};
    }
    return std::nullopt;
  }
  return std::nullopt;
}

/// One-parameter families whose extreme exponents have closed forms.
enum class AsympFamily { GenusOnePoles, GenusOneZeroPoles, Hyp1, Hyp2, Hyp3 };
enum class Side { Plus, Minus };

/// The signature a family descriptor denotes at one parameter value.  For
/// the hyperelliptic families `vary` selects which of (g, k) the parameter
/// drives; the other sits at the family minimum (vary 'g': k = -1 for
/// family 3 else 0) or at the minimal gap (vary 'k': g = k+1 for family 2
/// else k+2).
inline Stratum asymptotic_stratum(AsympFamily family, int param,
                                  char vary = 'g') {
  switch (family) {
    case AsympFamily::GenusOnePoles: {
      if (param < 1) {
        throw ValidationError("the genus-one pole family needs n >= 1, got " +
                              std::to_string(param));
      }
      std::vector<int> orders{param};
      orders.insert(orders.end(), param, -1);
      return Stratum::quadratic(std::move(orders));
    }
    case AsympFamily::GenusOneZeroPoles: {
      if (param < 1) {
        throw ValidationError("the genus-one zero-pole family needs n >= 1, "
                              "got " + std::to_string(param));
      }
      std::vector<int> orders{param, 1};
      orders.insert(orders.end(), param + 1, -1);
      return Stratum::quadratic(std::move(orders));
    }
    case AsympFamily::Hyp1:
    case AsympFamily::Hyp2:
    case AsympFamily::Hyp3: {
      int fam = family == AsympFamily::Hyp1 ? 1
                : family == AsympFamily::Hyp2 ? 2 : 3;
      int g = 0, k = 0;
      if (vary == 'g') {
        g = param;
        k = (fam == 3) ? -1 : 0;
      } else if (vary == 'k') {
        k = param;
        g = k + ((fam == 2) ? 1 : 2);
      } else {
        throw ValidationError(std::string("hyperelliptic families vary in "
                                          "'g' or 'k', got '") + vary + "'");
      }
      return family_data(fam, g, k).induced;
    }
  }
  throw ValidationError("unknown asymptotic family");
}

/// The m-th exponent (1-based, descending order) of the chosen side of the
/// family member at the given parameter.
inline Rational asymptotic_exponent(AsympFamily family, Side side, int m,
                                    int param, char vary = 'g') {
  ExponentSpectrum sp;
  switch (family) {
    case AsympFamily::GenusOnePoles:
    case AsympFamily::GenusOneZeroPoles:
      sp = nonvarying_spectrum(asymptotic_stratum(family, param, vary));
      break;
    case AsympFamily::Hyp1:
    case AsympFamily::Hyp2:
    case AsympFamily::Hyp3: {
      int fam = family == AsympFamily::Hyp1 ? 1
                : family == AsympFamily::Hyp2 ? 2 : 3;
      int g = 0, k = 0;
      if (vary == 'g') {
        g = param;
        k = (fam == 3) ? -1 : 0;
      } else if (vary == 'k') {
        k = param;
        g = k + ((fam == 2) ? 1 : 2);
      } else {
        throw ValidationError(std::string("hyperelliptic families vary in "
                                          "'g' or 'k', got '") + vary + "'");
      }
      FamilyData fd = family_data(fam, g, k);
      sp.w_plus = hyp_inv_spectrum(fd.profile);
      sp.w_minus = hyp_anti_spectrum(fd.profile);
      break;
    }
  }
  const std::vector<Rational>& w = (side == Side::Plus) ? sp.w_plus
                                                        : sp.w_minus;
  if (m < 1 || m > static_cast<int>(w.size())) {
    throw ValidationError("exponent index " + std::to_string(m) +
                          " is outside 1.." + std::to_string(w.size()));
  }
  return w[m - 1];
}

}  // namespace strata
