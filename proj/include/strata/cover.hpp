#pragma once

#include <string>
#include <vector>

#include "strata/error.hpp"
#include "strata/stratum.hpp"

namespace strata {

/// The canonical (orientation) double cover of a quadratic signature: each
/// even order d splits into two zeros of order d/2, each odd order d lifts
/// to a single zero of order d+1 (so poles become regular marked points).
struct CoverData {
  Stratum cover;           ///< abelian signature of the cover, marked points kept
  std::vector<int> orders; ///< the cover orders, in construction order
  std::vector<int> k;      ///< k_j = floor((d_j+1)/2) per base singularity
  int g = 0;               ///< genus of the base surface
  int g_eff = 0;           ///< effective genus g - 1 + (#odd)/2
  int odd_count = 0;       ///< number of odd base orders

  /// Number of regular marked points on the cover (order-0 entries).
  int marked_points() const {
    int n = 0;
    for (int m : orders)
      if (m == 0) ++n;
    return n;
  }

  /// Genus of the double cover itself: g + g_eff.
  int cover_genus() const { return g + g_eff; }
};

/// Builds the canonical double cover data for a quadratic signature.  The
/// construction needs at least one odd order or positive genus, i.e.
/// effective genus >= 1; abelian input is rejected.
inline CoverData cover_data(const Stratum& s) {
  if (s.kind() != DiffKind::Quadratic) {
    throw ValidationError("the canonical double cover is defined for "
                          "quadratic signatures, got " + s.str());
  }
  int g = s.genus();
  int odd = s.odd_count();
  int g_eff = g - 1 + odd / 2;
  if (g_eff < 1) {
    throw ValidationError("double cover of " + s.str() +
                          " has effective genus " + std::to_string(g_eff) +
                          "; the construction requires at least 1");
  }
  std::vector<int> cover_orders;
  cover_orders.reserve(2 * s.orders().size());
  for (int d : s.orders()) {
    if (d % 2 == 0) {
      cover_orders.push_back(d / 2);
      cover_orders.push_back(d / 2);
    } else {
      cover_orders.push_back(d + 1);
    }
  }
  Stratum cover = Stratum::abelian(cover_orders);
  return CoverData{std::move(cover), std::move(cover_orders), s.k_values(),
                   g, g_eff, odd};
}

}  // namespace strata
