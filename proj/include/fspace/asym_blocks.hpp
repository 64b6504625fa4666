#pragma once

#include "fspace/poset.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace fspace {

/// Index of a member of the asymmetric family; `n()` points per level.
struct BlockSpec {
  std::size_t k = 0;

  std::size_t n() const { return k + 4; }
  std::size_t total_points() const { return 2 * n(); }
};

/**
 * The two-level asymmetric minimal space F_k on 2k + 8 points.
 *
 * Each level holds points "a", "b", "t3", ..., "tn" (n = k + 4), suffixed with
 * "/bot" or "/top"; bottom is level 1. Covers:
 *   a/bot-a/top, a/bot-tn/top, tn/bot-a/top,
 *   b/bot-tn/top, b/bot-t(n-1)/top and the mirror pair from b/top,
 *   ti/bot-tj/top whenever i + j >= n + 1.
 * On each level a and b have Hasse degree 2 and ti has degree i.
 */
Poset build_F(std::size_t k);

struct FamilyCheck {
  std::size_t k = 0;
  std::size_t points = 0;
  bool point_count_ok = false; ///< 2k + 8, and distinct from every other k
  bool minimal = false;
  bool connected = false;
  std::size_t aut_order = 0;
  bool asymmetric = false;

  bool passed() const { return point_count_ok && minimal && connected && asymmetric; }
};

/// Checks F_0 .. F_{k_max}: minimality, connectedness, trivial automorphism
/// group and pairwise distinct cardinalities.
std::vector<FamilyCheck> family_checks(std::size_t k_max);

/// Connectedness of the underlying undirected Hasse diagram.
bool is_connected(const Poset &p);

} // namespace fspace
