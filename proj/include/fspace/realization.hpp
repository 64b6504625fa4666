#pragma once

#include "fspace/automorphism.hpp"
#include "fspace/blocks.hpp"
#include "fspace/group.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace fspace {

inline constexpr std::size_t kRealizationBudget = 2000;

/// Outcome of checking Aut(X(G,S)) against G.
struct RealizationReport {
  std::size_t group_order = 0;
  std::size_t generator_count = 0;
  std::size_t points = 0;
  bool minimal = false;
  std::size_t induced_automorphisms = 0; ///< right translations that verified
  bool induced_distinct = false;
  std::uint64_t engine_order = 0;
  bool blocks_preserved = false; ///< every engine generator maps blocks to same-type blocks

  bool passed() const {
    return minimal && induced_automorphisms == group_order && induced_distinct && engine_order == group_order;
  }
  /// Multi-line report; the last line reads "order(Aut) = N = |G| : PASS" (or != / FAIL).
  std::string to_text() const;
};

/// Point permutation of X(G,S) induced by the right translation g -> g*h:
/// every block moves to the block of the same role and color over the
/// translated element, identically on block interiors.
Permutation induced_translation(const FiniteGroup &g, const RealizationSpace &space, std::size_t h);

/// True iff `p` maps every block's point set onto a block of the same F-type.
bool preserves_blocks(const RealizationSpace &space, const Permutation &p);

/// Builds X(G,S) and checks minimality, the |G| induced automorphisms and the
/// engine's order. Throws std::length_error when |X| exceeds `budget`.
RealizationReport verify_realization(const FiniteGroup &g, std::size_t budget = kRealizationBudget);

} // namespace fspace
