#pragma once

#include "fspace/digraph.hpp"
#include "fspace/group.hpp"
#include "fspace/poset.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace fspace {

/// Automorphism group as a generating set plus its order.
struct AutGroup {
  std::vector<Permutation> generators; ///< sorted by image tuple
  std::uint64_t order = 1;
};

/// Stable vertex classes of color refinement.
struct Refinement {
  std::vector<std::size_t> vertex_class;
  std::size_t class_count = 0;
  std::uint64_t trace = 0; ///< isomorphism-invariant fingerprint of the run

  bool discrete() const { return class_count == vertex_class.size(); }
};

/// One edge per covering pair, color 1, directed low-to-high.
ColoredDigraph hasse_digraph(const Poset &p);

/// Initial coloring (level, in-degree, out-degree) for a Hasse digraph.
std::vector<std::size_t> hasse_seed(const Poset &p);

/**
 * Coarsest equitable refinement of `seed` (all-equal when empty). Two
 * vertices end in the same class iff refinement cannot tell them apart by the
 * multiset of (direction, edge colors, neighbor class) over their
 * neighborhoods. Class numbers are ranks of sorted class signatures, so the
 * numbering is canonical.
 */
Refinement refine(const ColoredDigraph &d, const std::vector<std::size_t> &seed = {});

/**
 * Individualization-refinement search. Vertices are individualized along the
 * leftmost path of the search tree; at each depth the remaining vertices of
 * the target cell are tried unless already in the orbit of the found
 * generators, and the group order is the product of the base-point orbit
 * sizes. Deterministic.
 *
 * Throws std::overflow_error if the order does not fit in 64 bits.
 */
AutGroup automorphisms(const ColoredDigraph &d, const std::vector<std::size_t> &seed = {});

/// automorphisms(hasse_digraph(p), hasse_seed(p)).
AutGroup hasse_automorphisms(const Poset &p);

inline constexpr std::size_t kOracleLimit = 10;

/// Enumerates all |V|! bijections. Throws std::length_error("oracle limit")
/// above kOracleLimit vertices.
AutGroup brute_force_automorphisms(const ColoredDigraph &d);

/// A bijection a -> b preserving edges, colors and seed colors, or nullopt.
std::optional<Permutation> find_isomorphism(const ColoredDigraph &a, const std::vector<std::size_t> &seed_a,
                                            const ColoredDigraph &b, const std::vector<std::size_t> &seed_b);

/// True iff `p` maps the edge-triple set of `d` onto itself.
bool is_automorphism(const ColoredDigraph &d, const Permutation &p);

/// Size of the permutation group generated by `gens` on `degree` points,
/// by full enumeration. Test helper; intended for small groups.
std::uint64_t closure_order(const std::vector<Permutation> &gens, std::size_t degree);

} // namespace fspace
