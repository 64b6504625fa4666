#pragma once

#include "fspace/digraph.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace fspace {

/// A permutation of {0..m-1} in one-line image notation: p[i] is the image of i.
using Permutation = std::vector<std::size_t>;

inline constexpr std::size_t kDefaultGroupCap = 10000;

/**
 * A finite group given by its full multiplication table together with a
 * distinguished list of generators S.
 *
 * `table()[i][j]` is the index of elements[i] * elements[j]. The constructor
 * checks the group axioms (associativity exhaustively up to 64 elements, on a
 * deterministic sample above), that S generates, and that S holds no identity
 * and no repeats.
 */
class FiniteGroup {
public:
  FiniteGroup(std::vector<std::string> elements, std::vector<std::vector<std::size_t>> table,
              std::vector<std::size_t> generators);

  std::size_t order() const { return elements_.size(); }
  const std::vector<std::string> &elements() const { return elements_; }
  const std::string &name(std::size_t g) const { return elements_.at(g); }
  const std::vector<std::vector<std::size_t>> &table() const { return table_; }
  std::size_t identity() const { return identity_; }
  const std::vector<std::size_t> &generators() const { return generators_; }

  std::size_t multiply(std::size_t a, std::size_t b) const { return table_[a][b]; }
  std::size_t inverse(std::size_t a) const { return inverse_[a]; }
  std::size_t element_order(std::size_t a) const;

  /// Same table and elements with a different generating list.
  FiniteGroup with_generators(std::vector<std::size_t> generators) const;

private:
  std::vector<std::string> elements_;
  std::vector<std::vector<std::size_t>> table_;
  std::size_t identity_ = 0;
  std::vector<std::size_t> inverse_;
  std::vector<std::size_t> generators_;
};

/**
 * The permutation group generated by `gens`, enumerated by breadth-first
 * closure. The product a*b is the composition "b first, then a". Elements are
 * named by their shortlex-least word in the generators ("e" for the
 * identity), words written as left-to-right products joined by '*'.
 */
FiniteGroup group_from_permutations(const std::vector<Permutation> &gens,
                                    std::vector<std::string> generator_names = {},
                                    std::size_t cap = kDefaultGroupCap);

FiniteGroup cyclic(std::size_t m);
/// Dihedral group of order `order` = 2m (m >= 3), S = {tau, sigma}.
FiniteGroup dihedral(std::size_t order);
FiniteGroup symmetric(std::size_t m);
FiniteGroup direct_product(const FiniteGroup &g, const FiniteGroup &h);

/// Colored Cayley graph: an edge (g, s_k * g) of color k for every element g
/// and every generator s_k (1-based colors).
ColoredDigraph cayley_graph(const FiniteGroup &g);

/// g -> g * h as a permutation of element indices.
Permutation right_translation(const FiniteGroup &g, std::size_t h);

} // namespace fspace
