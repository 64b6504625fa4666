#pragma once

#include "fspace/group.hpp"
#include "fspace/poset.hpp"

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace fspace {

/// Named blocks plus directed block-level connections (lower, upper).
struct BlockPlan {
  std::map<std::string, Poset> blocks;
  std::set<std::pair<std::string, std::string>> connections;
};

/// Level-1 points of a block.
std::vector<std::size_t> first_level(const Poset &b);
/// Points at the block's maximal level.
std::vector<std::size_t> last_level(const Poset &b);

/**
 * Replaces point `x` of `space` by the block `block`. Former lower covers of
 * x are joined below every first-level point of the block, former upper
 * covers above every last-level point. Block points are renamed
 * "<x>/<point>"; the result must not collide with the rest of `space`.
 */
Poset block_replace(const Poset &space, std::string_view x, const Poset &block);

/// Disjoint union of the blocks, points renamed "<block>/<point>", with a
/// complete join from the last level of L to the first level of U for every
/// connection (L, U). Blocks are laid out in map order.
Poset assemble(const BlockPlan &plan);

enum class BlockRole { vertex, edge, start, end };

struct BlockOrigin {
  std::string block;
  BlockRole role = BlockRole::vertex;
  std::size_t element = 0; ///< g for vertex blocks; the source g of edge (g, s_k g) otherwise
  std::size_t color = 0;   ///< k (1-based) for edge-related blocks, 0 for vertex blocks
  std::size_t family = 0;  ///< index i of the F_i used for the block
  std::string local;       ///< point name inside the F_i
};

struct RealizationSpace {
  Poset poset;
  std::vector<BlockOrigin> provenance; ///< indexed like poset.points()
  std::size_t group_order = 0;
  std::size_t generator_count = 0;

  /// Number of blocks per F-family index.
  std::map<std::size_t, std::size_t> inventory() const;
};

/// Block name used for a block of X(G,S), e.g. "edge(x,1)/F1".
std::string realization_block_name(const FiniteGroup &g, BlockRole role, std::size_t element, std::size_t color);

/// Predicted |X(G,S)| = 8|G| + |G| * sum_{k=1..n} (6k + 6n + 24).
std::size_t realization_size(std::size_t group_order, std::size_t generator_count);

/**
 * X(G,S): one F_0 per element; per colored edge (g, s_k g) an F_k edge block,
 * an F_{n+k} block joined above the F_0 of g and the edge block, and an
 * F_{2n+k} block joined above the F_0 of s_k g and the edge block.
 * Requires at least one generator.
 */
RealizationSpace build_realization(const FiniteGroup &g);

const char *to_string(BlockRole role);

} // namespace fspace
