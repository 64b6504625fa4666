#pragma once

#include "fspace/digraph.hpp"
#include "fspace/group.hpp"
#include "fspace/poset.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace fspace {

/// {"points": [...], "covers": [[x, y], ...]}
std::string poset_to_json(const Poset &p);
Poset poset_from_json(std::string_view text);

/// {"vertices": [...], "edges": [[source, target, color], ...]} with vertex names.
std::string digraph_to_json(const ColoredDigraph &d);
ColoredDigraph digraph_from_json(std::string_view text);

/// A list of permutations in one-line image notation, e.g. [[1,2,0],[1,0,2]].
std::vector<Permutation> permutations_from_json(std::string_view text);

/// Graphviz digraph; nodes on the same Hasse level share a rank, edges drawn
/// bottom to top.
std::string poset_to_dot(const Poset &p, std::string_view name = "poset");
std::string digraph_to_dot(const ColoredDigraph &d, std::string_view name = "cayley");

/// Cycle notation of a vertex permutation using vertex names, "()" for the identity.
std::string cycle_notation(const Permutation &p, const std::vector<std::string> &names);

} // namespace fspace
