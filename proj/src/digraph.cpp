#include "fspace/digraph.hpp"

#include <algorithm>
#include <stdexcept>

namespace fspace {

ColoredDigraph::ColoredDigraph(std::vector<std::string> vertices, std::vector<ColoredEdge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  for (const auto &e : edges_) {
    if (e.source >= vertices_.size() || e.target >= vertices_.size())
      throw std::invalid_argument("edge endpoint out of range");
    if (e.source == e.target)
      throw std::invalid_argument("self-loop on vertex " + vertices_[e.source]);
    if (e.color <= 0)
      throw std::invalid_argument("edge colors must be positive");
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
    throw std::invalid_argument("duplicate colored edge");
}

ColoredDigraph ColoredDigraph::uncolored() const {
  std::vector<ColoredEdge> edges;
  for (const auto &e : edges_)
    edges.push_back({e.source, e.target, 1});
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return ColoredDigraph(vertices_, std::move(edges));
}

} // namespace fspace
