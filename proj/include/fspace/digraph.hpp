#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace fspace {

struct ColoredEdge {
  std::size_t source;
  std::size_t target;
  int color; ///< positive

  auto operator<=>(const ColoredEdge &) const = default;
};

/// Vertices plus directed edges carrying a positive integer color. Edge
/// triples are unique and loop-free; validated on construction.
class ColoredDigraph {
public:
  ColoredDigraph() = default;
  ColoredDigraph(std::vector<std::string> vertices, std::vector<ColoredEdge> edges);

  std::size_t size() const { return vertices_.size(); }
  const std::vector<std::string> &vertices() const { return vertices_; }
  /// Sorted by (source, target, color).
  const std::vector<ColoredEdge> &edges() const { return edges_; }

  /// Same digraph with every edge recolored to 1 (parallel edges merged).
  ColoredDigraph uncolored() const;

  friend bool operator==(const ColoredDigraph &, const ColoredDigraph &) = default;

private:
  std::vector<std::string> vertices_;
  std::vector<ColoredEdge> edges_;
};

} // namespace fspace
