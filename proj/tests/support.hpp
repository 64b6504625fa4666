#pragma once

// Test-only helpers: random structures, fixtures and independent oracles.

#include "fspace/digraph.hpp"
#include "fspace/poset.hpp"

#include <algorithm>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace fspace::testing {

/// Random poset on `n` points: each pair i < j related with probability p.
inline Poset random_poset(std::mt19937 &rng, std::size_t n, double p) {
  std::vector<PointId> points;
  for (std::size_t i = 0; i < n; ++i)
    points.push_back("p" + std::to_string(i));
  std::bernoulli_distribution coin(p);
  std::vector<IndexPair> rel;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (coin(rng))
        rel.emplace_back(i, j);
  // shuffle the point order so index order is not a linear extension
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i)
    perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<PointId> shuffled(n);
  for (std::size_t i = 0; i < n; ++i)
    shuffled[perm[i]] = points[i];
  for (auto &[a, b] : rel) {
    a = perm[a];
    b = perm[b];
  }
  return Poset::from_index_relations(std::move(shuffled), rel);
}

/// Random colored digraph on up to `max_n` vertices with colors in 1..colors.
inline ColoredDigraph random_digraph(std::mt19937 &rng, std::size_t max_n, int colors) {
  std::uniform_int_distribution<std::size_t> size(1, max_n);
  std::uniform_real_distribution<double> density(0.0, 0.6);
  std::uniform_int_distribution<int> color(1, colors);
  const auto n = size(rng);
  std::bernoulli_distribution coin(density(rng));
  std::vector<std::string> vertices;
  for (std::size_t i = 0; i < n; ++i)
    vertices.push_back("v" + std::to_string(i));
  std::vector<ColoredEdge> edges;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v)
      if (u != v && coin(rng))
        edges.push_back({u, v, color(rng)});
  return ColoredDigraph(std::move(vertices), std::move(edges));
}

/// Strict order as a dense matrix, by Floyd-Warshall over the covers.
inline std::vector<std::vector<bool>> order_closure(const Poset &p) {
  const auto n = p.size();
  std::vector<std::vector<bool>> lt(n, std::vector<bool>(n, false));
  for (auto [x, y] : p.covers())
    lt[x][y] = true;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (lt[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (lt[k][j])
            lt[i][j] = true;
  return lt;
}

/// The F_3 drawing transcribed point by point: names are the drawing coordinates,
/// y = -1 is the lower row, y = 1 the upper row.
inline Poset f3_drawing_fixture() {
  std::vector<PointId> points;
  for (int y : {-1, 1})
    for (int x = -4; x <= 8; x += 2)
      points.push_back("(" + std::to_string(x) + "," + std::to_string(y) + ")");
  // each segment as drawn: (x_top, x_bottom)
  const std::vector<std::pair<int, int>> segments = {
      {-4, -4}, {-4, -2}, {-2, -4},                                                 //
      {8, -2},  {8, 0},   {-2, 8},  {0, 8},                                         //
      {-2, -2}, {-2, 0},  {0, -2},  {-2, 2}, {2, -2}, {-2, 4}, {4, -2}, {-2, 6}, {6, -2}, //
      {0, 0},   {0, 2},   {2, 0},   {0, 4},  {4, 0},  {0, 6},  {6, 0},              //
      {2, 2},   {2, 4},   {4, 2},   {2, 6},  {6, 2},                                //
      {4, 4},
  };
  std::vector<std::pair<PointId, PointId>> covers;
  for (auto [top, bottom] : segments)
    covers.emplace_back("(" + std::to_string(bottom) + ",-1)", "(" + std::to_string(top) + ",1)");
  return Poset::from_covers(std::move(points), covers);
}

inline constexpr std::size_t kF3DrawingSegments = 29;

} // namespace fspace::testing
