#include "dag.hpp"

#include <algorithm>

namespace fspace::detail {

std::optional<std::vector<std::size_t>> topological_order(std::size_t n, const std::vector<Edge> &edges) {
  std::vector<std::vector<std::size_t>> out(n);
  std::vector<std::size_t> indeg(n, 0);
  for (auto [u, v] : edges) {
    out[u].push_back(v);
    ++indeg[v];
  }
  std::vector<std::size_t> order;
  order.reserve(n);
  for (std::size_t v = 0; v < n; ++v)
    if (indeg[v] == 0)
      order.push_back(v);
  for (std::size_t head = 0; head < order.size(); ++head)
    for (auto v : out[order[head]])
      if (--indeg[v] == 0)
        order.push_back(v);
  if (order.size() != n)
    return std::nullopt;
  return order;
}

std::optional<std::vector<Edge>> transitive_reduction(std::size_t n, const std::vector<Edge> &edges) {
  for (auto [u, v] : edges)
    if (u == v)
      return std::nullopt;
  auto order = topological_order(n, edges);
  if (!order)
    return std::nullopt;

  std::vector<std::vector<std::size_t>> out(n);
  for (auto [u, v] : edges)
    out[u].push_back(v);
  for (auto &succ : out) {
    std::sort(succ.begin(), succ.end());
    succ.erase(std::unique(succ.begin(), succ.end()), succ.end());
  }

  // reach[u] = strict upper set of u
  BitMatrix reach(n);
  for (auto it = order->rbegin(); it != order->rend(); ++it) {
    auto u = *it;
    for (auto v : out[u]) {
      reach.set(u, v);
      reach.or_row(u, v);
    }
  }

  std::vector<Edge> reduced;
  for (std::size_t u = 0; u < n; ++u) {
    for (auto v : out[u]) {
      bool shortcut = false;
      for (auto w : out[u]) {
        if (w != v && reach.test(w, v)) {
          shortcut = true;
          break;
        }
      }
      if (!shortcut)
        reduced.emplace_back(u, v);
    }
  }
  std::sort(reduced.begin(), reduced.end());
  return reduced;
}

} // namespace fspace::detail
