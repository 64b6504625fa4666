#include "fspace/poset.hpp"

#include "dag.hpp"

#include <algorithm>
#include <stdexcept>

namespace fspace {

namespace {

std::unordered_map<PointId, std::size_t> index_points(const std::vector<PointId> &points) {
  std::unordered_map<PointId, std::size_t> index;
  index.reserve(points.size());
  for (std::size_t i = 0; i < points.size(); ++i)
    if (!index.emplace(points[i], i).second)
      throw std::invalid_argument("duplicate point: " + points[i]);
  return index;
}

std::vector<IndexPair> resolve(const std::unordered_map<PointId, std::size_t> &index,
                               const std::vector<std::pair<PointId, PointId>> &pairs) {
  std::vector<IndexPair> out;
  out.reserve(pairs.size());
  for (const auto &[x, y] : pairs) {
    auto ix = index.find(x);
    auto iy = index.find(y);
    if (ix == index.end())
      throw std::invalid_argument("relation mentions unknown point: " + x);
    if (iy == index.end())
      throw std::invalid_argument("relation mentions unknown point: " + y);
    out.emplace_back(ix->second, iy->second);
  }
  return out;
}

} // namespace

Poset::Poset(std::vector<PointId> points, std::vector<IndexPair> covers)
    : points_(std::move(points)), covers_(std::move(covers)) {
  index_ = index_points(points_);
  const auto n = points_.size();
  up_.assign(n, {});
  down_.assign(n, {});
  for (auto [x, y] : covers_) {
    up_[x].push_back(y);
    down_[y].push_back(x);
  }
  for (auto &v : up_)
    std::sort(v.begin(), v.end());
  for (auto &v : down_)
    std::sort(v.begin(), v.end());

  auto order = detail::topological_order(n, covers_);
  if (!order)
    throw std::invalid_argument("covering relation contains a cycle");
  level_.assign(n, 1);
  for (auto x : *order)
    for (auto y : up_[x])
      level_[y] = std::max(level_[y], level_[x] + 1);
  height_ = n == 0 ? 0 : *std::max_element(level_.begin(), level_.end());
}

Poset Poset::from_covers(std::vector<PointId> points,
                         const std::vector<std::pair<PointId, PointId>> &covers) {
  auto index = index_points(points);
  auto pairs = resolve(index, covers);
  for (auto [x, y] : pairs)
    if (x == y)
      throw std::invalid_argument("self-cover on point " + points[x]);
  std::sort(pairs.begin(), pairs.end());
  if (std::adjacent_find(pairs.begin(), pairs.end()) != pairs.end())
    throw std::invalid_argument("duplicate covering pair");
  auto reduced = detail::transitive_reduction(points.size(), pairs);
  if (!reduced)
    throw std::invalid_argument("covering relation contains a cycle");
  if (reduced->size() != pairs.size()) {
    for (auto e : pairs)
      if (!std::binary_search(reduced->begin(), reduced->end(), e))
        throw std::invalid_argument("not a covering pair: (" + points[e.first] + ", " +
                                    points[e.second] + ")");
  }
  return Poset(std::move(points), std::move(pairs));
}

Poset Poset::from_relations(std::vector<PointId> points,
                            const std::vector<std::pair<PointId, PointId>> &relations) {
  auto index = index_points(points);
  auto pairs = resolve(index, relations);
  return from_index_relations(std::move(points), pairs);
}

Poset Poset::from_index_relations(std::vector<PointId> points, const std::vector<IndexPair> &relations) {
  for (auto [x, y] : relations)
    if (x >= points.size() || y >= points.size())
      throw std::invalid_argument("relation index out of range");
  auto reduced = detail::transitive_reduction(points.size(), relations);
  if (!reduced)
    throw std::invalid_argument("relation is not a strict partial order (cycle or self-loop)");
  return Poset(std::move(points), std::move(*reduced));
}

std::optional<std::size_t> Poset::find(std::string_view id) const {
  auto it = index_.find(PointId(id));
  if (it == index_.end())
    return std::nullopt;
  return it->second;
}

std::size_t Poset::index_of(std::string_view id) const {
  if (auto i = find(id))
    return *i;
  throw std::out_of_range("no such point: " + std::string(id));
}

bool Poset::less(std::size_t x, std::size_t y) const {
  if (x == y || level_.at(x) >= level_.at(y))
    return false;
  std::vector<char> seen(size(), 0);
  std::vector<std::size_t> stack{x};
  while (!stack.empty()) {
    auto u = stack.back();
    stack.pop_back();
    for (auto v : up_[u]) {
      if (v == y)
        return true;
      if (!seen[v] && level_[v] < level_[y]) {
        seen[v] = 1;
        stack.push_back(v);
      }
    }
  }
  return false;
}

std::size_t hasse_degree(const Poset &p, std::string_view id) {
  auto i = p.index_of(id);
  return p.upper_covers(i).size() + p.lower_covers(i).size();
}

BeatReport beat_points(const Poset &p) {
  BeatReport report;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p.upper_covers(i).size() == 1)
      report.up_beats.push_back(p.point(i));
    if (p.lower_covers(i).size() == 1)
      report.down_beats.push_back(p.point(i));
  }
  return report;
}

bool is_minimal(const Poset &p) {
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p.upper_covers(i).size() == 1 || p.lower_covers(i).size() == 1)
      return false;
  return true;
}

Poset remove_point(const Poset &p, std::size_t removed) {
  if (removed >= p.size())
    throw std::out_of_range("no such point index");
  auto renumber = [removed](std::size_t i) { return i < removed ? i : i - 1; };

  std::vector<PointId> points;
  points.reserve(p.size() - 1);
  for (std::size_t i = 0; i < p.size(); ++i)
    if (i != removed)
      points.push_back(p.point(i));

  std::vector<IndexPair> relations;
  for (auto [x, y] : p.covers())
    if (x != removed && y != removed)
      relations.emplace_back(renumber(x), renumber(y));
  // relations that passed through the removed point
  for (auto z : p.lower_covers(removed))
    for (auto y : p.upper_covers(removed))
      relations.emplace_back(renumber(z), renumber(y));
  return Poset::from_index_relations(std::move(points), relations);
}

Poset core(const Poset &p) {
  Poset current = p;
  for (;;) {
    std::optional<std::size_t> beat;
    for (std::size_t i = 0; i < current.size(); ++i) {
      if (current.upper_covers(i).size() == 1 || current.lower_covers(i).size() == 1) {
        beat = i;
        break;
      }
    }
    if (!beat)
      return current;
    current = remove_point(current, *beat);
  }
}

} // namespace fspace
