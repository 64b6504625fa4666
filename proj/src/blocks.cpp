#include "fspace/blocks.hpp"

#include "dag.hpp"
#include "fspace/asym_blocks.hpp"

#include <stdexcept>

namespace fspace {

std::vector<std::size_t> first_level(const Poset &b) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < b.size(); ++i)
    if (b.level(i) == 1)
      out.push_back(i);
  return out;
}

std::vector<std::size_t> last_level(const Poset &b) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < b.size(); ++i)
    if (b.level(i) == b.height())
      out.push_back(i);
  return out;
}

Poset block_replace(const Poset &space, std::string_view x, const Poset &block) {
  const auto removed = space.index_of(x);
  if (block.empty())
    throw std::invalid_argument("empty block");

  const std::string prefix = std::string(x) + "/";
  std::vector<PointId> points;
  points.reserve(space.size() - 1 + block.size());
  for (std::size_t i = 0; i < space.size(); ++i) {
    if (i == removed)
      for (const auto &p : block.points())
        points.push_back(prefix + p);
    else
      points.push_back(space.point(i));
  }

  std::vector<std::pair<PointId, PointId>> covers;
  for (auto [a, b] : space.covers())
    if (a != removed && b != removed)
      covers.emplace_back(space.point(a), space.point(b));
  for (auto [a, b] : block.covers())
    covers.emplace_back(prefix + block.point(a), prefix + block.point(b));
  for (auto y : space.lower_covers(removed))
    for (auto b : first_level(block))
      covers.emplace_back(space.point(y), prefix + block.point(b));
  for (auto z : space.upper_covers(removed))
    for (auto t : last_level(block))
      covers.emplace_back(prefix + block.point(t), space.point(z));
  return Poset::from_covers(std::move(points), covers);
}

Poset assemble(const BlockPlan &plan) {
  std::map<std::string, std::size_t> block_index;
  for (const auto &[name, block] : plan.blocks)
    block_index.emplace(name, block_index.size());

  std::vector<detail::Edge> block_edges;
  for (const auto &[lower, upper] : plan.connections) {
    auto l = block_index.find(lower);
    auto u = block_index.find(upper);
    if (l == block_index.end() || u == block_index.end())
      throw std::invalid_argument("connection names an unknown block: (" + lower + ", " + upper + ")");
    if (l->second == u->second)
      throw std::invalid_argument("cyclic connections: block " + lower + " is connected to itself");
    block_edges.emplace_back(l->second, u->second);
  }
  if (!detail::topological_order(block_index.size(), block_edges))
    throw std::invalid_argument("cyclic connections between blocks");

  std::vector<PointId> points;
  std::map<std::string, std::size_t> offset;
  for (const auto &[name, block] : plan.blocks) {
    offset.emplace(name, points.size());
    for (const auto &p : block.points())
      points.push_back(name + "/" + p);
  }

  std::vector<IndexPair> relations;
  for (const auto &[name, block] : plan.blocks) {
    const auto base = offset.at(name);
    for (auto [a, b] : block.covers())
      relations.emplace_back(base + a, base + b);
  }
  for (const auto &[lower, upper] : plan.connections) {
    const auto &lb = plan.blocks.at(lower);
    const auto &ub = plan.blocks.at(upper);
    const auto lo = offset.at(lower), uo = offset.at(upper);
    for (auto t : last_level(lb))
      for (auto b : first_level(ub))
        relations.emplace_back(lo + t, uo + b);
  }
  return Poset::from_index_relations(std::move(points), relations);
}

const char *to_string(BlockRole role) {
  switch (role) {
  case BlockRole::vertex:
    return "vertex";
  case BlockRole::edge:
    return "edge";
  case BlockRole::start:
    return "start";
  case BlockRole::end:
    return "end";
  }
  return "?";
}

std::string realization_block_name(const FiniteGroup &g, BlockRole role, std::size_t element, std::size_t color) {
  const auto n = g.generators().size();
  const auto family = role == BlockRole::vertex ? 0 : role == BlockRole::edge ? color : role == BlockRole::start ? n + color : 2 * n + color;
  const auto suffix = ")/F" + std::to_string(family);
  if (role == BlockRole::vertex)
    return std::string("vertex(") + g.name(element) + suffix;
  return std::string(to_string(role)) + "(" + g.name(element) + "," + std::to_string(color) + suffix;
}

std::size_t realization_size(std::size_t group_order, std::size_t generator_count) {
  const auto n = generator_count;
  std::size_t per_element = 8;
  for (std::size_t k = 1; k <= n; ++k)
    per_element += 6 * k + 6 * n + 24;
  return group_order * per_element;
}

std::map<std::size_t, std::size_t> RealizationSpace::inventory() const {
  std::map<std::size_t, std::size_t> counts;
  std::set<std::string> seen;
  for (const auto &origin : provenance)
    if (seen.insert(origin.block).second)
      ++counts[origin.family];
  return counts;
}

RealizationSpace build_realization(const FiniteGroup &g) {
  const auto n = g.generators().size();
  if (n == 0)
    throw std::invalid_argument("X(G,S) needs at least one generator");

  BlockPlan plan;
  std::map<std::string, BlockOrigin> origins;
  std::map<std::size_t, Poset> families;
  auto add_block = [&](BlockRole role, std::size_t element, std::size_t color, std::size_t family) {
    auto name = realization_block_name(g, role, element, color);
    auto [it, fresh] = families.try_emplace(family);
    if (fresh)
      it->second = build_F(family);
    plan.blocks.emplace(name, it->second);
    origins.emplace(name, BlockOrigin{name, role, element, color, family, {}});
    return name;
  };

  std::vector<std::string> vertex_block(g.order());
  for (std::size_t x = 0; x < g.order(); ++x)
    vertex_block[x] = add_block(BlockRole::vertex, x, 0, 0);

  for (std::size_t k = 1; k <= n; ++k) {
    for (std::size_t x = 0; x < g.order(); ++x) {
      const auto target = g.multiply(g.generators()[k - 1], x);
      auto edge = add_block(BlockRole::edge, x, k, k);
      auto start = add_block(BlockRole::start, x, k, n + k);
      auto end = add_block(BlockRole::end, x, k, 2 * n + k);
      plan.connections.emplace(edge, start);
      plan.connections.emplace(vertex_block[x], start);
      plan.connections.emplace(edge, end);
      plan.connections.emplace(vertex_block[target], end);
    }
  }

  RealizationSpace space;
  space.poset = assemble(plan);
  space.group_order = g.order();
  space.generator_count = n;
  space.provenance.reserve(space.poset.size());
  for (const auto &[name, block] : plan.blocks) {
    for (const auto &p : block.points()) {
      auto origin = origins.at(name);
      origin.local = p;
      space.provenance.push_back(std::move(origin));
    }
  }
  for (std::size_t i = 0; i < space.poset.size(); ++i)
    if (space.poset.point(i) != space.provenance[i].block + "/" + space.provenance[i].local)
      throw std::logic_error("provenance out of step with assembled points");
  return space;
}

} // namespace fspace
