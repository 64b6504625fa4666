#include "fspace/automorphism.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace fspace {

namespace {

std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
  // splitmix64 finalizer over the running hash
  std::uint64_t z = h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

using ColorSets = std::map<std::vector<int>, std::uint32_t>;

/// Colors per ordered vertex pair, grouped from the edge triples.
std::map<std::pair<std::size_t, std::size_t>, std::vector<int>> pair_colors(const ColoredDigraph &d) {
  std::map<std::pair<std::size_t, std::size_t>, std::vector<int>> out;
  for (const auto &e : d.edges())
    out[{e.source, e.target}].push_back(e.color); // edges are sorted, so colors are too
  return out;
}

void collect_color_sets(const ColoredDigraph &d, ColorSets &sets) {
  for (auto &[pair, colors] : pair_colors(d))
    sets.emplace(colors, 0);
}

void number_color_sets(ColorSets &sets) {
  std::uint32_t id = 0;
  for (auto &[colors, slot] : sets)
    slot = id++;
}

/// Adjacency view used by refinement and the search.
struct Graph {
  struct Adj {
    std::size_t vertex;
    std::uint64_t label; ///< direction bit and color-set id
  };

  std::size_t n = 0;
  std::vector<std::vector<Adj>> adj;
  std::unordered_map<std::uint64_t, std::uint32_t> pair_set; ///< u * n + v -> color-set id
  std::vector<std::uint64_t> seed_raw;

  Graph(const ColoredDigraph &d, const ColorSets &sets, const std::vector<std::size_t> &seed) : n(d.size()) {
    if (!seed.empty() && seed.size() != n)
      throw std::invalid_argument("seed coloring must assign every vertex a color");
    adj.assign(n, {});
    for (auto &[pair, colors] : pair_colors(d)) {
      const auto id = sets.at(colors);
      pair_set.emplace(pair.first * n + pair.second, id);
      adj[pair.first].push_back({pair.second, (std::uint64_t{id} << 1) | 0u});
      adj[pair.second].push_back({pair.first, (std::uint64_t{id} << 1) | 1u});
    }
    seed_raw.assign(n, 0);
    for (std::size_t v = 0; v < n && !seed.empty(); ++v)
      seed_raw[v] = seed[v];
  }
};

struct Node {
  std::vector<std::size_t> colors;
  std::size_t class_count = 0;
  std::uint64_t trace = 0;
};

/// Refines node.colors in place to the coarsest equitable partition.
void refine_node(const Graph &g, Node &node) {
  std::vector<std::vector<std::uint64_t>> sig(g.n);
  std::vector<std::size_t> order(g.n);
  for (;;) {
    for (std::size_t v = 0; v < g.n; ++v) {
      auto &s = sig[v];
      s.clear();
      s.push_back(node.colors[v]);
      for (const auto &a : g.adj[v])
        s.push_back((a.label << 32) | node.colors[a.vertex]);
      std::sort(s.begin() + 1, s.end());
    }
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](auto a, auto b) { return sig[a] < sig[b]; });

    std::vector<std::size_t> next(g.n);
    std::size_t classes = 0;
    for (std::size_t i = 0; i < g.n; ++i) {
      if (i > 0 && sig[order[i]] != sig[order[i - 1]])
        ++classes;
      next[order[i]] = classes;
      if (i == 0 || sig[order[i]] != sig[order[i - 1]]) {
        for (auto x : sig[order[i]])
          node.trace = mix(node.trace, x);
      }
      node.trace = mix(node.trace, 0xc1a55);
    }
    if (g.n > 0)
      ++classes;
    node.colors = std::move(next);
    const bool stable = classes == node.class_count;
    node.class_count = classes;
    if (stable)
      return;
  }
}

Node root_node(const Graph &g) {
  Node node;
  std::vector<std::uint64_t> values = g.seed_raw;
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  node.colors.resize(g.n);
  for (std::size_t v = 0; v < g.n; ++v)
    node.colors[v] = std::lower_bound(values.begin(), values.end(), g.seed_raw[v]) - values.begin();
  node.class_count = values.size();
  node.trace = mix(g.n, values.size());
  for (auto x : values)
    node.trace = mix(node.trace, x);
  // force at least one refinement round even when the seed is already stable
  node.class_count = std::numeric_limits<std::size_t>::max();
  refine_node(g, node);
  return node;
}

Node individualize(const Graph &g, const Node &parent, std::size_t v) {
  Node node;
  node.colors.resize(g.n);
  const auto cell = parent.colors[v];
  for (std::size_t u = 0; u < g.n; ++u) {
    auto c = parent.colors[u];
    node.colors[u] = c < cell ? c : (c == cell ? (u == v ? c + 1 : c) : c + 1);
  }
  node.class_count = parent.class_count + 1;
  node.trace = mix(parent.trace, cell);
  // the split is already counted; run refinement until it stabilizes
  node.class_count = std::numeric_limits<std::size_t>::max();
  refine_node(g, node);
  return node;
}

/// Members of the first non-singleton class, ascending; empty if discrete.
std::vector<std::size_t> target_cell(const Node &node) {
  std::vector<std::size_t> size(node.class_count, 0);
  for (auto c : node.colors)
    ++size[c];
  std::size_t cell = node.class_count;
  for (std::size_t c = 0; c < node.class_count; ++c)
    if (size[c] > 1) {
      cell = c;
      break;
    }
  std::vector<std::size_t> members;
  if (cell == node.class_count)
    return members;
  for (std::size_t v = 0; v < node.colors.size(); ++v)
    if (node.colors[v] == cell)
      members.push_back(v);
  return members;
}

bool preserves(const Graph &a, const Graph &b, const Permutation &phi) {
  if (a.n != b.n || a.pair_set.size() != b.pair_set.size())
    return false;
  for (std::size_t v = 0; v < a.n; ++v)
    if (a.seed_raw[v] != b.seed_raw[phi[v]])
      return false;
  for (const auto &[key, id] : a.pair_set) {
    auto u = key / a.n, v = key % a.n;
    auto it = b.pair_set.find(phi[u] * b.n + phi[v]);
    if (it == b.pair_set.end() || it->second != id)
      return false;
  }
  return true;
}

/// Leftmost path of a search tree: nodes[d] is at depth d, base[d] is the
/// vertex individualized to reach nodes[d + 1].
struct FirstPath {
  std::vector<Node> nodes;
  std::vector<std::size_t> base;
  std::vector<std::size_t> leaf_vertex; ///< class -> vertex at the leaf

  explicit FirstPath(const Graph &g) {
    nodes.push_back(root_node(g));
    for (;;) {
      auto cell = target_cell(nodes.back());
      if (cell.empty())
        break;
      base.push_back(cell.front());
      nodes.push_back(individualize(g, nodes.back(), cell.front()));
    }
    leaf_vertex.resize(g.n);
    for (std::size_t v = 0; v < g.n; ++v)
      leaf_vertex[nodes.back().colors[v]] = v;
  }

  std::size_t depth() const { return base.size(); }
};

/// Searches the subtree of `node` (in graph `to`) for a leaf equivalent to the
/// first-path leaf of graph `from`; returns the induced map from -> to.
std::optional<Permutation> match_leaf(const Graph &from, const FirstPath &path, const Graph &to, const Node &node,
                                      std::size_t depth) {
  if (node.trace != path.nodes[depth].trace || node.class_count != path.nodes[depth].class_count)
    return std::nullopt;
  auto cell = target_cell(node);
  if (cell.empty()) {
    if (depth != path.depth())
      return std::nullopt;
    Permutation phi(from.n);
    for (std::size_t v = 0; v < to.n; ++v)
      phi[path.leaf_vertex[node.colors[v]]] = v;
    if (preserves(from, to, phi))
      return phi;
    return std::nullopt;
  }
  if (depth >= path.depth())
    return std::nullopt;
  for (auto w : cell) {
    auto child = individualize(to, node, w);
    if (auto phi = match_leaf(from, path, to, child, depth + 1))
      return phi;
  }
  return std::nullopt;
}

std::vector<char> orbit_of(std::size_t v, const std::vector<Permutation> &gens, std::size_t n) {
  std::vector<char> in(n, 0);
  std::vector<std::size_t> queue{v};
  in[v] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head)
    for (const auto &g : gens) {
      auto w = g[queue[head]];
      if (!in[w]) {
        in[w] = 1;
        queue.push_back(w);
      }
    }
  return in;
}

ColorSets color_sets_of(const ColoredDigraph &a, const ColoredDigraph *b = nullptr) {
  ColorSets sets;
  collect_color_sets(a, sets);
  if (b)
    collect_color_sets(*b, sets);
  number_color_sets(sets);
  return sets;
}

} // namespace

ColoredDigraph hasse_digraph(const Poset &p) {
  std::vector<ColoredEdge> edges;
  edges.reserve(p.covers().size());
  for (auto [x, y] : p.covers())
    edges.push_back({x, y, 1});
  return ColoredDigraph(p.points(), std::move(edges));
}

std::vector<std::size_t> hasse_seed(const Poset &p) {
  const auto base = p.size() + 1;
  std::vector<std::size_t> seed(p.size());
  for (std::size_t i = 0; i < p.size(); ++i)
    seed[i] = (p.level(i) * base + p.lower_covers(i).size()) * base + p.upper_covers(i).size();
  return seed;
}

Refinement refine(const ColoredDigraph &d, const std::vector<std::size_t> &seed) {
  auto sets = color_sets_of(d);
  Graph g(d, sets, seed);
  auto node = root_node(g);
  return Refinement{std::move(node.colors), node.class_count, node.trace};
}

AutGroup automorphisms(const ColoredDigraph &d, const std::vector<std::size_t> &seed) {
  auto sets = color_sets_of(d);
  Graph g(d, sets, seed);
  FirstPath path(g);

  std::vector<Permutation> gens;
  std::uint64_t order = 1;
  for (std::size_t depth = path.depth(); depth-- > 0;) {
    const auto &node = path.nodes[depth];
    const auto v = path.base[depth];
    // every generator found so far fixes base[0..depth-1]
    auto orbit = orbit_of(v, gens, g.n);
    for (auto w : target_cell(node)) {
      if (orbit[w])
        continue;
      auto child = individualize(g, node, w);
      if (auto phi = match_leaf(g, path, g, child, depth + 1)) {
        gens.push_back(std::move(*phi));
        orbit = orbit_of(v, gens, g.n);
      }
    }
    const auto orbit_size = static_cast<std::uint64_t>(std::count(orbit.begin(), orbit.end(), 1));
    if (order > std::numeric_limits<std::uint64_t>::max() / orbit_size)
      throw std::overflow_error("automorphism group order exceeds 64 bits");
    order *= orbit_size;
  }
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  return AutGroup{std::move(gens), order};
}

AutGroup hasse_automorphisms(const Poset &p) { return automorphisms(hasse_digraph(p), hasse_seed(p)); }

AutGroup brute_force_automorphisms(const ColoredDigraph &d) {
  const auto n = d.size();
  if (n > kOracleLimit)
    throw std::length_error("oracle limit: " + std::to_string(n) + " vertices (max " +
                            std::to_string(kOracleLimit) + ")");
  auto sets = color_sets_of(d);
  std::vector<int> matrix(n * n, -1);
  for (auto &[pair, colors] : pair_colors(d))
    matrix[pair.first * n + pair.second] = static_cast<int>(sets.at(colors));

  std::vector<Permutation> all;
  Permutation p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (std::size_t u = 0; u < n && ok; ++u)
      for (std::size_t v = 0; v < n && ok; ++v)
        ok = matrix[u * n + v] == matrix[p[u] * n + p[v]];
    if (ok)
      all.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));

  // greedy generating set: keep an automorphism only if it is new to the closure
  std::vector<Permutation> gens;
  std::set<Permutation> closure;
  Permutation id(n);
  std::iota(id.begin(), id.end(), 0);
  closure.insert(id);
  for (const auto &a : all) {
    if (closure.contains(a))
      continue;
    gens.push_back(a);
    std::vector<Permutation> queue(closure.begin(), closure.end());
    for (std::size_t head = 0; head < queue.size(); ++head)
      for (const auto &s : gens) {
        Permutation next(n);
        for (std::size_t i = 0; i < n; ++i)
          next[i] = s[queue[head][i]];
        if (closure.insert(next).second)
          queue.push_back(std::move(next));
      }
  }
  return AutGroup{std::move(gens), all.size()};
}

std::optional<Permutation> find_isomorphism(const ColoredDigraph &a, const std::vector<std::size_t> &seed_a,
                                            const ColoredDigraph &b, const std::vector<std::size_t> &seed_b) {
  if (a.size() != b.size() || a.edges().size() != b.edges().size())
    return std::nullopt;
  auto sets = color_sets_of(a, &b);
  Graph ga(a, sets, seed_a);
  Graph gb(b, sets, seed_b);
  FirstPath path(ga);
  return match_leaf(ga, path, gb, root_node(gb), 0);
}

bool is_automorphism(const ColoredDigraph &d, const Permutation &p) {
  if (p.size() != d.size())
    return false;
  std::vector<char> hit(p.size(), 0);
  for (auto x : p) {
    if (x >= p.size() || hit[x])
      return false;
    hit[x] = 1;
  }
  const auto &edges = d.edges();
  for (const auto &e : edges)
    if (!std::binary_search(edges.begin(), edges.end(), ColoredEdge{p[e.source], p[e.target], e.color}))
      return false;
  return true;
}

std::uint64_t closure_order(const std::vector<Permutation> &gens, std::size_t degree) {
  Permutation id(degree);
  std::iota(id.begin(), id.end(), 0);
  std::set<Permutation> seen{id};
  std::vector<Permutation> queue{id};
  for (std::size_t head = 0; head < queue.size(); ++head)
    for (const auto &s : gens) {
      Permutation next(degree);
      for (std::size_t i = 0; i < degree; ++i)
        next[i] = s[queue[head][i]];
      if (seen.insert(next).second)
        queue.push_back(std::move(next));
    }
  return seen.size();
}

std::optional<std::vector<std::size_t>> isomorphic(const Poset &p, const Poset &q) {
  return find_isomorphism(hasse_digraph(p), hasse_seed(p), hasse_digraph(q), hasse_seed(q));
}

} // namespace fspace
