#include "fspace/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <stdexcept>

namespace fspace {

namespace {

Permutation compose(const Permutation &a, const Permutation &b) {
  Permutation out(b.size());
  for (std::size_t i = 0; i < b.size(); ++i)
    out[i] = a[b[i]];
  return out;
}

bool is_bijection(const Permutation &p) {
  std::vector<char> hit(p.size(), 0);
  for (auto x : p) {
    if (x >= p.size() || hit[x])
      return false;
    hit[x] = 1;
  }
  return true;
}

bool is_identity(const Permutation &p) {
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] != i)
      return false;
  return true;
}

FiniteGroup trivial_group() { return FiniteGroup({"e"}, {{0}}, {}); }

} // namespace

FiniteGroup::FiniteGroup(std::vector<std::string> elements, std::vector<std::vector<std::size_t>> table,
                         std::vector<std::size_t> generators)
    : elements_(std::move(elements)), table_(std::move(table)), generators_(std::move(generators)) {
  const auto n = elements_.size();
  if (n == 0)
    throw std::invalid_argument("a group needs at least one element");
  if (table_.size() != n)
    throw std::invalid_argument("multiplication table has wrong number of rows");
  for (const auto &row : table_) {
    if (row.size() != n)
      throw std::invalid_argument("multiplication table is not square");
    for (auto x : row)
      if (x >= n)
        throw std::invalid_argument("multiplication table entry out of range");
  }

  // every row and column is a permutation
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<char> row_hit(n, 0), col_hit(n, 0);
    for (std::size_t j = 0; j < n; ++j) {
      if (row_hit[table_[i][j]]++ || col_hit[table_[j][i]]++)
        throw std::invalid_argument("multiplication table is not a Latin square (no inverses)");
    }
  }

  bool found_identity = false;
  for (std::size_t i = 0; i < n && !found_identity; ++i) {
    bool ok = true;
    for (std::size_t j = 0; j < n && ok; ++j)
      ok = table_[i][j] == j && table_[j][i] == j;
    if (ok) {
      identity_ = i;
      found_identity = true;
    }
  }
  if (!found_identity)
    throw std::invalid_argument("multiplication table has no identity element");

  auto assoc = [&](std::size_t a, std::size_t b, std::size_t c) {
    return table_[table_[a][b]][c] == table_[a][table_[b][c]];
  };
  if (n <= 64) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c)
          if (!assoc(a, b, c))
            throw std::invalid_argument("multiplication table is not associative");
  } else {
    std::mt19937_64 rng(0x5eed);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (int s = 0; s < 100000; ++s)
      if (!assoc(pick(rng), pick(rng), pick(rng)))
        throw std::invalid_argument("multiplication table is not associative");
  }

  inverse_.assign(n, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (table_[a][b] == identity_)
        inverse_[a] = b;

  std::vector<char> seen_gen(n, 0);
  for (auto g : generators_) {
    if (g >= n)
      throw std::invalid_argument("generator index out of range");
    if (g == identity_)
      throw std::invalid_argument("the identity cannot be a generator");
    if (seen_gen[g]++)
      throw std::invalid_argument("duplicate generator " + elements_[g]);
  }

  std::vector<char> reached(n, 0);
  std::vector<std::size_t> queue{identity_};
  reached[identity_] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head)
    for (auto s : generators_) {
      auto next = table_[s][queue[head]];
      if (!reached[next]) {
        reached[next] = 1;
        queue.push_back(next);
      }
    }
  if (queue.size() != n)
    throw std::invalid_argument("generators do not generate the group");
}

std::size_t FiniteGroup::element_order(std::size_t a) const {
  std::size_t k = 1;
  for (auto x = a; x != identity_; x = table_[x][a])
    ++k;
  return k;
}

FiniteGroup FiniteGroup::with_generators(std::vector<std::size_t> generators) const {
  return FiniteGroup(elements_, table_, std::move(generators));
}

FiniteGroup group_from_permutations(const std::vector<Permutation> &gens, std::vector<std::string> generator_names,
                                    std::size_t cap) {
  if (gens.empty())
    throw std::invalid_argument("at least one permutation generator is required");
  const auto m = gens.front().size();
  for (const auto &g : gens) {
    if (g.size() != m)
      throw std::invalid_argument("permutation generators act on sets of different sizes");
    if (!is_bijection(g))
      throw std::invalid_argument("generator is not a bijection");
    if (is_identity(g))
      throw std::invalid_argument("the identity cannot be a generator");
  }
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (gens[i] == gens[j])
        throw std::invalid_argument("duplicate permutation generator");
  if (generator_names.empty())
    for (std::size_t k = 0; k < gens.size(); ++k)
      generator_names.push_back("g" + std::to_string(k + 1));
  if (generator_names.size() != gens.size())
    throw std::invalid_argument("one name per generator required");

  Permutation id(m);
  std::iota(id.begin(), id.end(), 0);
  std::vector<Permutation> elements{id};
  std::vector<std::string> names{"e"};
  std::map<Permutation, std::size_t> index{{id, 0}};

  // Layer by layer: iterating generator-outer, previous-layer-inner yields
  // words in shortlex order, so the first word reaching an element is least.
  std::vector<std::size_t> layer{0};
  while (!layer.empty()) {
    std::vector<std::size_t> next;
    for (std::size_t k = 0; k < gens.size(); ++k) {
      for (auto w : layer) {
        auto p = compose(gens[k], elements[w]);
        if (index.contains(p))
          continue;
        if (elements.size() >= cap)
          throw std::runtime_error("group too large (more than " + std::to_string(cap) + " elements)");
        index.emplace(p, elements.size());
        names.push_back(w == 0 ? generator_names[k] : generator_names[k] + "*" + names[w]);
        next.push_back(elements.size());
        elements.push_back(std::move(p));
      }
    }
    layer = std::move(next);
  }

  const auto n = elements.size();
  std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      table[i][j] = index.at(compose(elements[i], elements[j]));

  std::vector<std::size_t> generator_idx;
  for (const auto &g : gens)
    generator_idx.push_back(index.at(g));
  return FiniteGroup(std::move(names), std::move(table), std::move(generator_idx));
}

FiniteGroup cyclic(std::size_t m) {
  if (m == 0)
    throw std::invalid_argument("cyclic group order must be at least 1");
  if (m == 1)
    return trivial_group();
  Permutation x(m);
  for (std::size_t i = 0; i < m; ++i)
    x[i] = (i + 1) % m;
  return group_from_permutations({x}, {"x"});
}

FiniteGroup dihedral(std::size_t order) {
  if (order % 2 != 0 || order < 6)
    throw std::invalid_argument("dihedral group order must be even and at least 6");
  const auto m = order / 2;
  Permutation tau(m), sigma(m);
  for (std::size_t i = 0; i < m; ++i) {
    tau[i] = (i + 1) % m;
    sigma[i] = (m - i) % m;
  }
  return group_from_permutations({tau, sigma}, {"tau", "sigma"});
}

FiniteGroup symmetric(std::size_t m) {
  if (m == 0)
    throw std::invalid_argument("symmetric group degree must be at least 1");
  if (m == 1)
    return trivial_group();
  Permutation swap(m);
  std::iota(swap.begin(), swap.end(), 0);
  std::swap(swap[0], swap[1]);
  if (m == 2)
    return group_from_permutations({swap}, {"s"});
  Permutation cycle(m);
  for (std::size_t i = 0; i < m; ++i)
    cycle[i] = (i + 1) % m;
  return group_from_permutations({swap, cycle}, {"s", "c"});
}

FiniteGroup direct_product(const FiniteGroup &g, const FiniteGroup &h) {
  const auto ng = g.order(), nh = h.order();
  auto pair_index = [nh](std::size_t a, std::size_t b) { return a * nh + b; };
  std::vector<std::string> names;
  names.reserve(ng * nh);
  for (std::size_t a = 0; a < ng; ++a)
    for (std::size_t b = 0; b < nh; ++b)
      names.push_back("(" + g.name(a) + "," + h.name(b) + ")");
  std::vector<std::vector<std::size_t>> table(ng * nh, std::vector<std::size_t>(ng * nh));
  for (std::size_t a1 = 0; a1 < ng; ++a1)
    for (std::size_t b1 = 0; b1 < nh; ++b1)
      for (std::size_t a2 = 0; a2 < ng; ++a2)
        for (std::size_t b2 = 0; b2 < nh; ++b2)
          table[pair_index(a1, b1)][pair_index(a2, b2)] = pair_index(g.multiply(a1, a2), h.multiply(b1, b2));
  std::vector<std::size_t> gens;
  for (auto s : g.generators())
    gens.push_back(pair_index(s, h.identity()));
  for (auto s : h.generators())
    gens.push_back(pair_index(g.identity(), s));
  return FiniteGroup(std::move(names), std::move(table), std::move(gens));
}

ColoredDigraph cayley_graph(const FiniteGroup &g) {
  std::vector<ColoredEdge> edges;
  edges.reserve(g.order() * g.generators().size());
  for (std::size_t x = 0; x < g.order(); ++x)
    for (std::size_t k = 0; k < g.generators().size(); ++k)
      edges.push_back({x, g.multiply(g.generators()[k], x), static_cast<int>(k + 1)});
  return ColoredDigraph(g.elements(), std::move(edges));
}

Permutation right_translation(const FiniteGroup &g, std::size_t h) {
  if (h >= g.order())
    throw std::out_of_range("no such group element");
  Permutation p(g.order());
  for (std::size_t x = 0; x < g.order(); ++x)
    p[x] = g.multiply(x, h);
  return p;
}

} // namespace fspace
