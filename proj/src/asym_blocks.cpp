#include "fspace/asym_blocks.hpp"

#include "fspace/automorphism.hpp"

#include <set>

namespace fspace {

namespace {

std::string label(std::size_t i) {
  // degree-2 points first, then t3..tn
  if (i == 1)
    return "a";
  if (i == 2)
    return "b";
  return "t" + std::to_string(i);
}

} // namespace

Poset build_F(std::size_t k) {
  const BlockSpec spec{k};
  const auto n = spec.n();

  std::vector<PointId> points;
  for (const char *row : {"/bot", "/top"})
    for (std::size_t i = 1; i <= n; ++i)
      points.push_back(label(i) + row);

  auto bot = [](const std::string &name) { return name + "/bot"; };
  auto top = [](const std::string &name) { return name + "/top"; };
  const auto tn = label(n);
  const auto tn1 = label(n - 1);

  std::vector<std::pair<PointId, PointId>> covers = {
      {bot("a"), top("a")}, {bot("a"), top(tn)}, {bot(tn), top("a")},
      {bot("b"), top(tn)},  {bot("b"), top(tn1)}, {bot(tn), top("b")}, {bot(tn1), top("b")},
  };
  for (std::size_t i = 3; i <= n; ++i)
    for (std::size_t j = 3; j <= n; ++j)
      if (i + j >= n + 1)
        covers.emplace_back(bot(label(i)), top(label(j)));
  return Poset::from_covers(std::move(points), covers);
}

bool is_connected(const Poset &p) {
  if (p.empty())
    return true;
  std::vector<char> seen(p.size(), 0);
  std::vector<std::size_t> stack{0};
  seen[0] = 1;
  std::size_t count = 1;
  while (!stack.empty()) {
    auto u = stack.back();
    stack.pop_back();
    for (auto nbrs : {p.upper_covers(u), p.lower_covers(u)})
      for (auto v : nbrs)
        if (!seen[v]) {
          seen[v] = 1;
          ++count;
          stack.push_back(v);
        }
  }
  return count == p.size();
}

std::vector<FamilyCheck> family_checks(std::size_t k_max) {
  std::vector<FamilyCheck> out;
  std::set<std::size_t> sizes;
  for (std::size_t k = 0; k <= k_max; ++k) {
    auto f = build_F(k);
    FamilyCheck check;
    check.k = k;
    check.points = f.size();
    check.point_count_ok = f.size() == BlockSpec{k}.total_points() && sizes.insert(f.size()).second;
    check.minimal = is_minimal(f);
    check.connected = is_connected(f);
    check.aut_order = static_cast<std::size_t>(hasse_automorphisms(f).order);
    check.asymmetric = check.aut_order == 1;
    out.push_back(check);
  }
  return out;
}

} // namespace fspace
