#include "fspace/realization.hpp"

#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace fspace {

namespace {

using BlockKey = std::tuple<BlockRole, std::size_t, std::size_t>; // role, element, color

std::map<BlockKey, std::size_t> block_offsets(const RealizationSpace &space) {
  std::map<BlockKey, std::size_t> offsets;
  for (std::size_t i = 0; i < space.provenance.size(); ++i) {
    const auto &o = space.provenance[i];
    offsets.try_emplace({o.role, o.element, o.color}, i);
  }
  return offsets;
}

} // namespace

Permutation induced_translation(const FiniteGroup &g, const RealizationSpace &space, std::size_t h) {
  const auto offsets = block_offsets(space);
  Permutation p(space.poset.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    const auto &o = space.provenance[i];
    const auto local = i - offsets.at({o.role, o.element, o.color});
    p[i] = offsets.at({o.role, g.multiply(o.element, h), o.color}) + local;
  }
  return p;
}

bool preserves_blocks(const RealizationSpace &space, const Permutation &p) {
  std::map<std::string, std::set<std::size_t>> members;
  for (std::size_t i = 0; i < space.provenance.size(); ++i)
    members[space.provenance[i].block].insert(i);
  for (const auto &[name, points] : members) {
    const auto first_image = p.at(*points.begin());
    const auto &target = space.provenance.at(first_image);
    if (target.family != space.provenance[*points.begin()].family)
      return false;
    const auto &target_points = members.at(target.block);
    if (target_points.size() != points.size())
      return false;
    for (auto x : points)
      if (!target_points.contains(p[x]))
        return false;
  }
  return true;
}

RealizationReport verify_realization(const FiniteGroup &g, std::size_t budget) {
  if (g.generators().empty())
    throw std::invalid_argument("verification needs at least one generator (S must be non-empty)");
  const auto predicted = realization_size(g.order(), g.generators().size());
  if (predicted > budget)
    throw std::length_error("X(G,S) has " + std::to_string(predicted) + " points, above the budget of " +
                            std::to_string(budget));

  auto space = build_realization(g);
  const auto hasse = hasse_digraph(space.poset);

  RealizationReport report;
  report.group_order = g.order();
  report.generator_count = g.generators().size();
  report.points = space.poset.size();
  report.minimal = is_minimal(space.poset);

  std::set<Permutation> induced;
  for (std::size_t h = 0; h < g.order(); ++h) {
    auto p = induced_translation(g, space, h);
    if (is_automorphism(hasse, p)) {
      ++report.induced_automorphisms;
      induced.insert(std::move(p));
    }
  }
  report.induced_distinct = induced.size() == report.induced_automorphisms;

  auto aut = automorphisms(hasse, hasse_seed(space.poset));
  report.engine_order = aut.order;
  report.blocks_preserved = true;
  for (const auto &gen : aut.generators)
    report.blocks_preserved = report.blocks_preserved && preserves_blocks(space, gen);
  return report;
}

std::string RealizationReport::to_text() const {
  std::ostringstream out;
  auto verdict = [](bool ok) { return ok ? "PASS" : "FAIL"; };
  out << "X(G,S): |G| = " << group_order << ", |S| = " << generator_count << ", points = " << points << '\n';
  out << "minimal: " << (minimal ? "yes" : "no") << " : " << verdict(minimal) << '\n';
  const bool induced_ok = induced_automorphisms == group_order && induced_distinct;
  out << "induced automorphisms: " << induced_automorphisms << (induced_distinct ? " distinct" : " (not distinct)")
      << " of " << group_order << " : " << verdict(induced_ok) << '\n';
  out << "engine generators preserve blocks: " << (blocks_preserved ? "yes" : "no") << '\n';
  out << "order(Aut) = " << engine_order << (engine_order == group_order ? " = " : " != ") << "|G| : "
      << verdict(passed()) << '\n';
  return out.str();
}

} // namespace fspace
