// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include "fspace/asym_blocks.hpp"
#include "fspace/automorphism.hpp"
#include "fspace/blocks.hpp"
#include "fspace/realization.hpp"
#include "support.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>

namespace {

using namespace fspace;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool ok = true;
  std::string detail;
};

struct Criterion {
  int id;
  std::string title;
  double limit_seconds;
  std::function<Outcome()> body;
};

std::vector<std::size_t> sorted_level_degrees(const Poset &p, std::size_t level) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p.level(i) == level)
      out.push_back(p.upper_covers(i).size() + p.lower_covers(i).size());
  std::sort(out.begin(), out.end());
  return out;
}

Outcome family() {
  Outcome o;
  for (std::size_t k = 0; k <= 10; ++k) {
    auto f = build_F(k);
    std::vector<std::size_t> expected{2, 2};
    for (std::size_t i = 3; i <= k + 4; ++i)
      expected.push_back(i);
    const bool ok = f.size() == 2 * k + 8 && sorted_level_degrees(f, 1) == expected &&
                    sorted_level_degrees(f, 2) == expected && is_minimal(f) && hasse_automorphisms(f).order == 1;
    if (!ok) {
      o.ok = false;
      o.detail += " F_" + std::to_string(k) + " failed;";
    }
  }
  if (o.ok)
    o.detail = "F_0..F_10: 2k+8 points, degrees {2,2,3..k+4}, minimal, |Aut| = 1";
  return o;
}

Outcome drawing_fidelity() {
  auto fixture = testing::f3_drawing_fixture();
  auto phi = isomorphic(build_F(3), fixture);
  return {phi.has_value() && fixture.covers().size() == testing::kF3DrawingSegments,
          phi ? "F_3 isomorphic to the 14-point, 29-segment drawing" : "no isomorphism"};
}

Outcome oracle_equivalence() {
  std::mt19937 rng(20261019);
  std::size_t mismatches = 0;
  for (int trial = 0; trial < 200; ++trial) {
    auto d = testing::random_digraph(rng, 8, 1 + trial % 3);
    if (automorphisms(d).order != brute_force_automorphisms(d).order)
      ++mismatches;
  }
  return {mismatches == 0, "200 random colored digraphs (<= 8 vertices), mismatches: " + std::to_string(mismatches)};
}

Outcome cayley_theorem() {
  std::vector<std::pair<std::string, FiniteGroup>> groups;
  for (std::size_t m = 2; m <= 8; ++m)
    groups.emplace_back("Z/" + std::to_string(m), cyclic(m));
  for (std::size_t m = 3; m <= 5; ++m)
    groups.emplace_back("D_" + std::to_string(2 * m), dihedral(2 * m));
  groups.emplace_back("S_3", symmetric(3));
  groups.emplace_back("S_4", symmetric(4));
  groups.emplace_back("V_4", direct_product(cyclic(2), cyclic(2)));
  Outcome o;
  for (const auto &[name, g] : groups) {
    auto c = cayley_graph(g);
    std::size_t verified = 0;
    for (std::size_t h = 0; h < g.order(); ++h)
      verified += is_automorphism(c, right_translation(g, h));
    const auto order = automorphisms(c).order;
    if (order != g.order() || verified != g.order()) {
      o.ok = false;
      o.detail += " " + name + ": |Aut| = " + std::to_string(order) + ";";
    }
  }
  if (o.ok)
    o.detail = std::to_string(groups.size()) + " groups: |Aut(C)| = |G| and all right translations verified";
  return o;
}

Outcome realization_sizes() {
  auto z3 = build_realization(cyclic(3));
  auto d6 = build_realization(dihedral(6));
  std::map<std::size_t, std::size_t> z3_inv{{0, 3}, {1, 3}, {2, 3}, {3, 3}};
  std::map<std::size_t, std::size_t> d6_inv;
  for (std::size_t i = 0; i <= 6; ++i)
    d6_inv[i] = 6;
  auto recount = [](const RealizationSpace &s) {
    std::size_t total = 0;
    for (auto [family, count] : s.inventory())
      total += count * (2 * family + 8);
    return total;
  };
  const bool ok = z3.poset.size() == 132 && d6.poset.size() == 588 && z3.inventory() == z3_inv &&
                  d6.inventory() == d6_inv && recount(z3) == 132 && recount(d6) == 588 &&
                  realization_size(3, 1) == 132 && realization_size(6, 2) == 588;
  return {ok, "|X(Z/3)| = " + std::to_string(z3.poset.size()) + ", |X(D_6)| = " + std::to_string(d6.poset.size())};
}

Outcome main_theorem() {
  std::vector<std::pair<std::string, FiniteGroup>> groups = {
      {"Z/2", cyclic(2)},       {"Z/3", cyclic(3)},       {"Z/4", cyclic(4)},
      {"V_4", direct_product(cyclic(2), cyclic(2))},      {"D_6", dihedral(6)},
      {"D_8", dihedral(8)},     {"S_3", symmetric(3)},
  };
  Outcome o;
  std::ostringstream detail;
  for (const auto &[name, g] : groups) {
    auto r = verify_realization(g);
    detail << name << ":" << r.engine_order << (r.passed() ? "ok " : "FAIL ");
    o.ok = o.ok && r.passed();
  }
  o.detail = detail.str();
  return o;
}

Outcome non_minimal_probe() {
  auto g = cyclic(3).with_generators({1, 2});
  auto r = verify_realization(g);
  std::ostringstream detail;
  detail << "S = {x, x^2}: minimal " << (r.minimal ? "yes" : "no") << ", induced " << r.induced_automorphisms
         << ", engine order " << r.engine_order << " -> conclusion " << (r.passed() ? "holds" : "does not hold")
         << " (recorded)";
  return {true, detail.str()};
}

Outcome properties() {
  std::mt19937 rng(8);
  Outcome o;
  std::size_t failures = 0;
  for (int trial = 0; trial < 100; ++trial) {
    auto p = testing::random_poset(rng, 1 + trial % 30, 0.2);
    auto c = core(p);
    if (!is_minimal(c) || !isomorphic(core(c), c))
      ++failures;
  }
  for (int trial = 0; trial < 100; ++trial) {
    auto p = testing::random_poset(rng, 1 + trial % 15, 0.3);
    auto lt = testing::order_closure(p);
    auto report = beat_points(p);
    for (std::size_t x = 0; x < p.size(); ++x) {
      bool up = false, down = false;
      for (std::size_t m = 0; m < p.size(); ++m) {
        bool least = lt[x][m], greatest = lt[m][x];
        for (std::size_t z = 0; z < p.size(); ++z) {
          if (lt[x][z] && z != m && !lt[m][z])
            least = false;
          if (lt[z][x] && z != m && !lt[z][m])
            greatest = false;
        }
        up = up || least;
        down = down || greatest;
      }
      const bool up_found =
          std::find(report.up_beats.begin(), report.up_beats.end(), p.point(x)) != report.up_beats.end();
      const bool down_found =
          std::find(report.down_beats.begin(), report.down_beats.end(), p.point(x)) != report.down_beats.end();
      failures += (up != up_found) + (down != down_found);
    }
  }
  std::vector<Poset> constructed;
  for (std::size_t k = 0; k <= 10; ++k)
    constructed.push_back(build_F(k));
  for (const auto &g : {cyclic(2), cyclic(3), cyclic(4), dihedral(6), dihedral(8), symmetric(3)})
    constructed.push_back(build_realization(g).poset);
  for (const auto &p : constructed)
    for (auto [x, y] : p.covers())
      failures += p.level(y) < p.level(x) + 1;
  o.ok = failures == 0;
  o.detail = "core/beat/level properties, failures: " + std::to_string(failures);
  return o;
}

} // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "F_k family asymmetric and minimal", 10, family},
      {2, "F_3 drawing fidelity", 1, drawing_fidelity},
      {3, "engine matches brute-force oracle", 60, oracle_equivalence},
      {4, "Cayley graph automorphisms", 30, cayley_theorem},
      {5, "realization sizes and inventories", 1, realization_sizes},
      {6, "Aut(X(G,S)) = G", 300, main_theorem},
      {7, "non-minimal generating set probe", 60, non_minimal_probe},
      {8, "property suites", 60, properties},
  };

  int failed = 0;
  for (const auto &c : criteria) {
    const auto start = Clock::now();
    Outcome outcome;
    try {
      outcome = c.body();
    } catch (const std::exception &e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
    const bool in_time = seconds < c.limit_seconds;
    const bool pass = outcome.ok && in_time;
    failed += !pass;
    std::cout << (pass ? "[PASS] " : "[FAIL] ") << c.id << ". " << c.title << " (" << std::fixed
              << std::setprecision(3) << seconds << "s < " << c.limit_seconds << "s" << (in_time ? "" : " EXCEEDED")
              << ") " << outcome.detail << '\n';
  }
  std::cout << (failed == 0 ? "all acceptance criteria passed" : std::to_string(failed) + " criteria failed") << '\n';
  return failed == 0 ? 0 : 1;
}
