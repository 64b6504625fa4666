#include "fspace/cli.hpp"

#include "fspace/asym_blocks.hpp"
#include "fspace/automorphism.hpp"
#include "fspace/blocks.hpp"
#include "fspace/io.hpp"
#include "fspace/realization.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

namespace fspace::cli {

namespace {

/// Bad arguments or input; reported on one line, exit 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::size_t parse_count(std::string_view text, std::string_view what) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size())
    throw UsageError(std::string(what) + " must be an integer, got '" + std::string(text) + "'");
  if (value < 0)
    throw UsageError(std::string(what) + " must be non-negative, got " + std::string(text));
  return static_cast<std::size_t>(value);
}

std::string read_file(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw UsageError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string level_sizes(const Poset &p) {
  std::vector<std::size_t> sizes(p.height(), 0);
  for (std::size_t i = 0; i < p.size(); ++i)
    ++sizes[p.level(i) - 1];
  std::string out;
  for (std::size_t l = 0; l < sizes.size(); ++l)
    out += (l ? ", " : "") + std::to_string(sizes[l]);
  return "[" + out + "]";
}

void emit_poset(const Poset &p, const std::string &format, std::string_view name, std::ostream &out) {
  if (format == "json")
    out << poset_to_json(p);
  else if (format == "dot")
    out << poset_to_dot(p, name);
}

std::string inventory_summary(const RealizationSpace &space) {
  std::ostringstream s;
  s << "blocks:";
  for (auto [family, count] : space.inventory())
    s << ' ' << count << "xF_" << family;
  s << "\npoints: " << space.poset.size() << "\ncovers: " << space.poset.covers().size()
    << "\nlevels: " << level_sizes(space.poset) << '\n';
  return s.str();
}

int cmd_build_fk(const std::string &k_text, const std::string &format, std::ostream &out) {
  const auto k = parse_count(k_text, "k");
  auto f = build_F(k);
  if (format == "summary") {
    out << "F_" << k << ": points = " << f.size() << ", covers = " << f.covers().size()
        << ", levels = " << level_sizes(f) << '\n';
    for (std::size_t i = 0; i < f.size(); ++i)
      out << "  " << f.point(i) << " level " << f.level(i) << " degree " << hasse_degree(f, f.point(i)) << '\n';
    return kOk;
  }
  emit_poset(f, format, "F_" + std::to_string(k), out);
  return kOk;
}

int cmd_build_cayley(const std::string &spec, const std::string &format, std::ostream &out) {
  auto g = parse_group_spec(spec);
  auto c = cayley_graph(g);
  if (format == "json")
    out << digraph_to_json(c);
  else if (format == "dot")
    out << digraph_to_dot(c);
  else
    out << "Cayley graph: " << c.size() << " vertices, " << c.edges().size() << " edges, "
        << g.generators().size() << " colors\n";
  return kOk;
}

int cmd_build_space(const std::string &spec, const std::string &format, std::ostream &out, std::ostream &err) {
  auto g = parse_group_spec(spec);
  if (g.generators().empty())
    throw UsageError("X(G,S) needs at least one generator; the trivial group has none");
  auto space = build_realization(g);
  if (format == "summary") {
    out << inventory_summary(space);
  } else {
    emit_poset(space.poset, format, "X", out);
    err << inventory_summary(space);
  }
  return kOk;
}

int cmd_aut(const std::string &path, bool color_edges, bool oracle, std::ostream &out) {
  auto text = read_file(path);
  nlohmann::json probe;
  try {
    probe = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error &e) {
    throw UsageError(path + ": malformed JSON (" + e.what() + ")");
  }
  ColoredDigraph d;
  std::vector<std::size_t> seed;
  if (probe.contains("points")) {
    auto p = poset_from_json(text);
    d = hasse_digraph(p);
    seed = hasse_seed(p);
  } else if (probe.contains("vertices")) {
    d = digraph_from_json(text);
    if (!color_edges)
      d = d.uncolored();
  } else {
    throw UsageError(path + ": expected a poset {\"points\", \"covers\"} or a digraph {\"vertices\", \"edges\"}");
  }

  AutGroup aut;
  if (oracle) {
    if (d.size() > kOracleLimit)
      throw UsageError("oracle limit: " + std::to_string(d.size()) + " vertices, the brute-force oracle handles at most " +
                       std::to_string(kOracleLimit));
    aut = brute_force_automorphisms(d);
  } else {
    aut = automorphisms(d, seed);
  }
  out << "order = " << aut.order << '\n';
  out << "generators: " << aut.generators.size() << '\n';
  for (const auto &gen : aut.generators)
    out << "  " << cycle_notation(gen, d.vertices()) << '\n';
  return kOk;
}

int cmd_verify(const std::string &spec, std::ostream &out) {
  auto g = parse_group_spec(spec);
  if (g.generators().empty())
    throw UsageError("verification needs at least one generator; the trivial group has none");
  RealizationReport report;
  try {
    report = verify_realization(g);
  } catch (const std::length_error &e) {
    throw UsageError(e.what());
  }
  out << report.to_text();
  return report.passed() ? kOk : kVerificationFailed;
}

int cmd_family_check(const std::string &k_text, std::ostream &out) {
  const auto k_max = parse_count(k_text, "k_max");
  bool all = true;
  for (const auto &c : family_checks(k_max)) {
    out << "F_" << c.k << ": points " << c.points << ", minimal " << (c.minimal ? "yes" : "no") << ", connected "
        << (c.connected ? "yes" : "no") << ", |Aut| " << c.aut_order << " : " << (c.passed() ? "PASS" : "FAIL")
        << '\n';
    all = all && c.passed();
  }
  return all ? kOk : kVerificationFailed;
}

} // namespace

FiniteGroup parse_group_spec(std::string_view spec) {
  auto number_after = [&](std::string_view prefix) {
    auto rest = spec.substr(prefix.size());
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), value);
    if (ec != std::errc{} || ptr != rest.data() + rest.size() || rest.empty())
      throw std::invalid_argument("bad group spec '" + std::string(spec) + "': expected a number after '" +
                                  std::string(prefix) + "'");
    return value;
  };
  if (spec.starts_with("cyclic:"))
    return cyclic(number_after("cyclic:"));
  if (spec.starts_with("dihedral:"))
    return dihedral(number_after("dihedral:"));
  if (spec.starts_with("symmetric:"))
    return symmetric(number_after("symmetric:"));
  if (spec == "klein4")
    return direct_product(cyclic(2), cyclic(2));
  if (spec.starts_with("perm:"))
    return group_from_permutations(permutations_from_json(spec.substr(5)));
  if (spec.starts_with("@")) {
    std::ifstream in{std::string(spec.substr(1))};
    if (!in)
      throw std::invalid_argument("cannot open group file " + std::string(spec.substr(1)));
    std::ostringstream buf;
    buf << in.rdbuf();
    return group_from_permutations(permutations_from_json(buf.str()));
  }
  throw std::invalid_argument("unknown group spec '" + std::string(spec) +
                              "'; use cyclic:N, dihedral:2N, symmetric:N, klein4, perm:[[...]] or @file.json");
}

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  CLI::App app{"Finite spaces realizing finite groups as homotopy self-equivalence groups", "fspace"};
  app.require_subcommand(1, 1);

  std::string format = "json";
  auto add_format = [&](CLI::App *sub) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "dot", "summary"}));
  };

  std::string k_text, spec, path;
  bool color_edges = false, oracle = false;

  auto *build_fk = app.add_subcommand("build-fk", "Emit the asymmetric block F_k");
  build_fk->add_option("k", k_text, "Family index k >= 0")->required();
  add_format(build_fk);

  auto *build_cayley = app.add_subcommand("build-cayley", "Emit the colored Cayley graph of a group");
  build_cayley->add_option("group", spec, "Group spec")->required();
  add_format(build_cayley);

  auto *build_space = app.add_subcommand("build-space", "Emit the realization space X(G,S)");
  build_space->add_option("group", spec, "Group spec")->required();
  add_format(build_space);

  auto *aut = app.add_subcommand("aut", "Automorphism group of a poset or colored digraph JSON file");
  aut->add_option("file", path, "JSON file")->required();
  aut->add_flag("--color-edges", color_edges, "Respect edge colors of a digraph file");
  aut->add_flag("--oracle", oracle, "Use the brute-force oracle (at most 10 vertices)");

  auto *verify = app.add_subcommand("verify", "Check that Aut(X(G,S)) is isomorphic to G");
  verify->add_option("group", spec, "Group spec")->required();

  auto *family = app.add_subcommand("family-check", "Check F_0 .. F_kmax");
  family->add_option("k_max", k_text, "Largest family index")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (build_fk->parsed())
      return cmd_build_fk(k_text, format, out);
    if (build_cayley->parsed())
      return cmd_build_cayley(spec, format, out);
    if (build_space->parsed())
      return cmd_build_space(spec, format, out, err);
    if (aut->parsed())
      return cmd_aut(path, color_edges, oracle, out);
    if (verify->parsed())
      return cmd_verify(spec, out);
    if (family->parsed())
      return cmd_family_check(k_text, out);
  } catch (const std::exception &e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

} // namespace fspace::cli
