#include "fspace/io.hpp"

#include <json.hpp>

#include <map>
#include <sstream>
#include <stdexcept>

namespace fspace {

using nlohmann::json;

namespace {

json parse(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error &e) {
    throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
  }
}

std::string quote(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\')
      out += '\\';
    out += c;
  }
  return out + "\"";
}

const char *palette(int color) {
  static const char *colors[] = {"red", "blue", "darkgreen", "orange", "purple", "brown", "magenta", "cyan"};
  return colors[(color - 1) % 8];
}

} // namespace

std::string poset_to_json(const Poset &p) {
  json covers = json::array();
  for (auto [x, y] : p.covers())
    covers.push_back({p.point(x), p.point(y)});
  json doc = {{"points", p.points()}, {"covers", std::move(covers)}};
  return doc.dump(2) + "\n";
}

Poset poset_from_json(std::string_view text) {
  auto doc = parse(text);
  try {
    auto points = doc.at("points").get<std::vector<std::string>>();
    std::vector<std::pair<PointId, PointId>> covers;
    for (const auto &c : doc.at("covers")) {
      if (!c.is_array() || c.size() != 2)
        throw std::invalid_argument("each cover must be a [lower, upper] pair");
      covers.emplace_back(c[0].get<std::string>(), c[1].get<std::string>());
    }
    return Poset::from_covers(std::move(points), covers);
  } catch (const json::exception &e) {
    throw std::invalid_argument(std::string("bad poset JSON: ") + e.what());
  }
}

std::string digraph_to_json(const ColoredDigraph &d) {
  json edges = json::array();
  for (const auto &e : d.edges())
    edges.push_back({d.vertices()[e.source], d.vertices()[e.target], e.color});
  json doc = {{"vertices", d.vertices()}, {"edges", std::move(edges)}};
  return doc.dump(2) + "\n";
}

ColoredDigraph digraph_from_json(std::string_view text) {
  auto doc = parse(text);
  try {
    auto vertices = doc.at("vertices").get<std::vector<std::string>>();
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < vertices.size(); ++i)
      if (!index.emplace(vertices[i], i).second)
        throw std::invalid_argument("duplicate vertex: " + vertices[i]);
    std::vector<ColoredEdge> edges;
    for (const auto &e : doc.at("edges")) {
      if (!e.is_array() || e.size() < 2 || e.size() > 3)
        throw std::invalid_argument("each edge must be [source, target] or [source, target, color]");
      auto s = index.find(e[0].get<std::string>());
      auto t = index.find(e[1].get<std::string>());
      if (s == index.end() || t == index.end())
        throw std::invalid_argument("edge mentions an unknown vertex");
      edges.push_back({s->second, t->second, e.size() == 3 ? e[2].get<int>() : 1});
    }
    return ColoredDigraph(std::move(vertices), std::move(edges));
  } catch (const json::exception &e) {
    throw std::invalid_argument(std::string("bad digraph JSON: ") + e.what());
  }
}

std::vector<Permutation> permutations_from_json(std::string_view text) {
  auto doc = parse(text);
  try {
    return doc.get<std::vector<Permutation>>();
  } catch (const json::exception &e) {
    throw std::invalid_argument(std::string("expected a list of permutations like [[1,2,0]]: ") + e.what());
  }
}

std::string poset_to_dot(const Poset &p, std::string_view name) {
  std::ostringstream out;
  out << "digraph " << quote(name) << " {\n";
  out << "  rankdir=BT;\n";
  out << "  node [shape=point, width=0.1];\n";
  for (std::size_t level = 1; level <= p.height(); ++level) {
    out << "  { rank=same;";
    for (std::size_t i = 0; i < p.size(); ++i)
      if (p.level(i) == level)
        out << ' ' << quote(p.point(i)) << ';';
    out << " }\n";
  }
  for (auto [x, y] : p.covers())
    out << "  " << quote(p.point(x)) << " -> " << quote(p.point(y)) << " [arrowhead=none];\n";
  out << "}\n";
  return out.str();
}

std::string digraph_to_dot(const ColoredDigraph &d, std::string_view name) {
  std::ostringstream out;
  out << "digraph " << quote(name) << " {\n";
  for (const auto &v : d.vertices())
    out << "  " << quote(v) << ";\n";
  for (const auto &e : d.edges())
    out << "  " << quote(d.vertices()[e.source]) << " -> " << quote(d.vertices()[e.target]) << " [color="
        << palette(e.color) << ", label=" << e.color << "];\n";
  out << "}\n";
  return out.str();
}

std::string cycle_notation(const Permutation &p, const std::vector<std::string> &names) {
  std::string out;
  std::vector<char> seen(p.size(), 0);
  for (std::size_t start = 0; start < p.size(); ++start) {
    if (seen[start] || p[start] == start)
      continue;
    out += '(';
    for (auto x = start; !seen[x]; x = p[x]) {
      seen[x] = 1;
      if (x != start)
        out += ' ';
      out += names.at(x);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

} // namespace fspace
