#include "gturan/named.hpp"

#include <cctype>
#include <charconv>
#include <vector>

#include "gturan/covering.hpp"
#include "gturan/graph6.hpp"

namespace gturan {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

int parse_int(std::string_view s, std::string_view context) {
  s = trim(s);
  int value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size() || value < 0) {
    throw ParseError("expected a non-negative integer in '" + std::string(context) + "'");
  }
  return value;
}

std::vector<std::string_view> split_top_level(std::string_view s) {
  std::vector<std::string_view> parts;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    if (s[i] == ')' && --depth < 0) throw ParseError("unbalanced ')' in '" + std::string(s) + "'");
    if (s[i] == ',' && depth == 0) {
      parts.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  if (depth != 0) throw ParseError("unbalanced '(' in '" + std::string(s) + "'");
  parts.push_back(trim(s.substr(start)));
  return parts;
}

// "NAME(a,b)" -> {a, b}
std::pair<int, int> parse_pair(std::string_view text, std::size_t prefix) {
  if (text.size() < prefix + 2 || text[prefix] != '(' || text.back() != ')')
    throw ParseError("malformed graph name '" + std::string(text) + "'");
  const auto args = split_top_level(text.substr(prefix + 1, text.size() - prefix - 2));
  if (args.size() != 2) throw ParseError("expected two arguments in '" + std::string(text) + "'");
  return {parse_int(args[0], text), parse_int(args[1], text)};
}

}  // namespace

NamedGraph parse_graph(std::string_view text) {
  text = trim(text);
  if (text.empty()) throw ParseError("empty graph name");
  const std::string name(text);
  try {
    if (text.starts_with("g6:")) return {name, from_graph6(text.substr(3))};
    if (text.starts_with("fp(")) throw ParseError("'" + name + "' is a family, not a graph");
    if (text.starts_with("DS(")) {
      auto [a, b] = parse_pair(text, 2);
      return {name, double_star(a, b)};
    }
    if (text.starts_with("T(")) {
      auto [p, k] = parse_pair(text, 1);
      return {name, turan_graph(p, k)};
    }
    if (text.starts_with("K(")) {
      auto [a, b] = parse_pair(text, 1);
      return {name, complete_bipartite(a, b)};
    }
    const int k = parse_int(text.substr(1), text);
    switch (text.front()) {
      case 'K': return {name, complete(k)};
      case 'C': return {name, cycle(k)};
      case 'P': return {name, path(k)};
      case 'S': return {name, star(k)};
      case 'M': return {name, matching(k)};
      case 'W': return {name, wheel(k)};
      case 'E': return {name, empty(k)};
      default: break;
    }
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    throw ParseError("cannot build '" + name + "': " + e.what());
  }
  throw ParseError("unknown graph name '" + name + "'");
}

GraphFamily parse_family(std::string_view text) {
  text = trim(text);
  GraphFamily fam{std::string(text)};
  if (text.empty()) return fam;
  for (std::string_view item : split_top_level(text)) {
    if (item.starts_with("fp(")) {
      if (item.back() != ')') throw ParseError("malformed family '" + std::string(item) + "'");
      const auto args = split_top_level(item.substr(3, item.size() - 4));
      if (args.size() != 2) throw ParseError("fp expects (graph, p) in '" + std::string(item) + "'");
      const NamedGraph f = parse_graph(args[0]);
      const GraphFamily sub = family_fp(f.graph, parse_int(args[1], item), f.name);
      for (const Graph& g : sub.members()) fam.add(g);
    } else {
      fam.add(parse_graph(item).graph);
    }
  }
  return fam;
}

}  // namespace gturan
