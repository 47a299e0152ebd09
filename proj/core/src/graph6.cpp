#include "gturan/graph6.hpp"

namespace gturan {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";

int decode_char(char c) {
  const int value = static_cast<unsigned char>(c) - 63;
  if (value < 0 || value > 63) throw Graph6Error(std::string("graph6: invalid character '") + c + "'");
  return value;
}

}  // namespace

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
  }
  int chunk = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      chunk = (chunk << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + chunk));
        chunk = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(63 + (chunk << (6 - filled))));
  return out;
}

Graph from_graph6(std::string_view text) {
  if (text.starts_with(kHeader)) text.remove_prefix(kHeader.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' ' || text.back() == '\t'))
    text.remove_suffix(1);
  if (text.empty()) throw Graph6Error("graph6: empty input");

  std::size_t at = 0;
  int n = 0;
  if (text[0] == '~') {
    if (text.size() >= 2 && text[1] == '~') throw Graph6Error("graph6: order exceeds capacity");
    if (text.size() < 4) throw Graph6Error("graph6: truncated order field");
    for (std::size_t k = 1; k <= 3; ++k) n = (n << 6) | decode_char(text[k]);
    if (n <= 62) throw Graph6Error("graph6: non-canonical order field");
    at = 4;
  } else {
    n = decode_char(text[0]);
    at = 1;
  }
  if (n > kMaxVertices) throw Graph6Error("graph6: order " + std::to_string(n) + " exceeds capacity");

  const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n > 0 ? n - 1 : 0) / 2;
  const std::size_t expected = (bits + 5) / 6;
  if (text.size() - at != expected) {
    throw Graph6Error("graph6: expected " + std::to_string(expected) + " data bytes for order " +
                      std::to_string(n) + ", got " + std::to_string(text.size() - at));
  }

  Graph g(n);
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int value = decode_char(text[at + k / 6]);
      if ((value >> (5 - static_cast<int>(k % 6))) & 1) g.connect(i, j);
    }
  }
  if (k % 6 != 0) {
    const int value = decode_char(text[at + k / 6]);
    if ((value & ((1 << (6 - static_cast<int>(k % 6))) - 1)) != 0) throw Graph6Error("graph6: non-zero padding bits");
  }
  return g;
}

std::vector<Graph> read_graph6_corpus(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  while (std::getline(in, line)) {
    std::string_view view = line;
    while (!view.empty() && (view.front() == ' ' || view.front() == '\t')) view.remove_prefix(1);
    if (view.empty() || view.front() == '#' || view.find_first_not_of(" \t\r") == std::string_view::npos) continue;
    out.push_back(from_graph6(view));
  }
  return out;
}

}  // namespace gturan
