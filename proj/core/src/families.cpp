#include "boxdom/families.hpp"

#include <cctype>

#include "boxdom/error.hpp"
#include "boxdom/graph6.hpp"
#include "boxdom/rng.hpp"

namespace boxdom {

Graph path_graph(int n) {
  if (n < 1) throw ArgumentError("path needs n >= 1");
  std::vector<std::pair<int, int>> e;
  for (int v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
  return Graph(n, e, "P" + std::to_string(n));
}

Graph cycle_graph(int n) {
  if (n < 3) throw ArgumentError("cycle needs n >= 3");
  std::vector<std::pair<int, int>> e;
  for (int v = 0; v < n; ++v) e.emplace_back(v, (v + 1) % n);
  return Graph(n, e, "C" + std::to_string(n));
}

Graph complete_graph(int n) {
  if (n < 1) throw ArgumentError("complete graph needs n >= 1");
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return Graph(n, e, "K" + std::to_string(n));
}

Graph star_graph(int n) {
  if (n < 1) throw ArgumentError("star needs n >= 1");
  std::vector<std::pair<int, int>> e;
  for (int v = 1; v < n; ++v) e.emplace_back(0, v);
  return Graph(n, e, "S" + std::to_string(n));
}

Graph gnp_graph(int n, const Rat& p, std::uint64_t seed) {
  if (n < 1) throw ArgumentError("gnp needs n >= 1");
  if (p < 0 || p > 1) throw ArgumentError("gnp needs 0 <= p <= 1");
  // threshold = floor(p * 2^64); a draw d yields an edge iff d < threshold,
  // with p = 1 always an edge (the threshold would overflow the word).
  bool always = (p == 1);
  std::uint64_t threshold = 0;
  if (!always) {
    Int t = (numerator(p) << 64) / denominator(p);
    threshold = static_cast<std::uint64_t>(t);
  }
  SplitMix64 rng(seed);
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      std::uint64_t d = rng.next();
      if (always || d < threshold) e.emplace_back(u, v);
    }
  return Graph(n, e, "G(" + std::to_string(n) + "," + rat_str(p) + ")");
}

Graph parse_graph_token(const std::string& token) {
  if (token.rfind("g6:", 0) == 0) return parse_graph6(token.substr(3));
  if (token.size() >= 2 && std::isdigit(static_cast<unsigned char>(token[1]))) {
    bool digits = true;
    for (std::size_t i = 1; i < token.size(); ++i)
      digits = digits && std::isdigit(static_cast<unsigned char>(token[i]));
    if (digits) {
      int n = std::stoi(token.substr(1));
      switch (token[0]) {
        case 'K': return complete_graph(n);
        case 'P': return path_graph(n);
        case 'C': return cycle_graph(n);
        case 'S': return star_graph(n);
        default: break;
      }
    }
  }
  throw ArgumentError("bad graph token: " + token +
                      " (want K<n>|P<n>|C<n>|S<n>|g6:<string>)");
}

}  // namespace boxdom
