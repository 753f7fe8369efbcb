#include "boxdom/graph6.hpp"

#include <fstream>

#include "boxdom/error.hpp"

namespace boxdom {

namespace {
constexpr std::string_view kHeader = ">>graph6<<";
}

Graph parse_graph6(std::string_view line) {
  std::size_t base = 0;
  if (line.substr(0, kHeader.size()) == kHeader) {
    line.remove_prefix(kHeader.size());
    base = kHeader.size();
  }
  if (line.empty()) throw ParseError("empty graph6 string", base);
  unsigned char h = static_cast<unsigned char>(line[0]);
  if (h < 63 || h > 126) throw ParseError("bad graph6 header byte", base);
  long n;
  std::size_t head;
  if (h == 126) {
    // Long form: '~' then three 6-bit bytes, most significant first.
    if (line.size() < 4)
      throw ParseError("truncated graph6 order", base + line.size());
    if (static_cast<unsigned char>(line[1]) == 126)
      throw ParseError("graph6 orders beyond 2^18 unsupported", base + 1);
    n = 0;
    for (int b = 1; b <= 3; ++b) {
      unsigned char c = static_cast<unsigned char>(line[b]);
      if (c < 63 || c > 126)
        throw ParseError("bad graph6 order byte", base + std::size_t(b));
      n = n << 6 | (c - 63);
    }
    if (n <= 62) throw ParseError("long-form graph6 order under 63", base);
    head = 4;
  } else {
    n = h - 63;
    head = 1;
  }
  if (n > Graph::kMaxOrder)
    throw ParseError("graph6 order above the library cap", base);
  long nbits = n * (n - 1) / 2;
  std::size_t nbytes = std::size_t((nbits + 5) / 6);
  if (line.size() < head + nbytes)
    throw ParseError("truncated graph6 bit vector", base + line.size());
  if (line.size() > head + nbytes)
    throw ParseError("trailing garbage after graph6 data",
                     base + head + nbytes);

  std::vector<std::pair<int, int>> edges;
  long bit = 0;
  int i = 0, j = 1;
  for (std::size_t b = 0; b < nbytes; ++b) {
    unsigned char c = static_cast<unsigned char>(line[head + b]);
    if (c < 63 || c > 126)
      throw ParseError("graph6 byte out of range", base + head + b);
    int chunk = c - 63;
    for (int s = 5; s >= 0; --s, ++bit) {
      int v = chunk >> s & 1;
      if (bit >= nbits) {
        if (v) throw ParseError("nonzero graph6 padding", base + head + b);
        continue;
      }
      if (v) edges.emplace_back(i, j);
      if (++i == j) {
        i = 0;
        ++j;
      }
    }
  }
  return Graph(int(n), edges);
}

std::string emit_graph6(const Graph& g) {
  int n = g.order();
  std::string out;
  if (n > 62) {
    out.push_back(126);
    out.push_back(char((n >> 12 & 63) + 63));
    out.push_back(char((n >> 6 & 63) + 63));
    out.push_back(char((n & 63) + 63));
  } else {
    out.push_back(char(n + 63));
  }
  int chunk = 0, filled = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      chunk = chunk << 1 | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(char(chunk + 63));
        chunk = 0;
        filled = 0;
      }
    }
  if (filled) out.push_back(char((chunk << (6 - filled)) + 63));
  return out;
}

std::vector<Graph> read_graph6_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open corpus file: " + path);
  std::vector<Graph> graphs;
  std::string line;
  long lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line == kHeader) continue;
    try {
      graphs.push_back(parse_graph6(line));
    } catch (const ParseError& e) {
      throw Error(path + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
  return graphs;
}

}  // namespace boxdom
