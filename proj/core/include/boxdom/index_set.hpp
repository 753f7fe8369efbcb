#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace boxdom {

// A set of basis positions (0-based), packed into one word. Bases are
// dominating sets of graphs on at most 128 vertices, and the labeling
// machinery only runs on bases of at most 64 vertices, so one word is enough
// and label operations stay branch-free.
using IndexSet = std::uint64_t;

namespace iset {

inline constexpr IndexSet empty = 0;

inline IndexSet single(int i) { return IndexSet(1) << i; }
inline IndexSet full(int k) {
  return k >= 64 ? ~IndexSet(0) : (IndexSet(1) << k) - 1;
}
inline bool test(IndexSet s, int i) { return s >> i & 1; }
inline IndexSet with(IndexSet s, int i) { return s | single(i); }
inline IndexSet without(IndexSet s, int i) { return s & ~single(i); }
inline int count(IndexSet s) { return std::popcount(s); }
inline bool is_subset(IndexSet a, IndexSet b) { return (a & ~b) == 0; }
inline int lowest(IndexSet s) { return s ? std::countr_zero(s) : -1; }
inline int next(IndexSet s, int i) {
  IndexSet rest = s & ~(((IndexSet(1) << i) << 1) - 1);
  return rest ? std::countr_zero(rest) : -1;
}

template <typename F>
inline void for_each(IndexSet s, F f) {
  while (s) {
    int i = std::countr_zero(s);
    f(i);
    s &= s - 1;
  }
}

inline std::vector<int> to_vector(IndexSet s) {
  std::vector<int> out;
  for_each(s, [&](int i) { out.push_back(i); });
  return out;
}

inline IndexSet from(const std::vector<int>& v) {
  IndexSet s = 0;
  for (int i : v) s = with(s, i);
  return s;
}

// Lexicographic order on the ascending member sequences ("{0,2} before
// {1}", "{1} before {1,3}"). Used to pick the lexicographically first label
// when an alteration rule needs a deterministic side.
inline bool lex_less(IndexSet a, IndexSet b) {
  while (a && b) {
    int x = std::countr_zero(a), y = std::countr_zero(b);
    if (x != y) return x < y;
    a &= a - 1;
    b &= b - 1;
  }
  return !a && b;
}

inline std::string to_string(IndexSet s) {
  std::string out = "{";
  bool sep = false;
  for_each(s, [&](int i) {
    if (sep) out += ",";
    out += std::to_string(i);
    sep = true;
  });
  return out + "}";
}

}  // namespace iset
}  // namespace boxdom
