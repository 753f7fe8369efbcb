#pragma once

#include <array>
#include <bit>
#include <cassert>
#include <cstdint>
#include <initializer_list>
#include <vector>

#include "boxdom/error.hpp"

namespace boxdom {

// Fixed-capacity vertex set over a universe of at most 128 vertices. The
// solver's hot loops are whole-word bitwise operations, so the two words are
// stored inline; the universe size is carried so complements and fullness
// tests stay exact.
class VertexSet {
 public:
  static constexpr int kMaxBits = 128;

  VertexSet() = default;
  explicit VertexSet(int universe) : n_(universe) {
    if (universe < 0 || universe > kMaxBits)
      throw LimitError("vertex set universe out of range: " +
                       std::to_string(universe));
  }

  static VertexSet full(int universe) {
    VertexSet s(universe);
    s.w_[0] = mask_low(universe > 64 ? 64 : universe);
    s.w_[1] = universe > 64 ? mask_low(universe - 64) : 0;
    return s;
  }

  static VertexSet of(int universe, std::initializer_list<int> members) {
    VertexSet s(universe);
    for (int v : members) s.set(v);
    return s;
  }

  int universe() const { return n_; }

  void set(int v) {
    assert(v >= 0 && v < n_);
    w_[v >> 6] |= std::uint64_t(1) << (v & 63);
  }
  void reset(int v) {
    assert(v >= 0 && v < n_);
    w_[v >> 6] &= ~(std::uint64_t(1) << (v & 63));
  }
  bool test(int v) const {
    assert(v >= 0 && v < n_);
    return w_[v >> 6] >> (v & 63) & 1;
  }

  int count() const {
    return std::popcount(w_[0]) + std::popcount(w_[1]);
  }
  bool empty() const { return (w_[0] | w_[1]) == 0; }
  bool is_full() const { return *this == full(n_); }

  bool intersects(const VertexSet& o) const {
    return ((w_[0] & o.w_[0]) | (w_[1] & o.w_[1])) != 0;
  }
  bool is_subset_of(const VertexSet& o) const {
    return (w_[0] & ~o.w_[0]) == 0 && (w_[1] & ~o.w_[1]) == 0;
  }

  VertexSet& operator|=(const VertexSet& o) {
    assert(n_ == o.n_);
    w_[0] |= o.w_[0];
    w_[1] |= o.w_[1];
    return *this;
  }
  VertexSet& operator&=(const VertexSet& o) {
    assert(n_ == o.n_);
    w_[0] &= o.w_[0];
    w_[1] &= o.w_[1];
    return *this;
  }
  VertexSet& operator^=(const VertexSet& o) {
    assert(n_ == o.n_);
    w_[0] ^= o.w_[0];
    w_[1] ^= o.w_[1];
    return *this;
  }
  VertexSet& remove(const VertexSet& o) {
    assert(n_ == o.n_);
    w_[0] &= ~o.w_[0];
    w_[1] &= ~o.w_[1];
    return *this;
  }

  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator^(VertexSet a, const VertexSet& b) { return a ^= b; }
  // Set difference.
  friend VertexSet operator-(VertexSet a, const VertexSet& b) {
    return a.remove(b);
  }
  VertexSet operator~() const {
    VertexSet r = full(n_);
    r.w_[0] &= ~w_[0];
    r.w_[1] &= ~w_[1];
    return r;
  }

  bool operator==(const VertexSet& o) const {
    return n_ == o.n_ && w_[0] == o.w_[0] && w_[1] == o.w_[1];
  }
  bool operator!=(const VertexSet& o) const { return !(*this == o); }

  // Strict lexicographic order on the sorted member sequences; the natural
  // order for deterministic enumeration and witnesses.
  bool lex_less(const VertexSet& o) const {
    VertexSet a = *this, b = o;
    while (!a.empty() && !b.empty()) {
      int x = a.first(), y = b.first();
      if (x != y) return x < y;
      a.reset(x);
      b.reset(y);
    }
    return a.empty() && !b.empty();
  }

  // Lowest member or -1.
  int first() const {
    if (w_[0]) return std::countr_zero(w_[0]);
    if (w_[1]) return 64 + std::countr_zero(w_[1]);
    return -1;
  }

  // Lowest member greater than v, or -1.
  int next(int v) const {
    for (int i = v + 1; i < n_;) {
      std::uint64_t word = w_[i >> 6] >> (i & 63);
      if (word) return i + std::countr_zero(word);
      i = (i | 63) + 1;
    }
    return -1;
  }

  template <typename F>
  void for_each(F f) const {
    for (int v = first(); v >= 0; v = next(v)) f(v);
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(count());
    for_each([&](int v) { out.push_back(v); });
    return out;
  }

  std::uint64_t word(int i) const { return w_[i]; }

 private:
  static std::uint64_t mask_low(int bits) {
    return bits >= 64 ? ~std::uint64_t(0)
                      : (std::uint64_t(1) << bits) - 1;
  }

  std::array<std::uint64_t, 2> w_{};
  int n_ = 0;
};

}  // namespace boxdom
