#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace kmdk {

// Subset of the node set I, at most 32 nodes.
struct NodeSet {
  std::uint32_t bits = 0;

  constexpr NodeSet() = default;
  constexpr explicit NodeSet(std::uint32_t b) : bits(b) {}

  static constexpr NodeSet full(int n) {
    return NodeSet(n >= 32 ? ~0u : ((1u << n) - 1u));
  }
  static NodeSet of(std::initializer_list<int> xs) {
    NodeSet s;
    for (int x : xs)
      s.insert(x);
    return s;
  }
  static NodeSet of(const std::vector<int> &xs) {
    NodeSet s;
    for (int x : xs)
      s.insert(x);
    return s;
  }

  constexpr bool contains(int i) const { return (bits >> i) & 1u; }
  constexpr void insert(int i) { bits |= (1u << i); }
  constexpr void erase(int i) { bits &= ~(1u << i); }
  constexpr int size() const { return std::popcount(bits); }
  constexpr bool empty() const { return bits == 0; }
  constexpr bool subset_of(NodeSet o) const { return (bits & ~o.bits) == 0; }
  constexpr bool proper_subset_of(NodeSet o) const {
    return subset_of(o) && bits != o.bits;
  }
  constexpr bool intersects(NodeSet o) const { return (bits & o.bits) != 0; }

  constexpr NodeSet operator|(NodeSet o) const { return NodeSet(bits | o.bits); }
  constexpr NodeSet operator&(NodeSet o) const { return NodeSet(bits & o.bits); }
  constexpr NodeSet minus(NodeSet o) const { return NodeSet(bits & ~o.bits); }
  constexpr NodeSet with(int i) const { return NodeSet(bits | (1u << i)); }
  constexpr NodeSet without(int i) const { return NodeSet(bits & ~(1u << i)); }

  constexpr bool operator==(const NodeSet &) const = default;
  // size first, then bit pattern: the canonical "subset order" for reports
  constexpr bool operator<(const NodeSet &o) const {
    return size() != o.size() ? size() < o.size() : bits < o.bits;
  }

  std::vector<int> elements() const {
    std::vector<int> out;
    for (std::uint32_t b = bits; b; b &= b - 1)
      out.push_back(std::countr_zero(b));
    return out;
  }
  int min_element() const { return bits ? std::countr_zero(bits) : -1; }
};

// All subsets of `s`, in increasing (size, bits) order.
inline std::vector<NodeSet> subsets_of(NodeSet s) {
  std::vector<NodeSet> out;
  std::uint32_t sub = 0;
  do {
    out.emplace_back(sub);
    sub = (sub - s.bits) & s.bits;
  } while (sub != 0);
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace kmdk
