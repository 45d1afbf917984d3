#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

namespace stanley {

inline constexpr int kMaxVertices = 64;

/// A finite set of small non-negative integers packed in one machine word.
/// Used both for faces of a simplicial complex and for sets of variables.
class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
  VertexSet(std::initializer_list<int> vertices) {
    for (int v : vertices) bits_ |= bit(v);
  }

  static VertexSet from_vertices(const std::vector<int>& vertices) {
    VertexSet s;
    for (int v : vertices) s.bits_ |= bit(v);
    return s;
  }
  /// {0, ..., n-1}
  static constexpr VertexSet range(int n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(int v) const { return (bits_ >> v) & 1U; }
  constexpr bool is_subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(VertexSet other) const { return (bits_ & other.bits_) != 0; }
  /// Largest element, -1 for the empty set.
  constexpr int max() const { return bits_ ? 63 - std::countl_zero(bits_) : -1; }
  /// Smallest element, -1 for the empty set.
  constexpr int min() const { return bits_ ? std::countr_zero(bits_) : -1; }

  constexpr VertexSet with(int v) const { return VertexSet(bits_ | bit(v)); }
  constexpr VertexSet without(int v) const { return VertexSet(bits_ & ~bit(v)); }

  constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
  constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
  /// Set difference.
  constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
  constexpr VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }

  std::vector<int> elements() const {
    std::vector<int> out;
    out.reserve(size());
    for (std::uint64_t b = bits_; b; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
  }

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::uint64_t b = bits_; b; b &= b - 1) fn(std::countr_zero(b));
  }

  /// Visits every subset, the empty set and the set itself included.
  template <typename Fn>
  void for_each_subset(Fn&& fn) const {
    std::uint64_t sub = 0;
    do {
      fn(VertexSet(sub));
      sub = (sub - bits_) & bits_;
    } while (sub != 0);
  }

  friend constexpr bool operator==(VertexSet, VertexSet) = default;

 private:
  static constexpr std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

  std::uint64_t bits_ = 0;
};

using Face = VertexSet;
using VarSet = VertexSet;

/// Deterministic order used for every emitted list of faces: by cardinality,
/// then lexicographically on the sorted vertex sequence.
constexpr bool face_less(Face a, Face b) {
  if (a.size() != b.size()) return a.size() < b.size();
  std::uint64_t diff = a.bits() ^ b.bits();
  if (diff == 0) return false;
  // Same cardinality: the set owning the lowest differing element is smaller.
  return (a.bits() >> std::countr_zero(diff)) & 1U;
}

struct FaceLess {
  constexpr bool operator()(Face a, Face b) const { return face_less(a, b); }
};

}  // namespace stanley

template <>
struct std::hash<stanley::VertexSet> {
  std::size_t operator()(stanley::VertexSet s) const noexcept {
    return std::hash<std::uint64_t>{}(s.bits());
  }
};
