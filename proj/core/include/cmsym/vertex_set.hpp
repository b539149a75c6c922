#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace cmsym {

/// Largest supported vertex count; vertex sets are single 64-bit masks.
inline constexpr int kMaxVertices = 64;

/// A subset of the vertex universe {1..n}. Vertex v is bit v-1.
class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

  /// Builds from 1-based labels; throws InputError for labels outside 1..64.
  static VertexSet of(std::initializer_list<int> vertices);
  static VertexSet of(std::span<const int> vertices);

  /// {1..n}
  static constexpr VertexSet prefix(int n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1));
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(int v) const { return (bits_ >> (v - 1)) & 1U; }
  constexpr bool subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(VertexSet other) const { return (bits_ & other.bits_) != 0; }

  constexpr VertexSet with(int v) const { return VertexSet(bits_ | (std::uint64_t{1} << (v - 1))); }
  constexpr VertexSet without(int v) const { return VertexSet(bits_ & ~(std::uint64_t{1} << (v - 1))); }

  /// Smallest / largest member; undefined on the empty set.
  constexpr int min_vertex() const { return std::countr_zero(bits_) + 1; }
  constexpr int max_vertex() const { return 64 - std::countl_zero(bits_); }

  /// Members in ascending order.
  std::vector<int> vertices() const;

  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(VertexSet a, VertexSet b) = default;

  /// Visits members in ascending order.
  template <class Fn>
  constexpr void for_each(Fn&& fn) const {
    for (std::uint64_t rest = bits_; rest != 0; rest &= rest - 1) {
      fn(std::countr_zero(rest) + 1);
    }
  }

 private:
  std::uint64_t bits_ = 0;
};

/// Lexicographic order on the ascending vertex sequences; a proper prefix sorts first.
bool lex_less(VertexSet a, VertexSet b);

/// "{1,2,3}"
std::string to_string(VertexSet s);

struct VertexSetHash {
  std::size_t operator()(VertexSet s) const noexcept { return std::hash<std::uint64_t>{}(s.bits()); }
};

}  // namespace cmsym
