#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cmsym/vertex_set.hpp"

namespace cmsym {

/// Default bound on |F(Δ)| for loops over all facet subsets (2^|F(Δ)| work).
inline constexpr std::size_t kDefaultFacetCap = 20;

/// A simplicial complex on the vertex universe {1..n}, stored by its facets.
///
/// Facets are kept inclusion-maximal and in canonical order: each facet read
/// as its ascending vertex sequence, facets sorted lexicographically. Every
/// enumeration in the library derives its determinism from this order.
///
/// Two degenerate values are distinct: the void complex has no faces at all
/// (no facets, dimension kVoidDimension) while the irrelevant complex {∅} has
/// the single facet ∅ and dimension -1.
class SimplicialComplex {
 public:
  static constexpr int kVoidDimension = std::numeric_limits<int>::min();

  /// Throws InputError on n outside 1..64, a vertex outside 1..n, or an
  /// empty facet list. Non-maximal and duplicate facets are dropped.
  SimplicialComplex(int n, std::vector<VertexSet> facets);

  /// Convenience for 1-based vertex lists.
  static SimplicialComplex from_lists(int n, const std::vector<std::vector<int>>& facets);

  static SimplicialComplex void_complex(int n);

  /// The full simplex on {1..n}.
  static SimplicialComplex simplex(int n);

  int vertex_count() const { return n_; }
  std::span<const VertexSet> facets() const { return facets_; }
  std::size_t facet_count() const { return facets_.size(); }
  const VertexSet& facet(std::size_t i) const { return facets_.at(i); }

  bool is_void() const { return facets_.empty(); }
  int dimension() const;
  bool is_pure() const;

  /// Union of all facets.
  VertexSet support() const;

  bool contains_face(VertexSet face) const;
  std::optional<std::size_t> facet_index(VertexSet facet) const;

  /// All faces, ∅ included, ordered by size then lexicographically.
  std::vector<VertexSet> faces() const;
  /// Faces of dimension j (size j+1) in lexicographic order; j = -1 gives {∅}.
  std::vector<VertexSet> faces_of_dimension(int j) const;

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

 private:
  struct Unchecked {};
  SimplicialComplex(Unchecked, int n, std::vector<VertexSet> facets);

  int n_ = 0;
  std::vector<VertexSet> facets_;
};

std::string to_string(const SimplicialComplex& complex);

/// lk_Δ F = {G : G ∩ F = ∅, G ∪ F ∈ Δ}. Throws InputError if F is not a face.
SimplicialComplex link(const SimplicialComplex& complex, VertexSet face);

/// Δ_V: subcomplex generated by the facets meeting V in at least |V|-1
/// vertices. May be void. Throws InputError for |V| < 2.
SimplicialComplex restrict_to(const SimplicialComplex& complex, VertexSet v);

/// All faces of dimension ≤ d. Requires 0 ≤ d ≤ dim Δ.
SimplicialComplex skeleton(const SimplicialComplex& complex, int d);

/// Δ * Γ with Γ's vertices shifted up by Δ's vertex count.
SimplicialComplex join(const SimplicialComplex& lhs, const SimplicialComplex& rhs);

/// Diameter of the 1-skeleton graph on {1..n}; nullopt stands for ∞
/// (disconnected, or some vertex of {1..n} lies in no edge).
std::optional<int> one_skeleton_diameter(const SimplicialComplex& complex);

/// Inclusion-minimal subsets of {1..n} that are not faces, in (size, lex) order.
std::vector<VertexSet> minimal_nonfaces(const SimplicialComplex& complex);

/// A subcomplex Γ generated by some of the parent's facets, so F(Γ) ⊆ F(Δ).
class FacetSubset {
 public:
  /// Throws InputError on an empty selection or an index out of range.
  FacetSubset(const SimplicialComplex& parent, std::vector<std::size_t> selected);

  /// Selected facet indices into the parent's canonical order, ascending.
  std::span<const std::size_t> selected() const { return selected_; }
  bool contains(std::size_t facet_index) const { return member_.at(facet_index); }
  std::size_t parent_facet_count() const { return member_.size(); }
  bool is_full() const { return selected_.size() == member_.size(); }

  /// The generated subcomplex Γ on the parent's vertex universe.
  const SimplicialComplex& complex() const { return complex_; }

 private:
  std::vector<std::size_t> selected_;
  std::vector<bool> member_;
  SimplicialComplex complex_;
};

FacetSubset generated_subcomplex(const SimplicialComplex& complex, std::vector<std::size_t> selected);

/// Every nonempty facet subset, in binary-counting order on the canonical
/// facet order: ordinal k selects the facets whose bits are set in k+1.
class FacetSubsets {
 public:
  /// Throws CapExceeded("facet", cap, |F(Δ)|) when |F(Δ)| > cap.
  explicit FacetSubsets(const SimplicialComplex& complex, std::size_t cap = kDefaultFacetCap);

  std::uint64_t size() const { return (std::uint64_t{1} << complex_->facet_count()) - 1; }
  FacetSubset at(std::uint64_t ordinal) const;
  /// Selection bitmask of the given ordinal.
  static std::uint64_t mask_of(std::uint64_t ordinal) { return ordinal + 1; }

  class iterator {
   public:
    using value_type = FacetSubset;
    using difference_type = std::ptrdiff_t;
    iterator() = default;
    iterator(const FacetSubsets* owner, std::uint64_t ordinal) : owner_(owner), ordinal_(ordinal) {}
    FacetSubset operator*() const { return owner_->at(ordinal_); }
    iterator& operator++() {
      ++ordinal_;
      return *this;
    }
    void operator++(int) { ++ordinal_; }
    friend bool operator==(const iterator& a, const iterator& b) { return a.ordinal_ == b.ordinal_; }

   private:
    const FacetSubsets* owner_ = nullptr;
    std::uint64_t ordinal_ = 0;
  };

  iterator begin() const { return {this, 0}; }
  iterator end() const { return {this, size()}; }

 private:
  const SimplicialComplex* complex_;
};

/// v1,F1,v2,F2,v3,F3,v4,F4 with v_i, v_{i+1} ∈ F_i (indices mod 4).
struct FourCycle {
  std::array<int, 4> vertices{};
  std::array<VertexSet, 4> facets{};
};

/// Exhaustive search for a 4-cycle of distinct vertices and facets that uses
/// G1 and G2 as facets, avoids G1 ∩ G2 in its vertices, and whose facets all
/// contain G1 ∩ G2. Throws InputError unless G1, G2 are facets with
/// |G1 ∩ G2| ≤ dim Δ - 1.
std::optional<FourCycle> four_cycle_witness(const SimplicialComplex& complex, VertexSet g1, VertexSet g2);

}  // namespace cmsym
