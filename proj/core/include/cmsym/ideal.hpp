#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cmsym/complex.hpp"
#include "cmsym/homology.hpp"

namespace cmsym {

/// x^u for an exponent vector u ∈ ℕⁿ.
class Monomial {
 public:
  Monomial() = default;
  /// Throws InputError on a negative exponent.
  explicit Monomial(std::vector<int> exponents);

  std::size_t size() const { return exponents_.size(); }
  int operator[](std::size_t i) const { return exponents_[i]; }
  const std::vector<int>& exponents() const { return exponents_; }

  bool divides(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;

  friend auto operator<=>(const Monomial&, const Monomial&) = default;

 private:
  std::vector<int> exponents_;
};

std::string to_string(const Monomial& m);

/// A multidegree a ∈ ℤⁿ. Negative entries only matter through
/// G_a = {i : a_i < 0}, so they are normalised to -1 on construction.
class DegreeVector {
 public:
  DegreeVector() = default;
  explicit DegreeVector(std::vector<int> entries);

  std::size_t size() const { return entries_.size(); }
  int operator[](std::size_t i) const { return entries_[i]; }
  const std::vector<int>& entries() const { return entries_; }
  /// True when some entry below -1 was rewritten.
  bool normalised() const { return normalised_; }
  /// G_a
  VertexSet negative_support() const;

  friend bool operator==(const DegreeVector& a, const DegreeVector& b) { return a.entries_ == b.entries_; }
  friend auto operator<=>(const DegreeVector& a, const DegreeVector& b) { return a.entries_ <=> b.entries_; }

 private:
  std::vector<int> entries_;
  bool normalised_ = false;
};

std::string to_string(const DegreeVector& a);

/// One primary component P_F^m of an intersection of prime powers.
struct PrimeComponent {
  VertexSet facet;
  int exponent = 1;

  friend bool operator==(const PrimeComponent&, const PrimeComponent&) = default;
};

/// I = ∩ P_F^{m_F}, where P_F is generated by the variables outside F.
///
/// Components are held in the canonical facet order of the underlying
/// complex Δ(I), so component i belongs to facet i of complex().
class MonomialIdeal {
 public:
  /// Throws InputError on: no components, facet = {1..n} (P_F = 0),
  /// exponent < 1, comparable or repeated facets.
  MonomialIdeal(int n, std::vector<PrimeComponent> components);

  int vertex_count() const { return complex_.vertex_count(); }
  std::span<const PrimeComponent> components() const { return components_; }
  const SimplicialComplex& complex() const { return complex_; }
  /// m_F in canonical facet order.
  std::vector<std::int64_t> exponents() const;
  /// All components share a facet size.
  bool is_unmixed() const { return complex_.is_pure(); }

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  std::vector<PrimeComponent> components_;
  SimplicialComplex complex_;
};

/// "P{3,4}^2 ∩ P{1,2}^1" in component order.
std::string to_string(const MonomialIdeal& ideal);

/// I_Δ^{(m)} = ∩_{F ∈ F(Δ)} P_F^m. Throws InputError for non-pure Δ or m < 1.
MonomialIdeal symbolic_power(const SimplicialComplex& complex, int m);

struct Membership {
  std::vector<bool> per_component;
  bool member = false;
};

/// x^u ∈ P_F^{m_F} ⟺ Σ_{i∉F} u_i ≥ m_F, per component and overall.
Membership contains_monomial(const MonomialIdeal& ideal, const Monomial& u);

/// Minimal monomial generators, by iterated pairwise intersection
/// (lcm of generator pairs, then divisibility reduction). Sorted ascending.
std::vector<Monomial> minimal_generators(const MonomialIdeal& ideal);

/// ρ_j(I): coordinatewise maximum over the minimal generators.
std::vector<int> rho(const MonomialIdeal& ideal);
std::vector<int> rho(std::span<const Monomial> generators, int n);

/// Δ_a from the primary decomposition: generated by F ∖ G_a over facets
/// F ⊇ G_a with Σ_{i∉F} a_i < m_F. Throws InputError if G_a ∉ Δ.
SimplicialComplex delta_a_components(const MonomialIdeal& ideal, const DegreeVector& a);

/// Δ_a from the generators: all F ∖ G_a with F ⊇ G_a such that every
/// minimal generator x^b has some i ∉ F with a_i < b_i.
SimplicialComplex delta_a_generators(const MonomialIdeal& ideal, const DegreeVector& a,
                                     std::span<const Monomial> generators);
SimplicialComplex delta_a_generators(const MonomialIdeal& ideal, const DegreeVector& a);

/// Visits every a of the admissible box in lexicographic order: for each
/// face G ∈ Δ (size, then lex order), a_i = -1 on G and a_j ∈ [0, ρ_j) off G.
/// The visitor returns false to stop.
template <class Visitor>
void for_each_admissible_degree(const SimplicialComplex& complex, std::span<const int> bounds, Visitor&& visit);

/// dim_k H^i_𝔪(S/I)_a at one admissible degree, or zero.
struct LocalCohomologyEntry {
  DegreeVector a;
  int i = 0;
  std::size_t dimension = 0;
};

/// Every nonzero entry over the admissible box.
std::vector<LocalCohomologyEntry> local_cohomology(const MonomialIdeal& ideal, const FieldSpec& field);

struct TakayamaWitness {
  DegreeVector a;
  int degree = 0;  ///< j with H̃_j(Δ_a) ≠ 0 and j < dim Δ - |G_a|
  std::size_t dimension = 0;
};

struct TakayamaVerdict {
  bool cohen_macaulay = false;
  std::optional<TakayamaWitness> witness;
  std::size_t degrees_checked = 0;
};

/// CM test through the local-cohomology formula: for every admissible a,
/// H̃_j(Δ_a) = 0 for all j < dim Δ - |G_a|. The first offending (a, j) in
/// box order is the witness. Throws InputError on a mixed ideal.
TakayamaVerdict takayama_cm_oracle(const MonomialIdeal& ideal, const FieldSpec& field);

// -- implementation ---------------------------------------------------------

template <class Visitor>
void for_each_admissible_degree(const SimplicialComplex& complex, std::span<const int> bounds, Visitor&& visit) {
  const int n = complex.vertex_count();
  for (VertexSet g : complex.faces()) {
    std::vector<int> a(static_cast<std::size_t>(n), 0);
    std::vector<std::size_t> free;
    bool empty_range = false;
    for (int v = 1; v <= n; ++v) {
      const auto idx = static_cast<std::size_t>(v - 1);
      if (g.contains(v)) {
        a[idx] = -1;
      } else if (bounds[idx] <= 0) {
        empty_range = true;
      } else {
        free.push_back(idx);
      }
    }
    if (empty_range) continue;
    while (true) {
      if (!visit(DegreeVector(a))) return;
      // Odometer with the last free coordinate fastest, giving lex order.
      std::size_t k = free.size();
      while (k > 0) {
        const std::size_t idx = free[k - 1];
        if (++a[idx] < bounds[idx]) break;
        a[idx] = 0;
        --k;
      }
      if (k == 0) break;
    }
  }
}

}  // namespace cmsym
