#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "cmsym/complex.hpp"
#include "cmsym/ideal.hpp"
#include "cmsym/lp.hpp"
#include "cmsym/rational.hpp"

namespace cmsym {

using LatticePoint = std::vector<std::int64_t>;

/// coefficients·a ≥ bound (weak) or coefficients·a < bound (strict).
struct LinearRow {
  std::vector<int> coefficients;
  std::int64_t bound = 0;

  std::int64_t evaluate(std::span<const std::int64_t> a) const;
  friend bool operator==(const LinearRow&, const LinearRow&) = default;
};

/// Inequalities over unknowns a ∈ ℕⁿ.
struct LinearSystem {
  int n = 0;
  std::vector<LinearRow> weak;
  std::vector<LinearRow> strict;

  bool satisfied_by(std::span<const std::int64_t> a) const;
  /// Largest bound over all rows, or 0 for an empty system.
  std::int64_t max_bound() const;
  /// Every coefficient is 0 or 1.
  bool is_incidence() const;

  friend bool operator==(const LinearSystem&, const LinearSystem&) = default;
};

/// L_Γ: Σ_{i∉F} a_i ≥ m_F for F ∈ F(Δ)∖F(Γ) and Σ_{i∉G} a_i < m_G for
/// G ∈ F(Γ). Rows follow the canonical facet order. `exponents` is indexed
/// by facet; throws InputError on a length mismatch or a foreign Γ.
LinearSystem build_L_system(const SimplicialComplex& complex, const FacetSubset& gamma,
                            std::span<const std::int64_t> exponents);
LinearSystem build_L_system(const MonomialIdeal& ideal, const FacetSubset& gamma);

/// Exhaustive depth-first search of [0, M]ⁿ, M = max bound, coordinates
/// fixed in index order with values ascending, pruned by row residuals.
/// Any solution clamps into this box, so nullopt means no solution in ℕⁿ.
/// Throws InputError unless the system has 0/1 coefficients.
std::optional<LatticePoint> integer_feasible(const LinearSystem& system);

/// Multiplier on the pair row (F ∈ Δ∖Γ, G ∈ Γ) of the strict system.
struct PairMultiplier {
  std::size_t outside = 0;  ///< facet index of F
  std::size_t inside = 0;   ///< facet index of G
  Rational y;
};

struct StrictVerdict {
  /// True when Γ = Δ: there are no pair rows and nothing was solved.
  bool vacuous = false;
  bool feasible = false;
  /// t* = max over a ≥ 0, Σa = 1 of min over pairs of Σ_{i∉F} a_i - Σ_{i∉G} a_i.
  Rational optimum;
  /// Optimal a, normalised to Σa = 1.
  std::vector<Rational> direction;
  /// Optimal dual values of the pair rows, nonzero entries only.
  std::vector<PairMultiplier> multipliers;
  std::size_t pivots = 0;
};

/// The exact LP behind strict_homogeneous_feasible: variables a_1..a_n, u,
/// maximise u subject to (χ_F - χ_G)·a + u ≤ 1 per pair and Σa = 1, so
/// t* = u* - 1. Pair rows come first, in (F, G) facet-index order.
LpProblem strict_system_lp(const SimplicialComplex& complex, const FacetSubset& gamma);

/// Decides whether some real a ≥ 0 satisfies Σ_{i∉F} a_i > Σ_{i∉G} a_i for
/// every pair. Every solve is re-checked exactly (primal rows, dual
/// feasibility, zero gap); a failed check throws std::logic_error.
/// Requires a pure complex.
StrictVerdict strict_homogeneous_feasible(const SimplicialComplex& complex, const FacetSubset& gamma);

/// Equal-size multisets F_1..F_s from F(Δ)∖F(Γ) and G_1..G_s from F(Γ) with
/// Σ χ_{F_k} = Σ χ_{G_k}. Facets are stored as indices, ascending.
class IncidenceCertificate {
 public:
  /// Throws InputError unless the identity holds, sides have equal positive
  /// size, and each index lies on its side of Γ.
  IncidenceCertificate(const SimplicialComplex& complex, const FacetSubset& gamma, std::vector<std::size_t> outside,
                       std::vector<std::size_t> inside);

  std::size_t s() const { return outside_.size(); }
  std::span<const std::size_t> outside() const { return outside_; }
  std::span<const std::size_t> inside() const { return inside_; }
  std::span<const VertexSet> outside_facets() const { return outside_facets_; }
  std::span<const VertexSet> inside_facets() const { return inside_facets_; }
  /// The common incidence sum, one entry per vertex.
  const std::vector<int>& incidence_sum() const { return sum_; }

  static bool holds(const SimplicialComplex& complex, const FacetSubset& gamma, std::span<const std::size_t> outside,
                    std::span<const std::size_t> inside);

 private:
  std::vector<std::size_t> outside_;
  std::vector<std::size_t> inside_;
  std::vector<VertexSet> outside_facets_;
  std::vector<VertexSet> inside_facets_;
  std::vector<int> sum_;
};

/// Certificate from the optimal duals of an infeasible strict system:
/// denominators cleared, divided by their gcd, expanded into multisets.
/// Throws InputError when the system is feasible or vacuous.
IncidenceCertificate motzkin_certificate(const SimplicialComplex& complex, const FacetSubset& gamma,
                                         const StrictVerdict& verdict);
IncidenceCertificate motzkin_certificate(const SimplicialComplex& complex, const FacetSubset& gamma);

/// Independent search: multisets of size s = 1..s_max on both sides,
/// smallest s first, then lexicographic on the outside multiset.
std::optional<IncidenceCertificate> brute_force_certificate_search(const SimplicialComplex& complex,
                                                                   const FacetSubset& gamma, std::size_t s_max);

struct LatticeWitness {
  LatticePoint point;
  std::int64_t m = 0;
};

/// Scales a feasible strict direction to integers and takes
/// m = min_{F∉Γ} Σ_{i∉F} a_i, so the point lies in L_Γ(I_Δ^{(m)}).
/// Throws InputError unless the verdict is feasible and not vacuous.
LatticeWitness lattice_witness(const SimplicialComplex& complex, const FacetSubset& gamma,
                               const StrictVerdict& verdict);

}  // namespace cmsym
