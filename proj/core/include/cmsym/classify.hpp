#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "cmsym/complex.hpp"
#include "cmsym/feasibility.hpp"
#include "cmsym/homology.hpp"
#include "cmsym/ideal.hpp"
#include "cmsym/rational.hpp"

namespace cmsym {

enum class Route { DegreeBox, Subcomplex, Structural };

std::string_view route_name(Route route);
/// Inverse of route_name.
std::optional<Route> parse_route(std::string_view name);

/// Δ_a is not CM; `homology` is its first failing link.
struct BoxWitness {
  std::vector<int> a;
  HomologyWitness homology;

  friend bool operator==(const BoxWitness&, const BoxWitness&) = default;
};

/// Γ is not CM and `point` lies in L_Γ(I).
struct SubcomplexWitness {
  std::vector<std::size_t> gamma;
  LatticePoint point;
  HomologyWitness homology;

  friend bool operator==(const SubcomplexWitness&, const SubcomplexWitness&) = default;
};

/// Δ_V is not CM; an empty V stands for Δ itself.
struct StructuralWitness {
  VertexSet v;
  HomologyWitness homology;

  friend bool operator==(const StructuralWitness&, const StructuralWitness&) = default;
};

using Witness = std::variant<BoxWitness, SubcomplexWitness, StructuralWitness>;

struct CMReport {
  std::string ideal;
  FieldSpec field = FieldSpec::rationals();
  bool cohen_macaulay = false;
  Route route = Route::DegreeBox;
  std::optional<Witness> witness;
  std::int64_t elapsed_us = 0;

  friend bool operator==(const CMReport&, const CMReport&) = default;
};

/// Re-checks a not-CM witness from scratch against the ideal it describes:
/// the homology witness is recomputed, and a lattice point must lie in
/// exactly the components outside Γ. Always true for CM reports.
bool witness_holds(const MonomialIdeal& ideal, const CMReport& report);

/// Every route that applies, in headline order, all with one verdict.
struct CheckOutcome {
  bool cohen_macaulay = false;
  std::vector<CMReport> reports;
};

/// A basis-exchange failure: no y ∈ G∖F makes (F∖{x}) ∪ {y} a facet.
struct ExchangeFailure {
  VertexSet f;
  VertexSet g;
  int x = 0;

  friend bool operator==(const ExchangeFailure&, const ExchangeFailure&) = default;
};

struct MatroidVerdict {
  bool matroid = false;
  std::optional<ExchangeFailure> failure;
};

struct AllSymbolicReport {
  bool all_cm = false;
  /// First route: basis exchange.
  MatroidVerdict matroid;
  /// Second route. When some power fails: the first facet subset whose
  /// strict system is feasible (Δ itself, with point 0 and m = 1, when Δ is
  /// not CM), a lattice point and the power m it refutes.
  std::optional<SubcomplexWitness> witness;
  std::int64_t witness_m = 0;
  /// When every power is CM: number of non-CM proper facet subsets whose
  /// incidence certificate was extracted and verified.
  std::size_t certified = 0;
};

/// A bijective relabelling; label(v) ∈ {1..n} for v ∈ {1..n}.
class Labelling {
 public:
  /// Throws InputError unless labels is a permutation of 1..n.
  explicit Labelling(std::vector<int> labels);
  static Labelling identity(int n);

  int size() const { return static_cast<int>(labels_.size()); }
  int label(int v) const { return labels_.at(static_cast<std::size_t>(v - 1)); }
  const std::vector<int>& labels() const { return labels_; }

  friend bool operator==(const Labelling&, const Labelling&) = default;

 private:
  std::vector<int> labels_;
};

/// The same complex with vertex v renamed label(v).
SimplicialComplex relabel(const SimplicialComplex& complex, const Labelling& labelling);

struct Thresholds {
  BigInt t_down;  ///< (m-1)^2 + 1
  BigInt t_all;   ///< (n-d)^(n+1)
};

inline constexpr std::size_t kDefaultLabellingCap = 8;

struct ClassifierOptions {
  std::size_t facet_cap = kDefaultFacetCap;
  std::size_t labelling_cap = kDefaultLabellingCap;
  unsigned jobs = 1;
};

/// Decision procedures over one field, sharing a CM cache. Searches report
/// the first witness in their enumeration order whatever the worker count.
class Classifier {
 public:
  explicit Classifier(FieldSpec field, ClassifierOptions options = {});

  const FieldSpec& field() const { return oracle_->field(); }
  const ClassifierOptions& options() const { return options_; }
  const CmOracle& oracle() const { return *oracle_; }

  /// Δ_a over a ∈ [0, m-1]ⁿ, a lex order. Requires pure Δ, m ≥ 1.
  CMReport box(const SimplicialComplex& complex, int m) const;
  /// Δ_a over a_j ∈ [0, max(ρ_j, 1)). Requires an unmixed ideal.
  CMReport box(const MonomialIdeal& ideal) const;

  /// Every facet subset Γ in binary-counting order, Γ = Δ included: a
  /// non-CM Γ with L_Γ(I) ≠ ∅ is a witness. Throws CapExceeded past the cap.
  CMReport subcomplex(const SimplicialComplex& complex, int m) const;
  CMReport subcomplex(const MonomialIdeal& ideal) const;

  /// Second power only: Δ_V for |V| from dim Δ + 1 down to 2, each size in
  /// reverse lexicographic order, then Δ itself. Void Δ_V are skipped.
  CMReport structural(const SimplicialComplex& complex) const;

  /// Box route, the subcomplex route when |F(Δ)| ≤ cap, and at m = 2 the
  /// structural route first. Throws RouteDisagreement on a split verdict.
  CheckOutcome check(const SimplicialComplex& complex, int m) const;

  /// Both all-powers routes; throws RouteDisagreement if they differ.
  AllSymbolicReport all_symbolic(const SimplicialComplex& complex) const;

 private:
  CMReport box_over(const MonomialIdeal& ideal, const std::vector<int>& bounds, std::string description) const;
  CMReport subcomplex_over(const MonomialIdeal& ideal, std::string description) const;

  ClassifierOptions options_;
  std::unique_ptr<CmOracle> oracle_;
};

std::string describe_symbolic_power(const SimplicialComplex& complex, int m);

CMReport is_cm_symbolic_box(const SimplicialComplex& complex, int m, const FieldSpec& field);
CMReport is_cm_symbolic_subcomplex(const SimplicialComplex& complex, int m, const FieldSpec& field,
                                   std::size_t facet_cap = kDefaultFacetCap);
CMReport is_cm_second_structural(const SimplicialComplex& complex, const FieldSpec& field);
AllSymbolicReport all_symbolic_cm(const SimplicialComplex& complex, const FieldSpec& field,
                                  std::size_t facet_cap = kDefaultFacetCap);

/// diam ≤ 2 for the 1-skeleton; necessary for CM of the second power.
bool diameter_necessary(const SimplicialComplex& complex);

/// Basis exchange over facet pairs; the first failure in (F, G, x) order
/// is reported. Requires a pure complex.
MatroidVerdict is_matroid(const SimplicialComplex& complex);

/// For all facets G1, G2 and i ∈ G1∖G2, j ∈ G2∖G1 with label(i) < label(j),
/// some j' ∈ G1∖G2 makes (G2∖{j}) ∪ {j'} a facet. Requires a pure complex.
bool is_tight(const SimplicialComplex& complex, const Labelling& labelling);

/// Labellings in lexicographic order of the label vector; first tight one.
/// Throws CapExceeded("labelling", cap, n) when n > cap.
std::optional<Labelling> find_tight_labelling(const SimplicialComplex& complex,
                                              std::size_t cap = kDefaultLabellingCap);

/// (F∖{i}) ∪ {j} ∈ Δ for every face F, i ∈ F and label(j) < label(i).
bool is_shifted(const SimplicialComplex& complex, const Labelling& labelling);

/// All minimal nonfaces have two elements.
bool is_flag(const SimplicialComplex& complex);

/// For flag Δ: every component of the minimal-nonface graph is a clique.
/// Throws InputError when Δ is not flag.
bool flag_all_symbolic(const SimplicialComplex& complex);

/// Throws InputError unless m ≥ 1 and 0 ≤ d < n.
Thresholds preservation_thresholds(int m, int n, int d);

}  // namespace cmsym
