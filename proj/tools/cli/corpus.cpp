#include "corpus.hpp"

namespace cmsym::cli {

SimplicialComplex five_cycle() {
  return SimplicialComplex::from_lists(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}});
}

SimplicialComplex path_three() { return SimplicialComplex::from_lists(4, {{1, 2}, {2, 3}, {3, 4}}); }

SimplicialComplex complete_graph_k4() { return skeleton(SimplicialComplex::simplex(4), 1); }

SimplicialComplex projective_plane() {
  return SimplicialComplex::from_lists(6, {{1, 2, 3},
                                           {1, 2, 6},
                                           {1, 3, 5},
                                           {1, 4, 5},
                                           {1, 4, 6},
                                           {2, 3, 4},
                                           {2, 4, 5},
                                           {2, 5, 6},
                                           {3, 4, 6},
                                           {3, 5, 6}});
}

SimplicialComplex tetra_flap() {
  return SimplicialComplex::from_lists(5, {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}, {3, 4, 5}});
}

MonomialIdeal tetrahedral_ideal(const std::vector<int>& exponents) {
  const SimplicialComplex k4 = complete_graph_k4();
  std::vector<PrimeComponent> components;
  for (std::size_t i = 0; i < k4.facet_count(); ++i) {
    components.push_back({k4.facet(i), exponents.at(i)});
  }
  return MonomialIdeal(4, std::move(components));
}

std::vector<ComplexEntry> complex_corpus() {
  const FieldSpec q = FieldSpec::rationals();
  const FieldSpec f2 = FieldSpec::prime(2);
  const Expectations skeleton_expected{.matroid = true, .cm = true, .cm2 = true, .cm3 = true, .all_m = true};
  return {
      {"C5", five_cycle(), q, {.diameter = 2, .matroid = false, .tight = false, .cm2 = true, .cm3 = false, .all_m = false}},
      {"path-3", path_three(), q, {.diameter = 3, .cm2 = false}},
      {"K4", complete_graph_k4(), q, {.matroid = true, .cm2 = true, .cm3 = true, .all_m = true}},
      {"RP2", projective_plane(), q, {.diameter = 1, .cm = true, .cm2 = false}},
      {"RP2", projective_plane(), f2, {.diameter = 1, .cm = false, .cm2 = false}},
      {"tetra-flap", tetra_flap(), q, {.tight = true, .cm2 = true, .cm3 = false}},
      {"skel0(simplex4)", skeleton(SimplicialComplex::simplex(4), 0), q, skeleton_expected},
      {"skel1(simplex5)", skeleton(SimplicialComplex::simplex(5), 1), q, skeleton_expected},
      {"skel2(simplex5)", skeleton(SimplicialComplex::simplex(5), 2), q, skeleton_expected},
  };
}

std::vector<IdealEntry> ideal_corpus() {
  return {
      {"tetrahedral(1,1,1,1,1,1)", tetrahedral_ideal({1, 1, 1, 1, 1, 1}), true},
      {"tetrahedral(2,1,1,1,1,2)", tetrahedral_ideal({2, 1, 1, 1, 1, 2}), std::nullopt},
      {"tetrahedral(1,2,2,2,2,1)", tetrahedral_ideal({1, 2, 2, 2, 2, 1}), std::nullopt},
      {"two-disjoint-edges", MonomialIdeal(4, {{VertexSet::of({1, 2}), 2}, {VertexSet::of({3, 4}), 1}}), false},
  };
}

}  // namespace cmsym::cli
