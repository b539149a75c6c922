#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cmsym/complex.hpp"
#include "cmsym/homology.hpp"
#include "cmsym/ideal.hpp"

namespace cmsym::cli {

SimplicialComplex five_cycle();
SimplicialComplex path_three();
SimplicialComplex complete_graph_k4();
/// Six-vertex triangulation of the real projective plane.
SimplicialComplex projective_plane();
/// Boundary of the tetrahedron on {1,2,3,4} plus the triangle {3,4,5}.
SimplicialComplex tetra_flap();
/// ∩ P_F^{m_F} over the edges of K4 in lex order {12,13,14,23,24,34}.
MonomialIdeal tetrahedral_ideal(const std::vector<int>& exponents);

/// Known verdicts; unset fields are reported but not compared.
struct Expectations {
  std::optional<int> diameter{};
  std::optional<bool> matroid{};
  std::optional<bool> tight{};
  std::optional<bool> cm{};
  std::optional<bool> cm2{};
  std::optional<bool> cm3{};
  std::optional<bool> all_m{};
};

struct ComplexEntry {
  std::string name;
  SimplicialComplex complex;
  FieldSpec field;
  Expectations expected;
};

struct IdealEntry {
  std::string name;
  MonomialIdeal ideal;
  std::optional<bool> cm;
};

std::vector<ComplexEntry> complex_corpus();
std::vector<IdealEntry> ideal_corpus();

}  // namespace cmsym::cli
