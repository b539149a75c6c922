#pragma once

#include <cstdint>
#include <vector>

#include "cmsym/complex.hpp"

namespace cmsym {

/// Sorted facet bitmasks minimised over all vertex permutations; equal for
/// isomorphic complexes on the same n. Throws CapExceeded("vertex", 8, n) past 8.
std::vector<std::uint64_t> canonical_form(const SimplicialComplex& complex);

/// One representative per isomorphism class of pure complexes whose facets
/// cover all of {1..n}, the full simplex excluded. Ordered by dimension,
/// then facet count, then canonical form; each representative is given in
/// its canonical labelling. Throws CapExceeded("census vertex", 5, n) past 5.
std::vector<SimplicialComplex> pure_census(int n);

/// pure_census(2) .. pure_census(max_n), concatenated.
std::vector<SimplicialComplex> pure_census_up_to(int max_n);

}  // namespace cmsym
