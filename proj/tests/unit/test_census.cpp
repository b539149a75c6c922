#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "cmsym/census.hpp"
#include "cmsym/classify.hpp"
#include "cmsym/errors.hpp"

using namespace cmsym;

TEST_CASE("census sizes") {
  CHECK(pure_census(2).size() == 1);
  CHECK(pure_census(3).size() == 3);
  CHECK(pure_census(4).size() == 11);
  CHECK(pure_census(5).size() == 57);
  CHECK(pure_census_up_to(5).size() == 72);
  CHECK_THROWS_AS(pure_census(6), CapExceeded);
}

TEST_CASE("census members are pure, cover every vertex and are pairwise non-isomorphic") {
  for (int n = 2; n <= 5; ++n) {
    std::vector<std::vector<std::uint64_t>> forms;
    for (const auto& c : pure_census(n)) {
      CHECK(c.is_pure());
      VertexSet cover;
      for (VertexSet f : c.facets()) cover = cover | f;
      CHECK(cover == VertexSet::prefix(n));
      CHECK(c != SimplicialComplex::simplex(n));
      forms.push_back(canonical_form(c));
    }
    std::sort(forms.begin(), forms.end());
    CHECK(std::adjacent_find(forms.begin(), forms.end()) == forms.end());
  }
}

TEST_CASE("canonical form is invariant under relabelling") {
  std::mt19937_64 rng(71);
  for (const auto& c : pure_census_up_to(5)) {
    std::vector<int> labels(static_cast<std::size_t>(c.vertex_count()));
    std::iota(labels.begin(), labels.end(), 1);
    std::shuffle(labels.begin(), labels.end(), rng);
    CHECK(canonical_form(relabel(c, Labelling(labels))) == canonical_form(c));
  }
  CHECK_THROWS_AS(canonical_form(SimplicialComplex::simplex(9)), CapExceeded);
}
