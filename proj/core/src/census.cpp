#include "cmsym/census.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <tuple>

#include "cmsym/errors.hpp"

namespace cmsym {

namespace {

constexpr int kCanonicalVertexCap = 8;
// Past 5 vertices the facet-subset loop alone is 2^20 and up.
constexpr int kCensusVertexCap = 5;

std::uint64_t permute(std::uint64_t mask, const std::vector<int>& perm) {
  std::uint64_t out = 0;
  for (std::size_t v = 0; v < perm.size(); ++v) {
    if ((mask >> v) & 1U) out |= std::uint64_t{1} << perm[v];
  }
  return out;
}

}  // namespace

std::vector<std::uint64_t> canonical_form(const SimplicialComplex& complex) {
  const int n = complex.vertex_count();
  if (n > kCanonicalVertexCap) throw CapExceeded("vertex", kCanonicalVertexCap, static_cast<std::size_t>(n));
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::uint64_t> best;
  std::vector<std::uint64_t> image;
  do {
    image.clear();
    for (VertexSet f : complex.facets()) image.push_back(permute(f.bits(), perm));
    std::sort(image.begin(), image.end());
    if (best.empty() || image < best) best = image;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

std::vector<SimplicialComplex> pure_census(int n) {
  if (n < 1) throw InputError("census needs n >= 1");
  if (n > kCensusVertexCap) throw CapExceeded("census vertex", kCensusVertexCap, static_cast<std::size_t>(n));
  const VertexSet all = VertexSet::prefix(n);
  // Keyed by (dimension, facet count, canonical form) for the output order.
  std::set<std::tuple<int, std::size_t, std::vector<std::uint64_t>>> seen;
  for (int size = 1; size < n; ++size) {
    std::vector<VertexSet> candidates;
    for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << n); ++bits) {
      if (std::popcount(bits) == size) candidates.emplace_back(bits);
    }
    const std::uint64_t subsets = std::uint64_t{1} << candidates.size();
    for (std::uint64_t pick = 1; pick < subsets; ++pick) {
      std::vector<VertexSet> facets;
      VertexSet cover;
      for (std::size_t k = 0; k < candidates.size(); ++k) {
        if ((pick >> k) & 1U) {
          facets.push_back(candidates[k]);
          cover = cover | candidates[k];
        }
      }
      if (cover != all) continue;
      const SimplicialComplex complex(n, std::move(facets));
      seen.emplace(size - 1, complex.facet_count(), canonical_form(complex));
    }
  }
  std::vector<SimplicialComplex> out;
  for (const auto& [dim, count, form] : seen) {
    std::vector<VertexSet> facets;
    for (std::uint64_t bits : form) facets.emplace_back(bits);
    out.emplace_back(n, std::move(facets));
  }
  return out;
}

std::vector<SimplicialComplex> pure_census_up_to(int max_n) {
  std::vector<SimplicialComplex> out;
  for (int n = 2; n <= max_n; ++n) {
    auto part = pure_census(n);
    out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  return out;
}

}  // namespace cmsym
