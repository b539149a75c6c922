#include "cmsym/complex.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include "cmsym/errors.hpp"

namespace cmsym {

namespace {

void sort_canonical(std::vector<VertexSet>& sets) {
  std::sort(sets.begin(), sets.end(), lex_less);
}

// Keeps the inclusion-maximal members, canonical order, no duplicates.
std::vector<VertexSet> maximal_members(std::vector<VertexSet> sets) {
  std::sort(sets.begin(), sets.end(), [](VertexSet a, VertexSet b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a.bits() < b.bits();
  });
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<VertexSet> kept;
  for (VertexSet s : sets) {
    const bool dominated = std::any_of(kept.begin(), kept.end(), [&](VertexSet k) { return s.subset_of(k); });
    if (!dominated) kept.push_back(s);
  }
  sort_canonical(kept);
  return kept;
}

void check_vertex_count(int n) {
  if (n < 1 || n > kMaxVertices) {
    throw InputError("vertex count " + std::to_string(n) + " outside 1.." + std::to_string(kMaxVertices));
  }
}

}  // namespace

SimplicialComplex::SimplicialComplex(int n, std::vector<VertexSet> facets) : n_(n) {
  check_vertex_count(n);
  if (facets.empty()) throw InputError("facet list is empty");
  const VertexSet universe = VertexSet::prefix(n);
  for (VertexSet f : facets) {
    if (!f.subset_of(universe)) {
      throw InputError("facet " + to_string(f) + " has a vertex outside 1.." + std::to_string(n));
    }
  }
  facets_ = maximal_members(std::move(facets));
}

SimplicialComplex::SimplicialComplex(Unchecked, int n, std::vector<VertexSet> facets)
    : n_(n), facets_(std::move(facets)) {}

SimplicialComplex SimplicialComplex::from_lists(int n, const std::vector<std::vector<int>>& facets) {
  std::vector<VertexSet> sets;
  sets.reserve(facets.size());
  for (const auto& f : facets) {
    for (int v : f) {
      if (v < 1 || v > n) {
        throw InputError("vertex " + std::to_string(v) + " outside 1.." + std::to_string(n));
      }
    }
    sets.push_back(VertexSet::of(std::span<const int>(f)));
  }
  return SimplicialComplex(n, std::move(sets));
}

SimplicialComplex SimplicialComplex::void_complex(int n) {
  check_vertex_count(n);
  return SimplicialComplex(Unchecked{}, n, {});
}

SimplicialComplex SimplicialComplex::simplex(int n) { return SimplicialComplex(n, {VertexSet::prefix(n)}); }

int SimplicialComplex::dimension() const {
  if (facets_.empty()) return kVoidDimension;
  int top = 0;
  for (VertexSet f : facets_) top = std::max(top, f.size());
  return top - 1;
}

bool SimplicialComplex::is_pure() const {
  return std::all_of(facets_.begin(), facets_.end(), [&](VertexSet f) { return f.size() == facets_.front().size(); });
}

VertexSet SimplicialComplex::support() const {
  VertexSet out;
  for (VertexSet f : facets_) out = out | f;
  return out;
}

bool SimplicialComplex::contains_face(VertexSet face) const {
  return std::any_of(facets_.begin(), facets_.end(), [&](VertexSet f) { return face.subset_of(f); });
}

std::optional<std::size_t> SimplicialComplex::facet_index(VertexSet facet) const {
  auto it = std::lower_bound(facets_.begin(), facets_.end(), facet, lex_less);
  if (it == facets_.end() || *it != facet) return std::nullopt;
  return static_cast<std::size_t>(it - facets_.begin());
}

std::vector<VertexSet> SimplicialComplex::faces() const {
  std::unordered_set<std::uint64_t> seen;
  std::vector<VertexSet> out;
  for (VertexSet f : facets_) {
    // Enumerate all submasks of f.
    std::uint64_t sub = f.bits();
    while (true) {
      if (seen.insert(sub).second) out.emplace_back(sub);
      if (sub == 0) break;
      sub = (sub - 1) & f.bits();
    }
  }
  std::sort(out.begin(), out.end(), [](VertexSet a, VertexSet b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return lex_less(a, b);
  });
  return out;
}

std::vector<VertexSet> SimplicialComplex::faces_of_dimension(int j) const {
  std::vector<VertexSet> out;
  for (VertexSet f : faces()) {
    if (f.size() == j + 1) out.push_back(f);
  }
  return out;
}

std::string to_string(const SimplicialComplex& complex) {
  if (complex.is_void()) return "void";
  std::string out = "<";
  for (std::size_t i = 0; i < complex.facet_count(); ++i) {
    if (i) out += ',';
    out += to_string(complex.facet(i));
  }
  return out + ">";
}

SimplicialComplex link(const SimplicialComplex& complex, VertexSet face) {
  if (!complex.contains_face(face)) {
    throw InputError(to_string(face) + " is not a face");
  }
  std::vector<VertexSet> facets;
  for (VertexSet f : complex.facets()) {
    if (face.subset_of(f)) facets.push_back(f - face);
  }
  return SimplicialComplex(complex.vertex_count(), std::move(facets));
}

SimplicialComplex restrict_to(const SimplicialComplex& complex, VertexSet v) {
  if (v.size() < 2) throw InputError("restriction needs |V| >= 2");
  if (!v.subset_of(VertexSet::prefix(complex.vertex_count()))) {
    throw InputError("restriction set " + to_string(v) + " outside the vertex universe");
  }
  std::vector<VertexSet> facets;
  for (VertexSet f : complex.facets()) {
    if ((f & v).size() >= v.size() - 1) facets.push_back(f);
  }
  if (facets.empty()) return SimplicialComplex::void_complex(complex.vertex_count());
  return SimplicialComplex(complex.vertex_count(), std::move(facets));
}

SimplicialComplex skeleton(const SimplicialComplex& complex, int d) {
  if (complex.is_void() || d < 0 || d > complex.dimension()) {
    throw InputError("skeleton dimension " + std::to_string(d) + " out of range");
  }
  std::vector<VertexSet> facets;
  for (VertexSet f : complex.faces()) {
    if (f.size() == d + 1 || (f.size() <= d + 1 && complex.facet_index(f))) facets.push_back(f);
  }
  return SimplicialComplex(complex.vertex_count(), std::move(facets));
}

SimplicialComplex join(const SimplicialComplex& lhs, const SimplicialComplex& rhs) {
  const int n = lhs.vertex_count() + rhs.vertex_count();
  if (n > kMaxVertices) throw InputError("join exceeds " + std::to_string(kMaxVertices) + " vertices");
  if (lhs.is_void() || rhs.is_void()) return SimplicialComplex::void_complex(n);
  std::vector<VertexSet> facets;
  facets.reserve(lhs.facet_count() * rhs.facet_count());
  for (VertexSet f : lhs.facets()) {
    for (VertexSet g : rhs.facets()) {
      facets.emplace_back(f.bits() | (g.bits() << lhs.vertex_count()));
    }
  }
  return SimplicialComplex(n, std::move(facets));
}

std::optional<int> one_skeleton_diameter(const SimplicialComplex& complex) {
  const int n = complex.vertex_count();
  std::vector<VertexSet> adjacent(static_cast<std::size_t>(n) + 1);
  for (VertexSet f : complex.facets()) {
    f.for_each([&](int v) { adjacent[v] = adjacent[v] | f.without(v); });
  }
  if (n == 1) return complex.support().contains(1) ? std::optional<int>(0) : std::nullopt;
  int diameter = 0;
  for (int source = 1; source <= n; ++source) {
    std::vector<int> dist(static_cast<std::size_t>(n) + 1, -1);
    std::deque<int> queue{source};
    dist[source] = 0;
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      adjacent[u].for_each([&](int w) {
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          queue.push_back(w);
        }
      });
    }
    for (int v = 1; v <= n; ++v) {
      if (dist[v] < 0) return std::nullopt;
      diameter = std::max(diameter, dist[v]);
    }
  }
  return diameter;
}

std::vector<VertexSet> minimal_nonfaces(const SimplicialComplex& complex) {
  // A nonface is minimal iff removing any single vertex yields a face.
  const int n = complex.vertex_count();
  std::vector<VertexSet> out;
  const std::uint64_t limit = n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n);
  if (n > 24) throw CapExceeded("vertex", 24, static_cast<std::size_t>(n));
  for (std::uint64_t bits = 0; bits < limit; ++bits) {
    const VertexSet s(bits);
    if (complex.contains_face(s)) continue;
    bool minimal = true;
    s.for_each([&](int v) { minimal = minimal && complex.contains_face(s.without(v)); });
    if (minimal) out.push_back(s);
  }
  std::sort(out.begin(), out.end(), [](VertexSet a, VertexSet b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return lex_less(a, b);
  });
  return out;
}

FacetSubset::FacetSubset(const SimplicialComplex& parent, std::vector<std::size_t> selected)
    : selected_(std::move(selected)),
      member_(parent.facet_count(), false),
      complex_(SimplicialComplex::void_complex(parent.vertex_count())) {
  if (selected_.empty()) throw InputError("facet selection is empty");
  std::sort(selected_.begin(), selected_.end());
  selected_.erase(std::unique(selected_.begin(), selected_.end()), selected_.end());
  std::vector<VertexSet> facets;
  for (std::size_t i : selected_) {
    if (i >= parent.facet_count()) {
      throw InputError("facet index " + std::to_string(i) + " out of range (complex has " +
                       std::to_string(parent.facet_count()) + " facets)");
    }
    member_[i] = true;
    facets.push_back(parent.facet(i));
  }
  complex_ = SimplicialComplex(parent.vertex_count(), std::move(facets));
}

FacetSubset generated_subcomplex(const SimplicialComplex& complex, std::vector<std::size_t> selected) {
  return FacetSubset(complex, std::move(selected));
}

FacetSubsets::FacetSubsets(const SimplicialComplex& complex, std::size_t cap) : complex_(&complex) {
  const std::size_t hard_limit = 62;
  if (complex.facet_count() > std::min(cap, hard_limit)) {
    throw CapExceeded("facet", std::min(cap, hard_limit), complex.facet_count());
  }
}

FacetSubset FacetSubsets::at(std::uint64_t ordinal) const {
  std::vector<std::size_t> selected;
  const std::uint64_t mask = mask_of(ordinal);
  for (std::size_t i = 0; i < complex_->facet_count(); ++i) {
    if ((mask >> i) & 1U) selected.push_back(i);
  }
  return FacetSubset(*complex_, std::move(selected));
}

std::optional<FourCycle> four_cycle_witness(const SimplicialComplex& complex, VertexSet g1, VertexSet g2) {
  if (!complex.facet_index(g1) || !complex.facet_index(g2)) {
    throw InputError("four-cycle search needs two facets");
  }
  const VertexSet common = g1 & g2;
  if (complex.is_void() || common.size() > complex.dimension() - 1) {
    throw InputError("four-cycle search needs |G1 ∩ G2| <= dim - 1");
  }
  // In such a cycle G1 and G2 cannot be adjacent (adjacent facets share a
  // cycle vertex, which would lie in G1 ∩ G2), so the shape is
  // v1, G1, v2, F2, v3, G2, v4, F4 with v1,v2 ∈ G1∖G2 and v3,v4 ∈ G2∖G1.
  const std::vector<int> left = (g1 - g2).vertices();
  const std::vector<int> right = (g2 - g1).vertices();
  auto bridging = [&](int a, int b, VertexSet exclude) -> std::optional<VertexSet> {
    const VertexSet need = common.with(a).with(b);
    for (VertexSet f : complex.facets()) {
      if (f != g1 && f != g2 && f != exclude && need.subset_of(f)) return f;
    }
    return std::nullopt;
  };
  for (int v1 : left) {
    for (int v2 : left) {
      if (v2 == v1) continue;
      for (int v3 : right) {
        for (int v4 : right) {
          if (v4 == v3) continue;
          // Try every F2 so an F4 distinct from it can still be found.
          const VertexSet need2 = common.with(v2).with(v3);
          for (VertexSet f2 : complex.facets()) {
            if (f2 == g1 || f2 == g2 || !need2.subset_of(f2)) continue;
            if (auto f4 = bridging(v4, v1, f2)) {
              return FourCycle{{v1, v2, v3, v4}, {g1, f2, g2, *f4}};
            }
          }
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace cmsym
