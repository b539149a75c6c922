#include "cmsym/ideal.hpp"

#include <algorithm>

#include "cmsym/errors.hpp"

namespace cmsym {

Monomial::Monomial(std::vector<int> exponents) : exponents_(std::move(exponents)) {
  if (std::any_of(exponents_.begin(), exponents_.end(), [](int e) { return e < 0; })) {
    throw InputError("monomial exponent must be nonnegative");
  }
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    if (exponents_[i] > other.exponents_[i]) return false;
  }
  return true;
}

Monomial Monomial::lcm(const Monomial& other) const {
  std::vector<int> out(exponents_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = std::max(exponents_[i], other.exponents_[i]);
  return Monomial(std::move(out));
}

std::string to_string(const Monomial& m) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    out += "x" + std::to_string(i + 1);
    if (m[i] > 1) out += "^" + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

DegreeVector::DegreeVector(std::vector<int> entries) : entries_(std::move(entries)) {
  for (int& e : entries_) {
    if (e < -1) {
      e = -1;
      normalised_ = true;
    }
  }
}

VertexSet DegreeVector::negative_support() const {
  VertexSet g;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i] < 0) g = g.with(static_cast<int>(i) + 1);
  }
  return g;
}

std::string to_string(const DegreeVector& a) {
  std::string out = "(";
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(a[i]);
  }
  return out + ")";
}

namespace {

SimplicialComplex complex_of(int n, const std::vector<PrimeComponent>& components) {
  if (components.empty()) throw InputError("ideal has no components");
  std::vector<VertexSet> facets;
  for (const auto& c : components) {
    if (c.exponent < 1) throw InputError("component exponent must be >= 1");
    if (c.facet == VertexSet::prefix(n)) {
      throw InputError("component facet equals {1.." + std::to_string(n) + "}, so P_F would be zero");
    }
    facets.push_back(c.facet);
  }
  for (std::size_t i = 0; i < facets.size(); ++i) {
    for (std::size_t j = 0; j < facets.size(); ++j) {
      if (i != j && facets[i].subset_of(facets[j])) {
        throw InputError("component facets " + to_string(facets[i]) + " and " + to_string(facets[j]) +
                         " are comparable");
      }
    }
  }
  return SimplicialComplex(n, std::move(facets));
}

void check_length(const MonomialIdeal& ideal, std::size_t size) {
  if (size != static_cast<std::size_t>(ideal.vertex_count())) {
    throw InputError("vector length " + std::to_string(size) + " does not match " +
                     std::to_string(ideal.vertex_count()) + " variables");
  }
}

// Σ_{i ∉ F} a_i over the nonnegative entries (entries in F are skipped).
std::int64_t outside_sum(VertexSet facet, const std::vector<int>& a) {
  std::int64_t sum = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!facet.contains(static_cast<int>(i) + 1)) sum += a[i];
  }
  return sum;
}

std::vector<Monomial> reduce(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < gens.size() && !redundant; ++j) {
      redundant = j != i && gens[j].divides(gens[i]);
    }
    if (!redundant) out.push_back(gens[i]);
  }
  return out;
}

// All degree-m monomials in the variables outside F.
std::vector<Monomial> prime_power_generators(int n, VertexSet facet, int m) {
  std::vector<int> vars;
  for (int v = 1; v <= n; ++v) {
    if (!facet.contains(v)) vars.push_back(v - 1);
  }
  std::vector<Monomial> out;
  std::vector<int> exps(static_cast<std::size_t>(n), 0);
  auto place = [&](auto&& self, std::size_t k, int remaining) -> void {
    const auto var = static_cast<std::size_t>(vars[k]);
    if (k + 1 == vars.size()) {
      exps[var] = remaining;
      out.emplace_back(exps);
      exps[var] = 0;
      return;
    }
    for (int e = remaining; e >= 0; --e) {
      exps[var] = e;
      self(self, k + 1, remaining - e);
    }
    exps[var] = 0;
  };
  place(place, 0, m);
  return out;
}

}  // namespace

MonomialIdeal::MonomialIdeal(int n, std::vector<PrimeComponent> components)
    : complex_(complex_of(n, components)) {
  std::sort(components.begin(), components.end(),
            [](const PrimeComponent& a, const PrimeComponent& b) { return lex_less(a.facet, b.facet); });
  components_ = std::move(components);
}

std::vector<std::int64_t> MonomialIdeal::exponents() const {
  std::vector<std::int64_t> out;
  out.reserve(components_.size());
  for (const auto& c : components_) out.push_back(c.exponent);
  return out;
}

std::string to_string(const MonomialIdeal& ideal) {
  std::string out;
  for (const auto& c : ideal.components()) {
    if (!out.empty()) out += " ∩ ";
    out += "P" + to_string(c.facet) + "^" + std::to_string(c.exponent);
  }
  return out;
}

MonomialIdeal symbolic_power(const SimplicialComplex& complex, int m) {
  if (m < 1) throw InputError("symbolic power exponent must be >= 1");
  if (complex.is_void() || !complex.is_pure()) {
    throw InputError("symbolic powers are only supported for pure complexes");
  }
  std::vector<PrimeComponent> components;
  for (VertexSet f : complex.facets()) components.push_back({f, m});
  return MonomialIdeal(complex.vertex_count(), std::move(components));
}

Membership contains_monomial(const MonomialIdeal& ideal, const Monomial& u) {
  check_length(ideal, u.size());
  Membership out;
  out.member = true;
  for (const auto& c : ideal.components()) {
    const bool in = outside_sum(c.facet, u.exponents()) >= c.exponent;
    out.per_component.push_back(in);
    out.member = out.member && in;
  }
  return out;
}

std::vector<Monomial> minimal_generators(const MonomialIdeal& ideal) {
  const int n = ideal.vertex_count();
  std::vector<Monomial> current;
  bool first = true;
  for (const auto& c : ideal.components()) {
    auto next = prime_power_generators(n, c.facet, c.exponent);
    if (first) {
      current = reduce(std::move(next));
      first = false;
      continue;
    }
    std::vector<Monomial> products;
    products.reserve(current.size() * next.size());
    for (const auto& g : current) {
      for (const auto& h : next) products.push_back(g.lcm(h));
    }
    current = reduce(std::move(products));
  }
  return current;
}

std::vector<int> rho(std::span<const Monomial> generators, int n) {
  std::vector<int> out(static_cast<std::size_t>(n), 0);
  for (const auto& g : generators) {
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = std::max(out[i], g[i]);
  }
  return out;
}

std::vector<int> rho(const MonomialIdeal& ideal) {
  const auto gens = minimal_generators(ideal);
  return rho(gens, ideal.vertex_count());
}

SimplicialComplex delta_a_components(const MonomialIdeal& ideal, const DegreeVector& a) {
  check_length(ideal, a.size());
  const VertexSet g = a.negative_support();
  if (!ideal.complex().contains_face(g)) throw InputError("G_a = " + to_string(g) + " is not a face");
  std::vector<VertexSet> facets;
  for (const auto& c : ideal.components()) {
    if (g.subset_of(c.facet) && outside_sum(c.facet, a.entries()) < c.exponent) facets.push_back(c.facet - g);
  }
  if (facets.empty()) return SimplicialComplex::void_complex(ideal.vertex_count());
  return SimplicialComplex(ideal.vertex_count(), std::move(facets));
}

SimplicialComplex delta_a_generators(const MonomialIdeal& ideal, const DegreeVector& a,
                                     std::span<const Monomial> generators) {
  check_length(ideal, a.size());
  const int n = ideal.vertex_count();
  if (n > 24) throw CapExceeded("vertex", 24, static_cast<std::size_t>(n));
  const VertexSet g = a.negative_support();
  if (!ideal.complex().contains_face(g)) throw InputError("G_a = " + to_string(g) + " is not a face");
  const VertexSet rest = VertexSet::prefix(n) - g;
  std::vector<VertexSet> faces;
  // F = G_a ∪ H for every H ⊆ [n] ∖ G_a.
  std::uint64_t h = 0;
  while (true) {
    const VertexSet f = g | VertexSet(h);
    const bool outside_every_generator = std::all_of(generators.begin(), generators.end(), [&](const Monomial& b) {
      for (std::size_t i = 0; i < b.size(); ++i) {
        if (!f.contains(static_cast<int>(i) + 1) && a[i] < b[i]) return true;
      }
      return false;
    });
    if (outside_every_generator) faces.push_back(f - g);
    if (h == rest.bits()) break;
    h = (h - rest.bits()) & rest.bits();
  }
  if (faces.empty()) return SimplicialComplex::void_complex(n);
  return SimplicialComplex(n, std::move(faces));
}

SimplicialComplex delta_a_generators(const MonomialIdeal& ideal, const DegreeVector& a) {
  const auto gens = minimal_generators(ideal);
  return delta_a_generators(ideal, a, gens);
}

std::vector<LocalCohomologyEntry> local_cohomology(const MonomialIdeal& ideal, const FieldSpec& field) {
  const auto gens = minimal_generators(ideal);
  const auto bounds = rho(gens, ideal.vertex_count());
  std::vector<LocalCohomologyEntry> out;
  for_each_admissible_degree(ideal.complex(), bounds, [&](const DegreeVector& a) {
    const SimplicialComplex delta = delta_a_generators(ideal, a, gens);
    if (delta.is_void()) return true;
    const BettiVector betti = reduced_homology(delta, field);
    const int shift = a.negative_support().size() + 1;
    for (int j = -1; j <= betti.top_degree(); ++j) {
      if (betti.at(j) != 0) out.push_back({a, j + shift, betti.at(j)});
    }
    return true;
  });
  return out;
}

TakayamaVerdict takayama_cm_oracle(const MonomialIdeal& ideal, const FieldSpec& field) {
  if (!ideal.is_unmixed()) throw InputError("ideal is mixed: component facets differ in size");
  const auto gens = minimal_generators(ideal);
  const auto bounds = rho(gens, ideal.vertex_count());
  const int dim = ideal.complex().dimension();
  TakayamaVerdict verdict;
  verdict.cohen_macaulay = true;
  for_each_admissible_degree(ideal.complex(), bounds, [&](const DegreeVector& a) {
    ++verdict.degrees_checked;
    const SimplicialComplex delta = delta_a_generators(ideal, a, gens);
    if (delta.is_void()) return true;
    const BettiVector betti = reduced_homology(delta, field);
    const int below = dim - a.negative_support().size();
    for (int j = -1; j < below; ++j) {
      if (betti.at(j) != 0) {
        verdict.cohen_macaulay = false;
        verdict.witness = TakayamaWitness{a, j, betti.at(j)};
        return false;
      }
    }
    return true;
  });
  return verdict;
}

}  // namespace cmsym
