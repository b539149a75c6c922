#include "cmsym/classify.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <numeric>
#include <string>

#include "cmsym/errors.hpp"
#include "parallel.hpp"

namespace cmsym {

namespace {

constexpr int kStructuralVertexCap = 24;
constexpr std::uint64_t kDegreeBoxCap = std::uint64_t{1} << 32;

class Stopwatch {
 public:
  std::int64_t elapsed_us() const {
    return std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void require_pure(const SimplicialComplex& complex, const char* what) {
  if (complex.is_void() || !complex.is_pure()) throw InputError(std::string(what) + " requires a pure complex");
}

std::vector<int> decode(std::uint64_t index, const std::vector<int>& bounds) {
  std::vector<int> a(bounds.size());
  for (std::size_t k = bounds.size(); k-- > 0;) {
    const auto b = static_cast<std::uint64_t>(bounds[k]);
    a[k] = static_cast<int>(index % b);
    index /= b;
  }
  return a;
}

std::vector<std::size_t> selection_of(const FacetSubset& gamma) {
  return {gamma.selected().begin(), gamma.selected().end()};
}

std::vector<std::size_t> all_indices(std::size_t count) {
  std::vector<std::size_t> out(count);
  std::iota(out.begin(), out.end(), std::size_t{0});
  return out;
}

// Structural route order: |V| from max_size down to 2, each size in
// reverse lexicographic order of the ascending vertex lists.
std::vector<VertexSet> structural_sets(int n, int max_size) {
  std::vector<VertexSet> out;
  for (int size = max_size; size >= 2; --size) {
    const std::size_t start = out.size();
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
      if (std::popcount(bits) == size) out.emplace_back(bits);
    }
    std::sort(out.begin() + static_cast<std::ptrdiff_t>(start), out.end(),
              [](VertexSet a, VertexSet b) { return lex_less(b, a); });
  }
  return out;
}

bool homology_matches(const SimplicialComplex& complex, const FieldSpec& field, const HomologyWitness& expected) {
  if (complex.is_void()) return false;
  const CmVerdict verdict = is_cm_complex(complex, field);
  return !verdict.cohen_macaulay && verdict.witness && *verdict.witness == expected;
}

}  // namespace

std::string_view route_name(Route route) {
  switch (route) {
    case Route::DegreeBox:
      return "degree-box";
    case Route::Subcomplex:
      return "subcomplex";
    case Route::Structural:
      return "structural";
  }
  return "unknown";
}

std::optional<Route> parse_route(std::string_view name) {
  for (Route r : {Route::DegreeBox, Route::Subcomplex, Route::Structural}) {
    if (route_name(r) == name) return r;
  }
  return std::nullopt;
}

bool witness_holds(const MonomialIdeal& ideal, const CMReport& report) {
  if (report.cohen_macaulay) return !report.witness.has_value();
  if (!report.witness) return false;
  const auto n = static_cast<std::size_t>(ideal.vertex_count());
  try {
    if (const auto* w = std::get_if<BoxWitness>(&*report.witness)) {
      if (w->a.size() != n || std::any_of(w->a.begin(), w->a.end(), [](int x) { return x < 0; })) return false;
      return homology_matches(delta_a_components(ideal, DegreeVector(w->a)), report.field, w->homology);
    }
    if (const auto* w = std::get_if<SubcomplexWitness>(&*report.witness)) {
      const FacetSubset gamma = generated_subcomplex(ideal.complex(), w->gamma);
      if (!homology_matches(gamma.complex(), report.field, w->homology)) return false;
      if (w->point.size() != n) return false;
      std::vector<int> exps;
      for (auto x : w->point) {
        if (x < 0 || x > std::numeric_limits<int>::max()) return false;
        exps.push_back(static_cast<int>(x));
      }
      const Membership member = contains_monomial(ideal, Monomial(exps));
      for (std::size_t i = 0; i < member.per_component.size(); ++i) {
        if (member.per_component[i] == gamma.contains(i)) return false;
      }
      return true;
    }
    const auto& w = std::get<StructuralWitness>(*report.witness);
    const SimplicialComplex sub = w.v.empty() ? ideal.complex() : restrict_to(ideal.complex(), w.v);
    return homology_matches(sub, report.field, w.homology);
  } catch (const InputError&) {
    return false;
  }
}

Labelling::Labelling(std::vector<int> labels) : labels_(std::move(labels)) {
  std::vector<int> sorted = labels_;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] != static_cast<int>(i) + 1) throw InputError("labelling is not a permutation of 1..n");
  }
}

Labelling Labelling::identity(int n) {
  std::vector<int> labels(static_cast<std::size_t>(n));
  std::iota(labels.begin(), labels.end(), 1);
  return Labelling(std::move(labels));
}

SimplicialComplex relabel(const SimplicialComplex& complex, const Labelling& labelling) {
  if (labelling.size() != complex.vertex_count()) throw InputError("labelling size differs from vertex count");
  std::vector<VertexSet> facets;
  for (VertexSet f : complex.facets()) {
    VertexSet g;
    f.for_each([&](int v) { g = g.with(labelling.label(v)); });
    facets.push_back(g);
  }
  if (facets.empty()) return SimplicialComplex::void_complex(complex.vertex_count());
  return SimplicialComplex(complex.vertex_count(), std::move(facets));
}

Classifier::Classifier(FieldSpec field, ClassifierOptions options)
    : options_(options), oracle_(std::make_unique<CmOracle>(field)) {
  if (options_.facet_cap < 1 || options_.labelling_cap < 1) throw InputError("caps must be at least 1");
  if (options_.jobs < 1) throw InputError("jobs must be at least 1");
}

CMReport Classifier::box_over(const MonomialIdeal& ideal, const std::vector<int>& bounds,
                              std::string description) const {
  const Stopwatch clock;
  std::uint64_t count = 1;
  for (int b : bounds) {
    count *= static_cast<std::uint64_t>(b);
    if (count > kDegreeBoxCap) throw CapExceeded("degree box", kDegreeBoxCap, count);
  }
  auto delta_at = [&](std::uint64_t i) { return delta_a_components(ideal, DegreeVector(decode(i, bounds))); };
  const auto hit = detail::find_first(count, options_.jobs, [&](std::uint64_t i) {
    const SimplicialComplex delta = delta_at(i);
    return !delta.is_void() && !oracle_->is_cm(delta);
  });
  CMReport report;
  report.ideal = std::move(description);
  report.field = field();
  report.route = Route::DegreeBox;
  report.cohen_macaulay = !hit;
  if (hit) report.witness = BoxWitness{decode(*hit, bounds), *oracle_->check(delta_at(*hit)).witness};
  report.elapsed_us = clock.elapsed_us();
  return report;
}

CMReport Classifier::box(const SimplicialComplex& complex, int m) const {
  require_pure(complex, "degree-box route");
  const MonomialIdeal ideal = symbolic_power(complex, m);
  return box_over(ideal, std::vector<int>(static_cast<std::size_t>(complex.vertex_count()), m),
                  describe_symbolic_power(complex, m));
}

CMReport Classifier::box(const MonomialIdeal& ideal) const {
  if (!ideal.is_unmixed()) throw InputError("degree-box route requires an unmixed ideal");
  std::vector<int> bounds = rho(ideal);
  for (int& b : bounds) b = std::max(b, 1);
  return box_over(ideal, bounds, to_string(ideal));
}

CMReport Classifier::subcomplex_over(const MonomialIdeal& ideal, std::string description) const {
  const Stopwatch clock;
  const FacetSubsets subsets(ideal.complex(), options_.facet_cap);
  const auto hit = detail::find_first(subsets.size(), options_.jobs, [&](std::uint64_t i) {
    const FacetSubset gamma = subsets.at(i);
    if (oracle_->is_cm(gamma.complex())) return false;
    return integer_feasible(build_L_system(ideal, gamma)).has_value();
  });
  CMReport report;
  report.ideal = std::move(description);
  report.field = field();
  report.route = Route::Subcomplex;
  report.cohen_macaulay = !hit;
  if (hit) {
    const FacetSubset gamma = subsets.at(*hit);
    report.witness = SubcomplexWitness{selection_of(gamma), *integer_feasible(build_L_system(ideal, gamma)),
                                       *oracle_->check(gamma.complex()).witness};
  }
  report.elapsed_us = clock.elapsed_us();
  return report;
}

CMReport Classifier::subcomplex(const SimplicialComplex& complex, int m) const {
  require_pure(complex, "subcomplex route");
  return subcomplex_over(symbolic_power(complex, m), describe_symbolic_power(complex, m));
}

CMReport Classifier::subcomplex(const MonomialIdeal& ideal) const {
  if (!ideal.is_unmixed()) throw InputError("subcomplex route requires an unmixed ideal");
  return subcomplex_over(ideal, to_string(ideal));
}

CMReport Classifier::structural(const SimplicialComplex& complex) const {
  require_pure(complex, "structural route");
  const Stopwatch clock;
  const int n = complex.vertex_count();
  if (n > kStructuralVertexCap) throw CapExceeded("vertex", kStructuralVertexCap, static_cast<std::size_t>(n));
  std::vector<VertexSet> sets = structural_sets(n, complex.dimension() + 1);
  sets.push_back(VertexSet());
  auto sub_at = [&](std::uint64_t i) {
    const VertexSet v = sets[static_cast<std::size_t>(i)];
    return v.empty() ? complex : restrict_to(complex, v);
  };
  const auto hit = detail::find_first(sets.size(), options_.jobs, [&](std::uint64_t i) {
    const SimplicialComplex sub = sub_at(i);
    return !sub.is_void() && !oracle_->is_cm(sub);
  });
  CMReport report;
  report.ideal = describe_symbolic_power(complex, 2);
  report.field = field();
  report.route = Route::Structural;
  report.cohen_macaulay = !hit;
  if (hit) report.witness = StructuralWitness{sets[static_cast<std::size_t>(*hit)], *oracle_->check(sub_at(*hit)).witness};
  report.elapsed_us = clock.elapsed_us();
  return report;
}

CheckOutcome Classifier::check(const SimplicialComplex& complex, int m) const {
  CheckOutcome outcome;
  if (m == 2) outcome.reports.push_back(structural(complex));
  outcome.reports.push_back(box(complex, m));
  if (complex.facet_count() <= options_.facet_cap) outcome.reports.push_back(subcomplex(complex, m));
  outcome.cohen_macaulay = outcome.reports.front().cohen_macaulay;
  for (const auto& r : outcome.reports) {
    if (r.cohen_macaulay != outcome.cohen_macaulay) {
      throw RouteDisagreement("routes disagree on " + r.ideal + " over " + field().to_string() + ": " +
                              std::string(route_name(outcome.reports.front().route)) + " says " +
                              (outcome.cohen_macaulay ? "CM" : "not CM") + ", " + std::string(route_name(r.route)) +
                              " says " + (r.cohen_macaulay ? "CM" : "not CM"));
    }
  }
  return outcome;
}

AllSymbolicReport Classifier::all_symbolic(const SimplicialComplex& complex) const {
  require_pure(complex, "all-powers test");
  AllSymbolicReport report;
  report.matroid = is_matroid(complex);

  const FacetSubsets subsets(complex, options_.facet_cap);
  const CmVerdict whole = oracle_->check(complex);
  if (!whole.cohen_macaulay) {
    report.witness = SubcomplexWitness{all_indices(complex.facet_count()),
                                       LatticePoint(static_cast<std::size_t>(complex.vertex_count()), 0),
                                       *whole.witness};
    report.witness_m = 1;
  } else {
    std::atomic<std::size_t> certified{0};
    const auto hit = detail::find_first(subsets.size() - 1, options_.jobs, [&](std::uint64_t i) {
      const FacetSubset gamma = subsets.at(i);
      if (oracle_->is_cm(gamma.complex())) return false;
      const StrictVerdict verdict = strict_homogeneous_feasible(complex, gamma);
      if (verdict.feasible) return true;
      motzkin_certificate(complex, gamma, verdict);
      ++certified;
      return false;
    });
    if (hit) {
      const FacetSubset gamma = subsets.at(*hit);
      const LatticeWitness lattice = lattice_witness(complex, gamma, strict_homogeneous_feasible(complex, gamma));
      report.witness = SubcomplexWitness{selection_of(gamma), lattice.point, *oracle_->check(gamma.complex()).witness};
      report.witness_m = lattice.m;
    } else {
      report.all_cm = true;
      report.certified = certified.load();
    }
  }
  if (report.all_cm != report.matroid.matroid) {
    throw RouteDisagreement("all-powers routes disagree on " + to_string(complex) + " over " + field().to_string() +
                            ": basis exchange says " + (report.matroid.matroid ? "matroid" : "not a matroid") +
                            ", strict systems say " + (report.all_cm ? "all CM" : "some power not CM"));
  }
  return report;
}

std::string describe_symbolic_power(const SimplicialComplex& complex, int m) {
  return "I^(" + std::to_string(m) + ") of " + to_string(complex);
}

CMReport is_cm_symbolic_box(const SimplicialComplex& complex, int m, const FieldSpec& field) {
  return Classifier(field).box(complex, m);
}

CMReport is_cm_symbolic_subcomplex(const SimplicialComplex& complex, int m, const FieldSpec& field,
                                   std::size_t facet_cap) {
  return Classifier(field, {.facet_cap = facet_cap}).subcomplex(complex, m);
}

CMReport is_cm_second_structural(const SimplicialComplex& complex, const FieldSpec& field) {
  return Classifier(field).structural(complex);
}

AllSymbolicReport all_symbolic_cm(const SimplicialComplex& complex, const FieldSpec& field, std::size_t facet_cap) {
  return Classifier(field, {.facet_cap = facet_cap}).all_symbolic(complex);
}

bool diameter_necessary(const SimplicialComplex& complex) {
  const auto diam = one_skeleton_diameter(complex);
  return diam && *diam <= 2;
}

MatroidVerdict is_matroid(const SimplicialComplex& complex) {
  require_pure(complex, "matroid test");
  MatroidVerdict verdict;
  for (VertexSet f : complex.facets()) {
    for (VertexSet g : complex.facets()) {
      if (f == g) continue;
      const VertexSet candidates = g - f;
      for (int x : (f - g).vertices()) {
        bool exchanged = false;
        candidates.for_each([&](int y) { exchanged = exchanged || complex.facet_index(f.without(x).with(y)); });
        if (!exchanged) {
          verdict.failure = ExchangeFailure{f, g, x};
          return verdict;
        }
      }
    }
  }
  verdict.matroid = true;
  return verdict;
}

bool is_tight(const SimplicialComplex& complex, const Labelling& labelling) {
  require_pure(complex, "tightness test");
  const SimplicialComplex labelled = relabel(complex, labelling);
  for (VertexSet g1 : labelled.facets()) {
    for (VertexSet g2 : labelled.facets()) {
      const VertexSet only1 = g1 - g2;
      const VertexSet only2 = g2 - g1;
      for (int i : only1.vertices()) {
        for (int j : only2.vertices()) {
          if (i >= j) continue;
          bool swapped = false;
          only1.for_each([&](int jp) { swapped = swapped || labelled.facet_index(g2.without(j).with(jp)); });
          if (!swapped) return false;
        }
      }
    }
  }
  return true;
}

std::optional<Labelling> find_tight_labelling(const SimplicialComplex& complex, std::size_t cap) {
  const auto n = static_cast<std::size_t>(complex.vertex_count());
  if (n > cap) throw CapExceeded("labelling", cap, n);
  std::vector<int> labels = Labelling::identity(complex.vertex_count()).labels();
  do {
    Labelling candidate(labels);
    if (is_tight(complex, candidate)) return candidate;
  } while (std::next_permutation(labels.begin(), labels.end()));
  return std::nullopt;
}

bool is_shifted(const SimplicialComplex& complex, const Labelling& labelling) {
  const SimplicialComplex labelled = relabel(complex, labelling);
  for (VertexSet face : labelled.faces()) {
    for (int i : face.vertices()) {
      for (int j = 1; j < i; ++j) {
        if (!face.contains(j) && !labelled.contains_face(face.without(i).with(j))) return false;
      }
    }
  }
  return true;
}

bool is_flag(const SimplicialComplex& complex) {
  const auto nonfaces = minimal_nonfaces(complex);
  return std::all_of(nonfaces.begin(), nonfaces.end(), [](VertexSet s) { return s.size() == 2; });
}

bool flag_all_symbolic(const SimplicialComplex& complex) {
  const auto nonfaces = minimal_nonfaces(complex);
  if (!std::all_of(nonfaces.begin(), nonfaces.end(), [](VertexSet s) { return s.size() == 2; })) {
    throw InputError("complex is not flag: some minimal nonface has other than two vertices");
  }
  const auto n = static_cast<std::size_t>(complex.vertex_count());
  // Union-find over vertex indices 0..n-1; a component is a clique iff it
  // carries k(k-1)/2 nonface edges.
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto root = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v];
    return v;
  };
  auto index = [](int v) { return static_cast<std::size_t>(v - 1); };
  for (VertexSet e : nonfaces) parent[root(index(e.min_vertex()))] = root(index(e.max_vertex()));
  std::vector<std::size_t> vertices(n, 0);
  std::vector<std::size_t> edges(n, 0);
  for (std::size_t v = 0; v < n; ++v) ++vertices[root(v)];
  for (VertexSet e : nonfaces) ++edges[root(index(e.min_vertex()))];
  for (std::size_t r = 0; r < n; ++r) {
    if (vertices[r] > 0 && edges[r] != vertices[r] * (vertices[r] - 1) / 2) return false;
  }
  return true;
}

Thresholds preservation_thresholds(int m, int n, int d) {
  if (m < 1) throw InputError("m must be >= 1");
  if (d < 0 || d >= n) throw InputError("need 0 <= d < n");
  Thresholds t;
  t.t_down = BigInt(m - 1) * (m - 1) + 1;
  mpz_ui_pow_ui(t.t_all.get_mpz_t(), static_cast<unsigned long>(n - d), static_cast<unsigned long>(n + 1));
  return t;
}

}  // namespace cmsym
