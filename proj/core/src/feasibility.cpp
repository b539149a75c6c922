#include "cmsym/feasibility.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

#include "cmsym/errors.hpp"

namespace cmsym {

std::int64_t LinearRow::evaluate(std::span<const std::int64_t> a) const {
  std::int64_t sum = 0;
  for (std::size_t i = 0; i < coefficients.size(); ++i) sum += coefficients[i] * a[i];
  return sum;
}

bool LinearSystem::satisfied_by(std::span<const std::int64_t> a) const {
  if (a.size() != static_cast<std::size_t>(n)) return false;
  if (std::any_of(a.begin(), a.end(), [](std::int64_t v) { return v < 0; })) return false;
  return std::all_of(weak.begin(), weak.end(), [&](const LinearRow& r) { return r.evaluate(a) >= r.bound; }) &&
         std::all_of(strict.begin(), strict.end(), [&](const LinearRow& r) { return r.evaluate(a) < r.bound; });
}

std::int64_t LinearSystem::max_bound() const {
  std::int64_t m = 0;
  for (const auto& r : weak) m = std::max(m, r.bound);
  for (const auto& r : strict) m = std::max(m, r.bound);
  return m;
}

bool LinearSystem::is_incidence() const {
  auto ok = [&](const LinearRow& r) {
    return r.coefficients.size() == static_cast<std::size_t>(n) &&
           std::all_of(r.coefficients.begin(), r.coefficients.end(), [](int c) { return c == 0 || c == 1; });
  };
  return std::all_of(weak.begin(), weak.end(), ok) && std::all_of(strict.begin(), strict.end(), ok);
}

namespace {

void check_gamma(const SimplicialComplex& complex, const FacetSubset& gamma) {
  bool ok = gamma.parent_facet_count() == complex.facet_count();
  const auto sel = gamma.selected();
  for (std::size_t k = 0; ok && k < sel.size(); ++k) ok = gamma.complex().facet(k) == complex.facet(sel[k]);
  if (!ok) throw InputError("facet subset does not belong to this complex");
}

std::vector<int> complement_indicator(VertexSet facet, int n) {
  std::vector<int> row(static_cast<std::size_t>(n));
  for (int v = 1; v <= n; ++v) row[static_cast<std::size_t>(v - 1)] = facet.contains(v) ? 0 : 1;
  return row;
}

std::vector<int> incidence(VertexSet facet, int n) {
  std::vector<int> row(static_cast<std::size_t>(n));
  for (int v = 1; v <= n; ++v) row[static_cast<std::size_t>(v - 1)] = facet.contains(v) ? 1 : 0;
  return row;
}

class LatticeSearch {
 public:
  explicit LatticeSearch(const LinearSystem& system) : sys_(system), box_(system.max_bound()) {
    const auto n = static_cast<std::size_t>(system.n);
    point_.assign(n, 0);
    weak_partial_.assign(system.weak.size(), 0);
    strict_partial_.assign(system.strict.size(), 0);
    // ones_after_[r][k]: coefficients equal to 1 in weak row r at indices > k.
    ones_after_.resize(system.weak.size());
    for (std::size_t r = 0; r < system.weak.size(); ++r) {
      auto& suffix = ones_after_[r];
      suffix.assign(n + 1, 0);
      for (std::size_t k = n; k-- > 0;) suffix[k] = suffix[k + 1] + system.weak[r].coefficients[k];
    }
  }

  std::optional<LatticePoint> run() {
    for (const auto& r : sys_.strict) {
      if (r.bound <= 0) return std::nullopt;
    }
    for (std::size_t r = 0; r < sys_.weak.size(); ++r) {
      if (box_ * ones_after_[r][0] < sys_.weak[r].bound) return std::nullopt;
    }
    if (descend(0)) return point_;
    return std::nullopt;
  }

 private:
  bool descend(std::size_t k) {
    if (k == point_.size()) return true;
    for (std::int64_t v = 0; v <= box_; ++v) {
      point_[k] = v;
      bool strict_ok = true;
      for (std::size_t r = 0; r < sys_.strict.size(); ++r) {
        if (sys_.strict[r].coefficients[k] && strict_partial_[r] + v >= sys_.strict[r].bound) strict_ok = false;
      }
      // Strict rows only get worse as v grows.
      if (!strict_ok) break;
      bool weak_ok = true;
      for (std::size_t r = 0; r < sys_.weak.size() && weak_ok; ++r) {
        const std::int64_t reach =
            weak_partial_[r] + sys_.weak[r].coefficients[k] * v + box_ * ones_after_[r][k + 1];
        weak_ok = reach >= sys_.weak[r].bound;
      }
      if (!weak_ok) continue;
      apply(k, v);
      if (descend(k + 1)) return true;
      apply(k, -v);
    }
    point_[k] = 0;
    return false;
  }

  void apply(std::size_t k, std::int64_t delta) {
    for (std::size_t r = 0; r < sys_.weak.size(); ++r) weak_partial_[r] += sys_.weak[r].coefficients[k] * delta;
    for (std::size_t r = 0; r < sys_.strict.size(); ++r) strict_partial_[r] += sys_.strict[r].coefficients[k] * delta;
  }

  const LinearSystem& sys_;
  std::int64_t box_;
  LatticePoint point_;
  std::vector<std::int64_t> weak_partial_;
  std::vector<std::int64_t> strict_partial_;
  std::vector<std::vector<std::int64_t>> ones_after_;
};

BigInt lcm_of_denominators(std::span<const Rational> values) {
  BigInt l = 1;
  for (const auto& q : values) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  return l;
}

std::vector<BigInt> primitive_integers(std::span<const Rational> values) {
  const BigInt l = lcm_of_denominators(values);
  std::vector<BigInt> out;
  BigInt g = 0;
  for (const auto& q : values) {
    Rational scaled = q * l;
    out.push_back(scaled.get_num());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out.back().get_mpz_t());
  }
  if (g > 1) {
    for (auto& z : out) z /= g;
  }
  return out;
}

// All multisets of size s over items, as ascending index vectors, in lex order.
void multisets(std::span<const std::size_t> items, std::size_t s, std::vector<std::vector<std::size_t>>& out) {
  std::vector<std::size_t> pick;
  auto rec = [&](auto&& self, std::size_t from) -> void {
    if (pick.size() == s) {
      out.push_back(pick);
      return;
    }
    for (std::size_t i = from; i < items.size(); ++i) {
      pick.push_back(items[i]);
      self(self, i);
      pick.pop_back();
    }
  };
  rec(rec, 0);
}

std::vector<int> facet_sum(const SimplicialComplex& complex, std::span<const std::size_t> facets) {
  std::vector<int> sum(static_cast<std::size_t>(complex.vertex_count()), 0);
  for (std::size_t idx : facets) {
    complex.facet(idx).for_each([&](int v) { ++sum[static_cast<std::size_t>(v - 1)]; });
  }
  return sum;
}

}  // namespace

LinearSystem build_L_system(const SimplicialComplex& complex, const FacetSubset& gamma,
                            std::span<const std::int64_t> exponents) {
  check_gamma(complex, gamma);
  if (exponents.size() != complex.facet_count()) {
    throw InputError("expected " + std::to_string(complex.facet_count()) + " exponents, got " +
                     std::to_string(exponents.size()));
  }
  LinearSystem sys;
  sys.n = complex.vertex_count();
  for (std::size_t i = 0; i < complex.facet_count(); ++i) {
    LinearRow row{complement_indicator(complex.facet(i), sys.n), exponents[i]};
    if (gamma.contains(i)) {
      sys.strict.push_back(std::move(row));
    } else {
      sys.weak.push_back(std::move(row));
    }
  }
  return sys;
}

LinearSystem build_L_system(const MonomialIdeal& ideal, const FacetSubset& gamma) {
  const auto exps = ideal.exponents();
  return build_L_system(ideal.complex(), gamma, exps);
}

std::optional<LatticePoint> integer_feasible(const LinearSystem& system) {
  if (!system.is_incidence()) throw InputError("integer search needs 0/1 coefficient rows of length n");
  return LatticeSearch(system).run();
}

LpProblem strict_system_lp(const SimplicialComplex& complex, const FacetSubset& gamma) {
  check_gamma(complex, gamma);
  const auto n = static_cast<std::size_t>(complex.vertex_count());
  LpProblem lp;
  lp.variables = n + 1;
  lp.objective.assign(n + 1, 0);
  lp.objective[n] = 1;
  for (std::size_t f = 0; f < complex.facet_count(); ++f) {
    if (gamma.contains(f)) continue;
    const auto chi_f = incidence(complex.facet(f), static_cast<int>(n));
    for (std::size_t g : gamma.selected()) {
      const auto chi_g = incidence(complex.facet(g), static_cast<int>(n));
      LpRow row;
      row.coefficients.resize(n + 1);
      for (std::size_t i = 0; i < n; ++i) row.coefficients[i] = chi_f[i] - chi_g[i];
      row.coefficients[n] = 1;
      row.sense = RowSense::LessEqual;
      row.rhs = 1;
      lp.rows.push_back(std::move(row));
    }
  }
  LpRow simplex_row;
  simplex_row.coefficients.assign(n + 1, 1);
  simplex_row.coefficients[n] = 0;
  simplex_row.sense = RowSense::Equal;
  simplex_row.rhs = 1;
  lp.rows.push_back(std::move(simplex_row));
  return lp;
}

StrictVerdict strict_homogeneous_feasible(const SimplicialComplex& complex, const FacetSubset& gamma) {
  check_gamma(complex, gamma);
  if (!complex.is_pure()) throw InputError("strict system requires a pure complex");
  StrictVerdict verdict;
  if (gamma.is_full()) {
    verdict.vacuous = true;
    verdict.feasible = true;
    return verdict;
  }
  const LpProblem lp = strict_system_lp(complex, gamma);
  const LpSolution sol = solve_lp(lp);
  if (sol.status != LpStatus::Optimal) throw std::logic_error("strict system LP is feasible and bounded but solver disagreed");
  if (!satisfies_rows(lp, sol.primal)) throw std::logic_error("strict system LP primal failed re-substitution");
  if (!certifies_optimality(lp, sol)) throw std::logic_error("strict system LP dual failed verification");
  const std::size_t n = lp.variables - 1;
  verdict.pivots = sol.pivots;
  verdict.optimum = sol.objective - 1;
  verdict.feasible = verdict.optimum > 0;
  verdict.direction.assign(sol.primal.begin(), sol.primal.begin() + static_cast<std::ptrdiff_t>(n));
  std::size_t row = 0;
  for (std::size_t f = 0; f < complex.facet_count(); ++f) {
    if (gamma.contains(f)) continue;
    for (std::size_t g : gamma.selected()) {
      if (sol.dual[row] != 0) verdict.multipliers.push_back({f, g, sol.dual[row]});
      ++row;
    }
  }
  return verdict;
}

IncidenceCertificate::IncidenceCertificate(const SimplicialComplex& complex, const FacetSubset& gamma,
                                           std::vector<std::size_t> outside, std::vector<std::size_t> inside)
    : outside_(std::move(outside)), inside_(std::move(inside)) {
  std::sort(outside_.begin(), outside_.end());
  std::sort(inside_.begin(), inside_.end());
  if (!holds(complex, gamma, outside_, inside_)) throw InputError("incidence sums of the two multisets differ");
  for (std::size_t i : outside_) outside_facets_.push_back(complex.facet(i));
  for (std::size_t i : inside_) inside_facets_.push_back(complex.facet(i));
  sum_ = facet_sum(complex, outside_);
}

bool IncidenceCertificate::holds(const SimplicialComplex& complex, const FacetSubset& gamma,
                                 std::span<const std::size_t> outside, std::span<const std::size_t> inside) {
  check_gamma(complex, gamma);
  if (outside.empty() || outside.size() != inside.size()) return false;
  for (std::size_t i : outside) {
    if (i >= complex.facet_count() || gamma.contains(i)) return false;
  }
  for (std::size_t i : inside) {
    if (i >= complex.facet_count() || !gamma.contains(i)) return false;
  }
  return facet_sum(complex, outside) == facet_sum(complex, inside);
}

IncidenceCertificate motzkin_certificate(const SimplicialComplex& complex, const FacetSubset& gamma,
                                         const StrictVerdict& verdict) {
  if (verdict.vacuous || verdict.feasible) throw InputError("no certificate: the strict system is feasible");
  std::vector<Rational> ys;
  for (const auto& p : verdict.multipliers) ys.push_back(p.y);
  const auto counts = primitive_integers(ys);
  std::vector<std::size_t> outside;
  std::vector<std::size_t> inside;
  for (std::size_t k = 0; k < counts.size(); ++k) {
    for (BigInt c = 0; c < counts[k]; ++c) {
      outside.push_back(verdict.multipliers[k].outside);
      inside.push_back(verdict.multipliers[k].inside);
    }
  }
  return IncidenceCertificate(complex, gamma, std::move(outside), std::move(inside));
}

IncidenceCertificate motzkin_certificate(const SimplicialComplex& complex, const FacetSubset& gamma) {
  return motzkin_certificate(complex, gamma, strict_homogeneous_feasible(complex, gamma));
}

std::optional<IncidenceCertificate> brute_force_certificate_search(const SimplicialComplex& complex,
                                                                   const FacetSubset& gamma, std::size_t s_max) {
  check_gamma(complex, gamma);
  std::vector<std::size_t> outside_items;
  for (std::size_t i = 0; i < complex.facet_count(); ++i) {
    if (!gamma.contains(i)) outside_items.push_back(i);
  }
  const auto inside_items = gamma.selected();
  if (outside_items.empty()) return std::nullopt;
  for (std::size_t s = 1; s <= s_max; ++s) {
    std::vector<std::vector<std::size_t>> inside_sets;
    multisets(inside_items, s, inside_sets);
    std::map<std::vector<int>, std::size_t> by_sum;
    for (std::size_t k = 0; k < inside_sets.size(); ++k) by_sum.emplace(facet_sum(complex, inside_sets[k]), k);
    std::vector<std::vector<std::size_t>> outside_sets;
    multisets(outside_items, s, outside_sets);
    for (const auto& o : outside_sets) {
      const auto hit = by_sum.find(facet_sum(complex, o));
      if (hit != by_sum.end()) return IncidenceCertificate(complex, gamma, o, inside_sets[hit->second]);
    }
  }
  return std::nullopt;
}

LatticeWitness lattice_witness(const SimplicialComplex& complex, const FacetSubset& gamma,
                               const StrictVerdict& verdict) {
  if (verdict.vacuous || !verdict.feasible) throw InputError("lattice witness needs a feasible strict direction");
  const auto ints = primitive_integers(verdict.direction);
  LatticeWitness w;
  for (const auto& z : ints) {
    if (!z.fits_slong_p()) throw std::overflow_error("lattice witness coordinate exceeds 64 bits");
    w.point.push_back(z.get_si());
  }
  bool first = true;
  for (std::size_t f = 0; f < complex.facet_count(); ++f) {
    if (gamma.contains(f)) continue;
    std::int64_t outside = 0;
    for (int v = 1; v <= complex.vertex_count(); ++v) {
      if (!complex.facet(f).contains(v)) outside += w.point[static_cast<std::size_t>(v - 1)];
    }
    w.m = first ? outside : std::min(w.m, outside);
    first = false;
  }
  const std::vector<std::int64_t> exps(complex.facet_count(), w.m);
  if (!build_L_system(complex, gamma, exps).satisfied_by(w.point)) {
    throw std::logic_error("scaled strict direction is not a lattice witness");
  }
  return w;
}

}  // namespace cmsym
