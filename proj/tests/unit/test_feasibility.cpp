#include <doctest.h>

#include <random>

#include "cmsym/census.hpp"
#include "cmsym/errors.hpp"
#include "cmsym/feasibility.hpp"
#include "cmsym/homology.hpp"
#include "cmsym/lp.hpp"
#include "corpus.hpp"
#include "support/lp_check.hpp"
#include "support/oracles.hpp"

using namespace cmsym;

namespace {

Rational q(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

LpRow row(std::vector<Rational> coefficients, RowSense sense, Rational rhs) {
  return LpRow{std::move(coefficients), sense, std::move(rhs)};
}

std::vector<std::int64_t> to_vec(std::span<const std::int64_t> s) { return {s.begin(), s.end()}; }

// Outside components contain x^a and inside ones do not.
bool in_l_gamma(const SimplicialComplex& c, const FacetSubset& gamma, const std::vector<std::int64_t>& a,
                std::int64_t m) {
  for (std::size_t k = 0; k < c.facet_count(); ++k) {
    std::int64_t s = 0;
    for (int i = 1; i <= c.vertex_count(); ++i) {
      if (!c.facet(k).contains(i)) s += a[static_cast<std::size_t>(i - 1)];
    }
    if (gamma.contains(k) ? s >= m : s < m) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("textbook LP optimum with duals") {
  // max x + y : x + 2y ≤ 4, 3x + y ≤ 6
  const LpProblem p{2, {q(1), q(1)}, {row({q(1), q(2)}, RowSense::LessEqual, q(4)), row({q(3), q(1)}, RowSense::LessEqual, q(6))}};
  const LpSolution s = solve_lp(p);
  REQUIRE(s.status == LpStatus::Optimal);
  CHECK(s.objective == q(14, 5));
  CHECK(s.primal == std::vector<Rational>{q(8, 5), q(6, 5)});
  CHECK(s.dual == std::vector<Rational>{q(2, 5), q(1, 5)});
  CHECK(satisfies_rows(p, s.primal));
  CHECK(certifies_optimality(p, s));
  CHECK(oracle::dual_certifies(p, s));
}

TEST_CASE("LP status detection") {
  const LpProblem infeasible{1, {q(1)}, {row({q(1)}, RowSense::GreaterEqual, q(2)), row({q(1)}, RowSense::LessEqual, q(1))}};
  CHECK(solve_lp(infeasible).status == LpStatus::Infeasible);
  const LpProblem unbounded{2, {q(1), q(0)}, {row({q(1), q(-1)}, RowSense::LessEqual, q(1))}};
  CHECK(solve_lp(unbounded).status == LpStatus::Unbounded);
  // Equality and ≥ rows: min x + y with x + y = 3, x ≥ 1 as max -(x+y).
  const LpProblem mixed{2, {q(-1), q(-1)}, {row({q(1), q(1)}, RowSense::Equal, q(3)), row({q(1), q(0)}, RowSense::GreaterEqual, q(1))}};
  const LpSolution s = solve_lp(mixed);
  REQUIRE(s.status == LpStatus::Optimal);
  CHECK(s.objective == q(-3));
  CHECK(oracle::dual_certifies(mixed, s));
}

TEST_CASE("random bounded LPs re-substitute exactly") {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 4;
    const std::size_t m = 1 + rng() % 4;
    LpProblem p;
    p.variables = n;
    for (std::size_t j = 0; j < n; ++j) p.objective.push_back(q(static_cast<long>(rng() % 7) - 3));
    // A known feasible point keeps the problem feasible; a box keeps it bounded.
    std::vector<long> x0(n);
    for (auto& v : x0) v = static_cast<long>(rng() % 3);
    for (std::size_t r = 0; r < m; ++r) {
      std::vector<Rational> coeffs;
      long lhs = 0;
      for (std::size_t j = 0; j < n; ++j) {
        const long c = static_cast<long>(rng() % 7) - 3;
        coeffs.push_back(q(c));
        lhs += c * x0[j];
      }
      const auto kind = rng() % 3;
      if (kind == 0) p.rows.push_back(row(coeffs, RowSense::LessEqual, q(lhs + static_cast<long>(rng() % 3))));
      if (kind == 1) p.rows.push_back(row(coeffs, RowSense::GreaterEqual, q(lhs - static_cast<long>(rng() % 3))));
      if (kind == 2) p.rows.push_back(row(coeffs, RowSense::Equal, q(lhs)));
    }
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<Rational> e(n, q(0));
      e[j] = q(1);
      p.rows.push_back(row(e, RowSense::LessEqual, q(5)));
    }
    const LpSolution s = solve_lp(p);
    REQUIRE(s.status == LpStatus::Optimal);
    CHECK(satisfies_rows(p, s.primal));
    CHECK(oracle::dual_certifies(p, s));
    // The known point is no better than the optimum.
    Rational c0 = 0;
    for (std::size_t j = 0; j < n; ++j) c0 += p.objective[j] * q(x0[j]);
    CHECK(c0 <= s.objective);
  }
}

TEST_CASE("L systems list one row per facet") {
  const auto flap = cli::tetra_flap();
  const FacetSubset gamma = generated_subcomplex(flap, {0, 4});
  const std::vector<std::int64_t> m(5, 3);
  const LinearSystem sys = build_L_system(flap, gamma, m);
  CHECK(sys.n == 5);
  REQUIRE(sys.weak.size() == 3);
  REQUIRE(sys.strict.size() == 2);
  // {1,2,4} is outside Γ: a3 + a5 ≥ 3.
  CHECK(sys.weak[0] == LinearRow{{0, 0, 1, 0, 1}, 3});
  // {3,4,5} is inside Γ: a1 + a2 < 3.
  CHECK(sys.strict[1] == LinearRow{{1, 1, 0, 0, 0}, 3});
  CHECK(sys.is_incidence());
  CHECK(sys.max_bound() == 3);
  const std::vector<std::int64_t> witness{1, 1, 1, 0, 2};
  CHECK(sys.satisfied_by(witness));
  CHECK(to_vec(*integer_feasible(sys)) == witness);
  CHECK_THROWS_AS(build_L_system(flap, gamma, std::vector<std::int64_t>(4, 3)), InputError);
}

TEST_CASE("clamped search agrees with an unclamped box search") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 400; ++trial) {
    LinearSystem sys;
    sys.n = 1 + static_cast<int>(rng() % 4);
    const std::size_t rows = rng() % 5;
    for (std::size_t r = 0; r < rows; ++r) {
      LinearRow lr;
      for (int j = 0; j < sys.n; ++j) lr.coefficients.push_back(static_cast<int>(rng() % 2));
      lr.bound = static_cast<std::int64_t>(rng() % 4);
      (rng() % 2 ? sys.weak : sys.strict).push_back(lr);
    }
    const auto fast = integer_feasible(sys);
    const auto slow = oracle::box_search(sys.n, 2 * sys.max_bound() + 2,
                                         [&](const std::vector<std::int64_t>& a) { return sys.satisfied_by(a); });
    CHECK(fast.has_value() == slow.has_value());
    if (fast) {
      CHECK(sys.satisfied_by(*fast));
      // Both scan lexicographically, so the first hits coincide.
      CHECK(*fast == *slow);
    }
  }
  LinearSystem bad;
  bad.n = 1;
  bad.weak.push_back(LinearRow{{2}, 1});
  CHECK_THROWS_AS(integer_feasible(bad), InputError);
}

TEST_CASE("K4 with two disjoint edges has a size-two certificate") {
  const auto k4 = cli::complete_graph_k4();
  const FacetSubset gamma = generated_subcomplex(k4, {1, 4});
  const StrictVerdict v = strict_homogeneous_feasible(k4, gamma);
  CHECK_FALSE(v.vacuous);
  CHECK_FALSE(v.feasible);
  CHECK(v.optimum == 0);
  const IncidenceCertificate cert = motzkin_certificate(k4, gamma, v);
  CHECK(cert.s() == 2);
  CHECK(IncidenceCertificate::holds(k4, gamma, cert.outside(), cert.inside()));
  CHECK(cert.incidence_sum() == std::vector<int>{1, 1, 1, 1});
  const auto brute = brute_force_certificate_search(k4, gamma, 3);
  REQUIRE(brute);
  CHECK(brute->s() == 2);
  // {1,2} + {3,4} on the outside against {1,3} + {2,4} inside.
  CHECK(std::vector<VertexSet>(brute->outside_facets().begin(), brute->outside_facets().end()) ==
        std::vector<VertexSet>{VertexSet::of({1, 2}), VertexSet::of({3, 4})});
  CHECK_THROWS_AS(IncidenceCertificate(k4, gamma, {0}, {1}), InputError);
  CHECK_THROWS_AS(IncidenceCertificate(k4, gamma, {1, 4}, {1, 4}), InputError);
}

TEST_CASE("tetra-flap strict system and its lattice witness") {
  const auto flap = cli::tetra_flap();
  const FacetSubset gamma = generated_subcomplex(flap, {0, 4});
  const StrictVerdict v = strict_homogeneous_feasible(flap, gamma);
  REQUIRE(v.feasible);
  CHECK(v.optimum == q(1, 5));
  const LatticeWitness w = lattice_witness(flap, gamma, v);
  CHECK(w.point == std::vector<std::int64_t>{1, 1, 1, 0, 2});
  CHECK(w.m == 3);
  CHECK(in_l_gamma(flap, gamma, w.point, w.m));
  CHECK_THROWS_AS(motzkin_certificate(flap, gamma, v), InputError);
}

TEST_CASE("C5 opposite edges: feasible direction but no lattice point at m = 2") {
  const auto c5 = cli::five_cycle();
  const FacetSubset gamma = generated_subcomplex(c5, {0, 3});
  const StrictVerdict v = strict_homogeneous_feasible(c5, gamma);
  REQUIRE(v.feasible);
  CHECK(v.optimum == q(1, 6));
  const std::vector<std::int64_t> twos(5, 2);
  CHECK_FALSE(integer_feasible(build_L_system(c5, gamma, twos)));
  CHECK_FALSE(oracle::box_search(5, 4, [&](const std::vector<std::int64_t>& a) { return in_l_gamma(c5, gamma, a, 2); }));
  CHECK_FALSE(brute_force_certificate_search(c5, gamma, 4));
  const LatticeWitness w = lattice_witness(c5, gamma, v);
  CHECK(in_l_gamma(c5, gamma, w.point, w.m));
  CHECK(w.m >= 3);
}

TEST_CASE("strict feasibility is equivalent to a lattice point for some power") {
  std::size_t feasible = 0;
  std::size_t infeasible = 0;
  for (const auto& c : pure_census_up_to(4)) {
    const FacetSubsets subsets(c);
    for (const FacetSubset& gamma : subsets) {
      if (gamma.is_full()) {
        CHECK(strict_homogeneous_feasible(c, gamma).vacuous);
        continue;
      }
      const StrictVerdict v = strict_homogeneous_feasible(c, gamma);
      if (v.feasible) {
        ++feasible;
        const LatticeWitness w = lattice_witness(c, gamma, v);
        CHECK(in_l_gamma(c, gamma, w.point, w.m));
      } else {
        ++infeasible;
        const IncidenceCertificate cert = motzkin_certificate(c, gamma, v);
        CHECK(IncidenceCertificate::holds(c, gamma, cert.outside(), cert.inside()));
        const auto brute = brute_force_certificate_search(c, gamma, cert.s());
        REQUIRE(brute);
        CHECK(brute->s() <= cert.s());
        // No lattice point for small powers either.
        for (std::int64_t m = 1; m <= 4; ++m) {
          CHECK_FALSE(oracle::box_search(c.vertex_count(), m, [&](const std::vector<std::int64_t>& a) {
            return in_l_gamma(c, gamma, a, m);
          }));
        }
      }
    }
  }
  CHECK(feasible > 0);
  CHECK(infeasible > 0);
}
