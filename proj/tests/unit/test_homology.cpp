#include <doctest.h>

#include <random>

#include "cmsym/census.hpp"
#include "cmsym/errors.hpp"
#include "cmsym/homology.hpp"
#include "corpus.hpp"
#include "support/oracles.hpp"

using namespace cmsym;

namespace {

const FieldSpec kQ = FieldSpec::rationals();
const FieldSpec kF2 = FieldSpec::prime(2);

std::vector<std::size_t> betti_list(const BettiVector& b, int top) {
  std::vector<std::size_t> out;
  for (int j = -1; j <= top; ++j) out.push_back(b.at(j));
  return out;
}

// Random complexes, pure or not, with at least one facet.
SimplicialComplex random_complex(std::mt19937_64& rng, int n) {
  std::vector<VertexSet> facets;
  const int k = 1 + static_cast<int>(rng() % 5);
  for (int i = 0; i < k; ++i) facets.emplace_back(rng() & VertexSet::prefix(n).bits());
  return SimplicialComplex(n, facets);
}

}  // namespace

TEST_CASE("field parsing") {
  CHECK(FieldSpec::parse("Q").is_rational());
  CHECK(FieldSpec::parse("Fp:2").characteristic() == 2);
  CHECK(FieldSpec::parse("Fp:7919").to_string() == "Fp:7919");
  CHECK_THROWS_AS(FieldSpec::parse("Fp:4"), InputError);
  CHECK_THROWS_AS(FieldSpec::parse("Fp:"), InputError);
  CHECK_THROWS_AS(FieldSpec::parse("R"), InputError);
  CHECK_THROWS_AS(FieldSpec::prime(1), InputError);
}

TEST_CASE("rank over Q and F_p") {
  Matrix m(3, 3);
  // rows (1,1,0), (0,1,1), (1,0,1): determinant 2
  m(0, 0) = 1, m(0, 1) = 1, m(1, 1) = 1, m(1, 2) = 1, m(2, 0) = 1, m(2, 2) = 1;
  CHECK(rank(m, kQ) == 3);
  CHECK(rank(m, kF2) == 2);
  CHECK(rank(m, FieldSpec::prime(3)) == 3);
  CHECK(rank(Matrix(0, 4), kQ) == 0);

  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t r = 1 + rng() % 6;
    const std::size_t c = 1 + rng() % 6;
    Matrix a(r, c);
    std::vector<std::vector<std::int64_t>> dense(r, std::vector<std::int64_t>(c));
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < c; ++j) {
        const auto v = static_cast<std::int64_t>(rng() % 5) - 2;
        a(i, j) = v;
        dense[i][j] = v;
      }
    }
    CHECK(rank(a, kQ) == oracle::rank_mod(dense, oracle::kPrime));
    CHECK(rank(a, FieldSpec::prime(3)) == oracle::rank_mod(dense, 3));
  }
}

TEST_CASE("frozen Betti numbers") {
  const auto rp2 = cli::projective_plane();
  CHECK(betti_list(reduced_homology(rp2, kQ), 2) == std::vector<std::size_t>{0, 0, 0, 0});
  CHECK(betti_list(reduced_homology(rp2, kF2), 2) == std::vector<std::size_t>{0, 0, 1, 1});
  CHECK(betti_list(reduced_homology(cli::five_cycle(), kQ), 1) == std::vector<std::size_t>{0, 0, 1});
  CHECK(betti_list(reduced_homology(SimplicialComplex::from_lists(2, {{1}, {2}}), kQ), 0) ==
        std::vector<std::size_t>{0, 1});
  // {∅} has H̃_{-1} = k.
  CHECK(reduced_homology(SimplicialComplex(3, {VertexSet()}), kQ).at(-1) == 1);
  CHECK(reduced_homology(SimplicialComplex::simplex(4), kQ).all_zero());
  CHECK_THROWS_AS(reduced_homology(SimplicialComplex::void_complex(2), kQ), InputError);
}

TEST_CASE("reduced homology agrees with an independent elimination") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 120; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 5);
    const auto c = random_complex(rng, n);
    const auto facets = oracle::facets_of(c);
    const int top = c.dimension();
    CHECK(betti_list(reduced_homology(c, kQ), top) == oracle::reduced_betti(facets, oracle::kPrime));
    CHECK(betti_list(reduced_homology(c, kF2), top) == oracle::reduced_betti(facets, 2));
    CHECK(betti_list(reduced_homology(c, FieldSpec::prime(3)), top) == oracle::reduced_betti(facets, 3));
  }
}

TEST_CASE("boundary of a boundary vanishes on the census") {
  for (const auto& c : pure_census_up_to(5)) {
    for (const FieldSpec& field : {kQ, kF2}) {
      for (int j = 1; j <= c.dimension(); ++j) {
        const Matrix outer = boundary_matrix(c, j - 1, field);
        const Matrix inner = boundary_matrix(c, j, field);
        REQUIRE(outer.cols() == inner.rows());
        for (std::size_t r = 0; r < outer.rows(); ++r) {
          for (std::size_t k = 0; k < inner.cols(); ++k) {
            std::int64_t sum = 0;
            for (std::size_t m = 0; m < outer.cols(); ++m) sum += outer(r, m) * inner(m, k);
            if (!field.is_rational()) sum %= static_cast<std::int64_t>(field.characteristic());
            CHECK(sum == 0);
          }
        }
      }
    }
  }
}

TEST_CASE("Euler characteristic matches the face counts") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 80; ++trial) {
    const auto c = random_complex(rng, 2 + static_cast<int>(rng() % 5));
    for (const FieldSpec& field : {kQ, kF2, FieldSpec::prime(3)}) {
      const BettiVector b = reduced_homology(c, field);
      std::int64_t chi_faces = 0;
      std::int64_t chi_betti = 0;
      for (int j = -1; j <= c.dimension(); ++j) {
        const auto sign = (j + 1) % 2 == 0 ? 1 : -1;
        chi_faces += sign * static_cast<std::int64_t>(c.faces_of_dimension(j).size());
        chi_betti += sign * static_cast<std::int64_t>(b.at(j));
      }
      CHECK(chi_faces == chi_betti);
    }
  }
}

TEST_CASE("Betti numbers over F_p dominate those over Q") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 80; ++trial) {
    const auto c = random_complex(rng, 2 + static_cast<int>(rng() % 5));
    const BettiVector q = reduced_homology(c, kQ);
    const BettiVector p = reduced_homology(c, kF2);
    for (int j = -1; j <= c.dimension(); ++j) CHECK(p.at(j) >= q.at(j));
  }
}

TEST_CASE("CM test matches Reisner's criterion computed independently") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 150; ++trial) {
    const auto c = random_complex(rng, 2 + static_cast<int>(rng() % 5));
    for (const FieldSpec& field : {kQ, kF2}) {
      const CmVerdict v = is_cm_complex(c, field);
      CHECK(v.cohen_macaulay == oracle::reisner_cm(oracle::facets_of(c), oracle::field_prime(field)));
      CHECK(v.pure == c.is_pure());
      CHECK(v.cohen_macaulay != v.witness.has_value());
      if (v.witness) {
        // The witness names a real obstruction.
        const auto lk = link(c, v.witness->face);
        CHECK(v.witness->degree < lk.dimension());
        CHECK(reduced_homology(lk, field).at(v.witness->degree) == v.witness->dimension);
        CHECK(v.witness->dimension > 0);
      }
    }
  }
}

TEST_CASE("cones preserve the CM property") {
  const auto point = SimplicialComplex::from_lists(1, {{1}});
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 60; ++trial) {
    const auto c = random_complex(rng, 2 + static_cast<int>(rng() % 4));
    const auto cone = join(c, point);
    CHECK(reduced_homology(cone, kQ).all_zero());
    CHECK(is_cm_complex(cone, kQ).cohen_macaulay == is_cm_complex(c, kQ).cohen_macaulay);
    CHECK(is_cm_complex(cone, kF2).cohen_macaulay == is_cm_complex(c, kF2).cohen_macaulay);
  }
}

TEST_CASE("known CM verdicts") {
  CHECK(is_cm_complex(cli::five_cycle(), kQ).cohen_macaulay);
  CHECK(is_cm_complex(cli::path_three(), kQ).cohen_macaulay);
  CHECK(is_cm_complex(cli::projective_plane(), kQ).cohen_macaulay);
  CHECK_FALSE(is_cm_complex(cli::projective_plane(), kF2).cohen_macaulay);
  const auto disjoint = SimplicialComplex::from_lists(4, {{1, 2}, {3, 4}});
  const CmVerdict v = is_cm_complex(disjoint, kQ);
  CHECK_FALSE(v.cohen_macaulay);
  REQUIRE(v.witness);
  CHECK(v.witness->face == VertexSet());
  CHECK(v.witness->degree == 0);
  // Non-pure complexes are never CM.
  CHECK_FALSE(is_cm_complex(SimplicialComplex::from_lists(3, {{1, 2}, {3}}), kQ).cohen_macaulay);
  CHECK(is_cm_complex(SimplicialComplex(2, {VertexSet()}), kQ).cohen_macaulay);
  CHECK_THROWS_AS(is_cm_complex(SimplicialComplex::void_complex(2), kQ), InputError);
}

TEST_CASE("memoized oracle agrees with the direct test") {
  CmOracle memo(kQ);
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 100; ++trial) {
    const auto c = random_complex(rng, 2 + static_cast<int>(rng() % 4));
    const CmVerdict direct = is_cm_complex(c, kQ);
    const CmVerdict cached = memo.check(c);
    CHECK(cached.cohen_macaulay == direct.cohen_macaulay);
    CHECK(cached.witness == direct.witness);
    CHECK(memo.check(c).cohen_macaulay == direct.cohen_macaulay);
  }
  CHECK(memo.cache_size() > 0);
}
