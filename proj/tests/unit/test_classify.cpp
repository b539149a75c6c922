#include <doctest.h>

#include <random>

#include "cmsym/census.hpp"
#include "cmsym/classify.hpp"
#include "cmsym/errors.hpp"
#include "corpus.hpp"
#include "support/oracles.hpp"

using namespace cmsym;

namespace {

const FieldSpec kQ = FieldSpec::rationals();
const FieldSpec kF2 = FieldSpec::prime(2);

bool reports_match(const CMReport& a, const CMReport& b) {
  return a.ideal == b.ideal && a.field == b.field && a.cohen_macaulay == b.cohen_macaulay && a.route == b.route &&
         a.witness == b.witness;
}

std::vector<oracle::Face> faces_of(const SimplicialComplex& c) { return oracle::facets_of(c); }

}  // namespace

TEST_CASE("route names round-trip") {
  for (Route r : {Route::DegreeBox, Route::Subcomplex, Route::Structural}) CHECK(parse_route(route_name(r)) == r);
  CHECK_FALSE(parse_route("simplex").has_value());
}

TEST_CASE("C5: second power CM, third not") {
  const auto c5 = cli::five_cycle();
  const Classifier cl(kQ);
  const CheckOutcome two = cl.check(c5, 2);
  CHECK(two.cohen_macaulay);
  CHECK(two.reports.size() == 3);

  const CMReport box = cl.box(c5, 3);
  CHECK_FALSE(box.cohen_macaulay);
  const auto& bw = std::get<BoxWitness>(*box.witness);
  CHECK(bw.a == std::vector<int>{0, 1, 1, 0, 2});
  // Δ_a at that degree is two disjoint edges per the localisation rule.
  const auto ideal = symbolic_power(c5, 3);
  const auto d = oracle::degree_complex(ideal, bw.a);
  CHECK_FALSE(oracle::reisner_cm(d, oracle::kPrime));
  CHECK(witness_holds(ideal, box));

  const CMReport sub = cl.subcomplex(c5, 3);
  CHECK_FALSE(sub.cohen_macaulay);
  CHECK(witness_holds(ideal, sub));
  CHECK(diameter_necessary(c5));
}

TEST_CASE("path of length three fails at the second power") {
  const auto p = cli::path_three();
  const Classifier cl(kQ);
  const CMReport s = cl.structural(p);
  CHECK_FALSE(s.cohen_macaulay);
  CHECK(std::get<StructuralWitness>(*s.witness).v == VertexSet::of({1, 4}));
  CHECK(std::get<BoxWitness>(*cl.box(p, 2).witness).a == std::vector<int>{1, 0, 0, 1});
  CHECK_FALSE(cl.check(p, 2).cohen_macaulay);
  CHECK_FALSE(diameter_necessary(p));
}

TEST_CASE("projective plane over both fields") {
  const auto rp2 = cli::projective_plane();
  for (const FieldSpec& field : {kQ, kF2}) {
    const Classifier cl(field);
    const CMReport s = cl.structural(rp2);
    CHECK_FALSE(s.cohen_macaulay);
    CHECK(std::get<StructuralWitness>(*s.witness).v == VertexSet::of({4, 5, 6}));
    CHECK(witness_holds(symbolic_power(rp2, 2), s));
    CHECK_FALSE(cl.check(rp2, 2).cohen_macaulay);
  }
}

TEST_CASE("tetra-flap fails from the third power with a fixed witness") {
  const auto flap = cli::tetra_flap();
  const Classifier cl(kQ);
  CHECK(cl.check(flap, 2).cohen_macaulay);
  for (int m = 3; m <= 5; ++m) {
    const CMReport sub = cl.subcomplex(flap, m);
    REQUIRE_FALSE(sub.cohen_macaulay);
    const auto& w = std::get<SubcomplexWitness>(*sub.witness);
    CHECK(w.gamma == std::vector<std::size_t>{0, 4});
    CHECK(w.point == LatticePoint{1, 1, 1, 0, m - 1});
    const auto ideal = symbolic_power(flap, m);
    const std::vector<int> a{1, 1, 1, 0, m - 1};
    const Membership member = contains_monomial(ideal, Monomial(a));
    CHECK(member.per_component == std::vector<bool>{false, true, true, true, false});
    CHECK(witness_holds(ideal, sub));
  }
}

TEST_CASE("routes agree with a brute-force degree scan") {
  std::mt19937_64 rng(59);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 2);
    const auto c = oracle::random_pure(rng, n, 2);
    for (int m = 1; m <= 3; ++m) {
      const bool expected = oracle::ideal_cm_by_box(symbolic_power(c, m), kQ);
      const Classifier cl(kQ);
      CHECK(cl.box(c, m).cohen_macaulay == expected);
      CHECK(cl.subcomplex(c, m).cohen_macaulay == expected);
      if (m == 2) CHECK(cl.structural(c).cohen_macaulay == expected);
    }
  }
}

TEST_CASE("general ideals route through the box and subcomplex searches") {
  const Classifier cl(kQ);
  for (const auto& exps : std::vector<std::vector<int>>{{1, 1, 1, 1, 1, 1}, {2, 1, 1, 1, 1, 2}, {3, 1, 2, 2, 1, 3}}) {
    const auto ideal = cli::tetrahedral_ideal(exps);
    const bool tk = takayama_cm_oracle(ideal, kQ).cohen_macaulay;
    CHECK(cl.box(ideal).cohen_macaulay == tk);
    CHECK(cl.subcomplex(ideal).cohen_macaulay == tk);
    CHECK(oracle::ideal_cm_by_box(ideal, kQ) == tk);
  }
  const MonomialIdeal mixed(3, {{VertexSet::of({1, 2}), 1}, {VertexSet::of({3}), 1}});
  CHECK_THROWS_AS(cl.subcomplex(mixed), InputError);
  CHECK_THROWS_AS(cl.box(mixed), InputError);
  CHECK_THROWS_AS(cl.box(SimplicialComplex::from_lists(3, {{1, 2}, {3}}), 2), InputError);
}

TEST_CASE("worker count never changes a report") {
  const std::vector<SimplicialComplex> inputs{cli::five_cycle(), cli::projective_plane(), cli::tetra_flap(),
                                              cli::path_three()};
  const Classifier serial(kQ);
  const Classifier parallel(kQ, {.jobs = 4});
  for (const auto& c : inputs) {
    for (int m = 2; m <= 3; ++m) {
      CHECK(reports_match(serial.box(c, m), parallel.box(c, m)));
      CHECK(reports_match(serial.subcomplex(c, m), parallel.subcomplex(c, m)));
    }
    CHECK(reports_match(serial.structural(c), parallel.structural(c)));
    const auto a = serial.all_symbolic(c);
    const auto b = parallel.all_symbolic(c);
    CHECK(a.all_cm == b.all_cm);
    CHECK(a.witness == b.witness);
    CHECK(a.witness_m == b.witness_m);
    CHECK(a.certified == b.certified);
  }
}

TEST_CASE("all symbolic powers") {
  const Classifier cl(kQ);
  const auto c5 = cl.all_symbolic(cli::five_cycle());
  CHECK_FALSE(c5.all_cm);
  CHECK_FALSE(c5.matroid.matroid);
  REQUIRE(c5.matroid.failure);
  CHECK(*c5.matroid.failure == ExchangeFailure{VertexSet::of({1, 2}), VertexSet::of({3, 4}), 2});
  REQUIRE(c5.witness);
  CHECK(c5.witness_m >= 3);
  CHECK(witness_holds(symbolic_power(cli::five_cycle(), static_cast<int>(c5.witness_m)),
                      CMReport{"", kQ, false, Route::Subcomplex, Witness{*c5.witness}, 0}));

  const auto k4 = cl.all_symbolic(cli::complete_graph_k4());
  CHECK(k4.all_cm);
  CHECK(k4.matroid.matroid);
  CHECK(k4.certified > 0);

  const auto flap = cl.all_symbolic(cli::tetra_flap());
  CHECK_FALSE(flap.all_cm);
  CHECK(flap.witness_m == 3);

  // A non-CM complex fails at the first power.
  const auto two = cl.all_symbolic(SimplicialComplex::from_lists(4, {{1, 2}, {3, 4}}));
  CHECK_FALSE(two.all_cm);
  CHECK(two.witness_m == 1);
}

TEST_CASE("basis exchange matches the augmentation axiom") {
  for (const auto& c : pure_census_up_to(5)) {
    CHECK(is_matroid(c).matroid == oracle::augmentation_matroid(faces_of(c)));
  }
  CHECK(is_matroid(skeleton(SimplicialComplex::simplex(6), 2)).matroid);
}

TEST_CASE("tightness") {
  const auto flap = cli::tetra_flap();
  // Identity fails at G1 = {1,2,3}, G2 = {3,4,5}, i = 1, j = 4.
  CHECK_FALSE(is_tight(flap, Labelling::identity(5)));
  const auto found = find_tight_labelling(flap);
  REQUIRE(found);
  CHECK(found->labels() == std::vector<int>{3, 4, 1, 2, 5});
  CHECK(is_tight(flap, Labelling({5, 4, 3, 2, 1})));
  CHECK_FALSE(find_tight_labelling(cli::five_cycle()));
  CHECK(find_tight_labelling(cli::complete_graph_k4()));
  CHECK_THROWS_AS(find_tight_labelling(skeleton(SimplicialComplex::simplex(9), 1)), CapExceeded);
  CHECK_THROWS_AS(Labelling({1, 1, 2}), InputError);

  // The tight labelling search is consistent with relabelling.
  const auto relabelled = relabel(flap, *found);
  CHECK(is_tight(relabelled, Labelling::identity(5)));
}

TEST_CASE("shifted and flag complexes") {
  const auto star = SimplicialComplex::from_lists(4, {{1, 2}, {1, 3}, {1, 4}});
  CHECK(is_shifted(star, Labelling::identity(4)));
  CHECK_FALSE(is_shifted(star, Labelling({4, 3, 2, 1})));
  CHECK(is_tight(star, Labelling::identity(4)));

  CHECK(is_flag(cli::five_cycle()));
  CHECK_FALSE(flag_all_symbolic(cli::five_cycle()));
  // Square 1-3-2-4: the nonfaces {1,2}, {3,4} are two separate edges.
  const auto square = SimplicialComplex::from_lists(4, {{1, 3}, {1, 4}, {2, 3}, {2, 4}});
  CHECK(is_flag(square));
  CHECK(flag_all_symbolic(square));
  CHECK(all_symbolic_cm(square, kQ).all_cm);
  CHECK(flag_all_symbolic(SimplicialComplex::simplex(3)));
  const auto hollow = skeleton(SimplicialComplex::simplex(3), 1);
  CHECK_FALSE(is_flag(hollow));
  CHECK_THROWS_AS(flag_all_symbolic(hollow), InputError);
}

TEST_CASE("flag criterion agrees with the all-powers test on flag census members") {
  for (const auto& c : pure_census_up_to(5)) {
    if (!is_flag(c)) continue;
    CHECK(flag_all_symbolic(c) == all_symbolic_cm(c, kQ).all_cm);
  }
}

TEST_CASE("thresholds") {
  CHECK(preservation_thresholds(2, 5, 2).t_down == 2);
  CHECK(preservation_thresholds(3, 5, 2).t_down == 5);
  CHECK(preservation_thresholds(3, 5, 2).t_all == 729);
  CHECK(preservation_thresholds(1, 20, 0).t_all.get_str() == "2097152000000000000000000000");  // 20^21
  CHECK_THROWS_AS(preservation_thresholds(0, 5, 2), InputError);
  CHECK_THROWS_AS(preservation_thresholds(2, 5, 5), InputError);
}

TEST_CASE("witness_holds rejects forged witnesses") {
  const auto c5 = cli::five_cycle();
  const auto ideal = symbolic_power(c5, 3);
  CMReport r = Classifier(kQ).box(c5, 3);
  std::get<BoxWitness>(*r.witness).a = {0, 0, 0, 0, 0};
  CHECK_FALSE(witness_holds(ideal, r));
  CMReport s = Classifier(kQ).subcomplex(c5, 3);
  std::get<SubcomplexWitness>(*s.witness).point = {0, 0, 0, 0, 0};
  CHECK_FALSE(witness_holds(ideal, s));
  CMReport cm = Classifier(kQ).box(c5, 2);
  CHECK(witness_holds(symbolic_power(c5, 2), cm));
}
