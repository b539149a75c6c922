#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "cmsym/errors.hpp"
#include "corpus.hpp"
#include "io.hpp"

using namespace cmsym;
using namespace cmsym::cli;

namespace {

std::string data(const char* name) { return std::string(CMSYM_DATA_DIR) + "/" + name; }

std::string temp_file(const std::string& name, const std::string& body) {
  const auto path = std::filesystem::temp_directory_path() / ("cmsym_test_" + name);
  std::ofstream(path) << body;
  return path.string();
}

struct Run {
  int code;
  std::string out;
  std::string err;
};

template <typename F>
Run run(F&& f) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = f(out, err);
  return {code, out.str(), err.str()};
}

RunConfig json_config() {
  RunConfig c;
  c.output = OutputFormat::Json;
  return c;
}

}  // namespace

TEST_CASE("reports survive a JSON round trip") {
  const Classifier cl(FieldSpec::prime(2));
  std::vector<CMReport> reports{cl.box(five_cycle(), 3), cl.subcomplex(five_cycle(), 3),
                                cl.structural(projective_plane()), cl.box(five_cycle(), 2)};
  for (const auto& r : reports) {
    const Json doc = report_to_json(r);
    CHECK(doc["v"] == 1);
    CHECK(report_from_json(Json::parse(doc.dump())) == r);
  }
  CHECK_THROWS_AS(report_from_json(Json::parse(R"({"v":1})")), InputError);
  CHECK_THROWS_AS(report_from_json(Json::parse(R"({"v":2,"ideal":"","field":"Q","cohen_macaulay":true,
    "route":"degree-box","witness":null,"elapsed_us":0})")),
                  InputError);
}

TEST_CASE("complex and ideal documents") {
  const auto c = complex_from_json(Json::parse(R"({"n":3,"facets":[[1,2],[2,3]]})"));
  CHECK(c == SimplicialComplex::from_lists(3, {{1, 2}, {2, 3}}));
  CHECK(complex_from_json(complex_to_json(projective_plane())) == projective_plane());
  CHECK_THROWS_AS(complex_from_json(Json::parse(R"({"n":3,"facets":[[1,4]]})")), InputError);
  CHECK_THROWS_AS(complex_from_json(Json::parse(R"({"n":3,"facets":[[1,1]]})")), InputError);
  CHECK_THROWS_AS(complex_from_json(Json::parse(R"({"n":3})")), InputError);
  CHECK_THROWS_AS(complex_from_json(Json::parse(R"({"n":"3","facets":[]})")), InputError);

  const auto ideal = tetrahedral_ideal({2, 1, 1, 1, 1, 2});
  CHECK(ideal_from_json(ideal_to_json(ideal)) == ideal);
  CHECK_THROWS_AS(ideal_from_json(Json::parse(R"({"n":2,"components":[{"facet":[1],"exponent":0}]})")),
                  InputError);
  CHECK_THROWS_AS(load_json("/nonexistent/cmsym.json"), InputError);
  CHECK_THROWS_AS(load_json(temp_file("bad.json", "{not json")), InputError);
}

TEST_CASE("caps specification") {
  RunConfig c;
  apply_caps_spec(c, "facets=12,labels=5");
  CHECK(c.facet_cap == 12);
  CHECK(c.labelling_cap == 5);
  apply_caps_spec(c, "labels=7");
  CHECK(c.facet_cap == 12);
  CHECK(c.labelling_cap == 7);
  CHECK_THROWS_AS(apply_caps_spec(c, "facets"), InputError);
  CHECK_THROWS_AS(apply_caps_spec(c, "depth=3"), InputError);
  CHECK_THROWS_AS(apply_caps_spec(c, "facets=x"), InputError);
  c.jobs = 0;
  CHECK_THROWS_AS(validate(c), InputError);
  CHECK(parse_index_list("1,4") == std::vector<std::size_t>{1, 4});
  CHECK_THROWS_AS(parse_index_list("1,,4"), InputError);
}

TEST_CASE("check exit codes") {
  const RunConfig text;
  auto check = [&](const char* file, int m, const RunConfig& config = RunConfig{}) {
    return run([&](std::ostream& o, std::ostream& e) { return cmd_check(data(file), m, false, config, o, e); });
  };
  CHECK(check("c5.json", 2).code == kExitCm);
  CHECK(check("c5.json", 3).code == kExitNotCm);
  CHECK(check("path3.json", 2).code == kExitNotCm);
  CHECK(check("rp2.json", 2).code == kExitNotCm);
  CHECK(check("k4.json", 3).code == kExitCm);
  CHECK(check("tetra_flap.json", 2).code == kExitCm);
  CHECK(check("tetra_flap.json", 3).code == kExitNotCm);

  RunConfig f2;
  f2.field = FieldSpec::prime(2);
  const Run rp2 = check("rp2.json", 2, f2);
  CHECK(rp2.code == kExitNotCm);
  CHECK(rp2.out.find("V = {4,5,6}") != std::string::npos);

  const Run bad = check("missing.json", 2);
  CHECK(bad.code == kExitInputError);
  CHECK(bad.err.rfind("error: ", 0) == 0);

  const auto nonpure = temp_file("nonpure.json", R"({"n":3,"facets":[[1,2],[3]]})");
  CHECK(run([&](std::ostream& o, std::ostream& e) { return cmd_check(nonpure, 2, false, text, o, e); }).code ==
        kExitInputError);

  // Six facets against a cap of 3: a single power falls back to the box
  // route, the all-powers search has no such fallback.
  RunConfig capped;
  capped.facet_cap = 3;
  const Run skipped = check("k4.json", 2, capped);
  CHECK(skipped.code == kExitCm);
  CHECK(skipped.out.find("skipped") != std::string::npos);
  const Run refused =
      run([&](std::ostream& o, std::ostream& e) { return cmd_check(data("k4.json"), 2, true, capped, o, e); });
  CHECK(refused.code == kExitInputError);
  CHECK(refused.err.find("cap") != std::string::npos);
}

TEST_CASE("check JSON output") {
  const Run r = run([](std::ostream& o, std::ostream& e) {
    return cmd_check(data("c5.json"), 3, false, json_config(), o, e);
  });
  CHECK(r.code == kExitNotCm);
  const Json doc = Json::parse(r.out);
  CHECK(doc["v"] == 1);
  CHECK(doc["cohen_macaulay"] == false);
  REQUIRE(doc["reports"].size() == 2);
  for (const auto& rep : doc["reports"]) CHECK_FALSE(report_from_json(rep).cohen_macaulay);

  const Run all = run([](std::ostream& o, std::ostream& e) {
    return cmd_check(data("k4.json"), 2, true, json_config(), o, e);
  });
  CHECK(all.code == kExitCm);
  CHECK(Json::parse(all.out)["matroid"] == true);

  const Run err = run([](std::ostream& o, std::ostream& e) {
    return cmd_check(data("missing.json"), 2, false, json_config(), o, e);
  });
  CHECK(err.code == kExitInputError);
  CHECK(Json::parse(err.out).contains("error"));
}

TEST_CASE("certify") {
  auto certify = [](const char* file, std::vector<std::size_t> gamma) {
    return run([&](std::ostream& o, std::ostream& e) { return cmd_certify(data(file), gamma, RunConfig{}, o, e); });
  };
  CHECK(certify("k4.json", {1, 4}).code == kExitCm);
  const Run flap = certify("tetra_flap.json", {0, 4});
  CHECK(flap.code == kExitNotCm);
  CHECK(flap.out.find("1/5") != std::string::npos);
  CHECK(certify("k4.json", {0, 9}).code == kExitInputError);
  CHECK(certify("k4.json", {0, 1}).code == kExitCm);
}

TEST_CASE("ideal commands") {
  auto ideal_check = [](const std::string& path) {
    return run([&](std::ostream& o, std::ostream& e) { return cmd_ideal_check(path, RunConfig{}, o, e); });
  };
  CHECK(ideal_check(data("tetrahedral_111111.json")).code == kExitCm);
  CHECK(ideal_check(data("tetrahedral_211112.json")).code == kExitCm);
  CHECK(ideal_check(data("two_edges.json")).code == kExitNotCm);
  const auto mixed =
      temp_file("mixed.json", R"({"n":3,"components":[{"facet":[1,2],"exponent":1},{"facet":[3],"exponent":1}]})");
  CHECK(ideal_check(mixed).code == kExitInputError);

  const Run l = run([](std::ostream& o, std::ostream& e) {
    return cmd_lcoh(data("two_edges.json"), RunConfig{}, o, e);
  });
  CHECK(l.code == 0);
  CHECK_FALSE(l.out.empty());
}

TEST_CASE("classify and demo") {
  const Run c = run([](std::ostream& o, std::ostream& e) {
    return cmd_classify(data("tetra_flap.json"), json_config(), o, e);
  });
  CHECK(c.code == 0);
  const Json doc = Json::parse(c.out);
  CHECK(doc["v"] == 1);

  const Run d = run([](std::ostream& o, std::ostream& e) { return cmd_demo(RunConfig{}, o, e); });
  CHECK(d.code == kExitCm);
  CHECK(d.out.find("expected verdicts reproduced") != std::string::npos);
}
