#include "io.hpp"

#include <fstream>
#include <sstream>

#include "cmsym/errors.hpp"

namespace cmsym::cli {

namespace {

const Json& require(const Json& doc, const char* key, const char* what) {
  if (!doc.is_object()) throw InputError(std::string(what) + " must be a JSON object");
  auto it = doc.find(key);
  if (it == doc.end()) throw InputError(std::string(what) + " is missing \"" + key + "\"");
  return *it;
}

std::int64_t as_int(const Json& value, const char* what) {
  if (!value.is_number_integer()) throw InputError(std::string(what) + " must be an integer");
  return value.get<std::int64_t>();
}

int vertex_count(const Json& doc, const char* what) {
  const std::int64_t n = as_int(require(doc, "n", what), "\"n\"");
  if (n < 1 || n > kMaxVertices) {
    throw InputError("\"n\" must lie in 1.." + std::to_string(kMaxVertices) + ", got " + std::to_string(n));
  }
  return static_cast<int>(n);
}

Json witness_to_json(const HomologyWitness& h) {
  return Json{{"face", vertex_set_to_json(h.face)}, {"degree", h.degree}, {"dimension", h.dimension}};
}

HomologyWitness homology_from_json(const Json& doc) {
  HomologyWitness h;
  h.face = vertex_set_from_json(require(doc, "face", "homology witness"), kMaxVertices);
  h.degree = static_cast<int>(as_int(require(doc, "degree", "homology witness"), "\"degree\""));
  const std::int64_t dim = as_int(require(doc, "dimension", "homology witness"), "\"dimension\"");
  if (dim < 0) throw InputError("\"dimension\" must be nonnegative");
  h.dimension = static_cast<std::size_t>(dim);
  return h;
}

template <class T>
std::vector<T> int_array(const Json& doc, const char* what) {
  if (!doc.is_array()) throw InputError(std::string(what) + " must be an array");
  std::vector<T> out;
  out.reserve(doc.size());
  for (const Json& v : doc) out.push_back(static_cast<T>(as_int(v, what)));
  return out;
}

}  // namespace

Json vertex_set_to_json(VertexSet s) {
  Json out = Json::array();
  s.for_each([&](int v) { out.push_back(v); });
  return out;
}

VertexSet vertex_set_from_json(const Json& doc, int n) {
  if (!doc.is_array()) throw InputError("vertex set must be an array of integers");
  VertexSet s;
  for (const Json& v : doc) {
    const std::int64_t x = as_int(v, "vertex");
    if (x < 1 || x > n) {
      throw InputError("vertex " + std::to_string(x) + " outside 1.." + std::to_string(n));
    }
    const int vertex = static_cast<int>(x);
    if (s.contains(vertex)) throw InputError("vertex " + std::to_string(x) + " repeated");
    s = s.with(vertex);
  }
  return s;
}

SimplicialComplex complex_from_json(const Json& doc) {
  const int n = vertex_count(doc, "complex");
  const Json& facets = require(doc, "facets", "complex");
  if (!facets.is_array()) throw InputError("\"facets\" must be an array");
  std::vector<VertexSet> sets;
  sets.reserve(facets.size());
  for (const Json& f : facets) sets.push_back(vertex_set_from_json(f, n));
  return SimplicialComplex(n, std::move(sets));
}

Json complex_to_json(const SimplicialComplex& complex) {
  Json facets = Json::array();
  for (VertexSet f : complex.facets()) facets.push_back(vertex_set_to_json(f));
  return Json{{"n", complex.vertex_count()}, {"facets", std::move(facets)}};
}

MonomialIdeal ideal_from_json(const Json& doc) {
  const int n = vertex_count(doc, "ideal");
  const Json& components = require(doc, "components", "ideal");
  if (!components.is_array()) throw InputError("\"components\" must be an array");
  std::vector<PrimeComponent> parts;
  for (const Json& c : components) {
    PrimeComponent p;
    p.facet = vertex_set_from_json(require(c, "facet", "component"), n);
    const std::int64_t e = as_int(require(c, "exponent", "component"), "\"exponent\"");
    if (e < 1 || e > 1'000'000) throw InputError("\"exponent\" must be a positive integer, got " + std::to_string(e));
    p.exponent = static_cast<int>(e);
    parts.push_back(p);
  }
  return MonomialIdeal(n, std::move(parts));
}

Json ideal_to_json(const MonomialIdeal& ideal) {
  Json components = Json::array();
  for (const PrimeComponent& c : ideal.components()) {
    components.push_back(Json{{"facet", vertex_set_to_json(c.facet)}, {"exponent", c.exponent}});
  }
  return Json{{"n", ideal.vertex_count()}, {"components", std::move(components)}};
}

Json load_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return Json::parse(buffer.str());
  } catch (const Json::parse_error& e) {
    throw InputError(path.string() + ": malformed JSON: " + e.what());
  }
}

Json report_to_json(const CMReport& report) {
  Json out{{"v", kSchemaVersion},
           {"ideal", report.ideal},
           {"field", report.field.to_string()},
           {"cohen_macaulay", report.cohen_macaulay},
           {"route", std::string(route_name(report.route))}};
  if (!report.witness) {
    out["witness"] = nullptr;
  } else {
    out["witness"] = std::visit(
        [](const auto& w) -> Json {
          using W = std::decay_t<decltype(w)>;
          if constexpr (std::is_same_v<W, BoxWitness>) {
            return Json{{"kind", "degree-box"}, {"a", w.a}, {"homology", witness_to_json(w.homology)}};
          } else if constexpr (std::is_same_v<W, SubcomplexWitness>) {
            return Json{{"kind", "subcomplex"},
                        {"gamma", w.gamma},
                        {"point", w.point},
                        {"homology", witness_to_json(w.homology)}};
          } else {
            return Json{{"kind", "structural"}, {"v", vertex_set_to_json(w.v)}, {"homology", witness_to_json(w.homology)}};
          }
        },
        *report.witness);
  }
  out["elapsed_us"] = report.elapsed_us;
  return out;
}

CMReport report_from_json(const Json& doc) {
  const std::int64_t version = as_int(require(doc, "v", "report"), "\"v\"");
  if (version != kSchemaVersion) throw InputError("unsupported report version " + std::to_string(version));
  CMReport report;
  const Json& ideal = require(doc, "ideal", "report");
  if (!ideal.is_string()) throw InputError("\"ideal\" must be a string");
  report.ideal = ideal.get<std::string>();
  const Json& field = require(doc, "field", "report");
  if (!field.is_string()) throw InputError("\"field\" must be a string");
  report.field = FieldSpec::parse(field.get<std::string>());
  const Json& cm = require(doc, "cohen_macaulay", "report");
  if (!cm.is_boolean()) throw InputError("\"cohen_macaulay\" must be a boolean");
  report.cohen_macaulay = cm.get<bool>();
  const Json& route = require(doc, "route", "report");
  const auto parsed = route.is_string() ? parse_route(route.get<std::string>()) : std::nullopt;
  if (!parsed) throw InputError("unknown route " + route.dump());
  report.route = *parsed;
  report.elapsed_us = as_int(require(doc, "elapsed_us", "report"), "\"elapsed_us\"");

  const Json& w = require(doc, "witness", "report");
  if (w.is_null()) return report;
  const Json& kind = require(w, "kind", "witness");
  const HomologyWitness h = homology_from_json(require(w, "homology", "witness"));
  if (kind == "degree-box") {
    report.witness = BoxWitness{int_array<int>(require(w, "a", "witness"), "\"a\""), h};
  } else if (kind == "subcomplex") {
    report.witness = SubcomplexWitness{int_array<std::size_t>(require(w, "gamma", "witness"), "\"gamma\""),
                                       int_array<std::int64_t>(require(w, "point", "witness"), "\"point\""), h};
  } else if (kind == "structural") {
    report.witness = StructuralWitness{vertex_set_from_json(require(w, "v", "witness"), kMaxVertices), h};
  } else {
    throw InputError("unknown witness kind " + kind.dump());
  }
  return report;
}

}  // namespace cmsym::cli
