#include "cli.hpp"

#include <charconv>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "cmsym/errors.hpp"
#include "cmsym/feasibility.hpp"
#include "corpus.hpp"
#include "io.hpp"

namespace cmsym::cli {

namespace {

std::size_t parse_positive(std::string_view text, std::string_view what) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || value < 1) {
    throw InputError(std::string(what) + " must be a positive integer, got '" + std::string(text) + "'");
  }
  return value;
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

std::string join_ints(const auto& values) {
  std::string out = "(";
  bool first = true;
  for (const auto& v : values) {
    if (!first) out += ',';
    out += std::to_string(v);
    first = false;
  }
  return out + ")";
}

std::string homology_text(const HomologyWitness& h, std::string_view where) {
  return "H~_" + std::to_string(h.degree) + "(lk " + to_string(h.face) + ") in " + std::string(where) +
         " has dimension " + std::to_string(h.dimension);
}

std::string gamma_text(std::span<const std::size_t> gamma, const SimplicialComplex& complex) {
  std::string out;
  for (std::size_t i : gamma) {
    if (!out.empty()) out += ", ";
    out += "#" + std::to_string(i) + " " + to_string(complex.facet(i));
  }
  return out;
}

Json homology_json(const HomologyWitness& h) {
  return Json{{"face", vertex_set_to_json(h.face)}, {"degree", h.degree}, {"dimension", h.dimension}};
}

Json subcomplex_witness_json(const SubcomplexWitness& w) {
  return Json{{"gamma", w.gamma}, {"point", w.point}, {"homology", homology_json(w.homology)}};
}

std::string format_us(std::int64_t us) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(1) << static_cast<double>(us) / 1000.0 << " ms";
  return s.str();
}

void print_report_line(std::ostream& out, const CMReport& r, const SimplicialComplex& complex) {
  out << "  " << std::left << std::setw(12) << route_name(r.route) << std::setw(8)
      << (r.cohen_macaulay ? "CM" : "not CM");
  if (r.witness) {
    out << std::setw(11) << format_us(r.elapsed_us) << describe_witness(*r.witness, complex);
  } else {
    out << format_us(r.elapsed_us);
  }
  out << '\n';
}

// Maps library errors onto exit code 2.
template <class Body>
int guarded(const RunConfig& config, std::ostream& out, std::ostream& err, Body&& body) {
  std::string message;
  try {
    validate(config);
    return body();
  } catch (const CapExceeded& e) {
    message = e.what();
  } catch (const InputError& e) {
    message = e.what();
  } catch (const RouteDisagreement& e) {
    message = std::string("internal error: ") + e.what();
  } catch (const std::exception& e) {
    message = std::string("internal error: ") + e.what();
  }
  err << "error: " << message << '\n';
  if (config.output == OutputFormat::Json) out << Json{{"v", kSchemaVersion}, {"error", message}}.dump() << '\n';
  return kExitInputError;
}

std::string rational_text(const Rational& q) { return q.get_str(); }

}  // namespace

void apply_caps_spec(RunConfig& config, std::string_view spec) {
  while (!spec.empty()) {
    const std::size_t comma = spec.find(',');
    const std::string_view item = spec.substr(0, comma);
    spec = comma == std::string_view::npos ? std::string_view{} : spec.substr(comma + 1);
    if (item.empty()) continue;
    const std::size_t eq = item.find('=');
    if (eq == std::string_view::npos) throw InputError("cap setting '" + std::string(item) + "' lacks '='");
    const std::string_view key = item.substr(0, eq);
    const std::size_t value = parse_positive(item.substr(eq + 1), key);
    if (key == "facets") {
      config.facet_cap = value;
    } else if (key == "labels") {
      config.labelling_cap = value;
    } else {
      throw InputError("unknown cap '" + std::string(key) + "' (expected facets or labels)");
    }
  }
}

void validate(const RunConfig& config) {
  if (config.facet_cap < 1) throw InputError("facet cap must be at least 1");
  if (config.labelling_cap < 1) throw InputError("labelling cap must be at least 1");
  if (config.m_cap < 1) throw InputError("m cap must be at least 1");
  if (config.jobs < 1) throw InputError("jobs must be at least 1");
}

std::vector<std::size_t> parse_index_list(std::string_view text) {
  std::vector<std::size_t> out;
  while (true) {
    const std::size_t comma = text.find(',');
    const std::string_view item = text.substr(0, comma);
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size()) {
      throw InputError("bad facet index '" + std::string(item) + "'");
    }
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    text = text.substr(comma + 1);
  }
  return out;
}

std::string describe_witness(const Witness& witness, const SimplicialComplex& complex) {
  return std::visit(
      [&](const auto& w) -> std::string {
        using W = std::decay_t<decltype(w)>;
        if constexpr (std::is_same_v<W, BoxWitness>) {
          return "a = " + join_ints(w.a) + "; " + homology_text(w.homology, "D_a");
        } else if constexpr (std::is_same_v<W, SubcomplexWitness>) {
          return "Gamma = " + gamma_text(w.gamma, complex) + "; point " + join_ints(w.point) + "; " +
                 homology_text(w.homology, "Gamma");
        } else {
          if (w.v.empty()) return "V = all; " + homology_text(w.homology, "D");
          return "V = " + to_string(w.v) + "; " + homology_text(w.homology, "D_V");
        }
      },
      witness);
}

int cmd_check(const std::string& path, int m, bool all_m, const RunConfig& config, std::ostream& out,
              std::ostream& err) {
  return guarded(config, out, err, [&] {
    const SimplicialComplex complex = complex_from_json(load_json(path));
    const Classifier classifier(config.field, config.classifier_options());
    if (all_m) {
      const AllSymbolicReport r = classifier.all_symbolic(complex);
      if (config.output == OutputFormat::Json) {
        Json doc{{"v", kSchemaVersion},
                 {"command", "check"},
                 {"complex", to_string(complex)},
                 {"field", config.field.to_string()},
                 {"all_m", true},
                 {"cohen_macaulay", r.all_cm},
                 {"matroid", r.matroid.matroid}};
        doc["exchange_failure"] = r.matroid.failure ? Json{{"f", vertex_set_to_json(r.matroid.failure->f)},
                                                           {"g", vertex_set_to_json(r.matroid.failure->g)},
                                                           {"x", r.matroid.failure->x}}
                                                     : Json(nullptr);
        doc["witness"] = r.witness ? subcomplex_witness_json(*r.witness) : Json(nullptr);
        doc["witness_m"] = r.witness_m;
        doc["certified"] = r.certified;
        out << doc.dump(2) << '\n';
      } else {
        out << "all symbolic powers of " << to_string(complex) << " over " << config.field.to_string() << ": "
            << (r.all_cm ? "Cohen-Macaulay" : "not all Cohen-Macaulay") << '\n';
        out << "  basis exchange  " << (r.matroid.matroid ? "matroid" : "not a matroid");
        if (r.matroid.failure) {
          out << "; F = " << to_string(r.matroid.failure->f) << ", G = " << to_string(r.matroid.failure->g)
              << ", x = " << r.matroid.failure->x;
        }
        out << '\n';
        if (r.witness) {
          out << "  strict systems  I^(" << r.witness_m << ") fails; "
              << describe_witness(Witness{*r.witness}, complex) << '\n';
        } else {
          out << "  strict systems  " << r.certified << " incidence certificates verified\n";
        }
      }
      return r.all_cm ? kExitCm : kExitNotCm;
    }

    if (m < 1) throw InputError("-m must be at least 1");
    const CheckOutcome outcome = classifier.check(complex, m);
    if (config.output == OutputFormat::Json) {
      Json reports = Json::array();
      for (const auto& r : outcome.reports) reports.push_back(report_to_json(r));
      out << Json{{"v", kSchemaVersion},
                  {"command", "check"},
                  {"m", m},
                  {"cohen_macaulay", outcome.cohen_macaulay},
                  {"reports", std::move(reports)}}
                 .dump(2)
          << '\n';
    } else {
      out << describe_symbolic_power(complex, m) << " over " << config.field.to_string() << ": "
          << (outcome.cohen_macaulay ? "Cohen-Macaulay" : "not Cohen-Macaulay") << '\n';
      for (const auto& r : outcome.reports) print_report_line(out, r, complex);
      if (complex.facet_count() > config.facet_cap) {
        out << "  subcomplex route skipped: " << complex.facet_count() << " facets exceed the facet cap "
            << config.facet_cap << '\n';
      }
    }
    return outcome.cohen_macaulay ? kExitCm : kExitNotCm;
  });
}

int cmd_classify(const std::string& path, const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(config, out, err, [&] {
    const SimplicialComplex complex = complex_from_json(load_json(path));
    const Classifier classifier(config.field, config.classifier_options());
    const bool pure = complex.is_pure();
    Json doc{{"v", kSchemaVersion},
             {"command", "classify"},
             {"complex", to_string(complex)},
             {"field", config.field.to_string()},
             {"pure", pure},
             {"dim", complex.dimension()}};
    std::vector<std::pair<std::string, std::string>> lines;
    lines.emplace_back("pure", yes_no(pure));
    lines.emplace_back("dim", std::to_string(complex.dimension()));

    const auto diameter = one_skeleton_diameter(complex);
    doc["diameter"] = diameter ? Json(*diameter) : Json(nullptr);
    lines.emplace_back("diameter", diameter ? std::to_string(*diameter) : "infinite");

    // Capped computations degrade to "skipped" instead of failing the command.
    auto attempt = [&](const std::string& key, auto&& compute) {
      try {
        compute();
      } catch (const CapExceeded& e) {
        doc[key] = Json{{"skipped", e.what()}};
        lines.emplace_back(key, std::string("skipped (") + e.what() + ")");
      }
    };

    if (pure) {
      const MatroidVerdict mv = is_matroid(complex);
      doc["matroid"] = mv.matroid;
      std::string text = yes_no(mv.matroid);
      if (mv.failure) {
        text += " (exchange fails for F = " + to_string(mv.failure->f) + ", G = " + to_string(mv.failure->g) +
                ", x = " + std::to_string(mv.failure->x) + ")";
      }
      lines.emplace_back("matroid", text);
      attempt("tight", [&] {
        const auto labelling = find_tight_labelling(complex, config.labelling_cap);
        doc["tight"] = labelling.has_value();
        doc["tight_labelling"] = labelling ? Json(labelling->labels()) : Json(nullptr);
        lines.emplace_back("tight", labelling ? "yes, labels " + join_ints(labelling->labels()) : "no");
      });
    } else {
      doc["matroid"] = nullptr;
      doc["tight"] = nullptr;
      lines.emplace_back("matroid", "n/a (not pure)");
      lines.emplace_back("tight", "n/a (not pure)");
    }

    const bool shifted = complex.is_void() || is_shifted(complex, Labelling::identity(complex.vertex_count()));
    doc["shifted"] = shifted;
    lines.emplace_back("shifted", std::string(yes_no(shifted)) + " (identity labelling)");
    const bool flag = is_flag(complex);
    doc["flag"] = flag;
    lines.emplace_back("flag", yes_no(flag));

    const CmVerdict cm = classifier.oracle().check(complex);
    doc["cm"] = cm.cohen_macaulay;
    lines.emplace_back("CM", yes_no(cm.cohen_macaulay));

    if (pure && !complex.is_void()) {
      Json powers = Json::object();
      std::string text;
      for (int m = 2; m <= std::max(2, config.m_cap); ++m) {
        const std::string key = std::to_string(m);
        try {
          const bool ok = classifier.check(complex, m).cohen_macaulay;
          powers[key] = ok;
          text += (text.empty() ? "" : ", ") + ("m=" + key + " ") + yes_no(ok);
        } catch (const CapExceeded& e) {
          powers[key] = Json{{"skipped", e.what()}};
          text += (text.empty() ? "" : ", ") + ("m=" + key + " skipped");
        }
      }
      doc["cm_symbolic"] = std::move(powers);
      lines.emplace_back("CM(m)", text);
      attempt("all_m", [&] {
        const AllSymbolicReport all = classifier.all_symbolic(complex);
        doc["all_m"] = all.all_cm;
        std::string line = yes_no(all.all_cm);
        if (all.witness) line += " (first failure at m = " + std::to_string(all.witness_m) + ")";
        lines.emplace_back("all powers", line);
      });
      if (flag) {
        const bool flag_all = flag_all_symbolic(complex);
        doc["flag_all_m"] = flag_all;
        lines.emplace_back("flag criterion", std::string(yes_no(flag_all)) + " (nonface graph is a union of cliques)");
      }
      const int d = complex.dimension() + 1;
      const int n = complex.vertex_count();
      if (d < n) {
        Json thresholds{{"t_all", preservation_thresholds(1, n, d).t_all.get_str()}};
        std::string text2 = "t_all = " + thresholds["t_all"].get<std::string>();
        Json down = Json::object();
        for (int m = 2; m <= std::max(2, config.m_cap); ++m) {
          const std::string t = preservation_thresholds(m, n, d).t_down.get_str();
          down[std::to_string(m)] = t;
          text2 += ", t_down(" + std::to_string(m) + ") = " + t;
        }
        thresholds["t_down"] = std::move(down);
        doc["thresholds"] = std::move(thresholds);
        lines.emplace_back("thresholds", text2);
      }
    }

    if (config.output == OutputFormat::Json) {
      out << doc.dump(2) << '\n';
    } else {
      out << to_string(complex) << " over " << config.field.to_string() << '\n';
      for (const auto& [key, value] : lines) out << "  " << std::left << std::setw(16) << key << value << '\n';
    }
    return kExitCm;
  });
}

int cmd_certify(const std::string& path, const std::vector<std::size_t>& gamma_indices, const RunConfig& config,
                std::ostream& out, std::ostream& err) {
  return guarded(config, out, err, [&] {
    const SimplicialComplex complex = complex_from_json(load_json(path));
    if (!complex.is_pure()) throw InputError("certify requires a pure complex");
    for (std::size_t i : gamma_indices) {
      if (i >= complex.facet_count()) {
        throw InputError("facet index " + std::to_string(i) + " out of range 0.." +
                         std::to_string(complex.facet_count() - 1));
      }
    }
    const FacetSubset gamma = generated_subcomplex(complex, gamma_indices);
    const Classifier classifier(config.field, config.classifier_options());
    const CmVerdict gamma_cm = classifier.oracle().check(gamma.complex());

    Json doc{{"v", kSchemaVersion},
             {"command", "certify"},
             {"complex", to_string(complex)},
             {"field", config.field.to_string()},
             {"gamma", std::vector<std::size_t>(gamma.selected().begin(), gamma.selected().end())},
             {"gamma_cm", gamma_cm.cohen_macaulay}};
    std::ostringstream text;
    text << "Gamma = " << gamma_text(gamma.selected(), complex) << '\n';
    int code = kExitCm;

    if (gamma_cm.cohen_macaulay) {
      text << "  Gamma is Cohen-Macaulay over " << config.field.to_string() << "; it obstructs no power\n";
    } else {
      text << "  Gamma is not Cohen-Macaulay: " << homology_text(*gamma_cm.witness, "Gamma") << '\n';
      const StrictVerdict verdict = strict_homogeneous_feasible(complex, gamma);
      doc["vacuous"] = verdict.vacuous;
      doc["feasible"] = verdict.feasible;
      if (verdict.vacuous) {
        text << "  Gamma is all of Delta, so every power fails\n";
        code = kExitNotCm;
      } else {
        doc["optimum"] = rational_text(verdict.optimum);
        text << "  strict system " << (verdict.feasible ? "feasible" : "infeasible") << ", t* = "
             << rational_text(verdict.optimum) << " (" << verdict.pivots << " pivots)\n";
        if (verdict.feasible) {
          Json direction = Json::array();
          std::string dir_text;
          for (const Rational& q : verdict.direction) {
            direction.push_back(rational_text(q));
            dir_text += (dir_text.empty() ? "" : ",") + rational_text(q);
          }
          const LatticeWitness w = lattice_witness(complex, gamma, verdict);
          doc["direction"] = std::move(direction);
          doc["lattice_witness"] = Json{{"point", w.point}, {"m", w.m}};
          text << "  direction (" << dir_text << ")\n";
          text << "  point " << join_ints(w.point) << " lies in L_Gamma of I^(" << w.m << "), so I^(" << w.m
               << ") is not Cohen-Macaulay\n";
          code = kExitNotCm;
        } else {
          const IncidenceCertificate cert = motzkin_certificate(complex, gamma, verdict);
          Json outside = Json::array();
          Json inside = Json::array();
          std::string out_text;
          std::string in_text;
          for (VertexSet f : cert.outside_facets()) {
            outside.push_back(vertex_set_to_json(f));
            out_text += (out_text.empty() ? "" : " + ") + to_string(f);
          }
          for (VertexSet g : cert.inside_facets()) {
            inside.push_back(vertex_set_to_json(g));
            in_text += (in_text.empty() ? "" : " + ") + to_string(g);
          }
          doc["certificate"] = Json{{"s", cert.s()}, {"outside", std::move(outside)}, {"inside", std::move(inside)}};
          text << "  incidence certificate, s = " << cert.s() << ":\n";
          text << "    outside  " << out_text << '\n';
          text << "    inside   " << in_text << '\n';
        }
      }
    }
    if (config.output == OutputFormat::Json) {
      out << doc.dump(2) << '\n';
    } else {
      out << text.str();
    }
    return code;
  });
}

int cmd_lcoh(const std::string& path, const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(config, out, err, [&] {
    const MonomialIdeal ideal = ideal_from_json(load_json(path));
    const auto entries = local_cohomology(ideal, config.field);
    if (config.output == OutputFormat::Json) {
      Json list = Json::array();
      for (const auto& e : entries) {
        list.push_back(Json{{"a", e.a.entries()}, {"i", e.i}, {"dimension", e.dimension}});
      }
      out << Json{{"v", kSchemaVersion},
                  {"command", "lcoh"},
                  {"ideal", to_string(ideal)},
                  {"field", config.field.to_string()},
                  {"entries", std::move(list)}}
                 .dump(2)
          << '\n';
    } else {
      out << "local cohomology of S/I, I = " << to_string(ideal) << " over " << config.field.to_string() << '\n';
      if (entries.empty()) out << "  no nonzero entries in the admissible box\n";
      for (const auto& e : entries) {
        out << "  a = " << std::left << std::setw(3 * ideal.vertex_count() + 2) << to_string(e.a) << " i = " << e.i
            << "  dim = " << e.dimension << '\n';
      }
    }
    return kExitCm;
  });
}

int cmd_ideal_check(const std::string& path, const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(config, out, err, [&] {
    const MonomialIdeal ideal = ideal_from_json(load_json(path));
    if (!ideal.is_unmixed()) throw InputError("ideal-check requires an unmixed ideal (all facets of equal size)");
    const Classifier classifier(config.field, config.classifier_options());
    const TakayamaVerdict takayama = takayama_cm_oracle(ideal, config.field);
    const CMReport sub = classifier.subcomplex(ideal);
    if (sub.cohen_macaulay != takayama.cohen_macaulay) {
      throw RouteDisagreement("local cohomology says " + std::string(takayama.cohen_macaulay ? "CM" : "not CM") +
                              ", subcomplex route says " + (sub.cohen_macaulay ? "CM" : "not CM"));
    }
    if (config.output == OutputFormat::Json) {
      Json tk{{"cohen_macaulay", takayama.cohen_macaulay}, {"degrees_checked", takayama.degrees_checked}};
      tk["witness"] = takayama.witness ? Json{{"a", takayama.witness->a.entries()},
                                              {"degree", takayama.witness->degree},
                                              {"dimension", takayama.witness->dimension}}
                                       : Json(nullptr);
      out << Json{{"v", kSchemaVersion},
                  {"command", "ideal-check"},
                  {"ideal", to_string(ideal)},
                  {"field", config.field.to_string()},
                  {"cohen_macaulay", sub.cohen_macaulay},
                  {"local_cohomology", std::move(tk)},
                  {"reports", Json::array({report_to_json(sub)})}}
                 .dump(2)
          << '\n';
    } else {
      out << to_string(ideal) << " over " << config.field.to_string() << ": "
          << (sub.cohen_macaulay ? "Cohen-Macaulay" : "not Cohen-Macaulay") << '\n';
      out << "  " << std::left << std::setw(12) << "local-coh" << std::setw(8)
          << (takayama.cohen_macaulay ? "CM" : "not CM") << takayama.degrees_checked << " degrees checked";
      if (takayama.witness) {
        out << "; a = " << to_string(takayama.witness->a) << ", H~_" << takayama.witness->degree
            << "(D_a) has dimension " << takayama.witness->dimension;
      }
      out << '\n';
      print_report_line(out, sub, ideal.complex());
    }
    return sub.cohen_macaulay ? kExitCm : kExitNotCm;
  });
}

int cmd_demo(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(config, out, err, [&] {
    int compared = 0;
    int matched = 0;
    auto cell = [&](std::optional<bool> value, std::optional<bool> expected) -> std::string {
      if (!value) return "-";
      std::string s = yes_no(*value);
      if (expected) {
        ++compared;
        if (*expected == *value) {
          ++matched;
        } else {
          s += "!";
        }
      }
      return s;
    };

    Json rows = Json::array();
    std::ostringstream table;
    table << std::left << std::setw(17) << "complex" << std::setw(6) << "field" << std::setw(6) << "diam"
          << std::setw(9) << "matroid" << std::setw(7) << "tight" << std::setw(5) << "CM" << std::setw(7) << "CM(2)"
          << std::setw(7) << "CM(3)" << "all-m\n";
    for (const ComplexEntry& e : complex_corpus()) {
      const Classifier classifier(e.field, config.classifier_options());
      const auto diameter = one_skeleton_diameter(e.complex);
      const bool matroid = is_matroid(e.complex).matroid;
      const auto labelling = find_tight_labelling(e.complex, config.labelling_cap);
      const bool cm = classifier.oracle().is_cm(e.complex);
      const bool cm2 = classifier.check(e.complex, 2).cohen_macaulay;
      const bool cm3 = classifier.check(e.complex, 3).cohen_macaulay;
      const bool all_m = classifier.all_symbolic(e.complex).all_cm;

      std::string diam = diameter ? std::to_string(*diameter) : "inf";
      if (e.expected.diameter) {
        ++compared;
        if (diameter == e.expected.diameter) {
          ++matched;
        } else {
          diam += "!";
        }
      }
      table << std::setw(17) << e.name << std::setw(6) << e.field.to_string() << std::setw(6) << diam << std::setw(9)
            << cell(matroid, e.expected.matroid) << std::setw(7) << cell(labelling.has_value(), e.expected.tight)
            << std::setw(5) << cell(cm, e.expected.cm) << std::setw(7) << cell(cm2, e.expected.cm2) << std::setw(7)
            << cell(cm3, e.expected.cm3) << cell(all_m, e.expected.all_m) << '\n';
      rows.push_back(Json{{"name", e.name},
                          {"complex", to_string(e.complex)},
                          {"field", e.field.to_string()},
                          {"diameter", diameter ? Json(*diameter) : Json(nullptr)},
                          {"matroid", matroid},
                          {"tight", labelling.has_value()},
                          {"cm", cm},
                          {"cm2", cm2},
                          {"cm3", cm3},
                          {"all_m", all_m}});
    }

    Json ideals = Json::array();
    table << '\n' << std::left << std::setw(28) << "ideal" << std::setw(11) << "local-coh" << "subcomplex\n";
    for (const IdealEntry& e : ideal_corpus()) {
      const Classifier classifier(config.field, config.classifier_options());
      const bool takayama = takayama_cm_oracle(e.ideal, config.field).cohen_macaulay;
      const bool sub = classifier.subcomplex(e.ideal).cohen_macaulay;
      table << std::setw(28) << e.name << std::setw(11) << cell(takayama, e.cm) << cell(sub, e.cm) << '\n';
      if (takayama != sub) throw RouteDisagreement("routes disagree on " + to_string(e.ideal));
      ideals.push_back(Json{{"name", e.name}, {"ideal", to_string(e.ideal)}, {"cohen_macaulay", sub}});
    }

    if (config.output == OutputFormat::Json) {
      out << Json{{"v", kSchemaVersion},
                  {"command", "demo"},
                  {"complexes", std::move(rows)},
                  {"ideals", std::move(ideals)},
                  {"expected", compared},
                  {"matched", matched}}
                 .dump(2)
          << '\n';
    } else {
      out << table.str() << '\n' << matched << " of " << compared << " expected verdicts reproduced";
      if (matched != compared) out << " (mismatches marked !)";
      out << '\n';
    }
    return matched == compared ? kExitCm : kExitNotCm;
  });
}

}  // namespace cmsym::cli
