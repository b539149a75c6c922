#include <algorithm>
#include <cstdlib>
#include <iostream>

#include <CLI11.hpp>

#include "cli.hpp"
#include "cmsym/errors.hpp"

using namespace cmsym;
using namespace cmsym::cli;

int main(int argc, char** argv) {
  CLI::App app{"Cohen-Macaulay tests for symbolic powers of Stanley-Reisner ideals"};
  app.require_subcommand(1);

  std::string field_text = "Q";
  std::size_t facet_cap = 0;
  std::size_t labelling_cap = 0;
  int m_cap = 3;
  unsigned jobs = 1;
  bool json = false;

  std::vector<CLI::Option*> facet_opts;
  std::vector<CLI::Option*> labelling_opts;
  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--field", field_text, "Q or Fp:<prime>")->capture_default_str();
    cmd->add_option("--jobs", jobs, "worker threads")->capture_default_str();
    cmd->add_flag("--json", json, "machine-readable output");
    facet_opts.push_back(cmd->add_option("--facet-cap", facet_cap, "largest facet count for subset enumeration"));
    labelling_opts.push_back(
        cmd->add_option("--labelling-cap", labelling_cap, "largest vertex count for labelling search"));
  };

  std::string path;
  int m = 2;
  bool all_m = false;
  std::string gamma_text;

  auto* check = app.add_subcommand("check", "decide CM of I^(m)");
  check->add_option("complex", path, "complex JSON file")->required();
  check->add_option("-m", m, "symbolic power")->capture_default_str();
  check->add_flag("--all-m", all_m, "decide CM of every symbolic power");
  add_common(check);

  auto* classify = app.add_subcommand("classify", "structural summary of a complex");
  classify->add_option("complex", path, "complex JSON file")->required();
  classify->add_option("--m-cap", m_cap, "largest power in the CM(m) summary")->capture_default_str();
  add_common(classify);

  auto* certify = app.add_subcommand("certify", "strict-system verdict for a facet subset");
  certify->add_option("complex", path, "complex JSON file")->required();
  certify->add_option("--gamma", gamma_text, "0-based facet indices, e.g. 1,4")->required();
  add_common(certify);

  auto* lcoh = app.add_subcommand("lcoh", "nonzero local cohomology in the admissible box");
  lcoh->add_option("ideal", path, "ideal JSON file")->required();
  add_common(lcoh);

  auto* ideal_check = app.add_subcommand("ideal-check", "decide CM of an intersection of prime powers");
  ideal_check->add_option("ideal", path, "ideal JSON file")->required();
  add_common(ideal_check);

  auto* demo = app.add_subcommand("demo", "run the bundled corpus");
  add_common(demo);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInputError;
  }

  RunConfig config;
  config.m_cap = m_cap;
  config.jobs = jobs;
  config.output = json ? OutputFormat::Json : OutputFormat::Text;
  std::vector<std::size_t> gamma;
  try {
    config.field = FieldSpec::parse(field_text);
    if (const char* env = std::getenv("CM_SYMBOLIC_CAPS")) apply_caps_spec(config, env);
    // Explicit flags win over the environment.
    auto given = [](const std::vector<CLI::Option*>& opts) {
      return std::any_of(opts.begin(), opts.end(), [](const CLI::Option* o) { return o->count() > 0; });
    };
    if (given(facet_opts)) config.facet_cap = facet_cap;
    if (given(labelling_opts)) config.labelling_cap = labelling_cap;
    if (certify->parsed()) gamma = parse_index_list(gamma_text);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInputError;
  }

  if (check->parsed()) return cmd_check(path, m, all_m, config, std::cout, std::cerr);
  if (classify->parsed()) return cmd_classify(path, config, std::cout, std::cerr);
  if (certify->parsed()) return cmd_certify(path, gamma, config, std::cout, std::cerr);
  if (lcoh->parsed()) return cmd_lcoh(path, config, std::cout, std::cerr);
  if (ideal_check->parsed()) return cmd_ideal_check(path, config, std::cout, std::cerr);
  return cmd_demo(config, std::cout, std::cerr);
}
