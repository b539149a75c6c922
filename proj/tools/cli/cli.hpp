#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "cmsym/classify.hpp"
#include "cmsym/homology.hpp"

namespace cmsym::cli {

enum class OutputFormat { Text, Json };

enum ExitCode : int { kExitCm = 0, kExitNotCm = 1, kExitInputError = 2 };

struct RunConfig {
  FieldSpec field = FieldSpec::rationals();
  std::size_t facet_cap = kDefaultFacetCap;
  std::size_t labelling_cap = kDefaultLabellingCap;
  int m_cap = 3;
  unsigned jobs = 1;
  OutputFormat output = OutputFormat::Text;

  ClassifierOptions classifier_options() const { return {facet_cap, labelling_cap, jobs}; }
};

/// Applies "facets=20,labels=8" (either key optional). Throws InputError.
void apply_caps_spec(RunConfig& config, std::string_view spec);

/// Throws InputError when a cap or the worker count is below 1.
void validate(const RunConfig& config);

/// "1,4" -> {1, 4}. Throws InputError.
std::vector<std::size_t> parse_index_list(std::string_view text);

/// Each command prints its result to `out`, diagnostics to `err`, and
/// returns 0, 1 or 2. Input errors and exceeded caps are caught and mapped to 2.
int cmd_check(const std::string& path, int m, bool all_m, const RunConfig& config, std::ostream& out,
              std::ostream& err);
int cmd_classify(const std::string& path, const RunConfig& config, std::ostream& out, std::ostream& err);
/// 0 when Γ is CM or its strict system is infeasible, 1 when Γ obstructs
/// some power.
int cmd_certify(const std::string& path, const std::vector<std::size_t>& gamma, const RunConfig& config,
                std::ostream& out, std::ostream& err);
int cmd_lcoh(const std::string& path, const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_ideal_check(const std::string& path, const RunConfig& config, std::ostream& out, std::ostream& err);
/// 0 when every expected verdict in the corpus is reproduced.
int cmd_demo(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Human-readable witness, e.g. "V = {4,5,6}; H~_1(lk {} in D_V) has dimension 1".
std::string describe_witness(const Witness& witness, const SimplicialComplex& complex);

}  // namespace cmsym::cli
