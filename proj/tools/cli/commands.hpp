#pragma once

#include <optional>
#include <string>

#include "run_config.hpp"
#include "taylorhess/hessian/certificate.hpp"

namespace taylorhess::cli {

/// Result of one command. `text` replaces the JSON document when set (CSV
/// surveys, exported scripts).
struct Report {
  Json doc;
  std::optional<std::string> text;
  /// Compared against --expect.
  std::optional<std::string> verdict;

  std::string render() const;
};

Json certificate_json(const Certificate& cert);
/// Notes on where a published reference display of P_T disagrees with the
/// entry law or the dimension formulas, for the parameter sets concerned.
Json discrepancy_annotations(const TaylorParams& params);

Report cmd_shape(const RunConfig& cfg);
Report cmd_defect(const RunConfig& cfg);
Report cmd_hessian(const RunConfig& cfg);
Report cmd_survey(const RunConfig& cfg);
Report cmd_export(const RunConfig& cfg);

/// Dispatches on cfg.command after validating it.
Report run(const RunConfig& cfg);

}  // namespace taylorhess::cli
