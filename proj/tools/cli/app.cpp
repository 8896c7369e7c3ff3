#include "app.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "commands.hpp"
#include "taylorhess/errors.hpp"

namespace taylorhess::cli {
namespace {

std::uint64_t default_seed() {
  const char* env = std::getenv(kSeedEnv);
  if (env == nullptr || *env == '\0') return 1;
  try {
    std::size_t pos = 0;
    const auto v = std::stoull(env, &pos, 0);
    if (pos != std::string(env).size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw UsageError(std::string(kSeedEnv) + " is not an unsigned integer: '" + env + "'");
  }
}

void add_params(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("-n", cfg.params.n, "number of variables")->capture_default_str();
  sub->add_option("-d", cfg.params.d, "numerator degree bound")->capture_default_str();
  sub->add_option("-e", cfg.params.e, "denominator degree bound")->capture_default_str();
  sub->add_option("-m", cfg.params.m, "Taylor order")->capture_default_str();
}

void add_common(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--trials", cfg.trials, "random trials")->capture_default_str();
  sub->add_option("--seed", cfg.seed, "base seed (default from " + std::string(kSeedEnv) + " or 1)");
  sub->add_option("--prime", cfg.prime, "use this prime for every trial");
  sub->add_option("--prime-index", cfg.prime_index, "use one prime from the default list");
  sub->add_option("--field", cfg.field, "prime | rational")->capture_default_str();
  sub->add_option("--mode", cfg.mode, "full | essential")->capture_default_str();
  sub->add_option("--order", cfg.order, "paper | reverse (within-degree column order)")->capture_default_str();
  sub->add_option("--format", cfg.format, "json | csv")->capture_default_str();
  sub->add_option("--expect", cfg.expect, "exit nonzero unless the verdict equals this");
  sub->add_option("--out", cfg.out, "write the report here instead of stdout");
  sub->add_option("--threads", cfg.threads, "worker threads for trials")->capture_default_str();
  sub->add_flag("--timings", cfg.timings, "include wall-clock timings (reports are then not reproducible)");
}

}  // namespace

int run_app(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Padé matrices, Taylor varieties and Hessian certificates", "taylorhess"};
  app.require_subcommand(1);

  auto* shape = app.add_subcommand("shape", "Padé matrix shape, ambient and expected dimension");
  auto* defect = app.add_subcommand("defect", "expected vs actual dimension, hypersurface verdict");
  auto* hessian = app.add_subcommand("hessian", "vanishing-Hessian certificate for det P_T or a polynomial");
  auto* survey = app.add_subcommand("survey", "run the pipeline over the square family");
  auto* exporter = app.add_subcommand("export", "write a Macaulay2 script rebuilding P_T");
  for (auto* sub : {shape, defect, hessian, exporter}) add_params(sub, cfg);
  for (auto* sub : {shape, defect, hessian, survey, exporter}) add_common(sub, cfg);
  hessian->add_option("--poly", cfg.poly, "polynomial JSON file instead of det P_T");
  survey->add_option("--e-max", cfg.e_max, "largest e in the square family")->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    cfg.seed = default_seed();
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  for (auto* sub : app.get_subcommands()) cfg.command = sub->get_name();

  try {
    const Report report = run(cfg);
    const std::string text = report.render();
    if (cfg.out.empty()) {
      out << text;
    } else {
      std::ofstream file(cfg.out, std::ios::binary);
      if (!file) throw UsageError("cannot write '" + cfg.out + "'");
      file << text;
    }
    if (cfg.expect) {
      const std::string got = report.verdict.value_or("");
      if (got != *cfg.expect) {
        err << "expectation failed: verdict '" << got << "', expected '" << *cfg.expect << "'\n";
        return kExpectationFailed;
      }
    }
    return kOk;
  } catch (const UnsupportedParameters& e) {
    err << "unsupported parameters: " << e.what() << "\n";
    return kUnsupported;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << "\n";
    return kUnsupported;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }
}

}  // namespace taylorhess::cli
