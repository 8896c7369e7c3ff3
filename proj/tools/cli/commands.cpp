#include "commands.hpp"

#include <chrono>
#include <cstdio>
#include <sstream>

#include "poly_io.hpp"
#include "taylorhess/detcalc/exact.hpp"
#include "taylorhess/errors.hpp"
#include "taylorhess/hessian/relation.hpp"
#include "taylorhess/variety/variety.hpp"

namespace taylorhess::cli {
namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string hex64(std::uint64_t v) {
  char buf[19];
  std::snprintf(buf, sizeof buf, "0x%016llx", static_cast<unsigned long long>(v));
  return buf;
}

Json params_json(const TaylorParams& p) { return {{"n", p.n}, {"d", p.d}, {"e", p.e}, {"m", p.m}}; }

Json base_document(const RunConfig& cfg) {
  Json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["command"] = cfg.command;
  doc["config"] = cfg.to_json();
  return doc;
}

void finish(Json& doc, const RunConfig& cfg, Json result, const std::optional<std::string>& verdict,
            Clock::time_point start) {
  doc["result"] = std::move(result);
  doc["verdict"] = verdict ? Json(*verdict) : Json(nullptr);
  doc["annotations"] = cfg.poly.empty() ? discrepancy_annotations(cfg.params) : Json::array();
  if (cfg.timings) doc["timings"] = {{"seconds", seconds_since(start)}};
}

struct RelationSummary {
  bool applicable = false;
  std::size_t rows = 0;
  std::size_t cols = 0;
  int points = 0;
  int residual_zero = 0;
  std::size_t min_rank = 0;
  std::size_t max_rank = 0;
};

RelationSummary relation_summary(const TaylorParams& params, int points, std::uint64_t seed,
                                 const std::vector<u64>& primes) {
  RelationSummary s;
  if (params.n != 2 || params.m != params.d + 2 || params.e < 1 || params.e > params.d + 1) return s;
  s.applicable = true;
  s.rows = relation_rows(params).size();
  s.cols = relation_cols(params).size();
  s.points = points;
  s.min_rank = s.cols;
  const auto p = pade_matrix(params);
  for (int t = 0; t < points; ++t) {
    const PrimeField field(primes[static_cast<std::size_t>(t) % primes.size()]);
    const auto point = random_point(p.ambient(), field, derive_seed(seed, 2000 + static_cast<std::uint64_t>(t)));
    const auto rel = build_M(params, grad_det_at(p, point, field), field);
    const auto res = relation_residual(rel, point, field);
    bool zero = true;
    for (const auto& v : res) zero = zero && field.is_zero(v);
    s.residual_zero += zero ? 1 : 0;
    const auto r = rank(rel.values, field);
    s.min_rank = std::min(s.min_rank, r);
    s.max_rank = std::max(s.max_rank, r);
  }
  return s;
}

Json relation_json(const RelationSummary& s) {
  if (!s.applicable) return nullptr;
  return {{"rows", s.rows},
          {"cols", s.cols},
          {"points", s.points},
          {"residual_zero_points", s.residual_zero},
          {"min_rank", s.min_rank},
          {"max_rank", s.max_rank},
          {"rank_bound", s.cols}};
}

CertifyOptions certify_options(const RunConfig& cfg, VariableSet set) {
  CertifyOptions o;
  o.trials = cfg.trials;
  o.seed = cfg.seed;
  o.primes = cfg.primes();
  o.variables = set;
  o.threads = cfg.threads;
  o.layout = cfg.layout();
  return o;
}

}  // namespace

std::string Report::render() const {
  if (text) return *text;
  return doc.dump(2) + "\n";
}

Json certificate_json(const Certificate& cert) {
  Json trials = Json::array();
  for (const auto& t : cert.trials) {
    trials.push_back({{"index", t.index},
                      {"seed", t.seed},
                      {"prime", t.prime},
                      {"point_hash", hex64(t.point_hash)},
                      {"value", t.value},
                      {"rank", t.rank},
                      {"corank", t.corank},
                      {"resamples", t.resamples},
                      {"used_jets", t.used_jets}});
  }
  Json j;
  j["target"] = cert.target;
  j["variable_set"] = cert.variable_set;
  j["verdict"] = to_string(cert.verdict);
  j["variables"] = cert.variables;
  j["degree_bound"] = cert.degree_bound;
  j["error_bound"] = cert.error_bound;
  j["log10_error_bound"] = cert.log10_error_bound ? Json(*cert.log10_error_bound) : Json(nullptr);
  j["min_corank"] = cert.min_corank();
  j["max_rank"] = cert.max_rank();
  j["trials"] = std::move(trials);
  return j;
}

Json discrepancy_annotations(const TaylorParams& params) {
  Json out = Json::array();
  if (params == TaylorParams{2, 5, 4, 7}) {
    out.push_back({{"kind", "printed-entry"},
                   {"row", "(2,5)"},
                   {"col", "(0,1)"},
                   {"printed", "c_(2,3)"},
                   {"entry_law", "c_(2,4)"},
                   {"note", "the printed 15x15 display disagrees with c_{rho-sigma} here; the entry law is used"}});
  }
  if (params == TaylorParams{2, 1, 1, 2}) {
    out.push_back({{"kind", "ambient-dimension"},
                   {"stated", 7},
                   {"formula", ambient_dimension(params)},
                   {"note", "this case is sometimes described as a cubic in P^7; C(m+n,n)-1 gives P^5"}});
  }
  return out;
}

Report cmd_shape(const RunConfig& cfg) {
  const auto start = Clock::now();
  const auto& params = cfg.params;
  const auto shape = pade_shape(params);
  const auto p = pade_matrix(params, cfg.layout());
  Json blocks = Json::array();
  for (int j : block_indices(p)) blocks.push_back({{"j", j}, {"width", block_view(p, j).cols()}});
  Json result = {{"params", params_json(params)},
                 {"rows", shape.rows},
                 {"cols", shape.cols},
                 {"square", shape.square},
                 {"ambient_dimension", ambient_dimension(params)},
                 {"expected_dimension", expected_dimension(params)},
                 {"occurring_variables", p.variables().size()},
                 {"blocks", std::move(blocks)}};
  Report r{base_document(cfg), std::nullopt, shape.square ? "square" : "non-square"};
  finish(r.doc, cfg, std::move(result), r.verdict, start);
  return r;
}

Report cmd_defect(const RunConfig& cfg) {
  const auto start = Clock::now();
  const auto& params = cfg.params;
  HypersurfaceReport h;
  if (cfg.field == "prime") {
    h = nondefective_hypersurface_check(params, cfg.trials, cfg.seed, cfg.primes());
  } else {
    // Exact path: rational points and Bareiss determinants throughout.
    const RationalField field;
    const auto shape = pade_shape(params);
    h.params = params;
    h.rows = shape.rows;
    h.cols = shape.cols;
    h.square = shape.square;
    h.expected_dimension = expected_dimension(params);
    h.ambient_dimension = ambient_dimension(params);
    h.actual_dimension = actual_dimension(params, 3, field, derive_seed(cfg.seed, 1000));
    if (h.square) {
      const auto p = pade_matrix(params);
      for (int t = 0; t < cfg.trials; ++t) {
        const auto point = random_point(p.ambient(), field, derive_seed(cfg.seed, static_cast<std::uint64_t>(t)));
        ++h.det_trials;
        if (det_exact(p.evaluate(point, field)) != 0) ++h.det_nonzero;
      }
    }
    const bool nondefective = h.actual_dimension == h.expected_dimension;
    const bool hypersurface = h.square && h.det_certified_nonzero() && h.expected_dimension == h.ambient_dimension - 1;
    h.verdict = !nondefective ? HypersurfaceVerdict::kDefective
                : hypersurface ? HypersurfaceVerdict::kNonDefectiveHypersurface
                               : HypersurfaceVerdict::kNonDefective;
  }
  Json result = {{"params", params_json(params)},
                 {"rows", h.rows},
                 {"cols", h.cols},
                 {"square", h.square},
                 {"det_trials", h.det_trials},
                 {"det_nonzero", h.det_nonzero},
                 {"expected_dimension", h.expected_dimension},
                 {"actual_dimension", h.actual_dimension},
                 {"ambient_dimension", h.ambient_dimension},
                 {"verdict", to_string(h.verdict)}};
  Report r{base_document(cfg), std::nullopt, to_string(h.verdict)};
  finish(r.doc, cfg, std::move(result), r.verdict, start);
  return r;
}

Report cmd_hessian(const RunConfig& cfg) {
  const auto start = Clock::now();
  Json result;
  Certificate cert;
  if (!cfg.poly.empty()) {
    const auto named = load_polynomial(cfg.poly);
    cert = certify_hessian_poly(named.poly, certify_options(cfg, VariableSet::kFull), named.name);
    result["polynomial"] = {{"name", named.name},
                            {"nvars", named.poly.nvars()},
                            {"degree", named.poly.degree()},
                            {"terms", named.poly.size()}};
    result["certificate"] = certificate_json(cert);
    result["polar_rank"] = cert.max_rank();
  } else {
    const auto& params = cfg.params;
    cert = certify_hessian_pade(params, certify_options(cfg, cfg.variable_set()));
    const auto p = pade_matrix(params, cfg.layout());
    result["params"] = params_json(params);
    result["size"] = p.rows();
    result["ambient_variables"] = p.ambient().size();
    result["essential_variables"] = p.variables().size();
    result["certificate"] = certificate_json(cert);
    result["polar_rank"] = cert.max_rank();
    result["relation"] = relation_json(relation_summary(params, cfg.trials, cfg.seed, cfg.primes()));
  }
  Report r{base_document(cfg), std::nullopt, to_string(cert.verdict)};
  finish(r.doc, cfg, std::move(result), r.verdict, start);
  return r;
}

Report cmd_survey(const RunConfig& cfg) {
  const auto start = Clock::now();
  Json rows = Json::array();
  std::ostringstream csv;
  csv << "d,e,m,size,non_defective,full_hessian_verdict,essential_corank,rank_M";
  if (cfg.timings) csv << ",seconds";
  csv << "\n";
  for (const auto& c : square_family(cfg.e_max)) {
    const auto case_start = Clock::now();
    const TaylorParams params{2, c.d, c.e, c.m};
    const auto check = nondefective_hypersurface_check(params, cfg.trials, cfg.seed, cfg.primes());
    const bool nondefective = check.verdict == HypersurfaceVerdict::kNonDefectiveHypersurface;
    std::string full_verdict = "refused";
    std::string ess_corank = "";
    if (check.det_certified_nonzero()) {
      full_verdict = to_string(certify_hessian_pade(params, certify_options(cfg, VariableSet::kFull)).verdict);
      ess_corank = std::to_string(certify_hessian_pade(params, certify_options(cfg, VariableSet::kEssential)).min_corank());
    }
    const auto rel = relation_summary(params, cfg.trials, cfg.seed, cfg.primes());
    const double secs = seconds_since(case_start);

    Json row = {{"d", c.d},
                {"e", c.e},
                {"m", c.m},
                {"size", check.rows},
                {"non_defective", nondefective},
                {"full_hessian_verdict", full_verdict},
                {"essential_corank", ess_corank.empty() ? Json(nullptr) : Json(std::stoul(ess_corank))},
                {"rank_M", rel.max_rank}};
    if (cfg.timings) row["seconds"] = secs;
    rows.push_back(std::move(row));

    csv << c.d << ',' << c.e << ',' << c.m << ',' << check.rows << ',' << (nondefective ? "true" : "false") << ','
        << full_verdict << ',' << ess_corank << ',' << rel.max_rank;
    if (cfg.timings) csv << ',' << secs;
    csv << "\n";
  }
  Report r{base_document(cfg), std::nullopt, std::nullopt};
  finish(r.doc, cfg, {{"e_max", cfg.e_max}, {"cases", std::move(rows)}}, std::nullopt, start);
  if (cfg.format == "csv") r.text = csv.str();
  return r;
}

Report cmd_export(const RunConfig& cfg) {
  const auto p = pade_matrix(cfg.params, cfg.layout());
  Report r;
  r.text = export_m2(p, cfg.params);
  return r;
}

Report run(const RunConfig& cfg) {
  cfg.validate();
  if (cfg.command == "shape") return cmd_shape(cfg);
  if (cfg.command == "defect") return cmd_defect(cfg);
  if (cfg.command == "hessian") return cmd_hessian(cfg);
  if (cfg.command == "survey") return cmd_survey(cfg);
  if (cfg.command == "export") return cmd_export(cfg);
  throw UsageError("unknown command '" + cfg.command + "'");
}

}  // namespace taylorhess::cli
