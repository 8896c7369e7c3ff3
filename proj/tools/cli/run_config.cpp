#include "run_config.hpp"

#include <set>

#include "taylorhess/errors.hpp"

namespace taylorhess::cli {
namespace {

void check_choice(const std::string& flag, const std::string& value, const std::set<std::string>& allowed) {
  if (allowed.count(value) == 0) throw UsageError("--" + flag + ": unknown value '" + value + "'");
}

}  // namespace

void RunConfig::validate() const {
  check_choice("field", field, {"prime", "rational"});
  check_choice("mode", mode, {"full", "essential"});
  check_choice("order", order, {"paper", "reverse"});
  check_choice("format", format, {"json", "csv"});
  if (trials < 1) throw UsageError("--trials must be at least 1");
  if (threads < 1) throw UsageError("--threads must be at least 1");
  if (prime && prime_index) throw UsageError("--prime and --prime-index are mutually exclusive");
  if (prime_index && (*prime_index < 0 || *prime_index >= static_cast<int>(kDefaultPrimes.size()))) {
    throw UsageError("--prime-index must lie in [0, " + std::to_string(kDefaultPrimes.size() - 1) + "]");
  }
  if (prime) PrimeField check(*prime);
  if (format == "csv" && command != "survey") throw UsageError("--format csv is only available for survey");
  if (field == "rational" && command != "defect") {
    throw UsageError("--field rational is only available for defect; certificates are modular");
  }
  if (poly.empty() || command != "hessian") params.validate();
}

std::vector<u64> RunConfig::primes() const {
  if (prime) return {*prime};
  if (prime_index) return {kDefaultPrimes[static_cast<std::size_t>(*prime_index)]};
  return {kDefaultPrimes.begin(), kDefaultPrimes.end()};
}

PadeLayout RunConfig::layout() const { return order == "reverse" ? PadeLayout::reversed() : PadeLayout::standard(); }

VariableSet RunConfig::variable_set() const {
  return mode == "essential" ? VariableSet::kEssential : VariableSet::kFull;
}

Json RunConfig::to_json() const {
  Json j;
  j["command"] = command;
  if (poly.empty()) {
    j["params"] = {{"n", params.n}, {"d", params.d}, {"e", params.e}, {"m", params.m}};
  } else {
    j["poly"] = poly;
  }
  j["trials"] = trials;
  j["seed"] = seed;
  j["prime"] = prime ? Json(*prime) : Json(nullptr);
  j["prime_index"] = prime_index ? Json(*prime_index) : Json(nullptr);
  j["field"] = field;
  j["mode"] = mode;
  j["order"] = order;
  j["format"] = format;
  j["expect"] = expect ? Json(*expect) : Json(nullptr);
  j["e_max"] = e_max;
  j["threads"] = threads;
  return j;
}

}  // namespace taylorhess::cli
