#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "taylorhess/algebra/prime_field.hpp"
#include "taylorhess/detcalc/derivatives.hpp"
#include "taylorhess/pade/pade.hpp"
#include "taylorhess/params.hpp"

namespace taylorhess::cli {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kSeedEnv = "TAYLORHESS_SEED";

/// Everything that determines a report. Serialized verbatim into it.
struct RunConfig {
  std::string command;
  TaylorParams params{2, 5, 4, 7};
  int trials = 20;
  std::uint64_t seed = 1;
  std::optional<u64> prime;
  std::optional<int> prime_index;
  std::string field = "prime";      // prime | rational
  std::string mode = "full";        // full | essential
  std::string order = "paper";      // paper | reverse
  std::string format = "json";      // json | csv
  std::optional<std::string> expect;
  std::string out;
  std::string poly;
  int e_max = 5;
  unsigned threads = 1;
  bool timings = false;

  /// Throws UsageError on bad combinations.
  void validate() const;
  /// Primes used for trials: an explicit prime, one entry of the default
  /// list, or the whole default list in rotation.
  std::vector<u64> primes() const;
  PadeLayout layout() const;
  VariableSet variable_set() const;
  Json to_json() const;
};

}  // namespace taylorhess::cli
