#pragma once

// Self-check behind `subflag verify`: runs the acceptance criteria against
// the library and reports one residual per criterion.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "subflag/liealg_connection.hpp"
#include "subflag/sampling.hpp"

namespace subflag {

struct CriterionResult {
  std::string name;
  std::string description;
  bool passed = false;
  /// Largest deviation observed; 0 for criteria checked exactly and met.
  double residual = 0.0;
  double tolerance = 0.0;
  std::string detail;
  double seconds = 0.0;
};

using ConnectionFactory = std::function<ConnectionTable<Rational>(const ConnectionParameters<Rational>&)>;

/// The connection table used by the library.
ConnectionTable<Rational> default_connection(const ConnectionParameters<Rational>& p);

struct VerifyOptions {
  /// Criterion names to run; empty runs all. Unknown names throw UsageError.
  std::vector<std::string> only;
  std::uint64_t seed = kDefaultSeed;
  /// Swappable so tests can inject a faulty table.
  ConnectionFactory connection = default_connection;
};

struct VerifySummary {
  std::vector<CriterionResult> results;

  bool all_passed() const;
  nlohmann::json to_json() const;
  std::string render_text() const;
};

/// Names in execution order.
const std::vector<std::string>& criterion_names();

VerifySummary run_verify(const VerifyOptions& options = {});

}  // namespace subflag
