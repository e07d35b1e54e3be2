#pragma once

// Exhaustive theorem checks over one exchange matrix, collected into a report.

#include "clusteralg/explorer.hpp"
#include "clusteralg/json_io.hpp"

#include <string>
#include <vector>

namespace clusteralg {

inline constexpr int kReportSchemaVersion = 1;

enum class Status { pass, fail, skipped };
const char* to_string(Status s);

struct PropertyResult {
  std::string name;
  std::string reference;  // theorem or definition being checked
  Status status = Status::pass;
  std::size_t checked = 0;
  std::size_t failures = 0;
  Json counterexample;  // first failure: seed paths, subset, indices
  std::string note;
  double seconds = 0;
};

struct VerifyOptions {
  std::size_t limit = kDefaultNodeLimit;
  int degree_bound = 3;  // monomial sweeps use sum(v) <= degree_bound
  std::string suite = "all";
};

struct VerificationReport {
  IntMatrix bmat;
  VerifyOptions options;
  std::vector<PropertyResult> results;
  double seconds = 0;

  std::size_t count(Status s) const;
  /// Timing fields are the only nondeterministic part.
  Json to_json(bool with_timing) const;
};

/// Suites: "all", "laurent", "seed", "explorer", "invariants", "gpairs", "compat".
std::vector<std::string> suite_names();

/// Runs every property of the selected suite in both coefficient modes. Never
/// throws for mathematical failures; those become report entries.
VerificationReport verify_suite(const IntMatrix& bmat, const VerifyOptions& opts = {});

}  // namespace clusteralg
