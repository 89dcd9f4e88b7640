#pragma once
// Target resolution and battery orchestration shared by the C ABI layer and
// the command-line front end.
//
// Targets: preset names or structure-constant file paths.
//   sweedler | taft:<n> | group:C<n> | group:S3 | dual:<t> | op:<t> |
//   cop:<t> | tensor:<t>:<t> | bicross:<n> | qsl2 | <path to .jsonl file>
// dual/op/cop wrap any finite-dimensional target; tensor takes the first
// split of its argument into two resolvable targets. Unknown names raise
// errc::unknown_preset.
//
// Batteries: axioms | integrals | radford | mainss | all. The infinite-
// dimensional targets run their window batteries (bicross |k| <= K, default
// 4; qsl2 degree <= D, default 6) and report mainss as not-applicable.
// Inspect topics: integrals | grouplikes | nakayama | orders.
//
// Reports are deterministic: same target, battery and options give the same
// document, byte for byte, across runs and processes.

#include <optional>
#include <string>

#include "hopfkit/report.hpp"

namespace hopfkit {

struct DriverOptions {
  std::optional<long long> window;          // bicross grading cutoff |k| <= K
  std::optional<unsigned> degree;           // qsl2 PBW degree cutoff
  std::optional<unsigned long> order_bound; // order searches (inspect, qsl2)
  std::optional<std::string> field;         // group presets only, e.g. "Fp:5"
};

struct ReportDocument {
  std::string engine;   // "hopfkit <version>"
  std::string command;  // "verify" | "inspect"
  std::string target;   // resolved target descriptor
  std::string battery;  // battery name or inspect topic
  std::string window;   // window description, empty for exact f.d. runs
  VerificationReport report;

  bool ok() const { return report.ok(); }
  // Line-oriented JSON: a header object, then one object per check, each on
  // its own line with a fixed key order.
  std::string json() const;
  // Fixed-width human table.
  std::string table() const;
};

const char* engine_version();  // semantic version string

ReportDocument cmd_verify(const std::string& target, const std::string& battery,
                          const DriverOptions& opts = {});
ReportDocument cmd_inspect(const std::string& target, const std::string& what,
                           const DriverOptions& opts = {});

// Structure-constant file text for a finite-dimensional target
// (errc::invalid_argument for bicross/qsl2).
std::string export_preset(const std::string& target, const DriverOptions& opts = {});

}  // namespace hopfkit
