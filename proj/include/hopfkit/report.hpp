#pragma once
// Check results shared by every verification battery. A report is an ordered
// list of named checks; order is part of the deterministic output contract.

#include <string>
#include <utility>
#include <vector>

namespace hopfkit {

enum class CheckStatus { pass, fail, not_applicable };

inline const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::not_applicable: return "not-applicable";
  }
  return "?";
}

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::pass;
  std::string witness;  // on failure: the offending input/value, human-readable
  std::string detail;   // optional extra context (computed values, gates)
};

struct VerificationReport {
  std::vector<CheckResult> checks;

  void pass(std::string name, std::string detail = {}) {
    checks.push_back({std::move(name), CheckStatus::pass, {}, std::move(detail)});
  }
  void fail(std::string name, std::string witness, std::string detail = {}) {
    checks.push_back({std::move(name), CheckStatus::fail, std::move(witness), std::move(detail)});
  }
  void not_applicable(std::string name, std::string detail = {}) {
    checks.push_back(
        {std::move(name), CheckStatus::not_applicable, {}, std::move(detail)});
  }
  void add(std::string name, bool ok, std::string witness, std::string detail = {}) {
    if (ok)
      pass(std::move(name), std::move(detail));
    else
      fail(std::move(name), std::move(witness), std::move(detail));
  }
  void merge(const VerificationReport& o) {
    checks.insert(checks.end(), o.checks.begin(), o.checks.end());
  }
  bool ok() const {
    for (const auto& c : checks)
      if (c.status == CheckStatus::fail) return false;
    return true;
  }
  const CheckResult* find(const std::string& name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }
};

}  // namespace hopfkit
