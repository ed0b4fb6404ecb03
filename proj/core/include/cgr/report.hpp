#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace cgr {

// Base for all errors thrown by this library.
class CgrError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input data: bad table shapes, unknown ids, schema violations.
class SchemaError : public CgrError {
 public:
  using CgrError::CgrError;
};

// One named axiom or law, with the first counterexample found when it fails.
struct CheckResult {
  std::string axiom;
  bool passed = true;
  std::string witness;
};

// Outcome of a validator: an ordered list of checks over one subject.
// Checks appear in dependency order; a structural failure may cause
// dependent checks to be skipped rather than reported.
struct ValidationReport {
  std::string subject;
  std::vector<CheckResult> checks;

  bool passed() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }

  void pass(std::string axiom) {
    checks.push_back({std::move(axiom), true, {}});
  }

  void fail(std::string axiom, std::string witness) {
    checks.push_back({std::move(axiom), false, std::move(witness)});
  }

  void record(std::string axiom, bool ok, std::string witness) {
    if (ok)
      pass(std::move(axiom));
    else
      fail(std::move(axiom), std::move(witness));
  }

  // Absorb a sub-report, prefixing its axiom names.
  void merge(const ValidationReport& sub, const std::string& prefix) {
    for (const auto& c : sub.checks)
      checks.push_back({prefix + c.axiom, c.passed, c.witness});
  }

  const CheckResult* first_failure() const {
    for (const auto& c : checks)
      if (!c.passed) return &c;
    return nullptr;
  }

  std::size_t failure_count() const {
    std::size_t n = 0;
    for (const auto& c : checks)
      if (!c.passed) ++n;
    return n;
  }
};

}  // namespace cgr
