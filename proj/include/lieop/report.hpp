#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lieop/lie.hpp"

namespace lieop {

enum class StructureKind {
  xvr,
  myb,
  bi_myb,
  even_tempered,
  rrho,
  rrho_regular,
  theta_rho,
  theta_rho_special,
  quadratic_family,
  xvr_structure,
};

std::string to_string(StructureKind k);

/// One verified identity: pass/fail plus the lexicographically first
/// failing basis tuple when it fails.  Entries flagged informative are
/// reported but do not gate the overall verdict; precondition entries
/// mark hypothesis failures as distinct from identity violations.
struct CheckEntry {
  std::string id;
  bool passed = true;
  bool gating = true;
  bool precondition = false;
  std::optional<Witness> witness;
};

struct CheckReport {
  StructureKind kind;
  std::vector<CheckEntry> checks;

  bool overall() const {
    for (const auto& c : checks)
      if (c.gating && !c.passed) return false;
    return true;
  }

  bool precondition_failed() const {
    for (const auto& c : checks)
      if (c.precondition && !c.passed) return true;
    return false;
  }

  const CheckEntry* find(const std::string& id) const {
    for (const auto& c : checks)
      if (c.id == id) return &c;
    return nullptr;
  }

  void add_pass(std::string id) { checks.push_back({std::move(id), true, true, false, {}}); }
  void add(std::string id, bool passed, std::optional<Witness> w, bool gating = true,
           bool precondition = false) {
    checks.push_back({std::move(id), passed, gating, precondition, std::move(w)});
  }

  std::string str() const;
};

/// Raised when an operation's hypothesis fails (e.g. a tower seeded from
/// a triple outside its class).  Carries the failing report.  The CLI
/// maps this to exit code 2, distinct from identity failures.
struct precondition_error : std::runtime_error {
  CheckReport report;
  precondition_error(const std::string& msg, CheckReport r)
      : std::runtime_error(msg), report(std::move(r)) {}
};

}  // namespace lieop
