#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "gufo/term.hpp"

namespace gufo {

enum class Severity { Info, Warning, Error };

std::string_view severity_name(Severity s);
std::optional<Severity> severity_from_name(std::string_view name);

struct ResolvedLocation {
  std::string file;
  unsigned line = 0;
};

/// One finding: a stable check id, a severity, the focus node, optional
/// secondary nodes, the message, and a best-effort source location.
struct Violation {
  std::string rule;
  Severity severity = Severity::Error;
  Term focus;
  std::vector<Term> secondary;
  std::string message;
  std::optional<ResolvedLocation> location;

  bool operator==(const Violation&) const = default;
};

/// Report order: severity descending, then rule id, then focus
/// serialization, with full tie-breaking for byte-stable output.
void sort_violations(std::vector<Violation>& violations);

struct RuleConfig {
  std::set<std::string> enabled;   // empty = all registered checks
  std::set<std::string> disabled;
  std::map<std::string, Severity> severityOverride;
  bool directSubclassOnly = false;

  bool isEnabled(const std::string& id) const;
  Severity effectiveSeverity(const std::string& id, Severity computed) const;
};

}  // namespace gufo
