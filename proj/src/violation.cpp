#include "gufo/violation.hpp"

#include <algorithm>
#include <tuple>

namespace gufo {

std::string_view severity_name(Severity s) {
  switch (s) {
    case Severity::Error: return "error";
    case Severity::Warning: return "warning";
    case Severity::Info: return "info";
  }
  return "info";
}

std::optional<Severity> severity_from_name(std::string_view name) {
  if (name == "error") return Severity::Error;
  if (name == "warning") return Severity::Warning;
  if (name == "info") return Severity::Info;
  return std::nullopt;
}

void sort_violations(std::vector<Violation>& violations) {
  auto key = [](const Violation& v) {
    std::string secondary;
    for (const Term& t : v.secondary) {
      secondary += t.ntriples();
      secondary += '\x01';
    }
    return std::tuple<int, std::string, std::string, std::string, std::string>(
        -static_cast<int>(v.severity), v.rule, v.focus.ntriples(),
        std::move(secondary), v.message);
  };
  std::stable_sort(violations.begin(), violations.end(),
                   [&](const Violation& a, const Violation& b) { return key(a) < key(b); });
  violations.erase(std::unique(violations.begin(), violations.end()), violations.end());
}

bool RuleConfig::isEnabled(const std::string& id) const {
  if (disabled.count(id)) return false;
  return enabled.empty() || enabled.count(id) > 0;
}

Severity RuleConfig::effectiveSeverity(const std::string& id, Severity computed) const {
  auto it = severityOverride.find(id);
  return it == severityOverride.end() ? computed : it->second;
}

}  // namespace gufo
