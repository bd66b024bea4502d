#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gufo/report.hpp"
#include "gufo/violation.hpp"

namespace gufo {

enum class OutputFormat { Human, Json };
enum class FailOn { Error, Warning, Never };

struct RunConfig {
  std::vector<std::string> inputs;       // >= 1 Turtle files
  std::optional<std::string> gufoPath;   // official gUFO Turtle to merge
  OutputFormat format = OutputFormat::Human;
  FailOn failOn = FailOn::Error;
  std::vector<std::string> enable;       // empty = all checks
  std::vector<std::string> disable;
  bool directSubclassOnly = false;
  bool inferDomains = false;
  bool stats = false;
  std::optional<std::string> base;       // base IRI for relative references
};

/// Unreadable file, Turtle syntax error, or bad configuration; the CLI
/// maps this to exit code 2 with the message on stderr.
class RunError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunOutcome {
  Report report;
  int exitCode = 0;  // 0 clean, 1 findings at/above failOn (2 via RunError)
};

/// Merges the inputs (blank nodes kept apart), builds the vocabulary
/// (with the optional external merge), computes closures, runs the
/// enabled rules and lints, and assembles the report.
RunOutcome run(const RunConfig& config);

std::string render_report(const Report& r, OutputFormat format);

}  // namespace gufo
