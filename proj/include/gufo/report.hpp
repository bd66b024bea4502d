#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gufo/violation.hpp"

namespace gufo {

inline constexpr std::string_view kToolVersion = "0.1.0";

struct FileSummary {
  std::string path;
  std::size_t triples = 0;
};

struct GraphStats {
  std::size_t triples = 0;
  std::size_t classes = 0;
  std::size_t individuals = 0;
  // (leaf metatype IRI suffix, count of its instances), fixed order.
  std::vector<std::pair<std::string, std::size_t>> metatypeCounts;
};

struct Report {
  std::string version{kToolVersion};
  std::vector<FileSummary> files;
  std::vector<Violation> violations;  // already in report order
  std::optional<GraphStats> stats;
  // Prefix map captured at parse time; used for human rendering only.
  std::vector<std::pair<std::string, std::string>> prefixes;

  std::size_t count(Severity s) const;
};

/// One line per finding plus a summary, grep-friendly:
///   file.ttl:12: error [R1] :Person: message...
std::string emit_text(const Report& r);

/// Stable-field-order JSON: {version, files, violations, counts, stats?}.
/// Byte-identical across runs on identical inputs.
std::string emit_json(const Report& r);

}  // namespace gufo
