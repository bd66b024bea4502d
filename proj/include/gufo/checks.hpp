#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "gufo/closures.hpp"
#include "gufo/violation.hpp"

namespace gufo {

struct CheckContext {
  const Graph& graph;
  const Vocabulary& vocab;
  const ClosureSet& closures;
  bool directSubclassOnly = false;
};

using CheckFn = std::vector<Violation> (*)(const CheckContext&);

struct CheckDef {
  std::string_view id;
  Severity defaultSeverity;
  std::string_view summary;
  CheckFn fn;
};

/// Taxonomy-of-types and multi-level constraints R1..R10.
std::span<const CheckDef> taxonomy_checks();
/// Reification-pattern lints L1..L6.
std::span<const CheckDef> pattern_checks();
/// Ids emitted outside the two tables (cycle advisories, merge
/// conflicts, unresolved imports).
std::span<const std::string_view> auxiliary_check_ids();
bool is_registered_check(std::string_view id);

namespace rules {
std::vector<Violation> r1_rigid_specializes_antirigid(const CheckContext&);
std::vector<Violation> r2_nonsortal_specializes_sortal(const CheckContext&);
std::vector<Violation> r3_sortal_missing_identity_provider(const CheckContext&);
std::vector<Violation> r4_kind_specializes_sortal(const CheckContext&);
std::vector<Violation> r5_endurant_type_bad_specialization(const CheckContext&);
std::vector<Violation> r6_categorization_subclassing(const CheckContext&);
std::vector<Violation> r7_partition_disjointness(const CheckContext&);
std::vector<Violation> r8_multiple_kinds(const CheckContext&);
std::vector<Violation> r9_categorizer_not_first_order(const CheckContext&);
std::vector<Violation> r10_disjointness_violations(const CheckContext&);
}  // namespace rules

namespace lints {
std::vector<Violation> l1_inherence_cardinality(const CheckContext&);
std::vector<Violation> l2_relator_arity(const CheckContext&);
std::vector<Violation> l3_temporal_ordering(const CheckContext&);
std::vector<Violation> l4_situation_completeness(const CheckContext&);
std::vector<Violation> l5_domain_range_conformance(const CheckContext&);
std::vector<Violation> l6_dependence_cycles(const CheckContext&);
}  // namespace lints

/// Runs the enabled checks in the given table and returns the union of
/// their findings in report order. Checks are pure and independent, so
/// the result does not depend on execution order.
std::vector<Violation> run_checks(std::span<const CheckDef> table,
                                  const CheckContext& ctx,
                                  const RuleConfig& cfg);

/// Convenience: all enabled taxonomy rules (R1..R10).
std::vector<Violation> run_rules(const CheckContext& ctx, const RuleConfig& cfg);

}  // namespace gufo
