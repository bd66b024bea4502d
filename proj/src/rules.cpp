#include <map>

#include "check_support.hpp"

namespace gufo {

namespace {

using detail::Id;
using detail::VocabIds;

constexpr std::string_view kMsgR1 =
    "Rigid and semi-rigid types can't specialize anti-rigid types.";
constexpr std::string_view kMsgR2 = "Non-Sortal types can't specialize Sortal types.";
constexpr std::string_view kMsgR3 =
    "Sortal types must specialize a kind or some other sortal.";
constexpr std::string_view kMsgR4 =
    "Kinds cannot specialize sortal types (i.e., types that already set or inherit an "
    "identity principle).";
constexpr std::string_view kMsgR5 =
    "Endurant types cannot specialize classes disjoint from Endurant.";
constexpr std::string_view kMsgR6 =
    "Instances of a categorizing higher-order type (focus node) must be subclasses of "
    "the categorized base type.";
constexpr std::string_view kMsgR9 =
    "A categorizing high-order type must not be a first-order type.";

// Shared skeleton for R1/R2: X typed in `targets` must not have a
// superclass typed in `forbidden`. One finding per (X, superclass) pair.
std::vector<Violation> specializationRule(const CheckContext& ctx, const char* rule,
                                          const std::set<Id>& targets,
                                          const std::set<Id>& forbidden,
                                          std::string_view message) {
  std::vector<Violation> out;
  const ClosureSet& c = ctx.closures;
  for (Id x : c.typedIds()) {
    if (!detail::typesIntersect(c, x, targets)) continue;
    for (Id s : detail::supersOf(ctx, x)) {
      if (s == x) continue;
      if (detail::typesIntersect(c, s, forbidden)) {
        out.push_back(detail::makeViolation(ctx, rule, Severity::Error, x, {s},
                                            std::string(message)));
      }
    }
  }
  return out;
}

std::string joinDisplays(const ClosureSet& c, const std::vector<Id>& ids) {
  std::string out;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i) out += ", ";
    out += c.display(ids[i]);
  }
  return out;
}

// Deduplicated (subject, object) pairs of a property's effective
// assertions, in canonical order.
std::vector<std::pair<Id, Id>> dedupedPairs(const ClosureSet& c, Id property) {
  std::vector<std::pair<Id, Id>> pairs = c.effective(property);
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  return pairs;
}

std::vector<std::pair<Id, Id>> assertedPairs(const CheckContext& ctx,
                                             const std::string& predicate) {
  std::vector<std::pair<Id, Id>> out;
  auto p = ctx.graph.find(Term::iri(predicate));
  if (!p) return out;
  for (std::size_t idx : ctx.graph.match(std::nullopt, *p, std::nullopt)) {
    const TripleIds& t = ctx.graph.triples()[idx];
    if (ctx.graph.term(t.o).isLiteral()) continue;
    out.emplace_back(std::min(t.s, t.o), std::max(t.s, t.o));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

namespace detail {

std::vector<std::pair<Id, Id>> userDisjointPairs(const CheckContext& ctx) {
  auto pairs = assertedPairs(ctx, iri::owlDisjointWith);
  std::erase_if(pairs, [](const auto& p) { return p.first == p.second; });
  return pairs;
}

bool disjointFromClass(const CheckContext& ctx, const VocabIds& ids, Id node, Id cls,
                       Id* witness) {
  const ClosureSet& c = ctx.closures;
  std::set<Id> clsUp;
  clsUp.insert(cls);
  for (Id u : c.superClassesOf(cls)) clsUp.insert(u);

  auto pairs = ids.builtinDisjoint;
  auto user = userDisjointPairs(ctx);
  pairs.insert(pairs.end(), user.begin(), user.end());
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());

  for (const auto& [a, b] : pairs) {
    if (c.hasType(node, a) && clsUp.count(b)) {
      if (witness) *witness = a;
      return true;
    }
    if (c.hasType(node, b) && clsUp.count(a)) {
      if (witness) *witness = b;
      return true;
    }
  }
  return false;
}

}  // namespace detail

namespace rules {

std::vector<Violation> r1_rigid_specializes_antirigid(const CheckContext& ctx) {
  VocabIds ids(ctx);
  return specializationRule(ctx, "R1", ids.rigidOrSemiRigid, ids.antiRigid, kMsgR1);
}

std::vector<Violation> r2_nonsortal_specializes_sortal(const CheckContext& ctx) {
  VocabIds ids(ctx);
  return specializationRule(ctx, "R2", ids.nonSortal, ids.sortal, kMsgR2);
}

std::vector<Violation> r3_sortal_missing_identity_provider(const CheckContext& ctx) {
  VocabIds ids(ctx);
  std::vector<Violation> out;
  const ClosureSet& c = ctx.closures;
  for (Id x : c.typedIds()) {
    if (!detail::typesIntersect(c, x, ids.baseSortal)) continue;
    bool provided = false;
    bool unknownSuper = false;
    for (Id s : detail::supersOf(ctx, x)) {
      if (s == x) continue;
      if (detail::typesIntersect(c, s, ids.sortal)) {
        provided = true;
        break;
      }
      // A non-reserved superclass whose sortality is undeclared might be
      // a sortal elsewhere; under the open world that is only a warning.
      if (!detail::inReservedNamespace(c.term(s)) &&
          !detail::typesIntersect(c, s, ids.nonSortal)) {
        unknownSuper = true;
      }
    }
    if (provided) continue;
    out.push_back(detail::makeViolation(
        ctx, "R3", unknownSuper ? Severity::Warning : Severity::Error, x, {},
        std::string(kMsgR3)));
  }
  return out;
}

std::vector<Violation> r4_kind_specializes_sortal(const CheckContext& ctx) {
  VocabIds ids(ctx);
  // The published shape forbids SubKind/Phase/Role superclasses; a kind
  // above another kind is the same mistake and is reported here too.
  std::set<Id> forbidden = ids.baseSortal;
  forbidden.insert(ids.kind);
  return specializationRule(ctx, "R4", {ids.kind}, forbidden, kMsgR4);
}

std::vector<Violation> r5_endurant_type_bad_specialization(const CheckContext& ctx) {
  VocabIds ids(ctx);
  std::vector<Violation> out;
  const ClosureSet& c = ctx.closures;
  for (Id x : c.typedIds()) {
    if (!detail::typesIntersect(c, x, ids.endurantTypeTargets)) continue;
    for (Id s : detail::supersOf(ctx, x)) {
      if (ids.endurantDisjoint.count(s)) {
        out.push_back(detail::makeViolation(ctx, "R5", Severity::Error, x, {s},
                                            std::string(kMsgR5)));
      }
    }
  }
  return out;
}

std::vector<Violation> r6_categorization_subclassing(const CheckContext& ctx) {
  VocabIds ids(ctx);
  std::vector<Violation> out;
  const ClosureSet& c = ctx.closures;
  for (const auto& [h, base] : dedupedPairs(c, ids.categorizes)) {
    for (Id x : c.instancesOf(h)) {
      if (x == base) continue;
      auto supers = ctx.directSubclassOnly ? c.directSuperClassesOf(x)
                                           : c.superClassesOf(x);
      if (std::binary_search(supers.begin(), supers.end(), base)) continue;
      out.push_back(detail::makeViolation(ctx, "R6", Severity::Error, h, {x, base},
                                          std::string(kMsgR6)));
    }
  }
  return out;
}

std::vector<Violation> r7_partition_disjointness(const CheckContext& ctx) {
  VocabIds ids(ctx);
  std::vector<Violation> out;
  const ClosureSet& c = ctx.closures;
  const Graph& g = ctx.graph;

  std::vector<Id> partitioners;
  for (const auto& [h, base] : dedupedPairs(c, ids.partitions)) partitioners.push_back(h);
  std::sort(partitioners.begin(), partitioners.end());
  partitioners.erase(std::unique(partitioners.begin(), partitioners.end()),
                     partitioners.end());
  if (partitioners.empty()) return out;

  auto equivalents = assertedPairs(ctx, iri::owlEquivalentClass);
  auto sameAs = assertedPairs(ctx, iri::owlSameAs);
  equivalents.insert(equivalents.end(), sameAs.begin(), sameAs.end());
  std::sort(equivalents.begin(), equivalents.end());
  auto disjoint = detail::userDisjointPairs(ctx);

  // Class groups declared mutually disjoint via owl:AllDisjointClasses
  // owl:members or owl:disjointUnionOf lists.
  std::vector<std::set<Id>> disjointGroups;
  auto collectLists = [&](const std::vector<std::size_t>& indices) {
    for (std::size_t idx : indices) {
      const TripleIds& t = g.triples()[idx];
      try {
        auto members = read_list_ids(g, t.o);
        disjointGroups.emplace_back(members.begin(), members.end());
      } catch (const ListError& e) {
        Violation v;
        v.rule = "R7";
        v.severity = Severity::Error;
        v.focus = g.term(t.s);
        v.message = std::string("malformed disjointness list: ") + e.what();
        v.location = detail::locate(ctx, t.s);
        out.push_back(std::move(v));
      }
    }
  };
  auto adcType = g.find(Term::iri(iri::owlAllDisjointClasses));
  auto rdfType = g.find(Term::iri(iri::rdfType));
  auto members = g.find(Term::iri(iri::owlMembers));
  if (adcType && rdfType && members) {
    for (std::size_t idx : g.match(std::nullopt, *rdfType, *adcType)) {
      collectLists(g.match(g.triples()[idx].s, *members, std::nullopt));
    }
  }
  if (auto duv = g.find(Term::iri(iri::owlDisjointUnionOf))) {
    collectLists(g.match(std::nullopt, *duv, std::nullopt));
  }

  auto inPairs = [](const std::vector<std::pair<Id, Id>>& pairs, Id a, Id b) {
    return std::binary_search(pairs.begin(), pairs.end(),
                              std::make_pair(std::min(a, b), std::max(a, b)));
  };
  auto covered = [&](Id a, Id b) {
    if (inPairs(disjoint, a, b)) return true;
    for (const auto& group : disjointGroups) {
      if (group.count(a) && group.count(b)) return true;
    }
    return false;
  };

  for (Id h : partitioners) {
    auto instances = c.instancesOf(h);
    for (std::size_t i = 0; i < instances.size(); ++i) {
      for (std::size_t j = i + 1; j < instances.size(); ++j) {
        Id t1 = instances[i], t2 = instances[j];
        if (inPairs(equivalents, t1, t2)) continue;
        if (covered(t1, t2)) continue;
        std::string msg = "Instances " + c.display(t1) + " and " + c.display(t2) +
                          " of the partitioning type " + c.display(h) +
                          " are not declared disjoint.";
        out.push_back(detail::makeViolation(ctx, "R7", Severity::Error, h, {t1, t2},
                                            std::move(msg)));
      }
    }
  }
  return out;
}

std::vector<Violation> r8_multiple_kinds(const CheckContext& ctx) {
  VocabIds ids(ctx);
  std::vector<Violation> out;
  const ClosureSet& c = ctx.closures;
  for (Id x : c.typedIds()) {
    // Punned classes (anything landing in the type taxonomy) are exempt.
    if (detail::typesIntersect(c, x, ids.typeTaxonomy)) continue;
    std::vector<Id> kinds;
    for (Id cls : c.typesOf(x)) {
      if (c.hasType(cls, ids.kind)) kinds.push_back(cls);
    }
    if (kinds.size() < 2) continue;
    std::string msg = "Individual " + c.display(x) +
                      " is an instance of more than one kind: " +
                      joinDisplays(c, kinds) + ".";
    out.push_back(
        detail::makeViolation(ctx, "R8", Severity::Error, x, kinds, std::move(msg)));
  }
  return out;
}

std::vector<Violation> r9_categorizer_not_first_order(const CheckContext& ctx) {
  VocabIds ids(ctx);
  std::vector<Violation> out;
  const ClosureSet& c = ctx.closures;
  std::vector<Id> subjects;
  for (const auto& [h, base] : dedupedPairs(c, ids.categorizes)) subjects.push_back(h);
  std::sort(subjects.begin(), subjects.end());
  subjects.erase(std::unique(subjects.begin(), subjects.end()), subjects.end());
  for (Id h : subjects) {
    if (c.hasType(h, ids.abstractIndividualType) ||
        c.hasType(h, ids.concreteIndividualType)) {
      out.push_back(
          detail::makeViolation(ctx, "R9", Severity::Error, h, {}, std::string(kMsgR9)));
    }
  }
  return out;
}

std::vector<Violation> r10_disjointness_violations(const CheckContext& ctx) {
  VocabIds ids(ctx);
  std::vector<Violation> out;
  const ClosureSet& c = ctx.closures;
  auto pairs = ids.builtinDisjoint;
  auto user = detail::userDisjointPairs(ctx);
  pairs.insert(pairs.end(), user.begin(), user.end());
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());

  for (Id x : c.typedIds()) {
    for (const auto& [a, b] : pairs) {
      if (c.hasType(x, a) && c.hasType(x, b)) {
        std::string msg = "Individual " + c.display(x) +
                          " is an instance of disjoint classes " + c.display(a) +
                          " and " + c.display(b) + ".";
        out.push_back(
            detail::makeViolation(ctx, "R10", Severity::Error, x, {a, b}, std::move(msg)));
      }
    }
  }
  return out;
}

}  // namespace rules

namespace {

constexpr CheckDef kTaxonomyChecks[] = {
    {"R1", Severity::Error, "rigid or semi-rigid type specializes an anti-rigid type",
     &rules::r1_rigid_specializes_antirigid},
    {"R2", Severity::Error, "non-sortal type specializes a sortal type",
     &rules::r2_nonsortal_specializes_sortal},
    {"R3", Severity::Error, "sortal type lacks an identity provider",
     &rules::r3_sortal_missing_identity_provider},
    {"R4", Severity::Error, "kind specializes an identity-carrying sortal",
     &rules::r4_kind_specializes_sortal},
    {"R5", Severity::Error, "endurant type specializes a class disjoint from Endurant",
     &rules::r5_endurant_type_bad_specialization},
    {"R6", Severity::Error, "instance of a categorizing type is not a subclass of the base",
     &rules::r6_categorization_subclassing},
    {"R7", Severity::Error, "instances of a partitioning type are not declared disjoint",
     &rules::r7_partition_disjointness},
    {"R8", Severity::Error, "individual instantiates more than one kind",
     &rules::r8_multiple_kinds},
    {"R9", Severity::Error, "categorizing type is a first-order type",
     &rules::r9_categorizer_not_first_order},
    {"R10", Severity::Error, "individual instantiates disjoint classes",
     &rules::r10_disjointness_violations},
};

constexpr CheckDef kPatternChecks[] = {
    {"L1", Severity::Error, "aspect inheres in more than one individual",
     &lints::l1_inherence_cardinality},
    {"L2", Severity::Warning, "relator mediates fewer than two individuals",
     &lints::l2_relator_arity},
    {"L3", Severity::Error, "begin/end temporal ordering",
     &lints::l3_temporal_ordering},
    {"L4", Severity::Warning, "quality value attribution situation completeness",
     &lints::l4_situation_completeness},
    {"L5", Severity::Error, "gUFO property domain/range conformance",
     &lints::l5_domain_range_conformance},
    {"L6", Severity::Warning, "historical dependence cycle",
     &lints::l6_dependence_cycles},
};

constexpr std::string_view kAuxiliaryIds[] = {"C1", "C2", "M1", "N1"};

}  // namespace

std::span<const CheckDef> taxonomy_checks() { return kTaxonomyChecks; }
std::span<const CheckDef> pattern_checks() { return kPatternChecks; }
std::span<const std::string_view> auxiliary_check_ids() { return kAuxiliaryIds; }

bool is_registered_check(std::string_view id) {
  for (const CheckDef& d : kTaxonomyChecks) {
    if (d.id == id) return true;
  }
  for (const CheckDef& d : kPatternChecks) {
    if (d.id == id) return true;
  }
  for (std::string_view aux : kAuxiliaryIds) {
    if (aux == id) return true;
  }
  return false;
}

std::vector<Violation> run_checks(std::span<const CheckDef> table,
                                  const CheckContext& ctx, const RuleConfig& cfg) {
  std::vector<Violation> out;
  for (const CheckDef& def : table) {
    std::string id(def.id);
    if (!cfg.isEnabled(id)) continue;
    std::vector<Violation> found = def.fn(ctx);
    for (Violation& v : found) {
      v.severity = cfg.effectiveSeverity(id, v.severity);
      out.push_back(std::move(v));
    }
  }
  sort_violations(out);
  return out;
}

std::vector<Violation> run_rules(const CheckContext& ctx, const RuleConfig& cfg) {
  return run_checks(taxonomy_checks(), ctx, cfg);
}

}  // namespace gufo
