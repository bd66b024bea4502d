#pragma once

// Internal helpers shared by the taxonomy rules and the pattern lints.

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "gufo/checks.hpp"
#include "gufo/iris.hpp"

namespace gufo::detail {

using Id = ClosureSet::Id;

inline std::optional<Id> findIri(const ClosureSet& c, const std::string& s) {
  return c.find(Term::iri(s));
}

inline std::set<Id> resolveGroup(const ClosureSet& c, const std::set<std::string>& group) {
  std::set<Id> out;
  for (const std::string& s : group) {
    if (auto id = findIri(c, s)) out.insert(*id);
  }
  return out;
}

/// The vocabulary's groups and named terms resolved to closure ids once
/// per check invocation.
struct VocabIds {
  std::set<Id> rigid, semiRigid, rigidOrSemiRigid, antiRigid;
  std::set<Id> sortal, nonSortal, baseSortal, typeTaxonomy;
  std::set<Id> endurantTypeTargets, endurantDisjoint;
  std::vector<std::pair<Id, Id>> builtinDisjoint;
  Id kind, quality, relator, qvas;
  Id abstractIndividualType, concreteIndividualType;
  Id inheresIn, mediates, categorizes, partitions;
  Id concernsQualityType, concernsQualityValue, hasReifiedQualityValue;

  explicit VocabIds(const CheckContext& ctx) {
    const ClosureSet& c = ctx.closures;
    const Vocabulary& v = ctx.vocab;
    rigid = resolveGroup(c, v.rigidGroup);
    semiRigid = resolveGroup(c, v.semiRigidGroup);
    rigidOrSemiRigid = rigid;
    rigidOrSemiRigid.insert(semiRigid.begin(), semiRigid.end());
    antiRigid = resolveGroup(c, v.antiRigidGroup);
    sortal = resolveGroup(c, v.sortalGroup);
    nonSortal = resolveGroup(c, v.nonSortalGroup);
    baseSortal = resolveGroup(c, v.baseSortalGroup);
    typeTaxonomy = resolveGroup(c, v.typeTaxonomy);
    for (const std::string& s : v.endurantTypeTargets) {
      endurantTypeTargets.insert(*findIri(c, s));
    }
    for (const std::string& s : v.endurantDisjointList) {
      endurantDisjoint.insert(*findIri(c, s));
    }
    for (const auto& [a, b] : v.disjointPairs) {
      Id ia = *findIri(c, a), ib = *findIri(c, b);
      builtinDisjoint.emplace_back(std::min(ia, ib), std::max(ia, ib));
    }
    std::sort(builtinDisjoint.begin(), builtinDisjoint.end());
    kind = *findIri(c, iri::g::Kind);
    quality = *findIri(c, iri::g::Quality);
    relator = *findIri(c, iri::g::Relator);
    qvas = *findIri(c, iri::g::QualityValueAttributionSituation);
    abstractIndividualType = *findIri(c, iri::g::AbstractIndividualType);
    concreteIndividualType = *findIri(c, iri::g::ConcreteIndividualType);
    inheresIn = *findIri(c, iri::g::inheresIn);
    mediates = *findIri(c, iri::g::mediates);
    categorizes = *findIri(c, iri::g::categorizes);
    partitions = *findIri(c, iri::g::partitions);
    concernsQualityType = *findIri(c, iri::g::concernsQualityType);
    concernsQualityValue = *findIri(c, iri::g::concernsQualityValue);
    hasReifiedQualityValue = *findIri(c, iri::g::hasReifiedQualityValue);
  }
};

inline bool typesIntersect(const ClosureSet& c, Id x, const std::set<Id>& classes) {
  for (Id m : classes) {
    if (c.hasType(x, m)) return true;
  }
  return false;
}

inline std::span<const Id> supersOf(const CheckContext& ctx, Id x) {
  return ctx.directSubclassOnly ? ctx.closures.directSuperClassesOf(x)
                                : ctx.closures.superClassesOf(x);
}

inline bool inReservedNamespace(const Term& t) {
  if (!t.isIri()) return false;
  const std::string& v = t.value();
  for (const std::string* p :
       {&ns::gufo, &ns::rdf, &ns::rdfs, &ns::owl, &ns::xsd, &ns::time}) {
    if (v.rfind(*p, 0) == 0) return true;
  }
  return false;
}

inline std::optional<ResolvedLocation> locate(const CheckContext& ctx, Id focus) {
  if (!ctx.closures.isGraphTerm(focus)) return std::nullopt;
  const Graph& g = ctx.graph;
  auto indices = g.match(std::optional<TermId>(focus), std::nullopt, std::nullopt);
  if (indices.empty()) indices = g.match(std::nullopt, std::nullopt, std::optional<TermId>(focus));
  if (indices.empty()) return std::nullopt;
  SourceLocation loc = g.location(indices.front());
  if (loc.line == 0 || loc.file >= g.files().size()) return std::nullopt;
  return ResolvedLocation{g.files()[loc.file], loc.line};
}

inline Violation makeViolation(const CheckContext& ctx, std::string rule,
                               Severity severity, Id focus,
                               std::vector<Id> secondary, std::string message) {
  Violation v;
  v.rule = std::move(rule);
  v.severity = severity;
  v.focus = ctx.closures.term(focus);
  for (Id s : secondary) v.secondary.push_back(ctx.closures.term(s));
  v.message = std::move(message);
  v.location = locate(ctx, focus);
  return v;
}

/// User-asserted owl:disjointWith pairs (normalized, deduplicated).
std::vector<std::pair<Id, Id>> userDisjointPairs(const CheckContext& ctx);

/// True when some class in typesOf(node) is disjoint with cls (built-in
/// matrix plus user assertions, closed under subclasses on both sides).
/// On success *witness is the conflicting class from the node's types.
bool disjointFromClass(const CheckContext& ctx, const VocabIds& ids, Id node, Id cls,
                       Id* witness);

}  // namespace gufo::detail
