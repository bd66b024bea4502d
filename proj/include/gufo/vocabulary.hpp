#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "gufo/graph.hpp"

namespace gufo {

struct PropertySignature {
  std::string domain;  // empty = unspecified
  std::string range;   // empty = unspecified (always empty for data properties)
};

/// The gUFO term table: class and property IRIs, gUFO-internal subclass
/// and subproperty edges, the metatype groups the taxonomy rules target,
/// the built-in disjointness matrix, and property domain/range facts.
/// Immutable after construction; freely shareable.
struct Vocabulary {
  std::set<std::string> classes;
  std::set<std::string> properties;      // object + data properties
  std::set<std::string> dataProperties;  // subset of properties

  std::vector<std::pair<std::string, std::string>> subclassEdges;
  std::vector<std::pair<std::string, std::string>> subpropertyEdges;

  // Metatype groups (IRIs). The rigid/semi-rigid/anti-rigid split and the
  // sortal/non-sortal split; baseSortalGroup is the identity-inheriting
  // sortals (everything sortal except Kind).
  std::set<std::string> rigidGroup;
  std::set<std::string> semiRigidGroup;
  std::set<std::string> antiRigidGroup;
  std::set<std::string> sortalGroup;
  std::set<std::string> nonSortalGroup;
  std::set<std::string> baseSortalGroup;
  // Every class on the type side of the taxonomy (used to tell punned
  // classes apart from plain individuals).
  std::set<std::string> typeTaxonomy;

  // Target list for the endurant-type specialization check, in order.
  std::vector<std::string> endurantTypeTargets;
  // Classes disjoint from gufo:Endurant, in order.
  std::vector<std::string> endurantDisjointList;

  // Unordered built-in disjoint pairs, stored with first < second.
  std::vector<std::pair<std::string, std::string>> disjointPairs;

  std::map<std::string, PropertySignature> domainRange;

  bool isClass(const std::string& iri) const { return classes.count(iri) > 0; }
  bool isProperty(const std::string& iri) const { return properties.count(iri) > 0; }
  static bool inGufoNamespace(const std::string& iri);
};

/// The built-in table: every gUFO term the engine consults, with edges
/// and groups taken from the ontology's documented taxonomy. Pure.
const Vocabulary& builtin_vocabulary();

struct MergeConflict {
  std::string subject;
  std::string predicate;
  std::string object;
  std::string reason;
};

struct MergeOutcome {
  Vocabulary vocabulary;
  std::vector<MergeConflict> conflicts;
  // Tallies of gufo-namespace declarations found in the external file.
  std::size_t declaredClasses = 0;
  std::size_t declaredObjectProperties = 0;
  std::size_t declaredDataProperties = 0;
};

/// Extends v with gufo-namespace subclass/subproperty/disjointness/
/// domain/range facts (and owl:Class / owl:ObjectProperty /
/// owl:DatatypeProperty declarations) from g. Built-in facts are never
/// removed; an external edge contradicting a built-in disjointness is
/// reported as a conflict and dropped.
MergeOutcome merge_external(const Vocabulary& v, const Graph& g);

}  // namespace gufo
