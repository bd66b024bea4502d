#pragma once

#include <map>
#include <optional>
#include <span>
#include <vector>

#include "gufo/graph.hpp"
#include "gufo/vocabulary.hpp"

namespace gufo {

struct ClosureOptions {
  // Inject vocabulary domain/range types for effective assertions before
  // closing rdf:type upward (RDFS rules 2/3). Off by default: inference
  // can mask modeling errors the user wants flagged.
  bool inferDomains = false;
};

/// Precomputed reachability over rdfs:subClassOf and rdfs:subPropertyOf
/// (graph edges plus the vocabulary's internal edges), the upward-closed
/// rdf:type map, and per-property assertion sets closed under
/// subproperties.
///
/// Works over an extended id space: graph term ids first, then ids for
/// vocabulary terms the graph never mentions. Punning is admitted: a term
/// may have entries both as an instance (typesOf) and as a class
/// (superClassesOf). Subclass cycles are not an error; members of a cycle
/// become mutually reachable (including themselves) and the cycle is
/// recorded for advisory reporting.
class ClosureSet {
 public:
  using Id = TermId;

  const Graph& graph() const { return *graph_; }
  std::size_t idCount() const { return graphTermCount_ + extraTerms_.size(); }
  const Term& term(Id id) const;
  std::string display(Id id) const;
  std::optional<Id> find(const Term& t) const;
  bool isGraphTerm(Id id) const { return id < graphTermCount_; }

  /// Strict superclasses (self only appears on a cycle through the node).
  std::span<const Id> superClassesOf(Id id) const;
  std::span<const Id> superPropertiesOf(Id id) const;
  /// Direct (asserted + vocabulary-internal) superclass edges, for the
  /// one-hop mode that mirrors the published shapes.
  std::span<const Id> directSuperClassesOf(Id id) const;

  /// Asserted types closed upward under superClassesOf. Sorted.
  std::span<const Id> typesOf(Id id) const;
  bool hasType(Id x, Id cls) const;
  /// Every id whose typesOf contains cls (includes instances reached via
  /// subclass-of-metatype chains). Sorted.
  std::span<const Id> instancesOf(Id cls) const;
  /// Ids with at least one asserted rdf:type, ascending.
  const std::vector<Id>& typedIds() const { return typedIds_; }

  /// (subject, object) pairs asserted with the property or any
  /// subproperty of it; only populated for vocabulary properties.
  const std::vector<std::pair<Id, Id>>& effective(Id property) const;

  const std::vector<std::vector<Id>>& subclassCycles() const { return subclassCycles_; }
  const std::vector<std::vector<Id>>& subpropertyCycles() const { return subpropertyCycles_; }

 private:
  friend ClosureSet compute_closures(const Graph&, const Vocabulary&, ClosureOptions);
  ClosureSet() = default;

  const Graph* graph_ = nullptr;
  std::size_t graphTermCount_ = 0;
  std::vector<Term> extraTerms_;
  std::map<std::string, Id> extraByIri_;

  std::vector<std::vector<Id>> subclassAbove_;
  std::vector<std::vector<Id>> subpropAbove_;
  std::vector<std::vector<Id>> directAbove_;
  std::vector<std::vector<Id>> types_;
  std::vector<Id> typedIds_;
  std::map<Id, std::vector<Id>> instances_;
  std::map<Id, std::vector<std::pair<Id, Id>>> effective_;
  std::vector<std::vector<Id>> subclassCycles_;
  std::vector<std::vector<Id>> subpropertyCycles_;
};

/// Pure function of (graph, vocabulary, options). The returned set keeps
/// a reference to the graph, which must outlive it.
ClosureSet compute_closures(const Graph& g, const Vocabulary& v,
                            ClosureOptions options = {});

/// { x : classIri ∈ typesOf(x) }, in canonical term order.
std::vector<Term> instances_of(const ClosureSet& c, const Term& classIri);

/// Transitive closure of asserted gufo:historicallyDependsOn edges.
/// Pairs (x, x) arising from cycles are retained.
std::vector<std::pair<Term, Term>> historical_closure(const Graph& g);

}  // namespace gufo
