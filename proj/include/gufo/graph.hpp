#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "gufo/term.hpp"

namespace gufo {

using TermId = std::uint32_t;

struct TripleIds {
  TermId s = 0, p = 0, o = 0;
  bool operator==(const TripleIds&) const = default;
};

/// A triple with materialized terms, as handed to callers of match().
struct Triple {
  Term s, p, o;
  bool operator==(const Triple&) const = default;
};

struct SourceLocation {
  std::uint32_t file = 0;  // index into Graph::files(); 0 with empty files() means unknown
  std::uint32_t line = 0;
};

/// Immutable, indexed triple store with set semantics.
///
/// Term ids are assigned so that ascending id order equals the canonical
/// order (lexicographic by N-Triples serialization), and triples() is
/// sorted by (s, p, o) in that order. All match results come back in
/// canonical order, which keeps every downstream report reproducible.
class Graph {
 public:
  class Builder;

  std::size_t size() const { return triples_.size(); }
  const std::vector<TripleIds>& triples() const { return triples_; }

  std::size_t termCount() const { return terms_.size(); }
  const Term& term(TermId id) const { return terms_[id]; }
  const std::string& termText(TermId id) const { return termTexts_[id]; }
  std::optional<TermId> find(const Term& t) const;

  /// Indices into triples() agreeing with every bound slot, ascending.
  std::vector<std::size_t> match(std::optional<TermId> s,
                                 std::optional<TermId> p,
                                 std::optional<TermId> o) const;
  std::vector<Triple> match(const std::optional<Term>& s,
                            const std::optional<Term>& p,
                            const std::optional<Term>& o) const;
  bool contains(const Term& s, const Term& p, const Term& o) const;

  SourceLocation location(std::size_t tripleIndex) const { return locations_[tripleIndex]; }
  const std::vector<std::string>& files() const { return files_; }

  const std::vector<std::pair<std::string, std::string>>& prefixes() const { return prefixes_; }
  /// Prefixed rendering for messages ("gufo:Kind", ":Person", "_:b1",
  /// literal in N-Triples form); falls back to <iri>.
  std::string display(const Term& t) const;
  std::string display(TermId id) const { return display(terms_[id]); }

 private:
  friend class Builder;
  Graph() = default;

  std::vector<Term> terms_;
  std::vector<std::string> termTexts_;
  std::unordered_map<Term, TermId, TermHash> termIds_;
  std::vector<TripleIds> triples_;
  std::vector<SourceLocation> locations_;
  std::vector<std::string> files_;
  std::vector<std::pair<std::string, std::string>> prefixes_;

  std::unordered_map<TermId, std::vector<std::size_t>> bySubject_;
  std::unordered_map<TermId, std::vector<std::size_t>> byObject_;
  std::unordered_map<std::uint64_t, std::vector<std::size_t>> byPredicateObject_;
};

/// Accumulates triples (with duplicates collapsed) and produces an
/// immutable Graph. One builder may receive several parsed documents;
/// blank nodes are kept apart per document.
class Graph::Builder {
 public:
  Builder();

  std::uint32_t addFile(std::string name);
  void setPrefix(const std::string& prefix, const std::string& iri);
  void add(const Term& s, const Term& p, const Term& o, SourceLocation loc = {});

  /// Starts a fresh blank-node scope (called once per parsed document).
  void beginBlankScope();
  Term freshBlank();
  Term labeledBlank(const std::string& label);

  Graph build();

 private:
  struct Pending {
    Term s, p, o;
    SourceLocation loc;
  };
  std::vector<Pending> pending_;
  std::vector<std::string> files_;
  std::vector<std::pair<std::string, std::string>> prefixes_;
  std::unordered_map<std::string, std::size_t> prefixIndex_;
  std::unordered_map<std::string, std::string> blankMap_;
  unsigned scope_ = 0;
  unsigned nextBlank_ = 0;
};

/// Walks an rdf:first/rdf:rest chain from head to rdf:nil.
/// Throws ListError on a missing rdf:first, a branching first/rest,
/// or a cycle, naming the offending node.
class ListError : public std::runtime_error {
 public:
  ListError(std::string message, Term node)
      : std::runtime_error(std::move(message)), node_(std::move(node)) {}
  const Term& node() const { return node_; }

 private:
  Term node_;
};

std::vector<Term> read_list(const Graph& g, const Term& head);
std::vector<TermId> read_list_ids(const Graph& g, TermId head);

/// One canonical N-Triples line per triple, sorted, LF-terminated.
std::string serialize_ntriples(const Graph& g);

}  // namespace gufo
