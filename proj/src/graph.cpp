#include "gufo/graph.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <stdexcept>

#include "gufo/iris.hpp"

namespace gufo {

namespace {

std::uint64_t poKey(TermId p, TermId o) {
  return (static_cast<std::uint64_t>(p) << 32) | o;
}

}  // namespace

std::optional<TermId> Graph::find(const Term& t) const {
  auto it = termIds_.find(t);
  if (it == termIds_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::size_t> Graph::match(std::optional<TermId> s,
                                      std::optional<TermId> p,
                                      std::optional<TermId> o) const {
  // Pick the narrowest of the three indexes, then filter. A predicate-only
  // pattern has no dedicated index and falls back to a scan.
  const std::vector<std::size_t>* candidates = nullptr;
  std::vector<std::size_t> scan;
  static const std::vector<std::size_t> kEmpty;

  if (p && o) {
    auto it = byPredicateObject_.find(poKey(*p, *o));
    candidates = it == byPredicateObject_.end() ? &kEmpty : &it->second;
  } else if (s) {
    auto it = bySubject_.find(*s);
    candidates = it == bySubject_.end() ? &kEmpty : &it->second;
  } else if (o) {
    auto it = byObject_.find(*o);
    candidates = it == byObject_.end() ? &kEmpty : &it->second;
  } else {
    scan.resize(triples_.size());
    std::iota(scan.begin(), scan.end(), 0);
    candidates = &scan;
  }

  std::vector<std::size_t> out;
  for (std::size_t idx : *candidates) {
    const TripleIds& t = triples_[idx];
    if (s && t.s != *s) continue;
    if (p && t.p != *p) continue;
    if (o && t.o != *o) continue;
    out.push_back(idx);
  }
  return out;
}

std::vector<Triple> Graph::match(const std::optional<Term>& s,
                                 const std::optional<Term>& p,
                                 const std::optional<Term>& o) const {
  std::optional<TermId> si, pi, oi;
  // A bound term that was never interned matches nothing.
  if (s) { si = find(*s); if (!si) return {}; }
  if (p) { pi = find(*p); if (!pi) return {}; }
  if (o) { oi = find(*o); if (!oi) return {}; }
  std::vector<Triple> out;
  for (std::size_t idx : match(si, pi, oi)) {
    const TripleIds& t = triples_[idx];
    out.push_back(Triple{terms_[t.s], terms_[t.p], terms_[t.o]});
  }
  return out;
}

bool Graph::contains(const Term& s, const Term& p, const Term& o) const {
  auto si = find(s), pi = find(p), oi = find(o);
  if (!si || !pi || !oi) return false;
  return !match(si, pi, oi).empty();
}

std::string Graph::display(const Term& t) const { return display_term(t, prefixes_); }

Graph::Builder::Builder() = default;

std::uint32_t Graph::Builder::addFile(std::string name) {
  files_.push_back(std::move(name));
  return static_cast<std::uint32_t>(files_.size() - 1);
}

void Graph::Builder::setPrefix(const std::string& prefix, const std::string& iri) {
  auto it = prefixIndex_.find(prefix);
  if (it != prefixIndex_.end()) {
    prefixes_[it->second].second = iri;
    return;
  }
  prefixIndex_[prefix] = prefixes_.size();
  prefixes_.emplace_back(prefix, iri);
}

void Graph::Builder::beginBlankScope() {
  ++scope_;
  blankMap_.clear();
}

Term Graph::Builder::freshBlank() {
  return Term::blank("d" + std::to_string(scope_) + "b" + std::to_string(++nextBlank_));
}

Term Graph::Builder::labeledBlank(const std::string& label) {
  auto it = blankMap_.find(label);
  if (it != blankMap_.end()) return Term::blank(it->second);
  Term fresh = freshBlank();
  blankMap_[label] = fresh.value();
  return fresh;
}

void Graph::Builder::add(const Term& s, const Term& p, const Term& o, SourceLocation loc) {
  if (!p.isIri()) throw std::invalid_argument("triple predicate must be an IRI");
  if (s.isLiteral()) throw std::invalid_argument("triple subject cannot be a literal");
  pending_.push_back(Pending{s, p, o, loc});
}

Graph Graph::Builder::build() {
  Graph g;
  g.files_ = std::move(files_);
  g.prefixes_ = std::move(prefixes_);

  // Intern terms, then renumber them so that ascending id order equals
  // lexicographic order of their serializations.
  std::vector<Term> terms;
  std::unordered_map<Term, TermId, TermHash> ids;
  auto intern = [&](const Term& t) -> TermId {
    auto [it, inserted] = ids.try_emplace(t, static_cast<TermId>(terms.size()));
    if (inserted) terms.push_back(t);
    return it->second;
  };

  struct Raw {
    TripleIds t;
    SourceLocation loc;
  };
  std::vector<Raw> raw;
  raw.reserve(pending_.size());
  for (const Pending& p : pending_) {
    raw.push_back(Raw{TripleIds{intern(p.s), intern(p.p), intern(p.o)}, p.loc});
  }
  pending_.clear();

  std::vector<std::string> texts(terms.size());
  for (std::size_t i = 0; i < terms.size(); ++i) texts[i] = terms[i].ntriples();

  std::vector<TermId> order(terms.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](TermId a, TermId b) { return texts[a] < texts[b]; });
  std::vector<TermId> rank(terms.size());
  for (TermId newId = 0; newId < order.size(); ++newId) rank[order[newId]] = newId;

  g.terms_.resize(terms.size());
  g.termTexts_.resize(terms.size());
  for (TermId old = 0; old < terms.size(); ++old) {
    g.terms_[rank[old]] = std::move(terms[old]);
    g.termTexts_[rank[old]] = std::move(texts[old]);
  }
  for (TermId id = 0; id < g.terms_.size(); ++id) g.termIds_[g.terms_[id]] = id;

  for (Raw& r : raw) {
    r.t = TripleIds{rank[r.t.s], rank[r.t.p], rank[r.t.o]};
  }
  std::stable_sort(raw.begin(), raw.end(), [](const Raw& a, const Raw& b) {
    if (a.t.s != b.t.s) return a.t.s < b.t.s;
    if (a.t.p != b.t.p) return a.t.p < b.t.p;
    return a.t.o < b.t.o;
  });
  // Set semantics: duplicates collapse, first-seen location wins.
  for (const Raw& r : raw) {
    if (!g.triples_.empty() && g.triples_.back() == r.t) continue;
    g.triples_.push_back(r.t);
    g.locations_.push_back(r.loc);
  }

  for (std::size_t i = 0; i < g.triples_.size(); ++i) {
    const TripleIds& t = g.triples_[i];
    g.bySubject_[t.s].push_back(i);
    g.byObject_[t.o].push_back(i);
    g.byPredicateObject_[poKey(t.p, t.o)].push_back(i);
  }
  return g;
}

std::vector<TermId> read_list_ids(const Graph& g, TermId head) {
  auto first = g.find(Term::iri(iri::rdfFirst));
  auto rest = g.find(Term::iri(iri::rdfRest));
  auto nil = g.find(Term::iri(iri::rdfNil));

  std::vector<TermId> out;
  std::set<TermId> visited;
  TermId node = head;
  while (true) {
    if (nil && node == *nil) return out;
    if (g.term(node).isIri() && g.term(node).value() == iri::rdfNil) return out;
    if (!visited.insert(node).second) {
      throw ListError("collection node " + g.display(node) + " occurs in a cycle",
                      g.term(node));
    }
    if (!first || !rest) {
      throw ListError("collection node " + g.display(node) + " has no rdf:first",
                      g.term(node));
    }
    auto firsts = g.match(node, *first, std::nullopt);
    auto rests = g.match(node, *rest, std::nullopt);
    if (firsts.empty()) {
      throw ListError("collection node " + g.display(node) + " has no rdf:first",
                      g.term(node));
    }
    if (firsts.size() > 1 || rests.size() > 1) {
      throw ListError("collection node " + g.display(node) + " branches", g.term(node));
    }
    if (rests.empty()) {
      throw ListError("collection node " + g.display(node) + " has no rdf:rest",
                      g.term(node));
    }
    out.push_back(g.triples()[firsts[0]].o);
    node = g.triples()[rests[0]].o;
  }
}

std::vector<Term> read_list(const Graph& g, const Term& head) {
  if (head.isIri() && head.value() == iri::rdfNil) return {};
  auto id = g.find(head);
  if (!id) {
    throw ListError("collection node " + g.display(head) + " has no rdf:first", head);
  }
  std::vector<Term> out;
  for (TermId t : read_list_ids(g, *id)) out.push_back(g.term(t));
  return out;
}

std::string serialize_ntriples(const Graph& g) {
  std::string out;
  for (const TripleIds& t : g.triples()) {
    out += g.termText(t.s);
    out += ' ';
    out += g.termText(t.p);
    out += ' ';
    out += g.termText(t.o);
    out += " .\n";
  }
  return out;
}

}  // namespace gufo
