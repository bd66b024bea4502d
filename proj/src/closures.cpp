#include "gufo/closures.hpp"

#include <algorithm>
#include <set>

#include "gufo/iris.hpp"

namespace gufo {

namespace {

using Id = ClosureSet::Id;

struct Reachability {
  std::vector<std::vector<Id>> above;   // strict, except through cycles
  std::vector<std::vector<Id>> cycles;  // one sorted member list per cycle
};

// Tarjan SCC + reverse-topological accumulation. Members of a nontrivial
// SCC (or a self-loop) become mutually reachable, themselves included.
Reachability computeReachability(std::size_t count,
                                 const std::vector<std::pair<Id, Id>>& edges) {
  Reachability r;
  r.above.assign(count, {});

  std::vector<std::vector<Id>> adj(count);
  std::vector<bool> selfLoop(count, false);
  std::vector<Id> nodes;
  for (const auto& [a, b] : edges) {
    if (a == b) {
      selfLoop[a] = true;
      nodes.push_back(a);
      continue;
    }
    adj[a].push_back(b);
    nodes.push_back(a);
    nodes.push_back(b);
  }
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
  for (Id n : nodes) {
    auto& v = adj[n];
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  }

  constexpr Id kUnvisited = static_cast<Id>(-1);
  std::vector<Id> index(count, kUnvisited), low(count, 0), comp(count, kUnvisited);
  std::vector<bool> onStack(count, false);
  std::vector<Id> stack;
  std::vector<std::vector<Id>> compMembers;
  std::vector<std::set<Id>> compReach;  // accumulated as components finalize
  Id nextIndex = 0;

  struct Frame {
    Id node;
    std::size_t edge = 0;
  };
  std::vector<Frame> frames;

  for (Id start : nodes) {
    if (index[start] != kUnvisited) continue;
    frames.push_back({start});
    index[start] = low[start] = nextIndex++;
    stack.push_back(start);
    onStack[start] = true;
    while (!frames.empty()) {
      Frame& f = frames.back();
      if (f.edge < adj[f.node].size()) {
        Id next = adj[f.node][f.edge++];
        if (index[next] == kUnvisited) {
          index[next] = low[next] = nextIndex++;
          stack.push_back(next);
          onStack[next] = true;
          frames.push_back({next});
        } else if (onStack[next]) {
          low[f.node] = std::min(low[f.node], index[next]);
        }
        continue;
      }
      // Node finished.
      Id n = f.node;
      frames.pop_back();
      if (!frames.empty()) {
        low[frames.back().node] = std::min(low[frames.back().node], low[n]);
      }
      if (low[n] != index[n]) continue;
      // n roots a component; all its successors' components are final.
      Id c = static_cast<Id>(compMembers.size());
      compMembers.emplace_back();
      compReach.emplace_back();
      while (true) {
        Id m = stack.back();
        stack.pop_back();
        onStack[m] = false;
        comp[m] = c;
        compMembers[c].push_back(m);
        if (m == n) break;
      }
      std::set<Id>& reach = compReach[c];
      for (Id m : compMembers[c]) {
        for (Id next : adj[m]) {
          if (comp[next] == c) continue;
          Id d = comp[next];
          reach.insert(compMembers[d].begin(), compMembers[d].end());
          reach.insert(compReach[d].begin(), compReach[d].end());
        }
      }
      bool cyclic = compMembers[c].size() > 1;
      if (!cyclic && selfLoop[compMembers[c][0]]) cyclic = true;
      if (cyclic) {
        std::vector<Id> members = compMembers[c];
        std::sort(members.begin(), members.end());
        r.cycles.push_back(members);
      }
      for (Id m : compMembers[c]) {
        std::vector<Id> up(reach.begin(), reach.end());
        if (cyclic) {
          up.insert(up.end(), compMembers[c].begin(), compMembers[c].end());
          std::sort(up.begin(), up.end());
          up.erase(std::unique(up.begin(), up.end()), up.end());
        }
        r.above[m] = std::move(up);
      }
    }
  }
  std::sort(r.cycles.begin(), r.cycles.end());
  return r;
}

bool sortedContains(std::span<const Id> v, Id x) {
  return std::binary_search(v.begin(), v.end(), x);
}

}  // namespace

const Term& ClosureSet::term(Id id) const {
  if (id < graphTermCount_) return graph_->term(id);
  return extraTerms_[id - graphTermCount_];
}

std::string ClosureSet::display(Id id) const { return graph_->display(term(id)); }

std::optional<Id> ClosureSet::find(const Term& t) const {
  if (auto id = graph_->find(t)) return *id;
  if (t.isIri()) {
    auto it = extraByIri_.find(t.value());
    if (it != extraByIri_.end()) return it->second;
  }
  return std::nullopt;
}

std::span<const Id> ClosureSet::superClassesOf(Id id) const {
  if (id >= subclassAbove_.size()) return {};
  return subclassAbove_[id];
}

std::span<const Id> ClosureSet::superPropertiesOf(Id id) const {
  if (id >= subpropAbove_.size()) return {};
  return subpropAbove_[id];
}

std::span<const Id> ClosureSet::directSuperClassesOf(Id id) const {
  if (id >= directAbove_.size()) return {};
  return directAbove_[id];
}

std::span<const Id> ClosureSet::typesOf(Id id) const {
  if (id >= types_.size()) return {};
  return types_[id];
}

bool ClosureSet::hasType(Id x, Id cls) const { return sortedContains(typesOf(x), cls); }

std::span<const Id> ClosureSet::instancesOf(Id cls) const {
  auto it = instances_.find(cls);
  if (it == instances_.end()) return {};
  return it->second;
}

const std::vector<std::pair<Id, Id>>& ClosureSet::effective(Id property) const {
  static const std::vector<std::pair<Id, Id>> kEmpty;
  auto it = effective_.find(property);
  return it == effective_.end() ? kEmpty : it->second;
}

ClosureSet compute_closures(const Graph& g, const Vocabulary& v, ClosureOptions options) {
  ClosureSet c;
  c.graph_ = &g;
  c.graphTermCount_ = g.termCount();

  // Extend the id space with every vocabulary IRI the graph never mentions.
  std::set<std::string> vocabIris(v.classes.begin(), v.classes.end());
  vocabIris.insert(v.properties.begin(), v.properties.end());
  for (const auto& [a, b] : v.disjointPairs) {
    vocabIris.insert(a);
    vocabIris.insert(b);
  }
  for (const std::string& x : v.endurantDisjointList) vocabIris.insert(x);
  for (const auto& [p, sig] : v.domainRange) {
    vocabIris.insert(p);
    if (!sig.domain.empty()) vocabIris.insert(sig.domain);
    if (!sig.range.empty()) vocabIris.insert(sig.range);
  }
  for (const std::string& s : vocabIris) {
    Term t = Term::iri(s);
    if (!g.find(t)) {
      Id id = static_cast<Id>(c.graphTermCount_ + c.extraTerms_.size());
      c.extraByIri_[s] = id;
      c.extraTerms_.push_back(std::move(t));
    }
  }
  const std::size_t count = c.idCount();

  auto idOf = [&](const std::string& iriStr) -> Id {
    return *c.find(Term::iri(iriStr));
  };

  // Subclass edges: graph assertions plus vocabulary-internal edges.
  std::vector<std::pair<Id, Id>> subclassEdges;
  if (auto sc = g.find(Term::iri(iri::rdfsSubClassOf))) {
    for (std::size_t idx : g.match(std::nullopt, *sc, std::nullopt)) {
      const TripleIds& t = g.triples()[idx];
      if (g.term(t.o).isLiteral()) continue;
      subclassEdges.emplace_back(t.s, t.o);
    }
  }
  for (const auto& [sub, super] : v.subclassEdges) {
    subclassEdges.emplace_back(idOf(sub), idOf(super));
  }
  Reachability sub = computeReachability(count, subclassEdges);
  c.subclassAbove_ = std::move(sub.above);
  c.subclassCycles_ = std::move(sub.cycles);

  c.directAbove_.assign(count, {});
  for (const auto& [a, b] : subclassEdges) {
    if (a != b) c.directAbove_[a].push_back(b);
  }
  for (auto& ds : c.directAbove_) {
    std::sort(ds.begin(), ds.end());
    ds.erase(std::unique(ds.begin(), ds.end()), ds.end());
  }

  // Subproperty edges.
  std::vector<std::pair<Id, Id>> subpropEdges;
  if (auto sp = g.find(Term::iri(iri::rdfsSubPropertyOf))) {
    for (std::size_t idx : g.match(std::nullopt, *sp, std::nullopt)) {
      const TripleIds& t = g.triples()[idx];
      if (g.term(t.o).isLiteral()) continue;
      subpropEdges.emplace_back(t.s, t.o);
    }
  }
  for (const auto& [sub2, super2] : v.subpropertyEdges) {
    subpropEdges.emplace_back(idOf(sub2), idOf(super2));
  }
  Reachability subp = computeReachability(count, subpropEdges);
  c.subpropAbove_ = std::move(subp.above);
  c.subpropertyCycles_ = std::move(subp.cycles);

  // Effective assertions per vocabulary property (subproperty-closed).
  std::set<Id> vocabPropertyIds;
  for (const std::string& p : v.properties) vocabPropertyIds.insert(idOf(p));
  for (const TripleIds& t : g.triples()) {
    auto addTo = [&](Id q) {
      if (vocabPropertyIds.count(q)) c.effective_[q].emplace_back(t.s, t.o);
    };
    addTo(t.p);
    for (Id q : c.subpropAbove_[t.p]) {
      if (q != t.p) addTo(q);
    }
  }

  // rdf:type assertions, optionally extended with domain/range injection,
  // then closed upward through the subclass reachability.
  std::vector<std::pair<Id, Id>> typeAssertions;
  if (auto ty = g.find(Term::iri(iri::rdfType))) {
    for (std::size_t idx : g.match(std::nullopt, *ty, std::nullopt)) {
      const TripleIds& t = g.triples()[idx];
      if (g.term(t.o).isLiteral()) continue;
      typeAssertions.emplace_back(t.s, t.o);
    }
  }
  if (options.inferDomains) {
    for (const auto& [prop, sig] : v.domainRange) {
      Id pid = idOf(prop);
      auto it = c.effective_.find(pid);
      if (it == c.effective_.end()) continue;
      for (const auto& [s, o] : it->second) {
        if (!sig.domain.empty() && !g.term(s).isLiteral()) {
          typeAssertions.emplace_back(s, idOf(sig.domain));
        }
        if (!sig.range.empty() && !g.term(o).isLiteral()) {
          typeAssertions.emplace_back(o, idOf(sig.range));
        }
      }
    }
  }

  c.types_.assign(count, {});
  for (const auto& [x, cls] : typeAssertions) {
    auto& types = c.types_[x];
    types.push_back(cls);
    const auto& up = c.subclassAbove_[cls];
    types.insert(types.end(), up.begin(), up.end());
  }
  for (Id x = 0; x < count; ++x) {
    auto& types = c.types_[x];
    if (types.empty()) continue;
    std::sort(types.begin(), types.end());
    types.erase(std::unique(types.begin(), types.end()), types.end());
    c.typedIds_.push_back(x);
    for (Id cls : types) c.instances_[cls].push_back(x);
  }
  return c;
}

std::vector<Term> instances_of(const ClosureSet& c, const Term& classIri) {
  auto id = c.find(classIri);
  if (!id) return {};
  std::vector<Term> out;
  for (ClosureSet::Id x : c.instancesOf(*id)) out.push_back(c.term(x));
  return out;
}

std::vector<std::pair<Term, Term>> historical_closure(const Graph& g) {
  auto prop = g.find(Term::iri(iri::g::historicallyDependsOn));
  if (!prop) return {};
  std::map<TermId, std::vector<TermId>> adj;
  for (std::size_t idx : g.match(std::nullopt, *prop, std::nullopt)) {
    const TripleIds& t = g.triples()[idx];
    adj[t.s].push_back(t.o);
  }
  std::vector<std::pair<Term, Term>> out;
  for (const auto& entry : adj) {
    TermId start = entry.first;
    // BFS; a path back to the start yields the retained (x, x) pair.
    std::set<TermId> reached;
    std::vector<TermId> frontier{start};
    while (!frontier.empty()) {
      std::vector<TermId> next;
      for (TermId n : frontier) {
        auto it = adj.find(n);
        if (it == adj.end()) continue;
        for (TermId m : it->second) {
          if (reached.insert(m).second) next.push_back(m);
        }
      }
      frontier = std::move(next);
    }
    for (TermId m : reached) out.emplace_back(g.term(start), g.term(m));
  }
  return out;
}

}  // namespace gufo
