#include <map>

#include "check_support.hpp"
#include "gufo/temporal.hpp"

namespace gufo::lints {

namespace {

using detail::Id;
using detail::VocabIds;

std::map<Id, std::vector<Id>> objectsBySubject(const ClosureSet& c, Id property) {
  std::map<Id, std::vector<Id>> out;
  for (const auto& [s, o] : c.effective(property)) out[s].push_back(o);
  for (auto& [s, objects] : out) {
    std::sort(objects.begin(), objects.end());
    objects.erase(std::unique(objects.begin(), objects.end()), objects.end());
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

}  // namespace

std::vector<Violation> l1_inherence_cardinality(const CheckContext& ctx) {
  VocabIds ids(ctx);
  std::vector<Violation> out;
  const ClosureSet& c = ctx.closures;
  for (const auto& [aspect, bearers] : objectsBySubject(c, ids.inheresIn)) {
    if (bearers.size() < 2) continue;
    std::string msg = "Aspect " + c.display(aspect) + " inheres in " +
                      std::to_string(bearers.size()) +
                      " distinct individuals: " + joinDisplays(c, bearers) +
                      "; an aspect inheres in exactly one.";
    out.push_back(
        detail::makeViolation(ctx, "L1", Severity::Error, aspect, bearers, std::move(msg)));
  }
  return out;
}

std::vector<Violation> l2_relator_arity(const CheckContext& ctx) {
  VocabIds ids(ctx);
  std::vector<Violation> out;
  const ClosureSet& c = ctx.closures;
  auto mediated = objectsBySubject(c, ids.mediates);
  for (Id relator : c.instancesOf(ids.relator)) {
    auto it = mediated.find(relator);
    std::size_t count = it == mediated.end() ? 0 : it->second.size();
    if (count >= 2) continue;
    std::string msg = "Relator " + c.display(relator) + " mediates " +
                      std::to_string(count) +
                      " distinct individual(s); a relator depends on at least two.";
    out.push_back(detail::makeViolation(ctx, "L2", Severity::Warning, relator,
                                        it == mediated.end() ? std::vector<Id>{} : it->second,
                                        std::move(msg)));
  }
  return out;
}

namespace {

struct StampSet {
  // (value, literal id) per node, deduplicated on literal id.
  std::vector<std::pair<TemporalValue, Id>> values;
  std::set<Id> seen;
};

void collectStamps(const CheckContext& ctx, Id property, TemporalKind kind,
                   std::map<Id, StampSet>& into, std::vector<Violation>& errors) {
  const ClosureSet& c = ctx.closures;
  for (const auto& [node, lit] : c.effective(property)) {
    const Term& t = c.term(lit);
    if (!t.isLiteral()) continue;
    StampSet& set = into[node];
    if (!set.seen.insert(lit).second) continue;
    std::optional<TemporalValue> v = kind == TemporalKind::Date
                                         ? parse_xsd_date(t.value())
                                         : parse_xsd_date_time_stamp(t.value());
    if (!v) {
      std::string msg = "Temporal literal \"" + t.value() + "\" on " + c.display(node) +
                        " is not a valid " +
                        (kind == TemporalKind::Date ? "xsd:date" : "xsd:dateTimeStamp") +
                        " value.";
      errors.push_back(
          detail::makeViolation(ctx, "L3", Severity::Error, node, {lit}, std::move(msg)));
      continue;
    }
    set.values.emplace_back(*v, lit);
  }
}

// gufo:hasBeginPoint / gufo:hasEndPoint reify the instant; the instant is
// only comparable when it carries an OWL-Time inXSD* literal.
void collectInstantStamps(const CheckContext& ctx, Id property,
                          std::map<Id, StampSet>& into, std::vector<Violation>& errors) {
  const ClosureSet& c = ctx.closures;
  const Graph& g = ctx.graph;
  auto inDate = g.find(Term::iri(iri::timeInXSDDate));
  auto inStamp = g.find(Term::iri(iri::timeInXSDDateTimeStamp));
  for (const auto& [node, instant] : c.effective(property)) {
    if (c.term(instant).isLiteral() || !c.isGraphTerm(instant)) continue;
    auto pull = [&](std::optional<TermId> prop, TemporalKind kind) {
      if (!prop) return;
      for (std::size_t idx : g.match(std::optional<TermId>(instant), *prop, std::nullopt)) {
        Id lit = g.triples()[idx].o;
        const Term& t = g.term(lit);
        if (!t.isLiteral()) continue;
        StampSet& set = into[node];
        if (!set.seen.insert(lit).second) continue;
        std::optional<TemporalValue> v = kind == TemporalKind::Date
                                             ? parse_xsd_date(t.value())
                                             : parse_xsd_date_time_stamp(t.value());
        if (!v) {
          std::string msg = "Temporal literal \"" + t.value() + "\" on " +
                            c.display(instant) + " is not a valid " +
                            (kind == TemporalKind::Date ? "xsd:date" : "xsd:dateTimeStamp") +
                            " value.";
          errors.push_back(detail::makeViolation(ctx, "L3", Severity::Error, node, {lit},
                                                 std::move(msg)));
          continue;
        }
        set.values.emplace_back(*v, lit);
      }
    };
    pull(inDate, TemporalKind::Date);
    pull(inStamp, TemporalKind::DateTimeStamp);
  }
}

}  // namespace

std::vector<Violation> l3_temporal_ordering(const CheckContext& ctx) {
  const ClosureSet& c = ctx.closures;
  std::vector<Violation> out;
  std::map<Id, StampSet> begins, ends;

  auto prop = [&](const std::string& s) { return *detail::findIri(c, s); };
  collectStamps(ctx, prop(iri::g::hasBeginPointInXSDDate), TemporalKind::Date, begins, out);
  collectStamps(ctx, prop(iri::g::hasBeginPointInXSDDateTimeStamp),
                TemporalKind::DateTimeStamp, begins, out);
  collectStamps(ctx, prop(iri::g::hasEndPointInXSDDate), TemporalKind::Date, ends, out);
  collectStamps(ctx, prop(iri::g::hasEndPointInXSDDateTimeStamp),
                TemporalKind::DateTimeStamp, ends, out);
  collectInstantStamps(ctx, prop(iri::g::hasBeginPoint), begins, out);
  collectInstantStamps(ctx, prop(iri::g::hasEndPoint), ends, out);

  for (const auto& [node, beginSet] : begins) {
    auto it = ends.find(node);
    if (it == ends.end()) continue;
    bool mixed = false;
    for (const auto& [bv, bl] : beginSet.values) {
      for (const auto& [ev, el] : it->second.values) {
        if (bv.kind != ev.kind) {
          mixed = true;
          continue;
        }
        if (ev < bv) {
          std::string msg = "Begin point \"" + c.term(bl).value() + "\" of " +
                            c.display(node) + " is after its end point \"" +
                            c.term(el).value() + "\".";
          out.push_back(detail::makeViolation(ctx, "L3", Severity::Error, node, {bl, el},
                                              std::move(msg)));
        }
      }
    }
    if (mixed) {
      std::string msg = "Begin and end points of " + c.display(node) +
                        " use different granularities (xsd:date vs xsd:dateTimeStamp); "
                        "not compared.";
      out.push_back(
          detail::makeViolation(ctx, "L3", Severity::Info, node, {}, std::move(msg)));
    }
  }
  return out;
}

std::vector<Violation> l4_situation_completeness(const CheckContext& ctx) {
  VocabIds ids(ctx);
  std::vector<Violation> out;
  const ClosureSet& c = ctx.closures;
  auto qualityTypes = objectsBySubject(c, ids.concernsQualityType);
  auto qualityValues = objectsBySubject(c, ids.concernsQualityValue);
  auto reifiedValues = objectsBySubject(c, ids.hasReifiedQualityValue);

  for (Id situation : c.instancesOf(ids.qvas)) {
    auto qt = qualityTypes.find(situation);
    if (qt == qualityTypes.end()) {
      std::string msg = "Situation " + c.display(situation) +
                        " has no gufo:concernsQualityType.";
      out.push_back(detail::makeViolation(ctx, "L4", Severity::Warning, situation, {},
                                          std::move(msg)));
    } else {
      for (Id qtype : qt->second) {
        bool isQuality = !c.term(qtype).isLiteral() &&
                         (qtype == ids.quality ||
                          std::binary_search(c.superClassesOf(qtype).begin(),
                                             c.superClassesOf(qtype).end(), ids.quality));
        if (isQuality) continue;
        std::string msg = "gufo:concernsQualityType of " + c.display(situation) +
                          " names " + c.display(qtype) +
                          ", which is not a subclass of gufo:Quality.";
        out.push_back(detail::makeViolation(ctx, "L4", Severity::Error, situation, {qtype},
                                            std::move(msg)));
      }
    }
    if (!qualityValues.count(situation) && !reifiedValues.count(situation)) {
      std::string msg = "Situation " + c.display(situation) +
                        " attributes no value (gufo:concernsQualityValue or "
                        "gufo:hasReifiedQualityValue).";
      out.push_back(detail::makeViolation(ctx, "L4", Severity::Warning, situation, {},
                                          std::move(msg)));
    }
  }
  return out;
}

std::vector<Violation> l5_domain_range_conformance(const CheckContext& ctx) {
  VocabIds ids(ctx);
  std::vector<Violation> out;
  const ClosureSet& c = ctx.closures;

  auto check = [&](Id node, Id expected, const char* side, const std::string& property) {
    if (c.term(node).isLiteral()) return;
    if (c.typesOf(node).empty()) {
      std::string msg = std::string(side) + " of " + property +
                        " is untyped; expected an instance of " + c.display(expected) +
                        ".";
      out.push_back(detail::makeViolation(ctx, "L5", Severity::Info, node, {expected},
                                          std::move(msg)));
      return;
    }
    Id witness = 0;
    if (detail::disjointFromClass(ctx, ids, node, expected, &witness)) {
      std::string msg = std::string(side) + " of " + property + " is an instance of " +
                        c.display(witness) + ", which is disjoint with " +
                        (side[0] == 'S' ? "its domain " : "its range ") +
                        c.display(expected) + ".";
      out.push_back(detail::makeViolation(ctx, "L5", Severity::Error, node,
                                          {witness, expected}, std::move(msg)));
    }
  };

  for (const auto& [propIri, sig] : ctx.vocab.domainRange) {
    auto pid = detail::findIri(c, propIri);
    if (!pid) continue;
    std::vector<std::pair<Id, Id>> pairs = c.effective(*pid);
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
    if (pairs.empty()) continue;
    std::string shown = c.display(*pid);
    std::optional<Id> domain =
        sig.domain.empty() ? std::nullopt : detail::findIri(c, sig.domain);
    std::optional<Id> range =
        sig.range.empty() ? std::nullopt : detail::findIri(c, sig.range);
    for (const auto& [s, o] : pairs) {
      if (domain) check(s, *domain, "Subject", shown);
      if (range) check(o, *range, "Object", shown);
    }
  }
  return out;
}

std::vector<Violation> l6_dependence_cycles(const CheckContext& ctx) {
  std::vector<Violation> out;
  const Graph& g = ctx.graph;
  auto prop = g.find(Term::iri(iri::g::historicallyDependsOn));
  if (!prop) return out;

  std::map<TermId, std::vector<TermId>> adj;
  for (std::size_t idx : g.match(std::nullopt, *prop, std::nullopt)) {
    const TripleIds& t = g.triples()[idx];
    adj[t.s].push_back(t.o);
  }
  for (auto& [s, targets] : adj) {
    std::sort(targets.begin(), targets.end());
    targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
  }

  auto witnessPath = [&](TermId start) -> std::optional<std::vector<TermId>> {
    // Lexicographic DFS back to the start node.
    std::vector<TermId> path{start};
    std::set<TermId> onPath{start};
    struct Frame {
      TermId node;
      std::size_t next = 0;
    };
    std::vector<Frame> frames{{start}};
    while (!frames.empty()) {
      Frame& f = frames.back();
      auto it = adj.find(f.node);
      if (it == adj.end() || f.next >= it->second.size()) {
        frames.pop_back();
        onPath.erase(path.back());
        path.pop_back();
        continue;
      }
      TermId next = it->second[f.next++];
      if (next == start) {
        path.push_back(start);
        return path;
      }
      if (onPath.count(next)) continue;
      path.push_back(next);
      onPath.insert(next);
      frames.push_back({next});
    }
    return std::nullopt;
  };

  for (const auto& entry : adj) {
    TermId start = entry.first;
    auto path = witnessPath(start);
    if (!path) continue;
    std::string rendered;
    for (std::size_t i = 0; i < path->size(); ++i) {
      if (i) rendered += " -> ";
      rendered += g.display((*path)[i]);
    }
    Violation v;
    v.rule = "L6";
    v.severity = Severity::Warning;
    v.focus = g.term(start);
    v.message = "Historical dependence cycle: " + rendered + ".";
    v.location = detail::locate(ctx, start);
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace gufo::lints
