#include "gufo/vocabulary.hpp"

#include <algorithm>
#include <map>

#include "gufo/iris.hpp"

namespace gufo {

namespace {

std::string g(const char* local) { return ns::gufo + local; }

std::pair<std::string, std::string> unorderedPair(std::string a, std::string b) {
  if (b < a) std::swap(a, b);
  return {std::move(a), std::move(b)};
}

// Closes the vocabulary-internal subclass relation (tiny graph, a plain
// saturation loop is fine). Used for conflict detection during merge.
std::map<std::string, std::set<std::string>> internalAbove(const Vocabulary& v) {
  std::map<std::string, std::set<std::string>> up;
  for (const auto& [sub, super] : v.subclassEdges) up[sub].insert(super);
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto& [sub, supers] : up) {
      std::set<std::string> add;
      for (const std::string& s : supers) {
        auto it = up.find(s);
        if (it == up.end()) continue;
        for (const std::string& ss : it->second) {
          if (!supers.count(ss)) add.insert(ss);
        }
      }
      if (!add.empty()) {
        supers.insert(add.begin(), add.end());
        changed = true;
      }
    }
  }
  return up;
}

Vocabulary makeBuiltin() {
  Vocabulary v;

  // Taxonomy of individuals.
  const char* individualClasses[] = {
      "Individual", "ConcreteIndividual", "AbstractIndividual", "Endurant",
      "Object", "FunctionalComplex", "Collection", "VariableCollection",
      "FixedCollection", "Quantity", "Aspect", "IntrinsicAspect", "Quality",
      "IntrinsicMode", "ExtrinsicAspect", "Relator", "ExtrinsicMode", "Event",
      "Participation", "Situation", "QualityValueAttributionSituation",
      "TemporaryConstitutionSituation", "TemporaryInstantiationSituation",
      "TemporaryParthoodSituation", "TemporaryRelationshipSituation",
      "QualityValue"};
  // Taxonomy of types.
  const char* typeClasses[] = {
      "Type", "AbstractIndividualType", "ConcreteIndividualType", "EndurantType",
      "EventType", "RigidType", "NonRigidType", "AntiRigidType", "SemiRigidType",
      "Sortal", "NonSortal", "Kind", "SubKind", "Phase", "Role", "Category",
      "PhaseMixin", "RoleMixin", "Mixin"};
  for (const char* c : individualClasses) v.classes.insert(g(c));
  for (const char* c : typeClasses) {
    v.classes.insert(g(c));
    v.typeTaxonomy.insert(g(c));
  }

  const char* objectProperties[] = {
      "inheresIn", "mediates", "externallyDependsOn", "isAspectProperPartOf",
      "isObjectProperPartOf", "isComponentOf", "isCollectionMemberOf",
      "isSubCollectionOf", "isSubQuantityOf", "isEventProperPartOf",
      "participatedIn", "wasCreatedIn", "wasTerminatedIn", "manifestedIn",
      "historicallyDependsOn", "standsInQualifiedAttribution",
      "concernsQualityType", "categorizes", "partitions", "hasBeginPoint",
      "hasEndPoint", "hasReifiedQualityValue", "hasValueComponent"};
  const char* dataProperties[] = {
      "hasQualityValue", "concernsQualityValue", "hasBeginPointInXSDDate",
      "hasBeginPointInXSDDateTimeStamp", "hasEndPointInXSDDate",
      "hasEndPointInXSDDateTimeStamp"};
  for (const char* p : objectProperties) v.properties.insert(g(p));
  for (const char* p : dataProperties) {
    v.properties.insert(g(p));
    v.dataProperties.insert(g(p));
  }

  auto sub = [&](const char* child, const char* parent) {
    v.subclassEdges.emplace_back(g(child), g(parent));
  };
  // Individuals side.
  sub("ConcreteIndividual", "Individual");
  sub("AbstractIndividual", "Individual");
  sub("QualityValue", "AbstractIndividual");
  sub("Endurant", "ConcreteIndividual");
  sub("Event", "ConcreteIndividual");
  sub("Situation", "ConcreteIndividual");
  sub("Object", "Endurant");
  sub("Aspect", "Endurant");
  sub("FunctionalComplex", "Object");
  sub("Collection", "Object");
  sub("Quantity", "Object");
  sub("VariableCollection", "Collection");
  sub("FixedCollection", "Collection");
  sub("IntrinsicAspect", "Aspect");
  sub("ExtrinsicAspect", "Aspect");
  sub("Quality", "IntrinsicAspect");
  sub("IntrinsicMode", "IntrinsicAspect");
  sub("Relator", "ExtrinsicAspect");
  sub("ExtrinsicMode", "ExtrinsicAspect");
  sub("Participation", "Event");
  sub("QualityValueAttributionSituation", "Situation");
  sub("TemporaryConstitutionSituation", "Situation");
  sub("TemporaryInstantiationSituation", "Situation");
  sub("TemporaryParthoodSituation", "Situation");
  sub("TemporaryRelationshipSituation", "Situation");
  // Types side.
  sub("AbstractIndividualType", "Type");
  sub("ConcreteIndividualType", "Type");
  sub("EndurantType", "ConcreteIndividualType");
  sub("EventType", "ConcreteIndividualType");
  sub("RigidType", "EndurantType");
  sub("NonRigidType", "EndurantType");
  sub("AntiRigidType", "NonRigidType");
  sub("SemiRigidType", "NonRigidType");
  sub("Sortal", "EndurantType");
  sub("NonSortal", "EndurantType");
  sub("Kind", "Sortal");
  sub("Kind", "RigidType");
  sub("SubKind", "Sortal");
  sub("SubKind", "RigidType");
  sub("Phase", "Sortal");
  sub("Phase", "AntiRigidType");
  sub("Role", "Sortal");
  sub("Role", "AntiRigidType");
  sub("Category", "NonSortal");
  sub("Category", "RigidType");
  sub("PhaseMixin", "NonSortal");
  sub("PhaseMixin", "AntiRigidType");
  sub("RoleMixin", "NonSortal");
  sub("RoleMixin", "AntiRigidType");
  sub("Mixin", "NonSortal");
  sub("Mixin", "SemiRigidType");

  auto subp = [&](const char* child, const char* parent) {
    v.subpropertyEdges.emplace_back(g(child), g(parent));
  };
  subp("isComponentOf", "isObjectProperPartOf");
  subp("isCollectionMemberOf", "isObjectProperPartOf");
  subp("isSubCollectionOf", "isObjectProperPartOf");
  subp("isSubQuantityOf", "isObjectProperPartOf");
  subp("partitions", "categorizes");

  v.rigidGroup = {g("RigidType"), g("Category"), g("Kind"), g("SubKind")};
  v.semiRigidGroup = {g("SemiRigidType"), g("Mixin")};
  v.antiRigidGroup = {g("AntiRigidType"), g("Phase"), g("PhaseMixin"), g("Role"),
                      g("RoleMixin")};
  v.sortalGroup = {g("Sortal"), g("Kind"), g("SubKind"), g("Phase"), g("Role")};
  v.nonSortalGroup = {g("NonSortal"), g("Category"), g("PhaseMixin"),
                      g("RoleMixin"), g("Mixin")};
  v.baseSortalGroup = {g("SubKind"), g("Phase"), g("Role")};

  v.endurantTypeTargets = {
      g("EndurantType"), g("RigidType"), g("NonRigidType"), g("AntiRigidType"),
      g("SemiRigidType"), g("Phase"), g("PhaseMixin"), g("Role"), g("RoleMixin"),
      g("Mixin"), g("NonSortal"), g("Category"), g("Sortal"), g("Kind"),
      g("SubKind")};
  v.endurantDisjointList = {
      g("AbstractIndividual"),
      g("QualityValue"),
      iri::timeInstant,
      g("Event"),
      g("Participation"),
      g("Situation"),
      g("QualityValueAttributionSituation"),
      g("TemporaryConstitutionSituation"),
      g("TemporaryInstantiationSituation"),
      g("TemporaryParthoodSituation"),
      g("TemporaryRelationshipSituation")};

  auto dj = [&](const std::string& a, const std::string& b) {
    v.disjointPairs.push_back(unorderedPair(a, b));
  };
  dj(g("Individual"), g("Type"));
  dj(g("ConcreteIndividual"), g("AbstractIndividual"));
  for (const std::string& x : v.endurantDisjointList) dj(g("Endurant"), x);
  dj(g("Event"), g("Situation"));
  dj(g("Object"), g("Aspect"));
  dj(g("IntrinsicAspect"), g("ExtrinsicAspect"));
  std::sort(v.disjointPairs.begin(), v.disjointPairs.end());
  v.disjointPairs.erase(std::unique(v.disjointPairs.begin(), v.disjointPairs.end()),
                        v.disjointPairs.end());

  auto dr = [&](const char* prop, std::string domain, std::string range) {
    v.domainRange[g(prop)] = PropertySignature{std::move(domain), std::move(range)};
  };
  dr("inheresIn", g("Aspect"), g("ConcreteIndividual"));
  dr("mediates", g("Relator"), g("ConcreteIndividual"));
  dr("externallyDependsOn", g("ExtrinsicAspect"), g("ConcreteIndividual"));
  dr("isAspectProperPartOf", g("Aspect"), g("Aspect"));
  dr("isObjectProperPartOf", g("Object"), g("Object"));
  dr("isComponentOf", g("Object"), g("FunctionalComplex"));
  dr("isCollectionMemberOf", g("Object"), g("Collection"));
  dr("isSubCollectionOf", g("Collection"), g("Collection"));
  dr("isSubQuantityOf", g("Quantity"), g("Quantity"));
  dr("isEventProperPartOf", g("Event"), g("Event"));
  dr("participatedIn", g("Object"), g("Event"));
  dr("wasCreatedIn", g("Endurant"), g("Event"));
  dr("wasTerminatedIn", g("Endurant"), g("Event"));
  dr("manifestedIn", g("Aspect"), g("Event"));
  dr("standsInQualifiedAttribution", g("Endurant"),
     g("QualityValueAttributionSituation"));
  dr("concernsQualityType", g("QualityValueAttributionSituation"), g("Type"));
  dr("categorizes", g("Type"), g("Type"));
  dr("partitions", g("Type"), g("Type"));
  dr("hasBeginPoint", g("ConcreteIndividual"), iri::timeInstant);
  dr("hasEndPoint", g("ConcreteIndividual"), iri::timeInstant);
  dr("hasReifiedQualityValue", g("Quality"), g("QualityValue"));
  dr("hasValueComponent", g("QualityValue"), "");
  dr("hasQualityValue", g("Quality"), "");
  dr("concernsQualityValue", g("QualityValueAttributionSituation"), "");
  dr("hasBeginPointInXSDDate", g("ConcreteIndividual"), "");
  dr("hasBeginPointInXSDDateTimeStamp", g("ConcreteIndividual"), "");
  dr("hasEndPointInXSDDate", g("ConcreteIndividual"), "");
  dr("hasEndPointInXSDDateTimeStamp", g("ConcreteIndividual"), "");

  return v;
}

}  // namespace

bool Vocabulary::inGufoNamespace(const std::string& iri) {
  return iri.rfind(ns::gufo, 0) == 0;
}

const Vocabulary& builtin_vocabulary() {
  static const Vocabulary v = makeBuiltin();
  return v;
}

MergeOutcome merge_external(const Vocabulary& v, const Graph& graph) {
  MergeOutcome out;
  out.vocabulary = v;
  Vocabulary& m = out.vocabulary;

  auto above = internalAbove(v);
  auto reaches = [&](const std::string& from, const std::string& to) {
    if (from == to) return true;
    auto it = above.find(from);
    return it != above.end() && it->second.count(to) > 0;
  };
  auto disjointBuiltin = [&](const std::string& a, const std::string& b) {
    for (const auto& [p, q] : v.disjointPairs) {
      if ((reaches(a, p) && reaches(b, q)) || (reaches(a, q) && reaches(b, p))) {
        return true;
      }
    }
    return false;
  };

  std::set<std::string> declaredClasses, declaredObjProps, declaredDataProps;
  auto haveSubclassEdge = [&](const std::string& a, const std::string& b) {
    return std::find(m.subclassEdges.begin(), m.subclassEdges.end(),
                     std::make_pair(a, b)) != m.subclassEdges.end();
  };
  auto haveSubpropEdge = [&](const std::string& a, const std::string& b) {
    return std::find(m.subpropertyEdges.begin(), m.subpropertyEdges.end(),
                     std::make_pair(a, b)) != m.subpropertyEdges.end();
  };

  for (const TripleIds& t : graph.triples()) {
    const Term& s = graph.term(t.s);
    const Term& p = graph.term(t.p);
    const Term& o = graph.term(t.o);
    if (!s.isIri() || !Vocabulary::inGufoNamespace(s.value())) continue;
    const std::string& prop = p.value();

    if (prop == iri::rdfType && o.isIri()) {
      if (o.value() == iri::owlClass) {
        declaredClasses.insert(s.value());
        m.classes.insert(s.value());
      } else if (o.value() == iri::owlObjectProperty) {
        declaredObjProps.insert(s.value());
        m.properties.insert(s.value());
      } else if (o.value() == iri::owlDatatypeProperty) {
        declaredDataProps.insert(s.value());
        m.properties.insert(s.value());
        m.dataProperties.insert(s.value());
      }
      continue;
    }
    if (prop == iri::rdfsSubClassOf && o.isIri()) {
      m.classes.insert(s.value());
      if (Vocabulary::inGufoNamespace(o.value())) m.classes.insert(o.value());
      if (disjointBuiltin(s.value(), o.value())) {
        out.conflicts.push_back({s.value(), prop, o.value(),
                                 "subclass edge contradicts a built-in disjointness"});
        continue;
      }
      if (!haveSubclassEdge(s.value(), o.value())) {
        m.subclassEdges.emplace_back(s.value(), o.value());
      }
      continue;
    }
    if (prop == iri::rdfsSubPropertyOf && o.isIri()) {
      m.properties.insert(s.value());
      if (Vocabulary::inGufoNamespace(o.value())) m.properties.insert(o.value());
      if (!haveSubpropEdge(s.value(), o.value())) {
        m.subpropertyEdges.emplace_back(s.value(), o.value());
      }
      continue;
    }
    if (prop == iri::owlDisjointWith && o.isIri()) {
      m.classes.insert(s.value());
      if (Vocabulary::inGufoNamespace(o.value())) m.classes.insert(o.value());
      // A disjointness that contradicts a built-in subclass path is the
      // conflict case; built-ins win.
      if (reaches(s.value(), o.value()) || reaches(o.value(), s.value())) {
        out.conflicts.push_back({s.value(), prop, o.value(),
                                 "disjointness contradicts a built-in subclass path"});
        continue;
      }
      auto pair = unorderedPair(s.value(), o.value());
      if (std::find(m.disjointPairs.begin(), m.disjointPairs.end(), pair) ==
          m.disjointPairs.end()) {
        m.disjointPairs.push_back(pair);
      }
      continue;
    }
    if ((prop == iri::rdfsDomain || prop == iri::rdfsRange) && o.isIri()) {
      m.properties.insert(s.value());
      PropertySignature& sig = m.domainRange[s.value()];
      std::string& slot = prop == iri::rdfsDomain ? sig.domain : sig.range;
      if (slot.empty()) slot = o.value();  // built-in facts are never replaced
      continue;
    }
  }

  std::sort(m.disjointPairs.begin(), m.disjointPairs.end());
  out.declaredClasses = declaredClasses.size();
  out.declaredObjectProperties = declaredObjProps.size();
  out.declaredDataProperties = declaredDataProps.size();
  return out;
}

}  // namespace gufo
