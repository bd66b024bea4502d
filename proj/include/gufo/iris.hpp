#pragma once

#include <string>

// Well-known IRIs. Kept as std::string so call sites can build Terms
// and compose prefixed names without conversions.
namespace gufo::ns {

inline const std::string rdf = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
inline const std::string rdfs = "http://www.w3.org/2000/01/rdf-schema#";
inline const std::string owl = "http://www.w3.org/2002/07/owl#";
inline const std::string xsd = "http://www.w3.org/2001/XMLSchema#";
inline const std::string time = "http://www.w3.org/2006/time#";
inline const std::string gufo = "http://purl.org/nemo/gufo#";

}  // namespace gufo::ns

namespace gufo::iri {

inline const std::string rdfType = ns::rdf + "type";
inline const std::string rdfFirst = ns::rdf + "first";
inline const std::string rdfRest = ns::rdf + "rest";
inline const std::string rdfNil = ns::rdf + "nil";
inline const std::string rdfLangString = ns::rdf + "langString";

inline const std::string rdfsSubClassOf = ns::rdfs + "subClassOf";
inline const std::string rdfsSubPropertyOf = ns::rdfs + "subPropertyOf";
inline const std::string rdfsDomain = ns::rdfs + "domain";
inline const std::string rdfsRange = ns::rdfs + "range";

inline const std::string owlClass = ns::owl + "Class";
inline const std::string owlObjectProperty = ns::owl + "ObjectProperty";
inline const std::string owlDatatypeProperty = ns::owl + "DatatypeProperty";
inline const std::string owlDisjointWith = ns::owl + "disjointWith";
inline const std::string owlAllDisjointClasses = ns::owl + "AllDisjointClasses";
inline const std::string owlMembers = ns::owl + "members";
inline const std::string owlDisjointUnionOf = ns::owl + "disjointUnionOf";
inline const std::string owlEquivalentClass = ns::owl + "equivalentClass";
inline const std::string owlSameAs = ns::owl + "sameAs";
inline const std::string owlImports = ns::owl + "imports";

inline const std::string xsdString = ns::xsd + "string";
inline const std::string xsdBoolean = ns::xsd + "boolean";
inline const std::string xsdInteger = ns::xsd + "integer";
inline const std::string xsdDecimal = ns::xsd + "decimal";
inline const std::string xsdDouble = ns::xsd + "double";
inline const std::string xsdDate = ns::xsd + "date";
inline const std::string xsdDateTimeStamp = ns::xsd + "dateTimeStamp";

inline const std::string timeInstant = ns::time + "Instant";
inline const std::string timeInXSDDate = ns::time + "inXSDDate";
inline const std::string timeInXSDDateTimeStamp = ns::time + "inXSDDateTimeStamp";

}  // namespace gufo::iri

// The gUFO term table proper lives in vocabulary.cpp; only the handful of
// IRIs the engine consults by name are declared here.
namespace gufo::iri::g {

inline const std::string Kind = ns::gufo + "Kind";
inline const std::string Quality = ns::gufo + "Quality";
inline const std::string Relator = ns::gufo + "Relator";
inline const std::string QualityValueAttributionSituation =
    ns::gufo + "QualityValueAttributionSituation";
inline const std::string AbstractIndividualType = ns::gufo + "AbstractIndividualType";
inline const std::string ConcreteIndividualType = ns::gufo + "ConcreteIndividualType";

inline const std::string inheresIn = ns::gufo + "inheresIn";
inline const std::string mediates = ns::gufo + "mediates";
inline const std::string categorizes = ns::gufo + "categorizes";
inline const std::string partitions = ns::gufo + "partitions";
inline const std::string historicallyDependsOn = ns::gufo + "historicallyDependsOn";
inline const std::string concernsQualityType = ns::gufo + "concernsQualityType";
inline const std::string concernsQualityValue = ns::gufo + "concernsQualityValue";
inline const std::string hasReifiedQualityValue = ns::gufo + "hasReifiedQualityValue";
inline const std::string hasBeginPoint = ns::gufo + "hasBeginPoint";
inline const std::string hasEndPoint = ns::gufo + "hasEndPoint";
inline const std::string hasBeginPointInXSDDate = ns::gufo + "hasBeginPointInXSDDate";
inline const std::string hasEndPointInXSDDate = ns::gufo + "hasEndPointInXSDDate";
inline const std::string hasBeginPointInXSDDateTimeStamp =
    ns::gufo + "hasBeginPointInXSDDateTimeStamp";
inline const std::string hasEndPointInXSDDateTimeStamp =
    ns::gufo + "hasEndPointInXSDDateTimeStamp";

}  // namespace gufo::iri::g
