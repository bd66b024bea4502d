#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gufo {

enum class TermKind : std::uint8_t { Iri, Blank, Literal };

/// An RDF term. Literals carry a lexical form plus a datatype IRI and,
/// for rdf:langString, a BCP-47 language tag. Equality is structural.
class Term {
 public:
  Term() = default;

  static Term iri(std::string value);
  static Term blank(std::string label);
  // A literal with a language tag gets rdf:langString; one without an
  // explicit datatype gets xsd:string.
  static Term literal(std::string lexical, std::string datatype = "",
                      std::string language = "");

  TermKind kind() const { return kind_; }
  bool isIri() const { return kind_ == TermKind::Iri; }
  bool isBlank() const { return kind_ == TermKind::Blank; }
  bool isLiteral() const { return kind_ == TermKind::Literal; }

  // IRI string, blank label, or literal lexical form.
  const std::string& value() const { return value_; }
  const std::string& datatype() const { return datatype_; }
  const std::string& language() const { return language_; }

  bool operator==(const Term&) const = default;

  /// Canonical N-Triples serialization; also the sort key for the
  /// deterministic orders used throughout.
  std::string ntriples() const;

 private:
  TermKind kind_ = TermKind::Iri;
  std::string value_;
  std::string datatype_;
  std::string language_;
};

bool operator<(const Term& a, const Term& b);

struct TermHash {
  std::size_t operator()(const Term& t) const;
};

// Escapes per the N-Triples grammar (quotes, backslashes, control chars).
void append_ntriples_escaped(std::string& out, std::string_view s);

/// Prefixed rendering for messages and human output ("gufo:Kind",
/// ":Person"); falls back to the N-Triples form.
std::string display_term(
    const Term& t, const std::vector<std::pair<std::string, std::string>>& prefixes);

}  // namespace gufo
