#include "gufo/term.hpp"

#include <cctype>
#include <functional>

#include "gufo/iris.hpp"

namespace gufo {

Term Term::iri(std::string value) {
  Term t;
  t.kind_ = TermKind::Iri;
  t.value_ = std::move(value);
  return t;
}

Term Term::blank(std::string label) {
  Term t;
  t.kind_ = TermKind::Blank;
  t.value_ = std::move(label);
  return t;
}

Term Term::literal(std::string lexical, std::string datatype, std::string language) {
  Term t;
  t.kind_ = TermKind::Literal;
  t.value_ = std::move(lexical);
  if (!language.empty()) {
    t.language_ = std::move(language);
    t.datatype_ = iri::rdfLangString;
  } else if (!datatype.empty()) {
    t.datatype_ = std::move(datatype);
  } else {
    t.datatype_ = iri::xsdString;
  }
  return t;
}

void append_ntriples_escaped(std::string& out, std::string_view s) {
  static const char* hex = "0123456789ABCDEF";
  for (unsigned char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (c < 0x20) {
          out += "\\u00";
          out += hex[(c >> 4) & 0xF];
          out += hex[c & 0xF];
        } else {
          out += static_cast<char>(c);
        }
    }
  }
}

std::string Term::ntriples() const {
  std::string out;
  switch (kind_) {
    case TermKind::Iri:
      out.reserve(value_.size() + 2);
      out += '<';
      out += value_;
      out += '>';
      break;
    case TermKind::Blank:
      out += "_:";
      out += value_;
      break;
    case TermKind::Literal:
      out += '"';
      append_ntriples_escaped(out, value_);
      out += '"';
      if (!language_.empty()) {
        out += '@';
        out += language_;
      } else if (datatype_ != iri::xsdString) {
        out += "^^<";
        out += datatype_;
        out += '>';
      }
      break;
  }
  return out;
}

bool operator<(const Term& a, const Term& b) {
  return a.ntriples() < b.ntriples();
}

std::string display_term(
    const Term& t, const std::vector<std::pair<std::string, std::string>>& prefixes) {
  if (!t.isIri()) return t.ntriples();
  const std::string& iri = t.value();
  // Longest matching prefix expansion wins; the remainder must look like
  // a plain local name so the output stays unambiguous.
  const std::string* bestPrefix = nullptr;
  std::size_t bestLen = 0;
  for (const auto& [prefix, expansion] : prefixes) {
    if (expansion.empty() || expansion.size() > iri.size()) continue;
    if (iri.compare(0, expansion.size(), expansion) != 0) continue;
    std::string_view local(iri.data() + expansion.size(), iri.size() - expansion.size());
    bool ok = true;
    for (char c : local) {
      unsigned char uc = static_cast<unsigned char>(c);
      if (!(std::isalnum(uc) || c == '_' || c == '-' || uc >= 0x80)) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    if (expansion.size() > bestLen ||
        (expansion.size() == bestLen && bestPrefix && prefix < *bestPrefix)) {
      bestLen = expansion.size();
      bestPrefix = &prefix;
    }
  }
  if (bestPrefix) return *bestPrefix + ":" + iri.substr(bestLen);
  return t.ntriples();
}

std::size_t TermHash::operator()(const Term& t) const {
  std::size_t h = std::hash<std::string>{}(t.value());
  h ^= std::hash<std::string>{}(t.datatype()) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  h ^= std::hash<std::string>{}(t.language()) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  h ^= static_cast<std::size_t>(t.kind()) * 0x9e3779b97f4a7c15ULL;
  return h;
}

}  // namespace gufo
