#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "gufo/graph.hpp"

namespace gufo {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& file, unsigned line, unsigned column,
             std::string message, std::string token = "");

  const std::string& file() const { return file_; }
  unsigned line() const { return line_; }
  unsigned column() const { return column_; }
  const std::string& token() const { return token_; }

 private:
  std::string file_;
  unsigned line_ = 0;
  unsigned column_ = 0;
  std::string token_;
};

/// Parses one Turtle document into the builder (a fresh blank-node scope
/// is opened for it). Supported grammar: @prefix/@base and PREFIX/BASE,
/// IRIs, prefixed names, blank node labels, 'a', predicate-object and
/// object lists, anonymous blank nodes [ ... ], collections ( ... ),
/// plain/typed/language-tagged literals, numeric and boolean shorthand,
/// comments. Anything else is a syntax error with line/column.
void parse_turtle(Graph::Builder& builder, std::string_view text,
                  const std::string& fileName, const std::string& base = "");

/// Single-document convenience form.
Graph parse_turtle(std::string_view text, const std::string& base = "");

/// RFC 3986 reference resolution (used for @base and relative IRIs).
std::string resolve_iri(const std::string& base, const std::string& reference);

}  // namespace gufo
