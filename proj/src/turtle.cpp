#include "gufo/turtle.hpp"

#include <cctype>
#include <unordered_map>

#include "gufo/iris.hpp"

namespace gufo {

ParseError::ParseError(const std::string& file, unsigned line, unsigned column,
                       std::string message, std::string token)
    : std::runtime_error(file + ":" + std::to_string(line) + ":" +
                         std::to_string(column) + ": " + message +
                         (token.empty() ? "" : " (at '" + token + "')")),
      file_(file),
      line_(line),
      column_(column),
      token_(std::move(token)) {}

namespace {

bool isNameByte(unsigned char c) {
  return std::isalnum(c) || c == '_' || c >= 0x80;
}

void appendUtf8(std::string& out, std::uint32_t cp) {
  if (cp < 0x80) {
    out += static_cast<char>(cp);
  } else if (cp < 0x800) {
    out += static_cast<char>(0xC0 | (cp >> 6));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else if (cp < 0x10000) {
    out += static_cast<char>(0xE0 | (cp >> 12));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else {
    out += static_cast<char>(0xF0 | (cp >> 18));
    out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  }
}

struct Token {
  enum Kind {
    Eof, Dot, Semicolon, Comma, LBracket, RBracket, LParen, RParen,
    IriRef, Name,        // Name: prefixed name (hasColon) or bare word
    BlankLabel, Anon,    // Anon unused (parser composes [ ])
    String, LangTag, DatatypeMarker,
    Integer, Decimal, Double,
    PrefixKeyword, BaseKeyword, SparqlPrefixKeyword, SparqlBaseKeyword,
  };
  Kind kind = Eof;
  std::string value;   // IRI body, unescaped string, number lexical, prefix part
  std::string local;   // local part of a prefixed name
  bool hasColon = false;
  unsigned line = 1, column = 1;
};

class Lexer {
 public:
  Lexer(std::string_view text, const std::string& file)
      : text_(text), file_(file) {}

  Token next() {
    if (pushed_) {
      pushed_ = false;
      return pending_;
    }
    skipWhitespaceAndComments();
    Token t;
    t.line = line_;
    t.column = column_;
    if (eof()) {
      t.kind = Token::Eof;
      return t;
    }
    char c = peek();
    switch (c) {
      case ';': get(); t.kind = Token::Semicolon; return t;
      case ',': get(); t.kind = Token::Comma; return t;
      case '[': get(); t.kind = Token::LBracket; return t;
      case ']': get(); t.kind = Token::RBracket; return t;
      case '(': get(); t.kind = Token::LParen; return t;
      case ')': get(); t.kind = Token::RParen; return t;
      case '<': return lexIriRef(t);
      case '"': case '\'': return lexString(t);
      case '@': return lexAt(t);
      case '^': return lexCarets(t);
      case '_': return lexBlank(t);
      case '.':
        if (pos_ + 1 < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
          return lexNumber(t);
        }
        get();
        t.kind = Token::Dot;
        return t;
      case '+': case '-':
        return lexNumber(t);
      default:
        if (std::isdigit(static_cast<unsigned char>(c))) return lexNumber(t);
        return lexName(t);
    }
  }

  void unget(Token t) {
    pending_ = std::move(t);
    pushed_ = true;
  }

  [[noreturn]] void fail(const Token& at, const std::string& msg,
                         const std::string& tok = "") const {
    throw ParseError(file_, at.line, at.column, msg, tok);
  }
  [[noreturn]] void failHere(const std::string& msg, const std::string& tok = "") const {
    throw ParseError(file_, line_, column_, msg, tok);
  }

  unsigned line() const { return line_; }

 private:
  bool eof() const { return pos_ >= text_.size(); }
  char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
  }
  char get() {
    char c = text_[pos_++];
    if (c == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    return c;
  }

  void skipWhitespaceAndComments() {
    while (!eof()) {
      char c = peek();
      if (c == '#') {
        while (!eof() && peek() != '\n') get();
      } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        get();
      } else {
        return;
      }
    }
  }

  std::uint32_t lexHex(unsigned len) {
    std::uint32_t v = 0;
    for (unsigned i = 0; i < len; ++i) {
      if (eof()) failHere("unterminated numeric escape");
      char c = get();
      v <<= 4;
      if (c >= '0' && c <= '9') v |= static_cast<std::uint32_t>(c - '0');
      else if (c >= 'a' && c <= 'f') v |= static_cast<std::uint32_t>(c - 'a' + 10);
      else if (c >= 'A' && c <= 'F') v |= static_cast<std::uint32_t>(c - 'A' + 10);
      else failHere("bad hex digit in numeric escape", std::string(1, c));
    }
    return v;
  }

  Token lexIriRef(Token t) {
    get();  // <
    std::string out;
    while (true) {
      if (eof()) fail(t, "unterminated IRI");
      char c = get();
      if (c == '>') break;
      if (c == '\\') {
        if (eof()) fail(t, "unterminated IRI");
        char e = get();
        if (e == 'u') appendUtf8(out, lexHex(4));
        else if (e == 'U') appendUtf8(out, lexHex(8));
        else failHere("bad escape in IRI", std::string(1, e));
        continue;
      }
      if (static_cast<unsigned char>(c) <= 0x20 || c == '<' || c == '"' || c == '{' ||
          c == '}' || c == '|' || c == '^' || c == '`') {
        fail(t, "invalid character in IRI", std::string(1, c));
      }
      out += c;
    }
    t.kind = Token::IriRef;
    t.value = std::move(out);
    return t;
  }

  void lexEscapeInto(std::string& out) {
    char e = get();
    switch (e) {
      case 't': out += '\t'; break;
      case 'b': out += '\b'; break;
      case 'n': out += '\n'; break;
      case 'r': out += '\r'; break;
      case 'f': out += '\f'; break;
      case '"': out += '"'; break;
      case '\'': out += '\''; break;
      case '\\': out += '\\'; break;
      case 'u': appendUtf8(out, lexHex(4)); break;
      case 'U': appendUtf8(out, lexHex(8)); break;
      default: failHere("bad string escape", std::string(1, e));
    }
  }

  Token lexString(Token t) {
    char quote = get();
    bool longForm = false;
    if (peek() == quote && peek(1) == quote) {
      get();
      get();
      longForm = true;
    } else if (peek() == quote) {
      // Empty short string.
      get();
      t.kind = Token::String;
      return t;
    }
    std::string out;
    while (true) {
      if (eof()) fail(t, "unterminated string literal");
      char c = get();
      if (c == '\\') {
        if (eof()) fail(t, "unterminated string literal");
        lexEscapeInto(out);
        continue;
      }
      if (!longForm) {
        if (c == quote) break;
        if (c == '\n' || c == '\r') fail(t, "unterminated string literal");
        out += c;
      } else {
        if (c == quote && peek() == quote && peek(1) == quote) {
          get();
          get();
          break;
        }
        out += c;
      }
    }
    t.kind = Token::String;
    t.value = std::move(out);
    return t;
  }

  Token lexAt(Token t) {
    get();  // @
    std::string word;
    while (!eof() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '-')) {
      word += get();
    }
    if (word == "prefix") {
      t.kind = Token::PrefixKeyword;
      return t;
    }
    if (word == "base") {
      t.kind = Token::BaseKeyword;
      return t;
    }
    // Language tag: [a-zA-Z]+ ('-' [a-zA-Z0-9]+)*
    std::size_t i = 0;
    for (; i < word.size() && std::isalpha(static_cast<unsigned char>(word[i])); ++i) {}
    if (i == 0) fail(t, "malformed language tag", word);
    while (i < word.size()) {
      if (word[i] != '-') fail(t, "malformed language tag", word);
      ++i;
      std::size_t start = i;
      while (i < word.size() && std::isalnum(static_cast<unsigned char>(word[i]))) ++i;
      if (i == start) fail(t, "malformed language tag", word);
    }
    t.kind = Token::LangTag;
    t.value = std::move(word);
    return t;
  }

  Token lexCarets(Token t) {
    get();
    if (peek() != '^') fail(t, "expected '^^'");
    get();
    t.kind = Token::DatatypeMarker;
    return t;
  }

  Token lexBlank(Token t) {
    if (peek(1) != ':') return lexName(t);  // a name starting with '_'
    get();  // _
    get();  // :
    std::string label = lexLocalPart();
    if (label.empty()) fail(t, "expected blank node label after '_:'");
    t.kind = Token::BlankLabel;
    t.value = std::move(label);
    return t;
  }

  Token lexNumber(Token t) {
    std::string out;
    bool isDecimal = false, isDouble = false;
    if (peek() == '+' || peek() == '-') out += get();
    bool digits = false;
    while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) {
      out += get();
      digits = true;
    }
    if (peek() == '.' && std::isdigit(static_cast<unsigned char>(peek(1)))) {
      out += get();
      isDecimal = true;
      while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) {
        out += get();
        digits = true;
      }
    }
    if (!digits) fail(t, "malformed numeric literal", out);
    if (peek() == 'e' || peek() == 'E') {
      out += get();
      isDouble = true;
      if (peek() == '+' || peek() == '-') out += get();
      bool expDigits = false;
      while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) {
        out += get();
        expDigits = true;
      }
      if (!expDigits) fail(t, "malformed double literal", out);
    }
    t.kind = isDouble ? Token::Double : (isDecimal ? Token::Decimal : Token::Integer);
    t.value = std::move(out);
    return t;
  }

  // PN_LOCAL-ish: letters, digits, '_', '-', '%XX', backslash escapes and
  // non-final dots. Stops before a '.' that does not continue the name.
  std::string lexLocalPart() {
    std::string out;
    while (!eof()) {
      char c = peek();
      if (isNameByte(static_cast<unsigned char>(c)) || c == '-') {
        out += get();
      } else if (c == '%') {
        get();
        std::string pct = "%";
        for (int i = 0; i < 2; ++i) {
          if (eof() || !std::isxdigit(static_cast<unsigned char>(peek()))) {
            failHere("malformed %-escape in name");
          }
          pct += get();
        }
        out += pct;
      } else if (c == '\\') {
        get();
        if (eof()) failHere("unterminated name escape");
        out += get();
      } else if (c == ':') {
        out += get();
      } else if (c == '.') {
        char n = peek(1);
        if (isNameByte(static_cast<unsigned char>(n)) || n == '-' || n == ':' ||
            n == '%' || n == '\\') {
          out += get();
        } else {
          break;
        }
      } else {
        break;
      }
    }
    return out;
  }

  Token lexName(Token t) {
    std::string prefix;
    char c = peek();
    if (!(isNameByte(static_cast<unsigned char>(c)) || c == ':')) {
      fail(t, "unexpected character", std::string(1, c));
    }
    while (!eof()) {
      char p = peek();
      if (isNameByte(static_cast<unsigned char>(p)) || p == '-') {
        prefix += get();
      } else if (p == '.') {
        char n = peek(1);
        if (isNameByte(static_cast<unsigned char>(n)) || n == '-' || n == '.') {
          prefix += get();
        } else {
          break;
        }
      } else {
        break;
      }
    }
    if (peek() == ':') {
      get();
      t.kind = Token::Name;
      t.hasColon = true;
      t.value = std::move(prefix);
      t.local = lexLocalPart();
      return t;
    }
    if (prefix.empty()) fail(t, "unexpected ':'");
    // Bare word: 'a', booleans, SPARQL-style directives.
    t.kind = Token::Name;
    t.hasColon = false;
    t.value = std::move(prefix);
    std::string upper = t.value;
    for (char& ch : upper) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
    if (upper == "PREFIX") t.kind = Token::SparqlPrefixKeyword;
    else if (upper == "BASE") t.kind = Token::SparqlBaseKeyword;
    return t;
  }

  std::string_view text_;
  std::string file_;
  std::size_t pos_ = 0;
  unsigned line_ = 1;
  unsigned column_ = 1;
  Token pending_;
  bool pushed_ = false;
};

class Parser {
 public:
  Parser(Graph::Builder& builder, std::string_view text, const std::string& file,
         std::string base)
      : builder_(builder), lexer_(text, file), file_(file), base_(std::move(base)) {
    fileIndex_ = builder_.addFile(file);
    builder_.beginBlankScope();
  }

  void run() {
    while (true) {
      Token t = lexer_.next();
      if (t.kind == Token::Eof) return;
      if (t.kind == Token::PrefixKeyword) {
        parsePrefix(/*requireDot=*/true);
      } else if (t.kind == Token::BaseKeyword) {
        parseBase(/*requireDot=*/true);
      } else if (t.kind == Token::SparqlPrefixKeyword) {
        parsePrefix(/*requireDot=*/false);
      } else if (t.kind == Token::SparqlBaseKeyword) {
        parseBase(/*requireDot=*/false);
      } else {
        lexer_.unget(t);
        parseTriples();
        expect(Token::Dot, "expected '.' after statement");
      }
    }
  }

 private:
  Token expect(Token::Kind kind, const std::string& msg) {
    Token t = lexer_.next();
    if (t.kind != kind) lexer_.fail(t, msg, describe(t));
    return t;
  }

  static std::string describe(const Token& t) {
    switch (t.kind) {
      case Token::Eof: return "<eof>";
      case Token::Dot: return ".";
      case Token::Semicolon: return ";";
      case Token::Comma: return ",";
      case Token::LBracket: return "[";
      case Token::RBracket: return "]";
      case Token::LParen: return "(";
      case Token::RParen: return ")";
      case Token::IriRef: return "<" + t.value + ">";
      case Token::Name: return t.hasColon ? t.value + ":" + t.local : t.value;
      case Token::BlankLabel: return "_:" + t.value;
      case Token::String: return "\"" + t.value + "\"";
      case Token::LangTag: return "@" + t.value;
      case Token::DatatypeMarker: return "^^";
      case Token::Integer: case Token::Decimal: case Token::Double: return t.value;
      case Token::PrefixKeyword: return "@prefix";
      case Token::BaseKeyword: return "@base";
      case Token::SparqlPrefixKeyword: return "PREFIX";
      case Token::SparqlBaseKeyword: return "BASE";
      default: return "?";
    }
  }

  void parsePrefix(bool requireDot) {
    Token name = lexer_.next();
    if (name.kind != Token::Name || !name.hasColon || !name.local.empty()) {
      lexer_.fail(name, "expected prefix name ending in ':'", describe(name));
    }
    Token iriTok = expect(Token::IriRef, "expected IRI in prefix directive");
    std::string expansion = resolveAgainstBase(iriTok);
    prefixes_[name.value] = expansion;
    builder_.setPrefix(name.value, expansion);
    if (requireDot) expect(Token::Dot, "expected '.' after @prefix directive");
  }

  void parseBase(bool requireDot) {
    Token iriTok = expect(Token::IriRef, "expected IRI in base directive");
    base_ = resolveAgainstBase(iriTok);
    if (requireDot) expect(Token::Dot, "expected '.' after @base directive");
  }

  std::string resolveAgainstBase(const Token& iriTok) {
    std::string resolved = resolve_iri(base_, iriTok.value);
    if (resolved.find(':') == std::string::npos) {
      lexer_.fail(iriTok, "relative IRI with no base in effect", iriTok.value);
    }
    return resolved;
  }

  Term iriFromToken(const Token& t) {
    if (t.kind == Token::IriRef) return Term::iri(resolveAgainstBase(t));
    // Prefixed name.
    auto it = prefixes_.find(t.value);
    if (it == prefixes_.end()) {
      lexer_.fail(t, "undefined prefix '" + t.value + ":'", describe(t));
    }
    return Term::iri(it->second + t.local);
  }

  void emit(const Term& s, const Term& p, const Term& o, unsigned line) {
    builder_.add(s, p, o, SourceLocation{fileIndex_, line});
  }

  void parseTriples() {
    Token t = lexer_.next();
    if (t.kind == Token::LBracket) {
      Term subject = parseBlankNodePropertyList(t);
      // The property list may itself be the whole statement.
      Token next = lexer_.next();
      lexer_.unget(next);
      if (next.kind != Token::Dot) parsePredicateObjectList(subject);
      return;
    }
    lexer_.unget(t);
    Term subject = parseSubject();
    parsePredicateObjectList(subject);
  }

  Term parseSubject() {
    Token t = lexer_.next();
    switch (t.kind) {
      case Token::IriRef: return iriFromToken(t);
      case Token::Name:
        if (t.hasColon) return iriFromToken(t);
        lexer_.fail(t, "unexpected bare word as subject", describe(t));
      case Token::BlankLabel: return builder_.labeledBlank(t.value);
      case Token::LParen: return parseCollection(t);
      case Token::String: case Token::Integer: case Token::Decimal: case Token::Double:
        lexer_.fail(t, "literal cannot be used as subject", describe(t));
      default:
        lexer_.fail(t, "expected subject", describe(t));
    }
  }

  Term parseVerb() {
    Token t = lexer_.next();
    if (t.kind == Token::Name && !t.hasColon && t.value == "a") {
      return Term::iri(iri::rdfType);
    }
    if (t.kind == Token::IriRef || (t.kind == Token::Name && t.hasColon)) {
      return iriFromToken(t);
    }
    if (t.kind == Token::BlankLabel) {
      lexer_.fail(t, "blank node cannot be used as predicate", describe(t));
    }
    lexer_.fail(t, "expected predicate", describe(t));
  }

  void parsePredicateObjectList(const Term& subject) {
    while (true) {
      Term verb = parseVerb();
      parseObjectList(subject, verb);
      Token t = lexer_.next();
      if (t.kind != Token::Semicolon) {
        lexer_.unget(t);
        return;
      }
      // Turtle allows dangling and repeated semicolons before '.' / ']'.
      while (true) {
        Token n = lexer_.next();
        if (n.kind == Token::Semicolon) continue;
        lexer_.unget(n);
        if (n.kind == Token::Dot || n.kind == Token::RBracket || n.kind == Token::Eof) {
          return;
        }
        break;
      }
    }
  }

  void parseObjectList(const Term& subject, const Term& verb) {
    while (true) {
      Term object = parseObject();
      emit(subject, verb, object, lexer_.line());
      Token t = lexer_.next();
      if (t.kind != Token::Comma) {
        lexer_.unget(t);
        return;
      }
    }
  }

  Term parseObject() {
    Token t = lexer_.next();
    switch (t.kind) {
      case Token::IriRef: return iriFromToken(t);
      case Token::Name:
        if (t.hasColon) return iriFromToken(t);
        if (t.value == "true" || t.value == "false") {
          return Term::literal(t.value, iri::xsdBoolean);
        }
        lexer_.fail(t, "unexpected bare word as object", describe(t));
      case Token::BlankLabel: return builder_.labeledBlank(t.value);
      case Token::LBracket: return parseBlankNodePropertyList(t);
      case Token::LParen: return parseCollection(t);
      case Token::String: return parseLiteralRest(t);
      case Token::Integer: return Term::literal(t.value, iri::xsdInteger);
      case Token::Decimal: return Term::literal(t.value, iri::xsdDecimal);
      case Token::Double: return Term::literal(t.value, iri::xsdDouble);
      default:
        lexer_.fail(t, "expected object", describe(t));
    }
  }

  Term parseLiteralRest(const Token& stringTok) {
    Token t = lexer_.next();
    if (t.kind == Token::LangTag) {
      return Term::literal(stringTok.value, "", t.value);
    }
    if (t.kind == Token::DatatypeMarker) {
      Token dt = lexer_.next();
      if (dt.kind != Token::IriRef && !(dt.kind == Token::Name && dt.hasColon)) {
        lexer_.fail(dt, "expected datatype IRI after '^^'", describe(dt));
      }
      return Term::literal(stringTok.value, iriFromToken(dt).value());
    }
    lexer_.unget(t);
    return Term::literal(stringTok.value);
  }

  Term parseBlankNodePropertyList(const Token& open) {
    Term node = builder_.freshBlank();
    Token t = lexer_.next();
    if (t.kind == Token::RBracket) return node;  // [] — fresh node, no triples
    lexer_.unget(t);
    parsePredicateObjectList(node);
    Token close = lexer_.next();
    if (close.kind != Token::RBracket) {
      lexer_.fail(open, "unterminated blank node property list", describe(close));
    }
    return node;
  }

  Term parseCollection(const Token& open) {
    std::vector<Term> elements;
    while (true) {
      Token t = lexer_.next();
      if (t.kind == Token::RParen) break;
      if (t.kind == Token::Eof) lexer_.fail(open, "unterminated collection");
      lexer_.unget(t);
      elements.push_back(parseObject());
    }
    Term nil = Term::iri(iri::rdfNil);
    if (elements.empty()) return nil;
    Term first = Term::iri(iri::rdfFirst);
    Term rest = Term::iri(iri::rdfRest);
    std::vector<Term> nodes;
    nodes.reserve(elements.size());
    for (std::size_t i = 0; i < elements.size(); ++i) nodes.push_back(builder_.freshBlank());
    for (std::size_t i = 0; i < elements.size(); ++i) {
      emit(nodes[i], first, elements[i], lexer_.line());
      emit(nodes[i], rest, i + 1 < elements.size() ? nodes[i + 1] : nil, lexer_.line());
    }
    return nodes[0];
  }

  Graph::Builder& builder_;
  Lexer lexer_;
  std::string file_;
  std::uint32_t fileIndex_ = 0;
  std::string base_;
  std::unordered_map<std::string, std::string> prefixes_;
};

// ---- RFC 3986 reference resolution ---------------------------------------

bool hasScheme(const std::string& s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
  for (std::size_t i = 1; i < s.size(); ++i) {
    char c = s[i];
    if (c == ':') return true;
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '+' || c == '-' || c == '.')) {
      return false;
    }
  }
  return false;
}

std::string removeDotSegments(std::string path) {
  std::string out;
  while (!path.empty()) {
    if (path.rfind("../", 0) == 0) path.erase(0, 3);
    else if (path.rfind("./", 0) == 0) path.erase(0, 2);
    else if (path.rfind("/./", 0) == 0) path.replace(0, 3, "/");
    else if (path == "/.") path = "/";
    else if (path.rfind("/../", 0) == 0 || path == "/..") {
      path.replace(0, path == "/.." ? 3 : 4, "/");
      auto slash = out.find_last_of('/');
      out.erase(slash == std::string::npos ? 0 : slash);
    } else if (path == "." || path == "..") {
      path.clear();
    } else {
      std::size_t next = path.find('/', 1);
      out += path.substr(0, next);
      path.erase(0, next == std::string::npos ? path.size() : next);
    }
  }
  return out;
}

}  // namespace

std::string resolve_iri(const std::string& base, const std::string& reference) {
  if (reference.empty()) return base;
  if (hasScheme(reference) || base.empty()) return reference;

  std::size_t schemeEnd = base.find(':');
  std::string scheme = base.substr(0, schemeEnd + 1);
  std::string after = base.substr(schemeEnd + 1);

  std::string authority;
  std::string basePath = after;
  if (after.rfind("//", 0) == 0) {
    std::size_t pathStart = after.find_first_of("/?#", 2);
    if (pathStart == std::string::npos) {
      authority = after;
      basePath.clear();
    } else {
      authority = after.substr(0, pathStart);
      basePath = after.substr(pathStart);
    }
  }
  // Strip query/fragment from the base path.
  std::size_t cut = basePath.find_first_of("?#");
  if (cut != std::string::npos) basePath.erase(cut);

  if (reference[0] == '#') {
    std::string full = scheme + authority + basePath;
    std::size_t q = after.find('?');
    if (q != std::string::npos) {
      std::string query = after.substr(q);
      std::size_t frag = query.find('#');
      if (frag != std::string::npos) query.erase(frag);
      full = scheme + authority + basePath + query;
    }
    return full + reference;
  }
  if (reference[0] == '?') return scheme + authority + basePath + reference;
  if (reference.rfind("//", 0) == 0) return scheme + reference;
  if (reference[0] == '/') {
    std::size_t stop = reference.find_first_of("?#");
    std::string path = reference.substr(0, stop);
    std::string tail = stop == std::string::npos ? "" : reference.substr(stop);
    return scheme + authority + removeDotSegments(path) + tail;
  }
  // Relative path: merge with the base path's directory.
  std::size_t slash = basePath.find_last_of('/');
  std::string dir = slash == std::string::npos
                        ? (authority.empty() ? "" : "/")
                        : basePath.substr(0, slash + 1);
  std::size_t stop = reference.find_first_of("?#");
  std::string path = reference.substr(0, stop);
  std::string tail = stop == std::string::npos ? "" : reference.substr(stop);
  return scheme + authority + removeDotSegments(dir + path) + tail;
}

void parse_turtle(Graph::Builder& builder, std::string_view text,
                  const std::string& fileName, const std::string& base) {
  Parser parser(builder, text, fileName, base);
  parser.run();
}

Graph parse_turtle(std::string_view text, const std::string& base) {
  Graph::Builder builder;
  parse_turtle(builder, text, "<input>", base);
  return builder.build();
}

}  // namespace gufo
