#include "omegatt/sexpr.hpp"

#include <cctype>

#include "omegatt/errors.hpp"

namespace omegatt {

Sexp Sexp::atom(std::string s) {
  Sexp e;
  e.kind = Kind::Atom;
  e.text = std::move(s);
  return e;
}

Sexp Sexp::str(std::string s) {
  Sexp e;
  e.kind = Kind::Str;
  e.text = std::move(s);
  return e;
}

Sexp Sexp::list(std::vector<Sexp> xs) {
  Sexp e;
  e.kind = Kind::List;
  e.items = std::move(xs);
  return e;
}

std::string Sexp::render() const {
  switch (kind) {
    case Kind::Atom:
      return text;
    case Kind::Str:
      return "\"" + text + "\"";
    case Kind::List: {
      std::string out = "(";
      for (size_t i = 0; i < items.size(); ++i) {
        if (i) out += " ";
        out += items[i].render();
      }
      return out + ")";
    }
  }
  return {};
}

namespace {

bool ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

bool ident_cont(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

struct Lexer {
  const std::string& s;
  size_t pos = 0;

  void skip_ws() {
    while (pos < s.size()) {
      char c = s[pos];
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos;
      } else if (c == ';') {  // line comment
        while (pos < s.size() && s[pos] != '\n') ++pos;
      } else {
        break;
      }
    }
  }

  bool done() {
    skip_ws();
    return pos >= s.size();
  }

  Sexp next() {
    skip_ws();
    if (pos >= s.size()) throw ParseError("unexpected end of input");
    char c = s[pos];
    if (c == '(') {
      ++pos;
      std::vector<Sexp> items;
      for (;;) {
        skip_ws();
        if (pos >= s.size()) throw ParseError("unterminated list");
        if (s[pos] == ')') {
          ++pos;
          return Sexp::list(std::move(items));
        }
        items.push_back(next());
      }
    }
    if (c == ')') throw ParseError("unexpected ')'");
    if (c == '"') {
      ++pos;
      std::string text;
      while (pos < s.size() && s[pos] != '"') text += s[pos++];
      if (pos >= s.size()) throw ParseError("unterminated string literal");
      ++pos;
      return Sexp::str(std::move(text));
    }
    if (ident_start(c)) {
      std::string text;
      while (pos < s.size() && ident_cont(s[pos])) text += s[pos++];
      return Sexp::atom(std::move(text));
    }
    throw ParseError(std::string("unexpected character '") + c + "'");
  }
};

}  // namespace

Sexp parse_sexp(const std::string& text) {
  Lexer lx{text};
  Sexp e = lx.next();
  if (!lx.done()) throw ParseError("trailing input after s-expression");
  return e;
}

std::vector<Sexp> parse_sexps(const std::string& text) {
  Lexer lx{text};
  std::vector<Sexp> out;
  while (!lx.done()) out.push_back(lx.next());
  return out;
}

bool is_identifier(const std::string& s) {
  if (s.empty() || !ident_start(s[0])) return false;
  for (char c : s)
    if (!ident_cont(c)) return false;
  return true;
}

}  // namespace omegatt
