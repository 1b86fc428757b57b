#ifndef OMEGATT_SEXPR_HPP
#define OMEGATT_SEXPR_HPP

#include <string>
#include <vector>

namespace omegatt {

// Minimal s-expression reader/writer for the concrete term, telescope and
// law-file syntax. Atoms are identifiers; quoted strings are used only for
// tree literals inside law files.
struct Sexp {
  enum class Kind { Atom, Str, List };
  Kind kind = Kind::List;
  std::string text;          // Atom / Str payload
  std::vector<Sexp> items;   // List payload

  bool is_atom() const { return kind == Kind::Atom; }
  bool is_str() const { return kind == Kind::Str; }
  bool is_list() const { return kind == Kind::List; }

  static Sexp atom(std::string s);
  static Sexp str(std::string s);
  static Sexp list(std::vector<Sexp> xs);

  std::string render() const;
};

// Parses exactly one s-expression; trailing garbage is a ParseError.
Sexp parse_sexp(const std::string& text);

// Parses a sequence of s-expressions (e.g. a whole file).
std::vector<Sexp> parse_sexps(const std::string& text);

bool is_identifier(const std::string& s);

}  // namespace omegatt

#endif
