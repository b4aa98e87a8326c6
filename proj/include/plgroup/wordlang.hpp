#pragma once

#include "plgroup/plmap.hpp"
#include "plgroup/session.hpp"

#include <cctype>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace plgroup {

/// Group-word expressions. Juxtaposition composes left to right under the
/// right action; '^' binds an atom to an integer power or to an atom
/// conjugator; '[x,y]' is the commutator. 'a^b^c' is rejected: chained
/// carets need explicit parentheses.
struct WordAst;
using AstPtr = std::shared_ptr<const WordAst>;

struct WordAst {
  enum class Kind { Gen, Compose, Power, Conj, Comm };
  Kind kind;
  std::string name;            // Gen
  std::vector<AstPtr> items;   // Compose
  AstPtr a, b;                 // Power(a, exponent), Conj(a, b), Comm(a, b)
  long exponent = 0;           // Power

  static AstPtr gen(std::string n) {
    auto w = std::make_shared<WordAst>();
    w->kind = Kind::Gen;
    w->name = std::move(n);
    return w;
  }
  static AstPtr comp(std::vector<AstPtr> items) {
    auto w = std::make_shared<WordAst>();
    w->kind = Kind::Compose;
    w->items = std::move(items);
    return w;
  }
  static AstPtr pow(AstPtr a, long k) {
    auto w = std::make_shared<WordAst>();
    w->kind = Kind::Power;
    w->a = std::move(a);
    w->exponent = k;
    return w;
  }
  static AstPtr conj(AstPtr a, AstPtr b) {
    auto w = std::make_shared<WordAst>();
    w->kind = Kind::Conj;
    w->a = std::move(a);
    w->b = std::move(b);
    return w;
  }
  static AstPtr comm(AstPtr a, AstPtr b) {
    auto w = std::make_shared<WordAst>();
    w->kind = Kind::Comm;
    w->a = std::move(a);
    w->b = std::move(b);
    return w;
  }
};

inline bool ast_equal(const AstPtr& x, const AstPtr& y) {
  if (x->kind != y->kind) return false;
  switch (x->kind) {
    case WordAst::Kind::Gen:
      return x->name == y->name;
    case WordAst::Kind::Compose:
      if (x->items.size() != y->items.size()) return false;
      for (std::size_t i = 0; i < x->items.size(); ++i)
        if (!ast_equal(x->items[i], y->items[i])) return false;
      return true;
    case WordAst::Kind::Power:
      return x->exponent == y->exponent && ast_equal(x->a, y->a);
    case WordAst::Kind::Conj:
    case WordAst::Kind::Comm:
      return ast_equal(x->a, y->a) && ast_equal(x->b, y->b);
  }
  return false;
}

struct parse_error : std::runtime_error {
  std::size_t position;
  parse_error(std::size_t pos, const std::string& msg)
      : std::runtime_error("parse error at position " + std::to_string(pos) + ": " + msg),
        position(pos) {}
};

namespace detail {

struct WordParser {
  std::string_view src;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) ++pos;
  }

  bool at_end() {
    skip_ws();
    return pos >= src.size();
  }

  char peek() {
    skip_ws();
    return pos < src.size() ? src[pos] : '\0';
  }

  bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)); }

  std::string lex_ident() {
    skip_ws();
    std::size_t start = pos;
    ++pos;  // caller checked ident_start
    while (pos < src.size()) {
      char c = src[pos];
      if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
        ++pos;
      } else if (c == '-' && pos + 1 < src.size() &&
                 std::isdigit(static_cast<unsigned char>(src[pos + 1]))) {
        ++pos;
      } else {
        break;
      }
    }
    return std::string(src.substr(start, pos - start));
  }

  long lex_int() {
    skip_ws();
    std::size_t start = pos;
    if (pos < src.size() && src[pos] == '-') ++pos;
    std::size_t digits = pos;
    while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) ++pos;
    if (pos == digits) throw parse_error(start, "expected an integer exponent");
    return std::stol(std::string(src.substr(start, pos - start)));
  }

  AstPtr parse_atom() {
    skip_ws();
    if (pos >= src.size()) throw parse_error(pos, "unexpected end of input");
    char c = src[pos];
    if (c == '(') {
      ++pos;
      AstPtr w = parse_word();
      skip_ws();
      if (pos >= src.size() || src[pos] != ')') throw parse_error(pos, "expected ')'");
      ++pos;
      return w;
    }
    if (c == '[') {
      ++pos;
      AstPtr lhs = parse_word();
      skip_ws();
      if (pos >= src.size() || src[pos] != ',') throw parse_error(pos, "expected ','");
      ++pos;
      AstPtr rhs = parse_word();
      skip_ws();
      if (pos >= src.size() || src[pos] != ']') throw parse_error(pos, "expected ']'");
      ++pos;
      return WordAst::comm(std::move(lhs), std::move(rhs));
    }
    if (ident_start(c)) return WordAst::gen(lex_ident());
    throw parse_error(pos, std::string("unexpected character '") + c + "'");
  }

  AstPtr parse_term() {
    AstPtr atom = parse_atom();
    skip_ws();
    if (pos < src.size() && src[pos] == '^') {
      std::size_t caret = pos;
      ++pos;
      skip_ws();
      if (pos >= src.size()) throw parse_error(pos, "dangling '^'");
      char c = src[pos];
      AstPtr result;
      if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) {
        long k = lex_int();
        if (k == 0) throw parse_error(caret, "power exponent must be nonzero");
        result = WordAst::pow(std::move(atom), k);
      } else {
        result = WordAst::conj(std::move(atom), parse_atom());
      }
      skip_ws();
      if (pos < src.size() && src[pos] == '^')
        throw parse_error(pos, "chained '^' needs parentheses");
      return result;
    }
    return atom;
  }

  bool term_start() {
    if (at_end()) return false;
    char c = src[pos];
    return c == '(' || c == '[' || ident_start(c);
  }

  AstPtr parse_word() {
    std::vector<AstPtr> terms;
    terms.push_back(parse_term());
    while (term_start()) terms.push_back(parse_term());
    if (terms.size() == 1) return terms[0];
    return WordAst::comp(std::move(terms));
  }
};

inline std::string print_atom(const AstPtr& w);

}  // namespace detail

inline std::string print_word(const AstPtr& w) {
  switch (w->kind) {
    case WordAst::Kind::Gen:
      return w->name;
    case WordAst::Kind::Power:
      return detail::print_atom(w->a) + "^" + std::to_string(w->exponent);
    case WordAst::Kind::Conj:
      return detail::print_atom(w->a) + "^" + detail::print_atom(w->b);
    case WordAst::Kind::Comm:
      return "[" + print_word(w->a) + "," + print_word(w->b) + "]";
    case WordAst::Kind::Compose: {
      std::string s;
      for (std::size_t i = 0; i < w->items.size(); ++i) {
        if (i) s += ' ';
        const AstPtr& item = w->items[i];
        s += item->kind == WordAst::Kind::Compose ? "(" + print_word(item) + ")"
                                                  : print_word(item);
      }
      return s;
    }
  }
  return "";
}

namespace detail {
inline std::string print_atom(const AstPtr& w) {
  if (w->kind == WordAst::Kind::Gen || w->kind == WordAst::Kind::Comm) return print_word(w);
  return "(" + print_word(w) + ")";
}
}  // namespace detail

/// Parses the word grammar; unknown generator names are deferred to
/// evaluation.
inline AstPtr parse_word(std::string_view src) {
  detail::WordParser p{src};
  if (p.at_end()) throw parse_error(0, "empty word");
  AstPtr w = p.parse_word();
  if (!p.at_end()) throw parse_error(p.pos, "trailing input");
  return w;
}

inline PLMap evaluate(const AstPtr& w, const GroupSession& session) {
  switch (w->kind) {
    case WordAst::Kind::Gen: {
      const PLMap* m = session.find_generator(w->name);
      if (!m) throw std::domain_error("unknown generator '" + w->name + "'");
      return *m;
    }
    case WordAst::Kind::Compose: {
      PLMap acc;
      for (auto& item : w->items) acc = compose(acc, evaluate(item, session));
      return acc;
    }
    case WordAst::Kind::Power:
      return power(evaluate(w->a, session), w->exponent);
    case WordAst::Kind::Conj:
      return conjugate(evaluate(w->a, session), evaluate(w->b, session));
    case WordAst::Kind::Comm:
      return commutator(evaluate(w->a, session), evaluate(w->b, session));
  }
  throw std::logic_error("evaluate: bad AST node");
}

inline PLMap evaluate(std::string_view src, const GroupSession& session) {
  return evaluate(parse_word(src), session);
}

}  // namespace plgroup
