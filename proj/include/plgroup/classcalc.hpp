#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace plgroup {

/// Symbolic expression over the two closure operations that build the
/// solvable class: wreath product with Z and bounded direct sum. Immutable
/// shared tree.
class ClassExpr {
 public:
  enum class Kind { Trivial, WrZ, SumBounded };

  static ClassExpr trivial() { return ClassExpr(std::make_shared<Node>()); }

  static ClassExpr wrZ(ClassExpr inner) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::WrZ;
    n->children.push_back(std::move(inner));
    return ClassExpr(std::move(n));
  }

  static ClassExpr sum(std::vector<ClassExpr> parts, bool countable = false) {
    if (parts.empty()) throw std::invalid_argument("sum: parts list must be nonempty");
    auto n = std::make_shared<Node>();
    n->kind = Kind::SumBounded;
    n->children = std::move(parts);
    n->countable = countable;
    return ClassExpr(std::move(n));
  }

  Kind kind() const { return node_->kind; }
  const ClassExpr& inner() const { return node_->children.at(0); }
  const std::vector<ClassExpr>& parts() const { return node_->children; }
  bool countable() const { return node_->countable; }

  friend bool operator==(const ClassExpr& a, const ClassExpr& b) {
    if (a.node_ == b.node_) return true;
    if (a.kind() != b.kind()) return false;
    if (a.kind() == Kind::Trivial) return true;
    if (a.kind() == Kind::SumBounded && a.countable() != b.countable()) return false;
    if (a.node_->children.size() != b.node_->children.size()) return false;
    for (std::size_t i = 0; i < a.node_->children.size(); ++i)
      if (!(a.node_->children[i] == b.node_->children[i])) return false;
    return true;
  }

 private:
  struct Node {
    Kind kind = Kind::Trivial;
    std::vector<ClassExpr> children;
    bool countable = false;
  };
  explicit ClassExpr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

/// dl(1) = 0, dl(e wr Z) = dl(e) + 1, dl(sum) = max over the parts.
inline int derived_length(const ClassExpr& e) {
  switch (e.kind()) {
    case ClassExpr::Kind::Trivial:
      return 0;
    case ClassExpr::Kind::WrZ:
      return derived_length(e.inner()) + 1;
    case ClassExpr::Kind::SumBounded: {
      int m = 0;
      for (auto& p : e.parts()) m = std::max(m, derived_length(p));
      return m;
    }
  }
  return 0;
}

/// G_0 = 1, G_n = countable sum of (G_{n-1} wr Z).
inline ClassExpr gn_expr(int n) {
  if (n < 0) throw std::invalid_argument("gn_expr: negative index");
  ClassExpr e = ClassExpr::trivial();
  for (int i = 0; i < n; ++i) e = ClassExpr::sum({ClassExpr::wrZ(e)}, true);
  return e;
}

/// W_0 = 1, W_n = W_{n-1} wr Z.
inline ClassExpr wn_expr(int n) {
  if (n < 0) throw std::invalid_argument("wn_expr: negative index");
  ClassExpr e = ClassExpr::trivial();
  for (int i = 0; i < n; ++i) e = ClassExpr::wrZ(e);
  return e;
}

inline std::string to_string(const ClassExpr& e) {
  switch (e.kind()) {
    case ClassExpr::Kind::Trivial:
      return "1";
    case ClassExpr::Kind::WrZ:
      return "wrZ(" + to_string(e.inner()) + ")";
    case ClassExpr::Kind::SumBounded: {
      std::string s = e.countable() ? "sumZ(" : "sum(";
      for (std::size_t i = 0; i < e.parts().size(); ++i) {
        if (i) s += ",";
        s += to_string(e.parts()[i]);
      }
      return s + ")";
    }
  }
  return "";
}

/// Per-subexpression embedding levels: each node embeds in the G at its own
/// derived length, sums landing at the max of their parts and wreath steps
/// climbing one level.
struct EmbedCertificate {
  int level = 0;
  std::string expr;
  std::vector<EmbedCertificate> children;
};

inline EmbedCertificate embed_in_gn_certificate(const ClassExpr& e) {
  EmbedCertificate cert;
  cert.expr = to_string(e);
  switch (e.kind()) {
    case ClassExpr::Kind::Trivial:
      cert.level = 0;
      break;
    case ClassExpr::Kind::WrZ: {
      cert.children.push_back(embed_in_gn_certificate(e.inner()));
      cert.level = cert.children[0].level + 1;
      break;
    }
    case ClassExpr::Kind::SumBounded: {
      int m = 0;
      for (auto& p : e.parts()) {
        cert.children.push_back(embed_in_gn_certificate(p));
        m = std::max(m, cert.children.back().level);
      }
      cert.level = m;
      break;
    }
  }
  return cert;
}

namespace detail {

struct ClassParser {
  std::string_view src;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) ++pos;
  }

  [[noreturn]] void fail(const std::string& msg) {
    throw std::invalid_argument("class expression, position " + std::to_string(pos) + ": " +
                                msg);
  }

  bool eat(char c) {
    skip_ws();
    if (pos < src.size() && src[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }

  int parse_int() {
    skip_ws();
    std::size_t start = pos;
    while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) ++pos;
    if (start == pos) fail("expected an integer");
    return std::stoi(std::string(src.substr(start, pos - start)));
  }

  std::string parse_name() {
    skip_ws();
    std::size_t start = pos;
    while (pos < src.size() && (std::isalnum(static_cast<unsigned char>(src[pos]))))
      ++pos;
    return std::string(src.substr(start, pos - start));
  }

  ClassExpr parse_expr() {
    skip_ws();
    if (pos >= src.size()) fail("unexpected end of input");
    if (src[pos] == '1') {
      ++pos;
      return ClassExpr::trivial();
    }
    std::string name = parse_name();
    if (name == "wrZ") {
      expect('(');
      ClassExpr inner = parse_expr();
      expect(')');
      return ClassExpr::wrZ(std::move(inner));
    }
    if (name == "sum" || name == "sumZ") {
      expect('(');
      std::vector<ClassExpr> parts;
      parts.push_back(parse_expr());
      while (eat(',')) parts.push_back(parse_expr());
      expect(')');
      return ClassExpr::sum(std::move(parts), name == "sumZ");
    }
    if (name == "G") {
      expect('(');
      int n = parse_int();
      expect(')');
      return gn_expr(n);
    }
    if (name == "W") {
      expect('(');
      int n = parse_int();
      expect(')');
      return wn_expr(n);
    }
    fail("unknown constructor '" + name + "'");
  }
};

}  // namespace detail

/// Syntax: 1 | wrZ(e) | sum(e,...) | sumZ(e,...) | G(n) | W(n).
inline ClassExpr parse_class_expr(std::string_view src) {
  detail::ClassParser p{src};
  ClassExpr e = p.parse_expr();
  p.skip_ws();
  if (p.pos != src.size()) p.fail("trailing input");
  return e;
}

}  // namespace plgroup
