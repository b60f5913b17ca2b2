#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "preop/calculus.hpp"

namespace preop {

/// Syntax error with a position and the token set that would have been
/// accepted there.
struct ParseError : std::runtime_error {
  int line;
  int col;
  std::string expected;

  ParseError(int line_, int col_, const std::string& expected_, const std::string& got)
      : std::runtime_error("syntax error at line " + std::to_string(line_) + ", col " +
                           std::to_string(col_) + ": expected " + expected_ + ", got " + got),
        line(line_),
        col(col_),
        expected(expected_) {}
};

/// Evaluation failure annotated with the offending subexpression.
struct EvalError : std::runtime_error {
  explicit EvalError(const std::string& what) : std::runtime_error(what) {}
};

/// Parse tree of the surface DSL.  Function-call syntax only; degree
/// checking happens at evaluation time, not here.
struct Expr {
  enum class Kind { var, unit, scalar_mul, add, sub, comp, cup, tot, bracket, delta, tri, devtot, devtri };

  Kind kind = Kind::unit;
  std::string name;       // var
  Int scalar = 0;         // scalar_mul
  int index = 0;          // comp insertion slot
  std::vector<Expr> kids;

  bool operator==(const Expr& other) const {
    return kind == other.kind && name == other.name && scalar == other.scalar &&
           index == other.index && kids == other.kids;
  }
};

namespace detail {

struct Token {
  enum class Kind { ident, integer, plus, minus, star, lparen, rparen, comma, end };
  Kind kind = Kind::end;
  std::string text;
  int line = 1;
  int col = 1;
};

inline std::string token_name(Token::Kind k) {
  switch (k) {
    case Token::Kind::ident: return "identifier";
    case Token::Kind::integer: return "integer";
    case Token::Kind::plus: return "'+'";
    case Token::Kind::minus: return "'-'";
    case Token::Kind::star: return "'*'";
    case Token::Kind::lparen: return "'('";
    case Token::Kind::rparen: return "')'";
    case Token::Kind::comma: return "','";
    case Token::Kind::end: return "end of input";
  }
  return "?";
}

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) { advance(); }

  const Token& peek() const { return current_; }

  Token take() {
    Token t = current_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' ||
                                   text_[pos_] == '\r' || text_[pos_] == '\n')) {
      if (text_[pos_] == '\n') {
        ++line_;
        col_ = 1;
      } else {
        ++col_;
      }
      ++pos_;
    }
    current_ = Token{Token::Kind::end, "", line_, col_};
    if (pos_ >= text_.size()) return;
    const char c = text_[pos_];
    const auto single = [&](Token::Kind k) {
      current_ = Token{k, std::string(1, c), line_, col_};
      ++pos_;
      ++col_;
    };
    switch (c) {
      case '+': single(Token::Kind::plus); return;
      case '-': single(Token::Kind::minus); return;
      case '*': single(Token::Kind::star); return;
      case '(': single(Token::Kind::lparen); return;
      case ')': single(Token::Kind::rparen); return;
      case ',': single(Token::Kind::comma); return;
      default: break;
    }
    if (c >= '0' && c <= '9') {
      std::string digits;
      const int start_col = col_;
      while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') {
        digits += text_[pos_++];
        ++col_;
      }
      current_ = Token{Token::Kind::integer, digits, line_, start_col};
      return;
    }
    if ((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_') {
      std::string word;
      const int start_col = col_;
      while (pos_ < text_.size() &&
             ((text_[pos_] >= 'a' && text_[pos_] <= 'z') ||
              (text_[pos_] >= 'A' && text_[pos_] <= 'Z') ||
              (text_[pos_] >= '0' && text_[pos_] <= '9') || text_[pos_] == '_')) {
        word += text_[pos_++];
        ++col_;
      }
      current_ = Token{Token::Kind::ident, word, line_, start_col};
      return;
    }
    throw ParseError(line_, col_, "a token", "'" + std::string(1, c) + "'");
  }

  const std::string& text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
  Token current_;
};

class Parser {
 public:
  explicit Parser(const std::string& text) : lex_(text) {}

  Expr parse_all() {
    Expr e = parse_expr();
    expect(Token::Kind::end, "end of input");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& expected) {
    const Token& t = lex_.peek();
    throw ParseError(t.line, t.col, expected,
                     t.kind == Token::Kind::end ? "end of input" : "'" + t.text + "'");
  }

  Token expect(Token::Kind k, const std::string& what) {
    if (lex_.peek().kind != k) fail(what);
    return lex_.take();
  }

  Expr parse_expr() {
    Expr lhs = parse_term();
    while (lex_.peek().kind == Token::Kind::plus || lex_.peek().kind == Token::Kind::minus) {
      const bool plus = lex_.take().kind == Token::Kind::plus;
      Expr rhs = parse_term();
      Expr node;
      node.kind = plus ? Expr::Kind::add : Expr::Kind::sub;
      node.kids = {std::move(lhs), std::move(rhs)};
      lhs = std::move(node);
    }
    return lhs;
  }

  Expr parse_term() {
    if (lex_.peek().kind == Token::Kind::minus) {
      lex_.take();
      if (lex_.peek().kind == Token::Kind::integer) return parse_scalar_mul(true);
      Expr node;
      node.kind = Expr::Kind::scalar_mul;
      node.scalar = -1;
      node.kids = {parse_factor()};
      return node;
    }
    if (lex_.peek().kind == Token::Kind::integer) return parse_scalar_mul(false);
    return parse_factor();
  }

  Expr parse_scalar_mul(bool negative) {
    const Token lit = lex_.take();
    Int value(lit.text);
    if (negative) value = -value;
    expect(Token::Kind::star, "'*' after integer literal");
    Expr node;
    node.kind = Expr::Kind::scalar_mul;
    node.scalar = std::move(value);
    node.kids = {parse_factor()};
    return node;
  }

  Expr parse_factor() {
    const Token& t = lex_.peek();
    if (t.kind == Token::Kind::lparen) {
      lex_.take();
      Expr e = parse_expr();
      expect(Token::Kind::rparen, "')'");
      return e;
    }
    if (t.kind != Token::Kind::ident) fail("an expression");
    const Token name = lex_.take();
    if (name.text == "unit") {
      Expr e;
      e.kind = Expr::Kind::unit;
      return e;
    }
    const auto call = call_kind(name.text);
    if (lex_.peek().kind != Token::Kind::lparen) {
      if (call) fail("'(' after function name '" + name.text + "'");
      Expr e;
      e.kind = Expr::Kind::var;
      e.name = name.text;
      return e;
    }
    if (!call)
      throw ParseError(name.line, name.col, "a known function (comp, cup, tot, bracket, delta, tri, devtot, devtri)",
                       "'" + name.text + "'");
    lex_.take();  // (
    Expr e;
    e.kind = call->first;
    const int arity = call->second;
    for (int k = 0; k < arity; ++k) {
      if (k > 0) expect(Token::Kind::comma, "','");
      if (e.kind == Expr::Kind::comp && k == 1) {
        const Token idx = expect(Token::Kind::integer, "an insertion index");
        e.index = std::stoi(idx.text);
      } else {
        e.kids.push_back(parse_expr());
      }
    }
    expect(Token::Kind::rparen, arity > 0 ? "',' or ')'" : "')'");
    return e;
  }

  static std::optional<std::pair<Expr::Kind, int>> call_kind(const std::string& name) {
    if (name == "comp") return {{Expr::Kind::comp, 3}};
    if (name == "cup") return {{Expr::Kind::cup, 2}};
    if (name == "tot") return {{Expr::Kind::tot, 2}};
    if (name == "bracket") return {{Expr::Kind::bracket, 2}};
    if (name == "delta") return {{Expr::Kind::delta, 1}};
    if (name == "tri") return {{Expr::Kind::tri, 3}};
    if (name == "devtot") return {{Expr::Kind::devtot, 2}};
    if (name == "devtri") return {{Expr::Kind::devtri, 3}};
    return std::nullopt;
  }

  Lexer lex_;
};

}  // namespace detail

inline Expr parse(const std::string& text) { return detail::Parser(text).parse_all(); }

/// Canonical rendering; parse(pretty(parse(s))) == parse(s).
inline std::string pretty(const Expr& e) {
  const auto atom = [](const Expr& k) {
    const std::string inner = pretty(k);
    switch (k.kind) {
      case Expr::Kind::add:
      case Expr::Kind::sub:
      case Expr::Kind::scalar_mul:
        return "(" + inner + ")";
      default:
        return inner;
    }
  };
  switch (e.kind) {
    case Expr::Kind::var: return e.name;
    case Expr::Kind::unit: return "unit";
    case Expr::Kind::scalar_mul: return e.scalar.str() + "*" + atom(e.kids[0]);
    case Expr::Kind::add: return pretty(e.kids[0]) + " + " + atom(e.kids[1]);
    case Expr::Kind::sub: return pretty(e.kids[0]) + " - " + atom(e.kids[1]);
    case Expr::Kind::comp:
      return "comp(" + pretty(e.kids[0]) + ", " + std::to_string(e.index) + ", " +
             pretty(e.kids[1]) + ")";
    case Expr::Kind::cup: return "cup(" + pretty(e.kids[0]) + ", " + pretty(e.kids[1]) + ")";
    case Expr::Kind::tot: return "tot(" + pretty(e.kids[0]) + ", " + pretty(e.kids[1]) + ")";
    case Expr::Kind::bracket:
      return "bracket(" + pretty(e.kids[0]) + ", " + pretty(e.kids[1]) + ")";
    case Expr::Kind::delta: return "delta(" + pretty(e.kids[0]) + ")";
    case Expr::Kind::tri:
      return "tri(" + pretty(e.kids[0]) + ", " + pretty(e.kids[1]) + ", " + pretty(e.kids[2]) + ")";
    case Expr::Kind::devtot:
      return "devtot(" + pretty(e.kids[0]) + ", " + pretty(e.kids[1]) + ")";
    case Expr::Kind::devtri:
      return "devtri(" + pretty(e.kids[0]) + ", " + pretty(e.kids[1]) + ", " + pretty(e.kids[2]) +
             ")";
  }
  return "";
}

/// Evaluate an expression over a model.  Unbound variables, a missing mu
/// and degree violations surface as EvalError mentioning the offending
/// subexpression.
template <PreOperadModel M>
typename M::Element eval(const Expr& e, const M& m,
                         const std::map<std::string, typename M::Element>& bindings,
                         const std::optional<typename M::Element>& mu) {
  using E = typename M::Element;
  const auto sub = [&](std::size_t k) { return eval(e.kids[k], m, bindings, mu); };
  const auto need_mu = [&]() -> const E& {
    if (!mu) throw EvalError("mu is not bound in the context, required by " + pretty(e));
    return *mu;
  };
  const auto guard = [&](auto&& run) -> E {
    try {
      return run();
    } catch (const EvalError&) {
      throw;
    } catch (const std::exception& ex) {
      throw EvalError(std::string(ex.what()) + ", in subexpression " + pretty(e));
    }
  };
  switch (e.kind) {
    case Expr::Kind::var: {
      const auto it = bindings.find(e.name);
      if (it == bindings.end()) throw EvalError("unbound variable '" + e.name + "'");
      return it->second;
    }
    case Expr::Kind::unit: return m.unit();
    case Expr::Kind::scalar_mul: {
      const E k = sub(0);
      return guard([&] { return m.scale(m.ring().canon(e.scalar), k); });
    }
    case Expr::Kind::add: {
      const E a = sub(0), b = sub(1);
      return guard([&] { return m.add(a, b); });
    }
    case Expr::Kind::sub: {
      const E a = sub(0), b = sub(1);
      return guard([&] { return m.sub(a, b); });
    }
    case Expr::Kind::comp: {
      const E a = sub(0), b = sub(1);
      return guard([&] { return m.compose(a, e.index, b); });
    }
    case Expr::Kind::cup: {
      const E a = sub(0), b = sub(1);
      const E& mm = need_mu();
      return guard([&] { return cup(m, a, b, mm); });
    }
    case Expr::Kind::tot: {
      const E a = sub(0), b = sub(1);
      return guard([&] { return total_compose(m, a, b); });
    }
    case Expr::Kind::bracket: {
      const E a = sub(0), b = sub(1);
      return guard([&] { return bracket(m, a, b); });
    }
    case Expr::Kind::delta: {
      const E a = sub(0);
      const E& mm = need_mu();
      return guard([&] { return precoboundary(m, a, mm); });
    }
    case Expr::Kind::tri: {
      const E a = sub(0), b = sub(1), c = sub(2);
      return guard([&] { return tribraces(m, a, b, c); });
    }
    case Expr::Kind::devtot: {
      const E a = sub(0), b = sub(1);
      const E& mm = need_mu();
      return guard([&] { return dev_total(m, a, b, mm); });
    }
    case Expr::Kind::devtri: {
      const E a = sub(0), b = sub(1), c = sub(2);
      const E& mm = need_mu();
      return guard([&] { return dev_tribraces(m, a, b, c, mm); });
    }
  }
  throw EvalError("unreachable expression kind");
}

}  // namespace preop
