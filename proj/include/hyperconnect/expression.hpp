#pragma once

#include <cctype>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hyperconnect/pochhammer.hpp"
#include "hyperconnect/scalar.hpp"

namespace hyperconnect {

/// Arithmetic expression over named symbols, used by the family catalog to
/// describe generating-function factors and normalizations.
///
/// Grammar: + - * / and ^ (integer exponents), parentheses, integer
/// literals, identifiers, and calls poch(a,n), qpoch(a,q,n), fact(n),
/// binom(n,k), exp(z), cos(z), sin(z). The identifier I is the imaginary
/// unit. exp/cos/sin/I exist only in the numeric field.
class Expression {
 public:
  Expression() : Expression(std::string("0")) {}
  explicit Expression(std::string source) : source_(std::move(source)) {
    Parser p{source_, 0};
    root_ = p.parse_expression();
    p.skip_space();
    if (p.pos != source_.size())
      throw ParseError("unexpected '" + source_.substr(p.pos) + "' in expression '" + source_ + "'");
  }

  const std::string& source() const { return source_; }

  std::set<std::string> symbols() const {
    std::set<std::string> out;
    collect(*root_, out);
    return out;
  }
  bool depends_on(const std::string& name) const { return symbols().count(name) > 0; }

  /// Symbol sets of the top-level additive terms.
  std::vector<std::set<std::string>> additive_term_symbols() const {
    std::vector<const Node*> terms;
    flatten_sum(*root_, terms);
    std::vector<std::set<std::string>> out;
    for (const Node* t : terms) {
      std::set<std::string> s;
      collect(*t, s);
      out.push_back(std::move(s));
    }
    return out;
  }

  template <Scalar S>
  S evaluate(const std::map<std::string, S>& env) const {
    return eval<S>(*root_, env);
  }

  friend bool operator==(const Expression& a, const Expression& b) { return a.source_ == b.source_; }

 private:
  struct Node {
    enum class Kind { number, symbol, neg, add, sub, mul, div, pow, call };
    Kind kind;
    std::string text;  // number literal, symbol or function name
    std::vector<std::shared_ptr<const Node>> args;
  };
  using NodePtr = std::shared_ptr<const Node>;

  struct Parser {
    const std::string& src;
    std::size_t pos;

    void skip_space() {
      while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) ++pos;
    }
    bool accept(char c) {
      skip_space();
      if (pos < src.size() && src[pos] == c) {
        ++pos;
        return true;
      }
      return false;
    }
    [[noreturn]] void fail(const std::string& what) const {
      throw ParseError(what + " at position " + std::to_string(pos) + " in '" + src + "'");
    }
    static NodePtr make(Node::Kind k, std::vector<NodePtr> args, std::string text = {}) {
      return std::make_shared<const Node>(Node{k, std::move(text), std::move(args)});
    }
    NodePtr parse_expression() {
      NodePtr lhs = parse_term();
      for (;;) {
        if (accept('+')) lhs = make(Node::Kind::add, {lhs, parse_term()});
        else if (accept('-')) lhs = make(Node::Kind::sub, {lhs, parse_term()});
        else return lhs;
      }
    }
    NodePtr parse_term() {
      NodePtr lhs = parse_unary();
      for (;;) {
        if (accept('*')) lhs = make(Node::Kind::mul, {lhs, parse_unary()});
        else if (accept('/')) lhs = make(Node::Kind::div, {lhs, parse_unary()});
        else return lhs;
      }
    }
    NodePtr parse_unary() {
      if (accept('-')) return make(Node::Kind::neg, {parse_unary()});
      if (accept('+')) return parse_unary();
      return parse_power();
    }
    NodePtr parse_power() {
      NodePtr base = parse_primary();
      if (accept('^')) return make(Node::Kind::pow, {base, parse_unary()});
      return base;
    }
    NodePtr parse_primary() {
      skip_space();
      if (pos >= src.size()) fail("unexpected end");
      char c = src[pos];
      if (accept('(')) {
        NodePtr e = parse_expression();
        if (!accept(')')) fail("expected ')'");
        return e;
      }
      if (std::isdigit(static_cast<unsigned char>(c))) {
        std::size_t start = pos;
        while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) ++pos;
        return make(Node::Kind::number, {}, src.substr(start, pos - start));
      }
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::size_t start = pos;
        while (pos < src.size() &&
               (std::isalnum(static_cast<unsigned char>(src[pos])) || src[pos] == '_'))
          ++pos;
        std::string name = src.substr(start, pos - start);
        if (accept('(')) {
          std::vector<NodePtr> args;
          if (!accept(')')) {
            do args.push_back(parse_expression());
            while (accept(','));
            if (!accept(')')) fail("expected ')' after arguments");
          }
          return make(Node::Kind::call, std::move(args), name);
        }
        return make(Node::Kind::symbol, {}, name);
      }
      fail(std::string("unexpected character '") + c + "'");
    }
  };

  static void collect(const Node& n, std::set<std::string>& out) {
    if (n.kind == Node::Kind::symbol && n.text != "I") out.insert(n.text);
    for (const auto& a : n.args) collect(*a, out);
  }

  static void flatten_sum(const Node& n, std::vector<const Node*>& out) {
    if (n.kind == Node::Kind::add || n.kind == Node::Kind::sub) {
      flatten_sum(*n.args[0], out);
      flatten_sum(*n.args[1], out);
    } else if (n.kind == Node::Kind::neg) {
      flatten_sum(*n.args[0], out);
    } else {
      out.push_back(&n);
    }
  }

  template <Scalar S>
  static long as_integer(const S& v, const char* what) {
    auto i = integer_value(v);
    if (!i) throw DomainError(std::string(what) + " needs an integer argument");
    return *i;
  }

  template <Scalar S>
  static S eval(const Node& n, const std::map<std::string, S>& env) {
    using K = typename Node::Kind;
    switch (n.kind) {
      case K::number: return scalar_cast<S>(Rational::parse(n.text));
      case K::symbol: {
        if (n.text == "I") {
          if constexpr (is_exact_v<S>) throw UnsupportedError("imaginary unit needs the numeric field");
          else return Complex(0.0, 1.0);
        }
        auto it = env.find(n.text);
        if (it == env.end()) throw DomainError("unbound symbol '" + n.text + "'");
        return it->second;
      }
      case K::neg: return -eval(*n.args[0], env);
      case K::add: return eval(*n.args[0], env) + eval(*n.args[1], env);
      case K::sub: return eval(*n.args[0], env) - eval(*n.args[1], env);
      case K::mul: return eval(*n.args[0], env) * eval(*n.args[1], env);
      case K::div: return eval(*n.args[0], env) / eval(*n.args[1], env);
      case K::pow: return ipow(eval(*n.args[0], env), as_integer(eval(*n.args[1], env), "^"));
      case K::call: return call(n, env);
    }
    throw DomainError("corrupt expression node");
  }

  template <Scalar S>
  static S call(const Node& n, const std::map<std::string, S>& env) {
    auto arg = [&](std::size_t i) { return eval(*n.args.at(i), env); };
    auto arity = [&](std::size_t k) {
      if (n.args.size() != k)
        throw ParseError(n.text + "() takes " + std::to_string(k) + " argument(s)");
    };
    if (n.text == "poch") {
      arity(2);
      return pochhammer(arg(0), as_integer(arg(1), "poch"));
    }
    if (n.text == "qpoch") {
      arity(3);
      return q_pochhammer(arg(0), arg(1), as_integer(arg(2), "qpoch"));
    }
    if (n.text == "fact") {
      arity(1);
      return factorial<S>(as_integer(arg(0), "fact"));
    }
    if (n.text == "binom") {
      arity(2);
      return binomial_coefficient<S>(as_integer(arg(0), "binom"), as_integer(arg(1), "binom"));
    }
    if (n.text == "exp" || n.text == "cos" || n.text == "sin") {
      arity(1);
      if constexpr (is_exact_v<S>) {
        throw UnsupportedError(n.text + "() needs the numeric field");
      } else {
        auto z = arg(0).value();
        if (n.text == "exp") return Complex(std::exp(z));
        if (n.text == "cos") return Complex(std::cos(z));
        return Complex(std::sin(z));
      }
    }
    throw ParseError("unknown function '" + n.text + "'");
  }

  std::string source_;
  NodePtr root_;
};

}  // namespace hyperconnect
