#include "pshnd/parser.hpp"

#include "pshnd/error.hpp"

#include <cctype>
#include <memory>
#include <utility>
#include <vector>

namespace pshnd {

namespace {

enum class Tok {
  nat,
  ident,
  plus,
  minus,
  star,
  caret,
  slash,
  lparen,
  rparen,
  end,
};

struct Token {
  Tok kind = Tok::end;
  std::string text;
  Int value;  // for nat
  std::size_t line = 1;
  std::size_t column = 1;
};

const char* token_name(Tok t) {
  switch (t) {
    case Tok::nat: return "number";
    case Tok::ident: return "identifier";
    case Tok::plus: return "'+'";
    case Tok::minus: return "'-'";
    case Tok::star: return "'*'";
    case Tok::caret: return "'^'";
    case Tok::slash: return "'/'";
    case Tok::lparen: return "'('";
    case Tok::rparen: return "')'";
    case Tok::end: return "end of input";
  }
  return "?";
}

std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  std::size_t line = 1, column = 1;
  std::size_t i = 0;
  auto advance_char = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      if (src[i] == '\n') {
        ++line;
        column = 1;
      } else if ((static_cast<unsigned char>(src[i]) & 0xC0u) != 0x80u) {
        ++column;  // count code points, not bytes
      }
      ++i;
    }
  };
  while (i < src.size()) {
    const char ch = src[i];
    if (ch == ' ' || ch == '\t' || ch == '\r' || ch == '\n') {
      advance_char(1);
      continue;
    }
    Token t;
    t.line = line;
    t.column = column;
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      t.kind = Tok::nat;
      t.text = std::string(src.substr(i, j - i));
      t.value = Int(t.text);
      advance_char(j - i);
      out.push_back(std::move(t));
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(ch))) {
      std::size_t j = i;
      while (j < src.size() &&
             std::isalnum(static_cast<unsigned char>(src[j])))
        ++j;
      t.kind = Tok::ident;
      t.text = std::string(src.substr(i, j - i));
      advance_char(j - i);
      out.push_back(std::move(t));
      continue;
    }
    switch (ch) {
      case '+': t.kind = Tok::plus; break;
      case '-': t.kind = Tok::minus; break;
      case '*': t.kind = Tok::star; break;
      case '^': t.kind = Tok::caret; break;
      case '/': t.kind = Tok::slash; break;
      case '(': t.kind = Tok::lparen; break;
      case ')': t.kind = Tok::rparen; break;
      default:
        throw ParseError(line, column,
                         std::string("unexpected character '") + ch + "'",
                         "a token");
    }
    t.text = std::string(1, ch);
    advance_char(1);
    out.push_back(std::move(t));
  }
  Token end;
  end.kind = Tok::end;
  end.line = line;
  end.column = column;
  out.push_back(std::move(end));
  return out;
}

struct Node {
  enum class Kind {
    add,
    sub,
    mul,
    neg,
    pow,
    var,
    imag_unit,
    nsq,
    number,
    fn_re,
    fn_im,
    fn_conj,
    fn_abs2,
  };
  Kind kind;
  std::unique_ptr<Node> lhs, rhs;  // add/sub/mul
  std::unique_ptr<Node> child;     // neg/pow/functions
  unsigned exponent = 0;
  Var var = Var::z;
  Rational value;
};

using NodePtr = std::unique_ptr<Node>;

constexpr unsigned kMaxParseExponent = 1u << 24;

class Parser {
 public:
  explicit Parser(std::string_view src) : toks_(tokenize(src)) {}

  NodePtr parse_expression() {
    NodePtr root = expr();
    if (peek().kind != Tok::end) fail_after_operand();
    return root;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  Token take() { return toks_[pos_++]; }

  [[noreturn]] void fail(const Token& t, const std::string& what,
                         const std::string& expected) {
    throw ParseError(t.line, t.column, what, expected);
  }

  [[noreturn]] void fail_after_operand() {
    const Token& t = peek();
    std::string expected = "'+', '-', '*'";
    if (depth_ > 0) expected += ", ')'";
    expected += ", or end of input";
    if (t.kind == Tok::ident || t.kind == Tok::nat || t.kind == Tok::lparen)
      fail(t, "missing operator before " + std::string(token_name(t.kind)) +
                  " (no implicit multiplication; write '*')",
           expected);
    fail(t, std::string("unexpected ") + token_name(t.kind), expected);
  }

  NodePtr expr() {
    NodePtr lhs = term();
    while (peek().kind == Tok::plus || peek().kind == Tok::minus) {
      const Tok op = take().kind;
      NodePtr rhs = term();
      auto n = std::make_unique<Node>();
      n->kind = op == Tok::plus ? Node::Kind::add : Node::Kind::sub;
      n->lhs = std::move(lhs);
      n->rhs = std::move(rhs);
      lhs = std::move(n);
    }
    return lhs;
  }

  NodePtr term() {
    NodePtr lhs = unary();
    while (peek().kind == Tok::star) {
      take();
      NodePtr rhs = unary();
      auto n = std::make_unique<Node>();
      n->kind = Node::Kind::mul;
      n->lhs = std::move(lhs);
      n->rhs = std::move(rhs);
      lhs = std::move(n);
    }
    return lhs;
  }

  NodePtr unary() {
    if (peek().kind == Tok::minus) {
      take();
      auto n = std::make_unique<Node>();
      n->kind = Node::Kind::neg;
      n->child = unary();
      return n;
    }
    return power();
  }

  NodePtr power() {
    NodePtr base = atom();
    if (peek().kind != Tok::caret) return base;
    take();
    if (peek().kind == Tok::minus)
      fail(peek(), "negative exponent", "a non-negative integer");
    if (peek().kind != Tok::nat)
      fail(peek(),
           std::string("exponent must be an integer literal, got ") +
               token_name(peek().kind),
           "a non-negative integer");
    const Token e = take();
    if (peek().kind == Tok::slash)
      fail(peek(), "rational exponent; exponents must be integers",
           "'+', '-', '*', or end of input");
    if (e.value > kMaxParseExponent) fail(e, "exponent too large", "");
    auto n = std::make_unique<Node>();
    n->kind = Node::Kind::pow;
    n->child = std::move(base);
    n->exponent = e.value.convert_to<unsigned>();
    return n;
  }

  NodePtr atom() {
    const Token& t = peek();
    static const char* kAtomExpected =
        "'z', 'zb', 'w', 'wb', 'i', 'nsq', a number, "
        "'Re', 'Im', 'conj', 'abs2', '-', or '('";
    switch (t.kind) {
      case Tok::nat: {
        const Token num = take();
        auto n = std::make_unique<Node>();
        n->kind = Node::Kind::number;
        if (peek().kind == Tok::slash) {
          take();
          if (peek().kind != Tok::nat)
            fail(peek(), "expected denominator digits", "a positive integer");
          const Token den = take();
          if (den.value == 0) fail(den, "zero denominator", "");
          n->value = Rational(num.value, den.value);
        } else {
          n->value = Rational(num.value);
        }
        return n;
      }
      case Tok::lparen: {
        take();
        ++depth_;
        NodePtr inner = expr();
        --depth_;
        if (peek().kind != Tok::rparen) fail_after_operand();
        take();
        return inner;
      }
      case Tok::ident: {
        const Token id = take();
        auto n = std::make_unique<Node>();
        if (id.text == "z") { n->kind = Node::Kind::var; n->var = Var::z; return n; }
        if (id.text == "zb") { n->kind = Node::Kind::var; n->var = Var::zbar; return n; }
        if (id.text == "w") { n->kind = Node::Kind::var; n->var = Var::w; return n; }
        if (id.text == "wb") { n->kind = Node::Kind::var; n->var = Var::wbar; return n; }
        if (id.text == "i") { n->kind = Node::Kind::imag_unit; return n; }
        if (id.text == "nsq") { n->kind = Node::Kind::nsq; return n; }
        if (id.text == "Re" || id.text == "Im" || id.text == "conj" ||
            id.text == "abs2") {
          if (id.text == "Re") n->kind = Node::Kind::fn_re;
          else if (id.text == "Im") n->kind = Node::Kind::fn_im;
          else if (id.text == "conj") n->kind = Node::Kind::fn_conj;
          else n->kind = Node::Kind::fn_abs2;
          if (peek().kind != Tok::lparen)
            fail(peek(), "function call needs parentheses", "'('");
          take();
          ++depth_;
          n->child = expr();
          --depth_;
          if (peek().kind != Tok::rparen) fail_after_operand();
          take();
          return n;
        }
        fail(id, "unknown identifier '" + id.text + "'", kAtomExpected);
      }
      default:
        fail(t, std::string("unexpected ") + token_name(t.kind), kAtomExpected);
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  int depth_ = 0;
};

MixedPolynomial lower(const Node& n) {
  using K = Node::Kind;
  switch (n.kind) {
    case K::add: return lower(*n.lhs) + lower(*n.rhs);
    case K::sub: return lower(*n.lhs) - lower(*n.rhs);
    case K::mul: return lower(*n.lhs) * lower(*n.rhs);
    case K::neg: return -lower(*n.child);
    case K::pow: return lower(*n.child).pow(n.exponent);
    case K::var: return MixedPolynomial::variable(n.var);
    case K::imag_unit:
      return MixedPolynomial::constant(GaussianRational(Rational(0), Rational(1)));
    case K::nsq:
      return norm_power(1);
    case K::number:
      return MixedPolynomial::constant(GaussianRational(n.value));
    case K::fn_conj: return lower(*n.child).conjugated();
    case K::fn_abs2: {
      const MixedPolynomial e = lower(*n.child);
      return e * e.conjugated();
    }
    case K::fn_re: {
      // (e + conj e)/2
      const MixedPolynomial e = lower(*n.child);
      return (e + e.conjugated()).scaled(GaussianRational(Rational(1, 2)));
    }
    case K::fn_im: {
      // (e - conj e)/(2i) = -(i/2)(e - conj e)
      const MixedPolynomial e = lower(*n.child);
      return (e - e.conjugated())
          .scaled(GaussianRational(Rational(0), Rational(-1, 2)));
    }
  }
  throw Error("unreachable");
}

}  // namespace

MixedPolynomial parse(std::string_view src) {
  Parser p(src);
  return lower(*p.parse_expression());
}

ModulusCombination parse_modulus_combination(std::string_view src) {
  Parser parser(src);
  const NodePtr root = parser.parse_expression();

  ModulusCombination mc;
  // flatten the top-level +- chain without lowering it
  struct Item {
    const Node* node;
    int sign;
  };
  std::vector<Item> stack{{root.get(), 1}};
  std::vector<Item> terms;
  while (!stack.empty()) {
    Item it = stack.back();
    stack.pop_back();
    if (it.node->kind == Node::Kind::add) {
      stack.push_back({it.node->rhs.get(), it.sign});
      stack.push_back({it.node->lhs.get(), it.sign});
    } else if (it.node->kind == Node::Kind::sub) {
      stack.push_back({it.node->rhs.get(), -it.sign});
      stack.push_back({it.node->lhs.get(), it.sign});
    } else {
      terms.push_back(it);
    }
  }
  // stack order reversed the list twice, so terms are left to right
  for (const Item& item : terms) {
    const Node* n = item.node;
    int sign = item.sign;
    while (n->kind == Node::Kind::neg) {
      sign = -sign;
      n = n->child.get();
    }
    if (n->kind != Node::Kind::fn_abs2)
      throw InvalidArgument(
          "expected a signed sum of abs2(...) terms for the decomposition");
    const MixedPolynomial inner = lower(*n->child);
    HolomorphicPolynomial part;
    try {
      part = HolomorphicPolynomial::from_mixed(inner);
    } catch (const InvalidArgument&) {
      throw InvalidArgument(
          "abs2 argument must not depend on zb or wb after expansion");
    }
    mc.summands.push_back({sign, std::move(part)});
  }
  return mc;
}

namespace {

// Non-negative "magnitude" rendering of one coefficient; the sign was
// already folded into the separator by the caller.
std::string coeff_text(const GaussianRational& v, bool has_monomial) {
  const bool real_only = v.im == 0;
  const bool imag_only = v.re == 0 && v.im != 0;
  std::string s;
  if (real_only) {
    if (v.re == 1 && has_monomial) return "";
    s = to_string(v.re);
  } else if (imag_only) {
    if (v.im == 1)
      s = "i";
    else
      s = to_string(v.im) + "*i";
  } else {
    s = "(" + to_string(v.re);
    if (v.im > 0)
      s += "+" + (v.im == 1 ? std::string("i") : to_string(v.im) + "*i");
    else
      s += "-" + (v.im == -1 ? std::string("i") : to_string(-v.im) + "*i");
    s += ")";
  }
  if (has_monomial) s += "*";
  return s;
}

void append_factor(std::string& s, const char* name, unsigned e) {
  if (e == 0) return;
  if (!s.empty()) s += "*";
  s += name;
  if (e > 1) s += "^" + std::to_string(e);
}

}  // namespace

std::string format(const MixedPolynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [e, v] : p.terms()) {
    // negative means: real part negative, or purely imaginary and negative
    const bool negative = v.re < 0 || (v.re == 0 && v.im < 0);
    const GaussianRational mag = negative ? -v : v;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    std::string mono;
    append_factor(mono, "z", e.a);
    append_factor(mono, "zb", e.b);
    append_factor(mono, "w", e.c);
    append_factor(mono, "wb", e.d);
    out += coeff_text(mag, !mono.empty());
    out += mono;
  }
  return out;
}

std::string format(const HolomorphicPolynomial& p) { return format(p.to_mixed()); }

}  // namespace pshnd
