#include "hodge/parser.hpp"

#include <cctype>

namespace hodge {

namespace {

enum class Tok { Int, Name, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Lexer {
  const std::string& s;
  std::size_t i = 0;
  Tok tok = Tok::End;
  std::size_t tok_pos = 0;
  std::string text;

  explicit Lexer(const std::string& src) : s(src) { advance(); }

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(tok_pos + 1, msg); }

  void advance() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    tok_pos = i;
    text.clear();
    if (i >= s.size()) {
      tok = Tok::End;
      return;
    }
    char c = s[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) text += s[i++];
      tok = Tok::Int;
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (i < s.size() &&
             (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_'))
        text += s[i++];
      tok = Tok::Name;
      return;
    }
    ++i;
    switch (c) {
      case '+': tok = Tok::Plus; return;
      case '-': tok = Tok::Minus; return;
      case '*': tok = Tok::Star; return;
      case '/': tok = Tok::Slash; return;
      case '^': tok = Tok::Caret; return;
      case '(': tok = Tok::LParen; return;
      case ')': tok = Tok::RParen; return;
      default: throw ParseError(tok_pos + 1, std::string("unexpected character '") + c + "'");
    }
  }
};

struct Parser {
  Lexer lx;
  Ring ring;
  MonomialOrder ord;

  Parser(const Ring& r, const std::string& text, MonomialOrder o)
      : lx(text), ring(r), ord(o) {}

  BigInt integer() {
    if (lx.tok != Tok::Int) lx.fail("expected an integer");
    BigInt v(lx.text);
    lx.advance();
    return v;
  }

  unsigned long exponent() {
    if (lx.tok != Tok::Int) lx.fail("expected an integer exponent");
    BigInt v(lx.text);
    check(v.fits_long() && v.to_long() >= 0 && v.to_long() <= kMaxExponent,
          "exponent out of range");
    lx.advance();
    return static_cast<unsigned long>(v.to_long());
  }

  Polynomial base() {
    switch (lx.tok) {
      case Tok::Int: {
        BigInt num = integer();
        if (lx.tok == Tok::Slash) {
          lx.advance();
          std::size_t pos = lx.tok_pos;
          BigInt den = integer();
          if (den.is_zero()) throw ParseError(pos + 1, "zero denominator");
          return Polynomial::constant(ring, Rational(num, den), ord);
        }
        return Polynomial::constant(ring, Rational(num, BigInt(1)), ord);
      }
      case Tok::Name: {
        int idx = ring->var_index(lx.text);
        if (idx < 0) lx.fail("unknown variable '" + lx.text + "'");
        lx.advance();
        return Polynomial::variable(ring, idx, ord);
      }
      case Tok::LParen: {
        lx.advance();
        Polynomial p = expr();
        if (lx.tok != Tok::RParen) lx.fail("expected ')'");
        lx.advance();
        return p;
      }
      default:
        lx.fail("expected a number, variable, or '('");
    }
  }

  Polynomial factor() {
    if (lx.tok == Tok::Minus) {
      lx.advance();
      return -factor();
    }
    Polynomial p = base();
    if (lx.tok == Tok::Caret) {
      lx.advance();
      p = Polynomial::pow(p, static_cast<unsigned>(exponent()));
    }
    return p;
  }

  Polynomial product() {
    Polynomial p = factor();
    while (lx.tok == Tok::Star) {
      lx.advance();
      p = p * factor();
    }
    return p;
  }

  Polynomial expr() {
    Polynomial p = lx.tok == Tok::Minus ? Polynomial::zero(ring, ord) : product();
    while (lx.tok == Tok::Plus || lx.tok == Tok::Minus) {
      bool minus = lx.tok == Tok::Minus;
      lx.advance();
      Polynomial q = product();
      p = minus ? p - q : p + q;
    }
    return p;
  }

  Polynomial run() {
    Polynomial p = expr();
    if (lx.tok != Tok::End) lx.fail("unexpected trailing input");
    return p;
  }
};

}  // namespace

Polynomial parse_polynomial(const Ring& ring, const std::string& text, MonomialOrder order) {
  check(ring != nullptr, "parse needs a ring");
  return Parser(ring, text, order).run();
}

}  // namespace hodge
