#include "h10m/encoder/diophantine.hpp"

#include <cctype>
#include <functional>
#include <set>

#include "h10m/errors.hpp"

namespace h10m::encoder {

using algebra::Integer;
using algebra::MPoly;
using algebra::Rational;
using algebra::Var;

namespace {

enum class Tok { Int, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, Eq, Comma, Sep, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line, col;
};

std::vector<Token> lex(const std::string& s) {
  std::vector<Token> out;
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < s.size();) {
    const char c = s[i];
    const std::size_t l = line, k = col;
    auto single = [&](Tok t) {
      out.push_back({t, std::string(1, c), l, k});
      ++i;
      ++col;
    };
    if (c == '\n') {
      out.push_back({Tok::Sep, "\n", l, k});
      ++i;
      ++line;
      col = 1;
    } else if (c == '#') {
      while (i < s.size() && s[i] != '\n') ++i;
    } else if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      ++col;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Tok::Int, s.substr(i, j - i), l, k});
      col += j - i;
      i = j;
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
      out.push_back({Tok::Ident, s.substr(i, j - i), l, k});
      col += j - i;
      i = j;
    } else {
      switch (c) {
        case '+': single(Tok::Plus); break;
        case '-': single(Tok::Minus); break;
        case '*': single(Tok::Star); break;
        case '/': single(Tok::Slash); break;
        case '^': single(Tok::Caret); break;
        case '(': single(Tok::LParen); break;
        case ')': single(Tok::RParen); break;
        case '=': single(Tok::Eq); break;
        case ',': single(Tok::Comma); break;
        case ';': single(Tok::Sep); break;
        default:
          throw ParseError(std::string("unexpected character '") + c + "'", l, k);
      }
    }
  }
  out.push_back({Tok::End, "", line, col});
  return out;
}

class Parser {
 public:
  Parser(std::vector<Token> toks, bool allow_fractions) : toks_(std::move(toks)), fractions_(allow_fractions) {}

  const Token& peek() const { return toks_[pos_]; }
  Token next() { return toks_[pos_++]; }
  bool accept(Tok t) {
    if (peek().kind != t) return false;
    ++pos_;
    return true;
  }
  Token expect(Tok t, const char* what) {
    if (peek().kind != t) fail(std::string("expected ") + what);
    return next();
  }
  [[noreturn]] void fail(const std::string& msg) const {
    const Token& t = peek();
    throw ParseError(msg + (t.kind == Tok::End ? " at end of input" : " near '" + (t.text == "\n" ? "\\n" : t.text) + "'"),
                     t.line, t.col);
  }

  // Called for every identifier occurrence.
  std::function<void(const Token&)> on_ident;

  MPoly expr() {
    MPoly acc;
    bool neg = false;
    if (accept(Tok::Minus)) neg = true;
    else accept(Tok::Plus);
    MPoly t = term();
    acc = neg ? -t : t;
    for (;;) {
      if (accept(Tok::Plus)) acc += term();
      else if (accept(Tok::Minus)) acc -= term();
      else return acc;
    }
  }

  bool at_end_of_statement() const { return peek().kind == Tok::Sep || peek().kind == Tok::End; }

 private:
  MPoly term() {
    MPoly acc = factor();
    for (;;) {
      if (accept(Tok::Star)) {
        acc = acc * factor();
      } else if (peek().kind == Tok::Ident || peek().kind == Tok::Int || peek().kind == Tok::LParen) {
        acc = acc * factor();  // juxtaposition, as in 3x
      } else {
        return acc;
      }
    }
  }

  MPoly factor() {
    if (accept(Tok::Minus)) return -factor();
    MPoly base = primary();
    if (accept(Tok::Caret)) {
      Token e = expect(Tok::Int, "a non-negative integer exponent");
      if (e.text.size() > 6) throw ParseError("exponent too large", e.line, e.col);
      base = base.pow(static_cast<unsigned>(std::stoul(e.text)));
    }
    return base;
  }

  MPoly primary() {
    const Token t = peek();
    switch (t.kind) {
      case Tok::Int: {
        next();
        Rational q(Integer(t.text));
        if (fractions_ && accept(Tok::Slash)) {
          Token d = expect(Tok::Int, "a denominator");
          Integer den(d.text);
          if (den == 0) throw ParseError("zero denominator", d.line, d.col);
          q = Rational(Integer(t.text), den);
          q.canonicalize();
        }
        return MPoly(q);
      }
      case Tok::Ident:
        next();
        if (on_ident) on_ident(t);
        return MPoly(Var(t.text));
      case Tok::LParen: {
        next();
        MPoly e = expr();
        expect(Tok::RParen, "')'");
        return e;
      }
      default:
        fail("expected a number, identifier or '('");
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  bool fractions_;
};

}  // namespace

DioSystem parse_diophantine(const std::string& text) {
  Parser p(lex(text), false);
  DioSystem sys;
  std::set<std::string> declared, seen;
  bool have_decl = false;
  p.on_ident = [&](const Token& t) {
    if (t.text == "z1" || t.text == "z2") throw ParseError("'" + t.text + "' is reserved", t.line, t.col);
    if (have_decl && !declared.count(t.text)) throw ParseError("unknown identifier '" + t.text + "'", t.line, t.col);
    if (!have_decl && seen.insert(t.text).second) sys.unknowns.push_back(t.text);
  };
  for (;;) {
    while (p.accept(Tok::Sep)) {
    }
    if (p.peek().kind == Tok::End) break;
    if (p.peek().kind == Tok::Ident && p.peek().text == "vars") {
      const Token kw = p.next();
      if (have_decl || !sys.equations.empty()) throw ParseError("'vars' must come first and only once", kw.line, kw.col);
      do {
        Token id = p.expect(Tok::Ident, "an identifier");
        if (id.text == "z1" || id.text == "z2") throw ParseError("'" + id.text + "' is reserved", id.line, id.col);
        if (!declared.insert(id.text).second) throw ParseError("duplicate unknown '" + id.text + "'", id.line, id.col);
        sys.unknowns.push_back(id.text);
      } while (p.accept(Tok::Comma));
      have_decl = true;
    } else {
      MPoly lhs = p.expr();
      p.expect(Tok::Eq, "'='");
      MPoly rhs = p.expr();
      sys.equations.push_back(lhs - rhs);
    }
    if (!p.at_end_of_statement()) p.fail("expected ';' or a newline");
  }
  return sys;
}

MPoly parse_term(const std::string& text) {
  Parser p(lex(text), true);
  MPoly e = p.expr();
  if (p.peek().kind != Tok::End) p.fail("trailing input");
  return e;
}

}  // namespace h10m::encoder
