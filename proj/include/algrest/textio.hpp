#pragma once
#include <cctype>
#include <string>
#include <vector>

#include "algrest/forms.hpp"
#include "algrest/germ.hpp"
#include "algrest/poly.hpp"

namespace algrest {

// Expression syntax used by scenario files and the CLI:
//   polynomials    3/2*x1^2*x3 - x2*x3 + 1
//   2-forms        x3^2*dx1^dx3 + 2*dx2^dx3   ('^' wedges dx factors,
//                                              exponentiates variables)
//   branch coords  t^3, -t^2, 0
namespace textio {

struct Token {
  enum Kind { Num, Ident, DIdent, Plus, Minus, Star, Caret, LParen, RParen, End } kind;
  std::string text;
  Rat value;
};

class Lexer {
 public:
  explicit Lexer(const std::string& s) : s_(s) { advance(); }
  const Token& peek() const { return tok_; }
  Token take() {
    Token t = tok_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    if (i_ >= s_.size()) {
      tok_ = {Token::End, "", 0};
      return;
    }
    char c = s_[i_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i_;
      while (j < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[j])) || s_[j] == '/'))
        ++j;
      // a '/' is part of the literal only if followed by a digit
      while (j > i_ && s_[j - 1] == '/') --j;
      std::string lit = s_.substr(i_, j - i_);
      i_ = j;
      tok_ = {Token::Num, lit, parse_rational(lit)};
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i_;
      while (j < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[j])) || s_[j] == '_'))
        ++j;
      std::string id = s_.substr(i_, j - i_);
      i_ = j;
      tok_ = {Token::Ident, id, 0};
      return;
    }
    ++i_;
    switch (c) {
      case '+': tok_ = {Token::Plus, "+", 0}; return;
      case '-': tok_ = {Token::Minus, "-", 0}; return;
      case '*': tok_ = {Token::Star, "*", 0}; return;
      case '^': tok_ = {Token::Caret, "^", 0}; return;
      case '(': tok_ = {Token::LParen, "(", 0}; return;
      case ')': tok_ = {Token::RParen, ")", 0}; return;
      default: throw Error(std::string("unexpected character '") + c + "' in expression");
    }
  }

  std::string s_;
  std::size_t i_ = 0;
  Token tok_;
};

// One parsed product term: rational coefficient, variable exponents, wedge
// factor indices (in written order).
struct Term {
  Rat coef = 1;
  Monomial mono;
  IndexTuple dxs;
};

inline int parse_int_exponent(Lexer& lx) {
  Token t = lx.take();
  bool neg = false;
  if (t.kind == Token::Minus) {
    neg = true;
    t = lx.take();
  }
  if (t.kind != Token::Num) throw Error("expected integer exponent");
  Rat v = t.value;
  if (v.get_den() != 1) throw Error("exponent must be an integer");
  long e = static_cast<long>(v.get_num().get_si());
  return static_cast<int>(neg ? -e : e);
}

// Parses a sum of product terms over vars (and dx-factors when allow_dx).
inline std::vector<Term> parse_terms(const std::string& text, const VarSet& vs,
                                     bool allow_dx) {
  Lexer lx(text);
  std::vector<Term> out;
  int sign = 1;
  bool expect_term = true;
  bool pending_sign = false;
  for (;;) {
    const Token& t = lx.peek();
    if (t.kind == Token::End) {
      if (pending_sign) throw Error("dangling operator in expression '" + text + "'");
      break;
    }
    if (t.kind == Token::Plus) {
      lx.take();
      pending_sign = true;
      continue;
    }
    if (t.kind == Token::Minus) {
      lx.take();
      sign = -sign;
      pending_sign = true;
      continue;
    }
    // parse one product term
    Term term;
    term.coef = sign;
    term.mono = Monomial(vs.size());
    sign = 1;
    bool more = true;
    bool any_factor = false;
    while (more) {
      const Token& f = lx.peek();
      if (f.kind == Token::Num) {
        term.coef *= lx.take().value;
        any_factor = true;
      } else if (f.kind == Token::Ident) {
        std::string id = lx.take().text;
        any_factor = true;
        if (allow_dx && id.size() > 1 && id[0] == 'd' && vs.index_of(id.substr(1))) {
          term.dxs.push_back(static_cast<int>(*vs.index_of(id.substr(1))));
        } else {
          auto vi = vs.index_of(id);
          if (!vi) throw Error("unknown variable '" + id + "'");
          int e = 1;
          if (lx.peek().kind == Token::Caret) {
            // '^' followed by a dx-identifier wedges; by a number exponentiates
            Lexer save = lx;  // cheap: lexer copies its string
            lx.take();
            if (lx.peek().kind == Token::Ident) {
              lx = save;  // it is a wedge, leave '^' for the dx handling below
            } else {
              e = parse_int_exponent(lx);
            }
          }
          if (e < 0) throw Error("negative exponents are not supported");
          term.mono.e[*vi] += e;
        }
      } else {
        throw Error("expected a factor in expression '" + text + "'");
      }
      // continuation: '*' continues, '^' continues when wedging dx factors
      const Token& n = lx.peek();
      if (n.kind == Token::Star) {
        lx.take();
      } else if (n.kind == Token::Caret && allow_dx) {
        lx.take();
        if (lx.peek().kind != Token::Ident) throw Error("expected dx factor after '^'");
      } else {
        more = false;
      }
    }
    if (!any_factor) throw Error("empty term in expression '" + text + "'");
    out.push_back(std::move(term));
    expect_term = false;
    pending_sign = false;
    // next must be +, - or end
    const Token& n = lx.peek();
    if (n.kind == Token::Plus || n.kind == Token::Minus || n.kind == Token::End) continue;
    throw Error("unexpected token '" + n.text + "' in expression '" + text + "'");
  }
  if (expect_term && out.empty()) throw Error("empty expression");
  return out;
}

}  // namespace textio

inline Polynomial parse_polynomial(const std::string& text, const VarSetPtr& vs) {
  Polynomial p(vs);
  for (const auto& t : textio::parse_terms(text, *vs, false))
    p += Polynomial::term(vs, t.mono, t.coef);
  return p;
}

// Parses a differential form; all terms must have the same wedge arity.
inline DiffForm parse_form(const std::string& text, const VarSetPtr& vs) {
  auto terms = textio::parse_terms(text, *vs, true);
  if (terms.empty()) return DiffForm::zero(vs, 2);
  int deg = static_cast<int>(terms[0].dxs.size());
  for (const auto& t : terms)
    if (static_cast<int>(t.dxs.size()) != deg)
      throw Error("mixed form degrees in '" + text + "'");
  DiffForm f(vs, deg);
  for (const auto& t : terms)
    f.add_term(t.dxs, Polynomial::term(vs, t.mono, t.coef));
  return f;
}

inline UniPoly parse_unipoly(const std::string& text) {
  static const VarSetPtr tvar = make_varset({"t"}, {1});
  Polynomial p = parse_polynomial(text, tvar);
  UniPoly u;
  for (const auto& [m, c] : p.terms()) u += UniPoly::term(m.e[0], c);
  return u;
}

}  // namespace algrest
