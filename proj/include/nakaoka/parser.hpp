#pragma once
#include <cctype>
#include <string>

#include "nakaoka/tambara.hpp"

namespace nakaoka {

// Recursive-descent parser for level elements.
//
//   expr   := term (('+' | '-') term)*
//   term   := factor ('*' factor)*
//   factor := ('-')* atom ('^' natural)*
//   atom   := integer | generator | '(' expr ')'
//
// Generators depend on the functor and level: x and n for polynomial level
// generators, t for the transfer generator (written t[v0,...,v{p-1}] in the
// free-underlying top), x0..x9 for permuted polynomial variables.
class Parser {
 public:
  Parser(const Functor& fn, Level lv, std::string src)
      : fn_(fn), lv_(lv), src_(std::move(src)) {}

  Elem parse() {
    Elem e = expr();
    skip();
    if (pos_ != src_.size()) fail("unexpected trailing input");
    return e;
  }

 private:
  Elem expr() {
    Elem e = term();
    while (true) {
      skip();
      if (peek() == '+') {
        ++pos_;
        e = fn_.add(e, term());
      } else if (peek() == '-') {
        ++pos_;
        e = fn_.sub(e, term());
      } else {
        return e;
      }
    }
  }

  Elem term() {
    Elem e = factor();
    while (true) {
      skip();
      if (peek() == '*') {
        ++pos_;
        e = fn_.mul(e, factor());
      } else {
        return e;
      }
    }
  }

  Elem factor() {
    skip();
    if (peek() == '-') {
      ++pos_;
      return fn_.neg(factor());
    }
    Elem e = atom();
    while (true) {
      skip();
      if (peek() != '^') return e;
      ++pos_;
      skip();
      if (!std::isdigit(peek())) fail("exponent must be a literal integer");
      e = fn_.pow(e, static_cast<std::uint32_t>(natural()));
    }
  }

  Elem atom() {
    skip();
    char c = peek();
    if (c == '(') {
      ++pos_;
      Elem e = expr();
      skip();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return e;
    }
    if (std::isdigit(c)) return fn_.from_int(lv_, integer());
    if (std::isalpha(c)) return generator();
    fail("expected a number, generator, or '('");
    throw ParseError("unreachable", pos_);
  }

  Elem generator() {
    std::size_t start = pos_;
    std::string name;
    while (pos_ < src_.size() && (std::isalnum(peek()))) name += src_[pos_++];
    FunctorKind k = fn_.spec().kind;
    std::uint32_t p = fn_.p();

    if (name == "t") {
      if (lv_ != Level::Top) fail_at("t is a top-level generator", start);
      switch (k) {
        case FunctorKind::Burnside:
        case FunctorKind::ModPBurnside: {
          std::uint32_t chr = k == FunctorKind::ModPBurnside ? p : 0;
          return fn_.top_pair(Coeff::zero(chr), Coeff::one(chr));
        }
        case FunctorKind::FreeFixed:
          return fn_.top_ff(MultiPoly(2, 0), MultiPoly::from_int(1, 0, 1));
        case FunctorKind::FreeUnderlying: return fu_transfer(start);
        case FunctorKind::RU: {
          MultiPoly w(1, 0);
          for (std::uint32_t i = 0; i < p; ++i) w.add_term(Mono{i}, Coeff::one(0));
          return fn_.top_ru(w);
        }
        default: fail_at("this functor has no transfer generator t", start);
      }
    }
    if (name == "n") {
      if (lv_ != Level::Top) fail_at("n is a top-level generator", start);
      if (k == FunctorKind::FreeFixed)
        return fn_.top_ff(MultiPoly::variable(2, 0, 1), MultiPoly(1, 0));
      if (k == FunctorKind::FreeUnderlying)
        return fn_.top_fu(MultiPoly::variable(1, 0, 0), {});
      fail_at("this functor has no norm generator n", start);
    }
    if (name == "x") {
      if (k == FunctorKind::FreeFixed) {
        if (lv_ == Level::Bottom) return fn_.bottom(MultiPoly::variable(1, 0, 0));
        return fn_.top_ff(MultiPoly::variable(2, 0, 0), MultiPoly(1, 0));
      }
      if (k == FunctorKind::RU && lv_ == Level::Top)
        return fn_.top_ru(MultiPoly::variable(1, 0, 0));
      fail_at("unknown generator x here", start);
    }
    if (name.size() >= 2 && name[0] == 'x') {
      bool digits = true;
      for (std::size_t i = 1; i < name.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(name[i]))) digits = false;
      if (digits) {
        std::uint32_t idx = static_cast<std::uint32_t>(std::stoul(name.substr(1)));
        bool fp_poly = k == FunctorKind::FixedPoint && fn_.spec().fp != FPKind::ZModP;
        bool fu_bottom = k == FunctorKind::FreeUnderlying && lv_ == Level::Bottom;
        if ((fp_poly || fu_bottom) && idx < p && lv_ == Level::Bottom)
          return fn_.bottom(MultiPoly::variable(p, 0, idx));
      }
    }
    fail_at("unknown generator '" + name + "'", start);
    throw ParseError("unreachable", start);
  }

  Elem fu_transfer(std::size_t start) {
    skip();
    if (peek() != '[') fail_at("the free-underlying transfer is written t[v0,...]", start);
    ++pos_;
    Mono v;
    while (true) {
      skip();
      if (!std::isdigit(peek())) fail("expected a nonnegative exponent");
      v.push_back(static_cast<std::uint32_t>(natural()));
      skip();
      if (peek() == ',') {
        ++pos_;
        continue;
      }
      if (peek() == ']') break;
      fail("expected ',' or ']'");
    }
    if (v.size() != fn_.p()) fail("transfer vector must have exactly p entries");
    ++pos_;  // consume ']'
    return fn_.fu_t(v);
  }

  long long integer() {
    std::size_t start = pos_;
    std::string digits;
    while (pos_ < src_.size() && std::isdigit(peek())) digits += src_[pos_++];
    if (digits.size() > 18) fail_at("integer literal too large", start);
    return std::stoll(digits);
  }

  long long natural() { return integer(); }

  char peek() const { return pos_ < src_.size() ? src_[pos_] : '\0'; }
  void skip() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }
  [[noreturn]] void fail_at(const std::string& msg, std::size_t at) const {
    throw ParseError(msg, at);
  }

  const Functor& fn_;
  Level lv_;
  std::string src_;
  std::size_t pos_ = 0;
};

inline Elem parse_elem(const Functor& fn, Level lv, const std::string& src) {
  // Fixed-point tops are parsed in the base ring and checked for invariance
  // once at the end, so that non-invariant intermediate atoms are allowed.
  if (fn.spec().kind == FunctorKind::FixedPoint && lv == Level::Top) {
    Elem b = Parser(fn, Level::Bottom, src).parse();
    return fn.top_fp(std::get<PolyElem>(b.pay).f);
  }
  return Parser(fn, lv, src).parse();
}

}  // namespace nakaoka
