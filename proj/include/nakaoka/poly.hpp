#pragma once
#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "nakaoka/coeff.hpp"
#include "nakaoka/error.hpp"

namespace nakaoka {

using Mono = std::vector<std::uint32_t>;

inline std::uint64_t mono_degree(const Mono& m) {
  std::uint64_t d = 0;
  for (auto e : m) d += e;
  return d;
}

inline bool lex_less(const Mono& a, const Mono& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

inline bool grlex_less(const Mono& a, const Mono& b) {
  std::uint64_t da = mono_degree(a), db = mono_degree(b);
  if (da != db) return da < db;
  return lex_less(a, b);
}

enum class Order { Grlex, Lex };

inline bool order_less(const Mono& a, const Mono& b, Order o) {
  return o == Order::Grlex ? grlex_less(a, b) : lex_less(a, b);
}

// Term maps iterate leading-term-first under graded lex.
struct GrlexDesc {
  bool operator()(const Mono& a, const Mono& b) const { return grlex_less(b, a); }
};

inline Mono mono_mul(const Mono& a, const Mono& b) {
  Mono r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline bool mono_divides(const Mono& a, const Mono& b) {  // a | b
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline Mono mono_div(const Mono& b, const Mono& a) {  // b / a
  Mono r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = b[i] - a[i];
  return r;
}

inline Mono mono_lcm(const Mono& a, const Mono& b) {
  Mono r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

// Exact multivariate polynomial over Q (chr 0) or F_q (chr q), stored as a
// canonical graded-lex-descending term map. The zero polynomial has an empty map.
class MultiPoly {
 public:
  MultiPoly() = default;
  MultiPoly(std::uint32_t nvars, std::uint32_t chr) : nvars_(nvars), chr_(chr) {}

  static MultiPoly constant(std::uint32_t nvars, std::uint32_t chr, const Coeff& c) {
    MultiPoly p(nvars, chr);
    p.add_term(Mono(nvars, 0), c);
    return p;
  }
  static MultiPoly from_int(std::uint32_t nvars, std::uint32_t chr, long long n) {
    return constant(nvars, chr, Coeff::from_int(n, chr));
  }
  static MultiPoly variable(std::uint32_t nvars, std::uint32_t chr, std::uint32_t idx,
                            std::uint32_t exp = 1) {
    MultiPoly p(nvars, chr);
    Mono m(nvars, 0);
    m.at(idx) = exp;
    p.add_term(m, Coeff::one(chr));
    return p;
  }
  static MultiPoly monomial(std::uint32_t nvars, std::uint32_t chr, const Mono& m,
                            const Coeff& c) {
    MultiPoly p(nvars, chr);
    p.add_term(m, c);
    return p;
  }

  std::uint32_t nvars() const { return nvars_; }
  std::uint32_t chr() const { return chr_; }
  const std::map<Mono, Coeff, GrlexDesc>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && mono_degree(terms_.begin()->first) == 0);
  }
  Coeff constant_value() const {
    if (is_zero()) return Coeff::zero(chr_);
    if (!is_constant()) throw LevelError("polynomial is not constant");
    return terms_.begin()->second;
  }
  Coeff coeff_of(const Mono& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Coeff::zero(chr_) : it->second;
  }

  void add_term(const Mono& m, const Coeff& c) {
    if (m.size() != nvars_) throw LevelError("monomial arity mismatch");
    if (c.chr() != chr_) throw LevelError("coefficient characteristic mismatch");
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.emplace(m, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  MultiPoly operator-() const {
    MultiPoly r(nvars_, chr_);
    for (auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
  }
  MultiPoly& operator+=(const MultiPoly& o) {
    check(o);
    for (auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  MultiPoly& operator-=(const MultiPoly& o) {
    check(o);
    for (auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }

  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.check(b);
    MultiPoly r(a.nvars_, a.chr_);
    for (auto& [ma, ca] : a.terms_)
      for (auto& [mb, cb] : b.terms_) r.add_term(mono_mul(ma, mb), ca * cb);
    return r;
  }
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

  MultiPoly scaled(const Coeff& c) const {
    MultiPoly r(nvars_, chr_);
    for (auto& [m, cc] : terms_) r.add_term(m, cc * c);
    return r;
  }

  MultiPoly pow(std::uint32_t e) const {
    MultiPoly r = from_int(nvars_, chr_, 1), b = *this;
    while (e) {
      if (e & 1) r *= b;
      if (e >>= 1) b *= b;
    }
    return r;
  }

  // Evaluate under var i -> images[i]; images live in the output ring.
  MultiPoly substitute(const std::vector<MultiPoly>& images, std::uint32_t out_nvars,
                       std::uint32_t out_chr) const {
    if (images.size() != nvars_) throw LevelError("substitution image count mismatch");
    MultiPoly r(out_nvars, out_chr);
    for (auto& [m, c] : terms_) {
      MultiPoly acc = constant(out_nvars, out_chr, convert(c, out_chr));
      for (std::uint32_t i = 0; i < nvars_; ++i)
        if (m[i] > 0) acc *= images[i].pow(m[i]);
      r += acc;
    }
    return r;
  }

  MultiPoly reduce_mod(std::uint32_t q) const {
    MultiPoly r(nvars_, q);
    for (auto& [m, c] : terms_) r.add_term(m, c.reduce_to(q));
    return r;
  }

  MultiPoly lift_char0() const {
    MultiPoly r(nvars_, 0);
    for (auto& [m, c] : terms_) r.add_term(m, c.lift());
    return r;
  }

  std::uint64_t total_degree() const {  // zero polynomial reports 0
    std::uint64_t d = 0;
    for (auto& [m, c] : terms_) d = std::max(d, mono_degree(m));
    return d;
  }
  std::uint32_t degree_in(std::uint32_t i) const {
    std::uint32_t d = 0;
    for (auto& [m, c] : terms_) d = std::max(d, m[i]);
    return d;
  }

  std::pair<Mono, Coeff> leading(Order o) const {
    if (is_zero()) throw LevelError("leading term of zero");
    if (o == Order::Grlex) return *terms_.begin();
    auto best = terms_.begin();
    for (auto it = terms_.begin(); it != terms_.end(); ++it)
      if (lex_less(best->first, it->first)) best = it;
    return *best;
  }

  bool is_integer_poly() const {
    for (auto& [m, c] : terms_)
      if (!c.is_integer()) return false;
    return true;
  }

  // Positive gcd of the integer coefficients (characteristic 0 only).
  BigInt content() const {
    if (chr_ != 0) throw LevelError("content in positive characteristic");
    BigInt g = 0;
    for (auto& [m, c] : terms_) g = boost::multiprecision::gcd(g, c.as_bigint());
    return g < 0 ? BigInt(-g) : g;
  }

  MultiPoly primitive_part() const {
    BigInt ct = content();
    if (ct == 0) return *this;
    MultiPoly r(nvars_, chr_);
    for (auto& [m, c] : terms_)
      r.add_term(m, Coeff::from_rat(BigRat(c.as_bigint(), ct)));
    return r;
  }

  bool operator==(const MultiPoly& o) const {
    return nvars_ == o.nvars_ && chr_ == o.chr_ && terms_ == o.terms_;
  }
  bool operator!=(const MultiPoly& o) const { return !(*this == o); }

  // Canonical text form: graded-lex descending, explicit '*', '^' powers.
  std::string str(const std::vector<std::string>& names) const {
    if (names.size() != nvars_) throw LevelError("variable name count mismatch");
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (auto& [m, c] : terms_) {
      Coeff mag = c.is_negative() ? -c : c;
      if (first) {
        if (c.is_negative()) out += "-";
        first = false;
      } else {
        out += c.is_negative() ? " - " : " + ";
      }
      std::string vars;
      for (std::uint32_t i = 0; i < nvars_; ++i) {
        if (m[i] == 0) continue;
        if (!vars.empty()) vars += "*";
        vars += names[i];
        if (m[i] > 1) vars += "^" + std::to_string(m[i]);
      }
      if (vars.empty()) {
        out += mag.str();
      } else if (mag.is_one()) {
        out += vars;
      } else {
        out += mag.str() + "*" + vars;
      }
    }
    return out;
  }

 private:
  static Coeff convert(const Coeff& c, std::uint32_t out_chr) {
    if (c.chr() == out_chr) return c;
    if (c.chr() == 0) return c.reduce_to(out_chr);
    throw LevelError("cannot convert mod-q coefficient to characteristic 0 implicitly");
  }
  void check(const MultiPoly& o) const {
    if (nvars_ != o.nvars_ || chr_ != o.chr_) throw LevelError("polynomial ring mismatch");
  }

  std::uint32_t nvars_ = 0;
  std::uint32_t chr_ = 0;
  std::map<Mono, Coeff, GrlexDesc> terms_;
};

}  // namespace nakaoka
