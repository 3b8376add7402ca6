#pragma once
#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "nakaoka/numbertheory.hpp"
#include "nakaoka/poly.hpp"
#include "nakaoka/rng.hpp"

namespace nakaoka {

enum class FunctorKind { Burnside, FreeFixed, FreeUnderlying, RU, ModPBurnside, FixedPoint };
enum class FPKind { ZModP, SwapPoly, CyclicPoly };
enum class Level { Bottom, Top };

struct FunctorSpec {
  FunctorKind kind = FunctorKind::Burnside;
  std::uint32_t p = 2;
  FPKind fp = FPKind::ZModP;

  bool operator==(const FunctorSpec& o) const {
    return kind == o.kind && p == o.p && (kind != FunctorKind::FixedPoint || fp == o.fp);
  }
  bool operator!=(const FunctorSpec& o) const { return !(*this == o); }

  std::string name() const {
    switch (kind) {
      case FunctorKind::Burnside: return "burnside";
      case FunctorKind::FreeFixed: return "free-fixed";
      case FunctorKind::FreeUnderlying: return "free-underlying";
      case FunctorKind::RU: return "ru";
      case FunctorKind::ModPBurnside: return "modp-burnside";
      case FunctorKind::FixedPoint:
        switch (fp) {
          case FPKind::ZModP: return "fixed-point-zmodp";
          case FPKind::SwapPoly: return "fixed-point-swap";
          case FPKind::CyclicPoly: return "fixed-point-cyclic";
        }
    }
    return "?";
  }
};

inline FunctorSpec make_functor(FunctorKind kind, std::uint32_t p, FPKind fp = FPKind::ZModP) {
  if (!is_prime_u64(p)) throw LevelError("group order p must be prime");
  if (p > 23) throw UnsupportedError("group order beyond the supported range");
  if (kind == FunctorKind::FixedPoint) {
    if (fp == FPKind::SwapPoly && p != 2)
      throw UnsupportedError("the swap polynomial ring is a C_2 fixed-point functor");
    if (fp == FPKind::CyclicPoly && p > 3)
      throw UnsupportedError("cyclic polynomial fixed points supported for p <= 3");
  }
  FunctorSpec fn;
  fn.kind = kind;
  fn.p = p;
  fn.fp = fp;
  return fn;
}

struct RingDesc {
  std::uint32_t nvars = 0;
  std::uint32_t chr = 0;
  std::vector<std::string> names;
};

// --- element payloads ------------------------------------------------------

struct PairAB {  // a + b*t in the two pair-shaped tops
  Coeff a, b;
  bool operator==(const PairAB& o) const { return a == o.a && b == o.b; }
};

struct FFTop {  // g0(x, n) + g1(x) * t
  MultiPoly g0;  // 2 vars: x, n
  MultiPoly g1;  // 1 var: x
  bool operator==(const FFTop& o) const { return g0 == o.g0 && g1 == o.g1; }
};

struct FUTop {  // h(n) + sum of c_v * t[v], keys stored as lex-greatest rotations
  MultiPoly h;  // 1 var: n
  std::map<Mono, Coeff, GrlexDesc> t;
  bool operator==(const FUTop& o) const { return h == o.h && t == o.t; }
};

struct RUTop {  // group-ring element, canonical degree < p
  MultiPoly w;  // 1 var
  bool operator==(const RUTop& o) const { return w == o.w; }
};

struct PolyElem {  // bottoms and fixed-point tops
  MultiPoly f;
  bool operator==(const PolyElem& o) const { return f == o.f; }
};

struct Elem {
  FunctorSpec fn;
  Level level = Level::Bottom;
  std::variant<PairAB, FFTop, FUTop, RUTop, PolyElem> pay;
};

// --- term rendering ---------------------------------------------------------

namespace render {

struct Term {
  Coeff c;
  std::string body;  // "" for a bare constant
};

inline void collect(const MultiPoly& f, const std::vector<std::string>& names,
                    const std::string& suffix, std::vector<Term>& out) {
  for (auto& [m, c] : f.terms()) {
    std::string body;
    for (std::uint32_t i = 0; i < f.nvars(); ++i) {
      if (m[i] == 0) continue;
      if (!body.empty()) body += "*";
      body += names[i];
      if (m[i] > 1) body += "^" + std::to_string(m[i]);
    }
    if (!suffix.empty()) {
      if (!body.empty()) body += "*";
      body += suffix;
    }
    out.push_back({c, body});
  }
}

inline std::string join(const std::vector<Term>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto& t : terms) {
    Coeff mag = t.c.is_negative() ? -t.c : t.c;
    if (first) {
      if (t.c.is_negative()) out += "-";
      first = false;
    } else {
      out += t.c.is_negative() ? " - " : " + ";
    }
    if (t.body.empty())
      out += mag.str();
    else if (mag.is_one())
      out += t.body;
    else
      out += mag.str() + "*" + t.body;
  }
  return out;
}

}  // namespace render

// --- the catalog ------------------------------------------------------------

// One C_p-Tambara functor from the catalog, with exact level arithmetic and
// the four structure maps. Every operation validates functor and level tags.
class Functor {
 public:
  explicit Functor(FunctorSpec fn) : fn_(fn) {}

  const FunctorSpec& spec() const { return fn_; }
  std::uint32_t p() const { return fn_.p; }

  RingDesc bottom_ring() const {
    switch (fn_.kind) {
      case FunctorKind::Burnside:
      case FunctorKind::RU: return {0, 0, {}};
      case FunctorKind::ModPBurnside: return {0, fn_.p, {}};
      case FunctorKind::FreeFixed: return {1, 0, {"x"}};
      case FunctorKind::FreeUnderlying: return poly_vars(0);
      case FunctorKind::FixedPoint:
        if (fn_.fp == FPKind::ZModP) return {0, fn_.p, {}};
        return poly_vars(0);
    }
    return {};
  }

  RingDesc phi_ring() const {
    switch (fn_.kind) {
      case FunctorKind::Burnside: return {0, 0, {}};
      case FunctorKind::ModPBurnside: return {0, fn_.p, {}};
      case FunctorKind::FreeFixed: return {2, 0, {"x", "n"}};
      case FunctorKind::FreeUnderlying: return {1, 0, {"n"}};
      case FunctorKind::RU: return {1, 0, {"x"}};
      case FunctorKind::FixedPoint:
        if (fn_.fp == FPKind::ZModP) return {0, fn_.p, {}};
        return {1, fn_.p, {"y"}};
    }
    return {};
  }

  // --- constructors ---------------------------------------------------------

  Elem zero(Level lv) const { return from_int(lv, 0); }
  Elem one(Level lv) const { return from_int(lv, 1); }

  Elem from_int(Level lv, long long v) const {
    if (lv == Level::Bottom) {
      RingDesc r = bottom_ring();
      return bottom(MultiPoly::from_int(r.nvars, r.chr, v));
    }
    switch (fn_.kind) {
      case FunctorKind::Burnside:
      case FunctorKind::ModPBurnside: {
        std::uint32_t c = pair_chr();
        return top_pair(Coeff::from_int(v, c), Coeff::zero(c));
      }
      case FunctorKind::FreeFixed:
        return top_ff(MultiPoly::from_int(2, 0, v), MultiPoly(1, 0));
      case FunctorKind::FreeUnderlying:
        return top_fu(MultiPoly::from_int(1, 0, v), {});
      case FunctorKind::RU: return top_ru(MultiPoly::from_int(1, 0, v));
      case FunctorKind::FixedPoint: {
        RingDesc r = bottom_ring();
        return top_fp(MultiPoly::from_int(r.nvars, r.chr, v));
      }
    }
    throw LevelError("unreachable");
  }

  Elem bottom(MultiPoly f) const {
    RingDesc r = bottom_ring();
    if (f.nvars() != r.nvars || f.chr() != r.chr)
      throw LevelError("bottom element lives in the wrong ring");
    Elem e{fn_, Level::Bottom, PolyElem{std::move(f)}};
    return e;
  }

  Elem top_pair(Coeff a, Coeff b) const {
    require(fn_.kind == FunctorKind::Burnside || fn_.kind == FunctorKind::ModPBurnside,
            "pair-shaped top");
    if (a.chr() != pair_chr() || b.chr() != pair_chr())
      throw LevelError("pair coefficients in the wrong characteristic");
    return Elem{fn_, Level::Top, PairAB{std::move(a), std::move(b)}};
  }

  Elem top_ff(MultiPoly g0, MultiPoly g1) const {
    require(fn_.kind == FunctorKind::FreeFixed, "free-fixed top");
    if (g0.nvars() != 2 || g0.chr() != 0 || g1.nvars() != 1 || g1.chr() != 0)
      throw LevelError("free-fixed top parts live in Z[x,n] and Z[x]");
    return Elem{fn_, Level::Top, FFTop{std::move(g0), std::move(g1)}};
  }

  Elem top_fu(MultiPoly h, std::map<Mono, Coeff, GrlexDesc> t) const {
    require(fn_.kind == FunctorKind::FreeUnderlying, "free-underlying top");
    if (h.nvars() != 1 || h.chr() != 0) throw LevelError("h part lives in Z[n]");
    std::map<Mono, Coeff, GrlexDesc> canon;
    for (auto& [v, c] : t) {
      if (v.size() != fn_.p) throw LevelError("transfer vector arity mismatch");
      if (c.chr() != 0) throw LevelError("transfer coefficients are integers");
      if (c.is_zero()) continue;
      Mono k = canon_rot(v);
      auto [it, fresh] = canon.emplace(k, c);
      if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) canon.erase(it);
      }
    }
    return Elem{fn_, Level::Top, FUTop{std::move(h), std::move(canon)}};
  }

  Elem top_ru(MultiPoly w) const {
    require(fn_.kind == FunctorKind::RU, "group-ring top");
    if (w.nvars() != 1 || w.chr() != 0) throw LevelError("group-ring element lives in Z[x]");
    return Elem{fn_, Level::Top, RUTop{ru_reduce(w)}};
  }

  Elem top_fp(MultiPoly f) const {
    require(fn_.kind == FunctorKind::FixedPoint, "fixed-point top");
    RingDesc r = bottom_ring();
    if (f.nvars() != r.nvars || f.chr() != r.chr)
      throw LevelError("fixed-point top element lives in the base ring");
    if (!(poly_conj(f, 1) == f)) throw LevelError("fixed-point top element must be invariant");
    return Elem{fn_, Level::Top, PolyElem{std::move(f)}};
  }

  // t_v as a top element of the free-underlying functor.
  Elem fu_t(const Mono& v) const {
    std::map<Mono, Coeff, GrlexDesc> t;
    t.emplace(canon_rot(v), Coeff::one(0));
    return top_fu(MultiPoly(1, 0), std::move(t));
  }

  // --- ring operations ------------------------------------------------------

  Elem add(const Elem& a, const Elem& b) const {
    match(a, b);
    Elem r = a;
    std::visit(
        [&](auto& pa) {
          using T = std::decay_t<decltype(pa)>;
          const T& pb = std::get<T>(b.pay);
          if constexpr (std::is_same_v<T, PairAB>) {
            pa.a += pb.a;
            pa.b += pb.b;
          } else if constexpr (std::is_same_v<T, FFTop>) {
            pa.g0 += pb.g0;
            pa.g1 += pb.g1;
          } else if constexpr (std::is_same_v<T, FUTop>) {
            pa.h += pb.h;
            for (auto& [v, c] : pb.t) {
              auto [it, fresh] = pa.t.emplace(v, c);
              if (!fresh) {
                it->second += c;
                if (it->second.is_zero()) pa.t.erase(it);
              }
            }
          } else if constexpr (std::is_same_v<T, RUTop>) {
            pa.w += pb.w;
          } else {
            pa.f += pb.f;
          }
        },
        r.pay);
    return r;
  }

  Elem neg(const Elem& a) const {
    Elem r = a;
    std::visit(
        [&](auto& pa) {
          using T = std::decay_t<decltype(pa)>;
          if constexpr (std::is_same_v<T, PairAB>) {
            pa.a = -pa.a;
            pa.b = -pa.b;
          } else if constexpr (std::is_same_v<T, FFTop>) {
            pa.g0 = -pa.g0;
            pa.g1 = -pa.g1;
          } else if constexpr (std::is_same_v<T, FUTop>) {
            pa.h = -pa.h;
            for (auto& [v, c] : pa.t) c = -c;
          } else if constexpr (std::is_same_v<T, RUTop>) {
            pa.w = -pa.w;
          } else {
            pa.f = -pa.f;
          }
        },
        r.pay);
    return r;
  }

  Elem sub(const Elem& a, const Elem& b) const { return add(a, neg(b)); }

  Elem mul(const Elem& a, const Elem& b) const {
    match(a, b);
    if (a.level == Level::Bottom || std::holds_alternative<PolyElem>(a.pay)) {
      const auto& fa = std::get<PolyElem>(a.pay).f;
      const auto& fb = std::get<PolyElem>(b.pay).f;
      Elem r = a;
      std::get<PolyElem>(r.pay).f = fa * fb;
      return r;
    }
    switch (fn_.kind) {
      case FunctorKind::Burnside:
      case FunctorKind::ModPBurnside: {
        const auto& [a1, b1] = std::get<PairAB>(a.pay);
        const auto& [a2, b2] = std::get<PairAB>(b.pay);
        Coeff pc = Coeff::from_int(fn_.p, pair_chr());
        return top_pair(a1 * a2, a1 * b2 + a2 * b1 + pc * b1 * b2);
      }
      case FunctorKind::FreeFixed: {
        const auto& [g0, g1] = std::get<FFTop>(a.pay);
        const auto& [h0, h1] = std::get<FFTop>(b.pay);
        MultiPoly pc = MultiPoly::from_int(1, 0, fn_.p);
        return top_ff(g0 * h0, ff_hat(g0) * h1 + ff_hat(h0) * g1 + pc * g1 * h1);
      }
      case FunctorKind::FreeUnderlying: {
        const auto& A = std::get<FUTop>(a.pay);
        const auto& B = std::get<FUTop>(b.pay);
        MultiPoly h = A.h * B.h;
        std::map<Mono, Coeff, GrlexDesc> t;
        auto acc = [&](const Mono& v, const Coeff& c) {
          if (c.is_zero()) return;
          Mono k = canon_rot(v);
          auto [it, fresh] = t.emplace(k, c);
          if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) t.erase(it);
          }
        };
        auto h_times_t = [&](const MultiPoly& hp,
                             const std::map<Mono, Coeff, GrlexDesc>& tp) {
          for (auto& [mk, ck] : hp.terms())
            for (auto& [v, cv] : tp) {
              Mono shifted = v;
              for (auto& e : shifted) e += mk[0];
              acc(shifted, ck * cv);
            }
        };
        h_times_t(A.h, B.t);
        h_times_t(B.h, A.t);
        for (auto& [v, cv] : A.t)
          for (auto& [w, cw] : B.t)
            for (std::uint32_t i = 0; i < fn_.p; ++i) acc(mono_mul(v, rot(w, i)), cv * cw);
        return top_fu(std::move(h), std::move(t));
      }
      case FunctorKind::RU: {
        return top_ru(std::get<RUTop>(a.pay).w * std::get<RUTop>(b.pay).w);
      }
      default: throw LevelError("unreachable");
    }
  }

  Elem pow(const Elem& a, std::uint32_t e) const {
    Elem r = one(a.level);
    Elem b = a;
    while (e) {
      if (e & 1) r = mul(r, b);
      if (e >>= 1) b = mul(b, b);
    }
    return r;
  }

  bool eq(const Elem& a, const Elem& b) const {
    match(a, b);
    return a.pay == b.pay;
  }
  bool is_zero(const Elem& a) const { return eq(a, zero(a.level)); }

  // --- structure maps -------------------------------------------------------

  Elem res(const Elem& z) const {
    need(z, Level::Top);
    switch (fn_.kind) {
      case FunctorKind::Burnside:
      case FunctorKind::ModPBurnside: {
        const auto& [a, b] = std::get<PairAB>(z.pay);
        Coeff v = a + Coeff::from_int(fn_.p, pair_chr()) * b;
        return bottom(MultiPoly::constant(0, pair_chr(), v));
      }
      case FunctorKind::FreeFixed: {
        const auto& [g0, g1] = std::get<FFTop>(z.pay);
        return bottom(ff_hat(g0) + g1.scaled(Coeff::from_int(fn_.p, 0)));
      }
      case FunctorKind::FreeUnderlying: {
        const auto& t = std::get<FUTop>(z.pay);
        MultiPoly big = t.h.substitute({diag_product()}, fn_.p, 0);
        for (auto& [v, c] : t.t)
          for (std::uint32_t i = 0; i < fn_.p; ++i)
            big.add_term(rot(v, i), c);
        return bottom(big);
      }
      case FunctorKind::RU: {
        Coeff s = Coeff::zero(0);
        for (auto& [m, c] : std::get<RUTop>(z.pay).w.terms()) s += c;
        return bottom(MultiPoly::constant(0, 0, s));
      }
      case FunctorKind::FixedPoint: return bottom(std::get<PolyElem>(z.pay).f);
    }
    throw LevelError("unreachable");
  }

  Elem tr(const Elem& z) const {
    need(z, Level::Bottom);
    const MultiPoly& f = std::get<PolyElem>(z.pay).f;
    switch (fn_.kind) {
      case FunctorKind::Burnside:
      case FunctorKind::ModPBurnside:
        return top_pair(Coeff::zero(pair_chr()),
                        f.constant_value());
      case FunctorKind::FreeFixed: return top_ff(MultiPoly(2, 0), f);
      case FunctorKind::FreeUnderlying: {
        std::map<Mono, Coeff, GrlexDesc> t;
        for (auto& [v, c] : f.terms()) {
          Mono k = canon_rot(v);
          auto [it, fresh] = t.emplace(k, c);
          if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) t.erase(it);
          }
        }
        return top_fu(MultiPoly(1, 0), std::move(t));
      }
      case FunctorKind::RU: {
        MultiPoly w(1, 0);
        for (std::uint32_t i = 0; i < fn_.p; ++i)
          w.add_term(Mono{i}, f.constant_value());
        return top_ru(w);
      }
      case FunctorKind::FixedPoint: {
        if (fn_.fp == FPKind::ZModP) return top_fp(MultiPoly(0, fn_.p));
        MultiPoly s(fn_.p, 0);
        for (std::uint32_t i = 0; i < fn_.p; ++i) s += poly_conj(f, i);
        return top_fp(s);
      }
    }
    throw LevelError("unreachable");
  }

  Elem conj(const Elem& z, std::uint32_t k = 1) const {
    if (z.level == Level::Top) return z;  // the top level carries no action
    Elem r = z;
    std::get<PolyElem>(r.pay).f = poly_conj(std::get<PolyElem>(z.pay).f, k);
    return r;
  }

  Elem nm(const Elem& z) const {
    need(z, Level::Bottom);
    const MultiPoly& f = std::get<PolyElem>(z.pay).f;
    switch (fn_.kind) {
      case FunctorKind::Burnside: {
        BigInt k = f.constant_value().as_bigint();
        return top_pair(Coeff::from_bigint(k, 0), Coeff::from_bigint(norm_tail(k), 0));
      }
      case FunctorKind::ModPBurnside:
        return top_pair(f.constant_value(), Coeff::zero(fn_.p));
      case FunctorKind::RU: {
        BigInt k = f.constant_value().as_bigint();
        MultiPoly w = MultiPoly::constant(1, 0, Coeff::from_bigint(k, 0));
        for (std::uint32_t i = 0; i < fn_.p; ++i)
          w.add_term(Mono{i}, Coeff::from_bigint(norm_tail(k), 0));
        return top_ru(w);
      }
      case FunctorKind::FixedPoint: {
        if (fn_.fp == FPKind::ZModP) return top_fp(std::get<PolyElem>(z.pay).f);
        MultiPoly prod = MultiPoly::from_int(fn_.p, 0, 1);
        for (std::uint32_t i = 0; i < fn_.p; ++i) prod *= poly_conj(f, i);
        return top_fp(prod);
      }
      case FunctorKind::FreeFixed:
      case FunctorKind::FreeUnderlying: return nm_expand(f);
    }
    throw LevelError("unreachable");
  }

  // --- geometric fixed points -----------------------------------------------

  // Canonical representative in the Phi ring (top modulo the transfer ideal).
  MultiPoly phi(const Elem& z) const {
    need(z, Level::Top);
    switch (fn_.kind) {
      case FunctorKind::Burnside:
      case FunctorKind::ModPBurnside:
        return MultiPoly::constant(0, pair_chr(), std::get<PairAB>(z.pay).a);
      case FunctorKind::FreeFixed: return std::get<FFTop>(z.pay).g0;
      case FunctorKind::FreeUnderlying: return std::get<FUTop>(z.pay).h;
      case FunctorKind::RU: return phi_ru(std::get<RUTop>(z.pay).w);
      case FunctorKind::FixedPoint:
        if (fn_.fp == FPKind::ZModP) return std::get<PolyElem>(z.pay).f;
        return diag_mod_p(std::get<PolyElem>(z.pay).f);
    }
    throw LevelError("unreachable");
  }

  bool tau_member(const Elem& z) const {
    need(z, Level::Top);
    switch (fn_.kind) {
      case FunctorKind::Burnside:
      case FunctorKind::ModPBurnside: return std::get<PairAB>(z.pay).a.is_zero();
      case FunctorKind::FreeFixed: return std::get<FFTop>(z.pay).g0.is_zero();
      case FunctorKind::FreeUnderlying: return std::get<FUTop>(z.pay).h.is_zero();
      case FunctorKind::RU: {
        const MultiPoly& w = std::get<RUTop>(z.pay).w;
        Coeff c0 = w.coeff_of(Mono{0});
        for (std::uint32_t i = 1; i < fn_.p; ++i)
          if (w.coeff_of(Mono{i}) != c0) return false;
        return true;
      }
      case FunctorKind::FixedPoint:
        if (fn_.fp == FPKind::ZModP) return is_zero(z);
        return diag_mod_p(std::get<PolyElem>(z.pay).f).is_zero();
    }
    throw LevelError("unreachable");
  }

  // The ring map phi∘nm from the bottom level into the Phi ring.
  MultiPoly psi(const Elem& z) const {
    need(z, Level::Bottom);
    const MultiPoly& f = std::get<PolyElem>(z.pay).f;
    return psi_poly(f);
  }

  MultiPoly psi_poly(const MultiPoly& f) const {
    switch (fn_.kind) {
      case FunctorKind::Burnside:
      case FunctorKind::ModPBurnside: return f;
      case FunctorKind::RU: {
        return MultiPoly::constant(1, 0, f.constant_value());
      }
      case FunctorKind::FreeFixed:
        return f.substitute({MultiPoly::variable(2, 0, 1)}, 2, 0);
      case FunctorKind::FreeUnderlying: {
        std::vector<MultiPoly> imgs(fn_.p, MultiPoly::variable(1, 0, 0));
        return f.substitute(imgs, 1, 0);
      }
      case FunctorKind::FixedPoint: {
        if (fn_.fp == FPKind::ZModP) return f;
        MultiPoly prod = MultiPoly::from_int(fn_.p, 0, 1);
        for (std::uint32_t i = 0; i < fn_.p; ++i) prod *= poly_conj(f, i);
        return diag_mod_p(prod);
      }
    }
    throw LevelError("unreachable");
  }

  // Canonical form of a Phi-ring element (cyclotomic reduction for the
  // group-ring functor; every other Phi ring is free on its representatives).
  MultiPoly phi_canon(const MultiPoly& ph) const {
    RingDesc pr = phi_ring();
    if (ph.nvars() != pr.nvars || ph.chr() != pr.chr)
      throw LevelError("phi element lives in the wrong ring");
    if (fn_.kind == FunctorKind::RU) return phi_ru(ph);
    return ph;
  }

  // A top-level preimage of a canonical Phi-ring element under phi.
  Elem phi_section(const MultiPoly& ph) const {
    RingDesc r = phi_ring();
    if (ph.nvars() != r.nvars || ph.chr() != r.chr)
      throw LevelError("phi section input lives in the wrong ring");
    switch (fn_.kind) {
      case FunctorKind::Burnside:
      case FunctorKind::ModPBurnside:
        return top_pair(ph.constant_value(), Coeff::zero(pair_chr()));
      case FunctorKind::FreeFixed: return top_ff(ph, MultiPoly(1, 0));
      case FunctorKind::FreeUnderlying: return top_fu(ph, {});
      case FunctorKind::RU: return top_ru(phi_ru(ph));
      case FunctorKind::FixedPoint: {
        if (fn_.fp == FPKind::ZModP) return top_fp(ph);
        MultiPoly lifted(fn_.p, 0);
        for (auto& [m, c] : ph.terms()) lifted.add_term(Mono(fn_.p, m[0]), c.lift());
        return top_fp(lifted);
      }
    }
    throw LevelError("unreachable");
  }

  // Whether the bottom action fixes f; bottoms of pair-shaped functors are trivial.
  bool bottom_fixed(const MultiPoly& f) const { return poly_conj(f, 1) == f; }

  // Sum of the p conjugates (the restriction of tr, an element of the fixed subring).
  MultiPoly bottom_orbit_sum(const MultiPoly& f) const {
    MultiPoly s(f.nvars(), f.chr());
    for (std::uint32_t i = 0; i < fn_.p; ++i) s += poly_conj(f, i);
    return s;
  }
  MultiPoly bottom_orbit_product(const MultiPoly& f) const {
    MultiPoly s = MultiPoly::from_int(f.nvars(), f.chr(), 1);
    for (std::uint32_t i = 0; i < fn_.p; ++i) s *= poly_conj(f, i);
    return s;
  }

  // Canonical representative of a fixed bottom element modulo the image of the
  // bottom-level transfer (used by the iterated ghost construction).
  MultiPoly fix_mod_rho(const MultiPoly& f) const {
    switch (fn_.kind) {
      case FunctorKind::Burnside:
      case FunctorKind::RU: {
        BigInt v = f.constant_value().as_bigint() % fn_.p;
        if (v < 0) v += fn_.p;
        return MultiPoly::constant(0, 0, Coeff::from_bigint(v, 0));
      }
      case FunctorKind::ModPBurnside: return f;  // the transfer image is zero
      case FunctorKind::FreeFixed: {
        MultiPoly r(1, 0);
        for (auto& [m, c] : f.terms()) {
          BigInt v = c.as_bigint() % fn_.p;
          if (v < 0) v += fn_.p;
          r.add_term(m, Coeff::from_bigint(v, 0));
        }
        return r;
      }
      case FunctorKind::FreeUnderlying: return diag_mod_p_as_diag(f);
      case FunctorKind::FixedPoint:
        if (fn_.fp == FPKind::ZModP) return f;
        return diag_mod_p_as_diag(f);
    }
    throw LevelError("unreachable");
  }
  bool rho_member(const MultiPoly& f) const { return fix_mod_rho(f).is_zero(); }

  // --- misc -----------------------------------------------------------------

  MultiPoly poly_conj(const MultiPoly& f, std::uint32_t k) const {
    bool cyclic = fn_.kind == FunctorKind::FreeUnderlying ||
                  (fn_.kind == FunctorKind::FixedPoint && fn_.fp != FPKind::ZModP);
    if (!cyclic || k % fn_.p == 0 || f.nvars() == 0) return f;
    std::vector<MultiPoly> imgs;
    for (std::uint32_t i = 0; i < fn_.p; ++i)
      imgs.push_back(MultiPoly::variable(fn_.p, f.chr(), (i + k) % fn_.p));
    return f.substitute(imgs, fn_.p, f.chr());
  }

  // Canonical representative of a rotation orbit: the lex-greatest rotation,
  // so t[2,0] rather than t[0,2] names the orbit of (2,0).
  Mono canon_rot(const Mono& v) const {
    Mono best = v;
    Mono cur = v;
    for (std::uint32_t i = 1; i < fn_.p; ++i) {
      cur = rot(cur, 1);
      if (lex_less(best, cur)) best = cur;
    }
    return best;
  }

  std::string print(const Elem& z) const {
    std::vector<render::Term> terms;
    if (z.level == Level::Bottom || std::holds_alternative<PolyElem>(z.pay)) {
      RingDesc r = bottom_ring();
      return std::get<PolyElem>(z.pay).f.str(r.names);
    }
    switch (fn_.kind) {
      case FunctorKind::Burnside:
      case FunctorKind::ModPBurnside: {
        const auto& [a, b] = std::get<PairAB>(z.pay);
        if (!a.is_zero())
          terms.push_back({a, ""});
        if (!b.is_zero()) terms.push_back({b, "t"});
        break;
      }
      case FunctorKind::FreeFixed: {
        const auto& [g0, g1] = std::get<FFTop>(z.pay);
        render::collect(g0, {"x", "n"}, "", terms);
        render::collect(g1, {"x"}, "t", terms);
        break;
      }
      case FunctorKind::FreeUnderlying: {
        const auto& t = std::get<FUTop>(z.pay);
        render::collect(t.h, {"n"}, "", terms);
        for (auto& [v, c] : t.t) {
          std::string body = "t[";
          for (std::uint32_t i = 0; i < fn_.p; ++i) {
            if (i) body += ",";
            body += std::to_string(v[i]);
          }
          body += "]";
          terms.push_back({c, body});
        }
        break;
      }
      case FunctorKind::RU: return std::get<RUTop>(z.pay).w.str({"x"});
      default: break;
    }
    return render::join(terms);
  }

  Elem random_elem(Rng& rng, Level lv, const SampleBounds& b) const {
    if (lv == Level::Bottom) {
      RingDesc r = bottom_ring();
      return bottom(random_poly(rng, r, b));
    }
    switch (fn_.kind) {
      case FunctorKind::Burnside:
      case FunctorKind::ModPBurnside:
        return top_pair(Coeff::from_int(rng.range(b.coeff_lo, b.coeff_hi), pair_chr()),
                        Coeff::from_int(rng.range(b.coeff_lo, b.coeff_hi), pair_chr()));
      case FunctorKind::FreeFixed:
        return top_ff(random_poly(rng, {2, 0, {}}, b), random_poly(rng, {1, 0, {}}, b));
      case FunctorKind::FreeUnderlying: {
        std::map<Mono, Coeff, GrlexDesc> t;
        int k = static_cast<int>(rng.range(0, b.max_terms));
        for (int i = 0; i < k; ++i) {
          Mono v(fn_.p, 0);
          for (auto& e : v) e = static_cast<std::uint32_t>(rng.range(0, b.max_exp));
          Coeff c = Coeff::from_int(rng.range(b.coeff_lo, b.coeff_hi), 0);
          if (c.is_zero()) continue;
          Mono key = canon_rot(v);
          auto [it, fresh] = t.emplace(key, c);
          if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) t.erase(it);
          }
        }
        return top_fu(random_poly(rng, {1, 0, {}}, b), std::move(t));
      }
      case FunctorKind::RU: {
        MultiPoly w(1, 0);
        for (std::uint32_t i = 0; i < fn_.p; ++i)
          w.add_term(Mono{i}, Coeff::from_int(rng.range(b.coeff_lo, b.coeff_hi), 0));
        return top_ru(w);
      }
      case FunctorKind::FixedPoint: {
        if (fn_.fp == FPKind::ZModP)
          return top_fp(MultiPoly::from_int(0, fn_.p, rng.range(0, fn_.p - 1)));
        MultiPoly base = random_poly(rng, bottom_ring(), b);
        MultiPoly inv(fn_.p, 0);
        for (std::uint32_t i = 0; i < fn_.p; ++i) inv += poly_conj(base, i);
        int k = static_cast<int>(rng.range(0, 2));
        for (int i = 0; i < k; ++i) {
          Mono d(fn_.p, static_cast<std::uint32_t>(rng.range(0, b.max_exp)));
          inv.add_term(d, Coeff::from_int(rng.range(b.coeff_lo, b.coeff_hi), 0));
        }
        return top_fp(inv);
      }
    }
    throw LevelError("unreachable");
  }

  // A random element of the fixed subring of the bottom level.
  MultiPoly random_fixed(Rng& rng, const SampleBounds& b) const {
    MultiPoly base = random_poly(rng, bottom_ring(), b);
    if (bottom_ring().nvars <= 1 || fn_.kind == FunctorKind::FreeFixed)
      return base;  // trivial action
    MultiPoly inv(base.nvars(), base.chr());
    for (std::uint32_t i = 0; i < fn_.p; ++i) inv += poly_conj(base, i);
    Mono d(fn_.p, static_cast<std::uint32_t>(rng.range(0, b.max_exp)));
    inv.add_term(d, Coeff::from_int(rng.range(b.coeff_lo, b.coeff_hi), base.chr()));
    return inv;
  }

  MultiPoly random_poly(Rng& rng, const RingDesc& r, const SampleBounds& b) const {
    MultiPoly f(r.nvars, r.chr);
    int k = static_cast<int>(rng.range(1, b.max_terms));
    for (int i = 0; i < k; ++i) {
      Mono m(r.nvars, 0);
      for (auto& e : m) e = static_cast<std::uint32_t>(rng.range(0, b.max_exp));
      f.add_term(m, Coeff::from_int(rng.range(b.coeff_lo, b.coeff_hi), r.chr));
    }
    return f;
  }

 private:
  std::uint32_t pair_chr() const {
    return fn_.kind == FunctorKind::ModPBurnside ? fn_.p : 0;
  }

  RingDesc poly_vars(std::uint32_t chr) const {
    RingDesc r;
    r.nvars = fn_.p;
    r.chr = chr;
    for (std::uint32_t i = 0; i < fn_.p; ++i) r.names.push_back("x" + std::to_string(i));
    return r;
  }

  void require(bool ok, const char* what) const {
    if (!ok) throw LevelError(std::string("payload mismatch: expected ") + what);
  }
  void need(const Elem& z, Level lv) const {
    if (z.fn != fn_) throw LevelError("element belongs to a different functor");
    if (z.level != lv)
      throw LevelError(lv == Level::Top ? "operation needs a top-level element"
                                        : "operation needs a bottom-level element");
  }
  void match(const Elem& a, const Elem& b) const {
    if (a.fn != fn_ || b.fn != fn_) throw LevelError("element belongs to a different functor");
    if (a.level != b.level) throw LevelError("level mismatch in arithmetic");
  }

  // (k^p - k)/p, an integer by Fermat.
  BigInt norm_tail(const BigInt& k) const {
    BigInt kp = 1;
    for (std::uint32_t i = 0; i < fn_.p; ++i) kp *= k;
    return (kp - k) / fn_.p;
  }

  MultiPoly ff_hat(const MultiPoly& g0) const {  // g0(x, x^p)
    return g0.substitute(
        {MultiPoly::variable(1, 0, 0), MultiPoly::variable(1, 0, 0, fn_.p)}, 1, 0);
  }

  Mono rot(const Mono& v, std::uint32_t k) const {  // right rotation by k
    k %= fn_.p;
    Mono r(v.size());
    for (std::uint32_t j = 0; j < v.size(); ++j) r[(j + k) % fn_.p] = v[j];
    return r;
  }

  MultiPoly diag_product() const {  // x0 * x1 * ... * x_{p-1}
    MultiPoly m(fn_.p, 0);
    m.add_term(Mono(fn_.p, 1), Coeff::one(0));
    return m;
  }

  MultiPoly phi_ru(const MultiPoly& w) const {
    // Reduce mod 1 + x + ... + x^{p-1}: x^{p-1} = -(1 + ... + x^{p-2}).
    MultiPoly r = w;
    while (r.degree_in(0) >= fn_.p - 1 && !r.is_zero()) {
      std::uint32_t d = r.degree_in(0);
      if (d < fn_.p - 1) break;
      Coeff c = r.coeff_of(Mono{d});
      r.add_term(Mono{d}, -c);
      for (std::uint32_t i = 0; i < fn_.p - 1; ++i)
        r.add_term(Mono{d - fn_.p + 1 + i}, -c);
    }
    return r;
  }

  // Diagonal coefficients mod p, as a univariate in the Phi variable.
  MultiPoly diag_mod_p(const MultiPoly& f) const {
    MultiPoly r(1, fn_.p);
    for (auto& [m, c] : f.terms()) {
      bool diag = true;
      for (auto e : m)
        if (e != m[0]) diag = false;
      if (diag) r.add_term(Mono{m[0]}, c.reduce_to(fn_.p));
    }
    return r;
  }

  // Same reduction but kept inside the ambient ring (diagonal monomials with
  // coefficients lifted to [0, p)).
  MultiPoly diag_mod_p_as_diag(const MultiPoly& f) const {
    MultiPoly r(f.nvars(), 0);
    for (auto& [m, c] : f.terms()) {
      bool diag = true;
      for (auto e : m)
        if (e != m[0]) diag = false;
      if (!diag) continue;
      BigInt v = c.as_bigint() % fn_.p;
      if (v < 0) v += fn_.p;
      r.add_term(m, Coeff::from_bigint(v, 0));
    }
    return r;
  }

  MultiPoly ru_reduce(const MultiPoly& w) const {
    MultiPoly r(1, 0);
    for (auto& [m, c] : w.terms()) r.add_term(Mono{m[0] % fn_.p}, c);
    return r;
  }

  // Norm of a sum via the word expansion: the norms of the individual
  // monomials plus one transfer per free rotation-orbit of non-constant words.
  Elem nm_expand(const MultiPoly& f) const {
    std::vector<std::pair<Mono, Coeff>> terms(f.terms().begin(), f.terms().end());
    std::size_t m = terms.size();
    Elem acc = zero(Level::Top);
    for (auto& [v, c] : terms) acc = add(acc, nm_monomial(v, c));
    if (m >= 2) {
      double words = 1;
      for (std::uint32_t i = 0; i < fn_.p; ++i) words *= static_cast<double>(m);
      if (words > 2e6)
        throw ResourceError("norm expansion too large: " + std::to_string(m) + " monomials at p = " +
                            std::to_string(fn_.p));
      std::vector<std::size_t> w(fn_.p, 0);
      MultiPoly transfer_arg(f.nvars(), 0);
      while (true) {
        if (!word_constant(w) && word_lex_least(w)) {
          Coeff c = Coeff::one(0);
          Mono expo(f.nvars(), 0);
          for (std::uint32_t i = 0; i < fn_.p; ++i) {
            c *= terms[w[i]].second;
            Mono rotated = fn_.kind == FunctorKind::FreeUnderlying
                               ? rot(terms[w[i]].first, i)
                               : terms[w[i]].first;
            expo = mono_mul(expo, rotated);
          }
          transfer_arg.add_term(expo, c);
        }
        std::size_t i = 0;
        for (; i < fn_.p; ++i) {
          if (++w[i] < m) break;
          w[i] = 0;
        }
        if (i == fn_.p) break;
      }
      acc = add(acc, tr(bottom(transfer_arg)));
    }
    return acc;
  }

  bool word_constant(const std::vector<std::size_t>& w) const {
    for (auto v : w)
      if (v != w[0]) return false;
    return true;
  }
  bool word_lex_least(const std::vector<std::size_t>& w) const {
    std::vector<std::size_t> cur = w;
    for (std::uint32_t k = 1; k < fn_.p; ++k) {
      std::rotate(cur.begin(), cur.begin() + 1, cur.end());
      if (std::lexicographical_compare(cur.begin(), cur.end(), w.begin(), w.end()))
        return false;
    }
    return true;
  }

  // Norm of a single monomial c*x^v: nm(c) * n^{deg v}.
  Elem nm_monomial(const Mono& v, const Coeff& c) const {
    BigInt k = c.as_bigint();
    std::uint32_t deg = static_cast<std::uint32_t>(mono_degree(v));
    if (fn_.kind == FunctorKind::FreeFixed) {
      MultiPoly g0(2, 0);
      g0.add_term(Mono{0, deg}, Coeff::from_bigint(k, 0));
      MultiPoly g1(1, 0);
      g1.add_term(Mono{deg * fn_.p}, Coeff::from_bigint(norm_tail(k), 0));
      return top_ff(std::move(g0), std::move(g1));
    }
    MultiPoly h(1, 0);
    h.add_term(Mono{deg}, Coeff::from_bigint(k, 0));
    std::map<Mono, Coeff, GrlexDesc> t;
    Coeff tail = Coeff::from_bigint(norm_tail(k), 0);
    if (!tail.is_zero()) t.emplace(Mono(fn_.p, deg), tail);
    return top_fu(std::move(h), std::move(t));
  }

  FunctorSpec fn_;
};

}  // namespace nakaoka
