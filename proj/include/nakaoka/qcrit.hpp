#pragma once
// Primality testing for level-wise ideal pairs via multiplicative translates.
//
// A level-wise pair of ideals I = (I_bottom, I_top), closed under the
// structure maps, is prime exactly when for every pair of elements x, y at
// arbitrary levels: if every same-level product of a translate of x with a
// translate of y lies in I, then x or y already lies in I.  The translate
// set of an element packages the finitely many images needed for the test:
//   bottom z:  { conj^i(z) } at the bottom,  { nm(z) } at the top
//   top    z:  { z, nm(res(z)) } at the top, { conj^i(res(z)) } at the bottom
//
// The same test runs inside the ghost construction, whose top level is the
// product of the fixed subring and the geometric-fixed ring.

#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "nakaoka/ghost.hpp"
#include "nakaoka/rng.hpp"
#include "nakaoka/tambara.hpp"

namespace nakaoka {

struct TranslateSet {
  std::vector<Elem> bottom;
  std::vector<Elem> top;
};

inline TranslateSet translates(const Functor& F, const Elem& z) {
  TranslateSet out;
  if (z.level == Level::Bottom) {
    for (std::uint64_t i = 0; i < F.p(); ++i)
      out.bottom.push_back(F.conj(z, static_cast<std::uint32_t>(i)));
    out.top.push_back(F.nm(z));
  } else {
    out.top.push_back(z);
    Elem r = F.res(z);
    out.top.push_back(F.nm(r));
    for (std::uint64_t i = 0; i < F.p(); ++i)
      out.bottom.push_back(F.conj(r, static_cast<std::uint32_t>(i)));
  }
  return out;
}

// Membership oracle for a level-wise ideal pair.
struct LevelIdealOracle {
  std::function<bool(const Elem&)> bottom;
  std::function<bool(const Elem&)> top;
  bool member(const Elem& z) const {
    return z.level == Level::Bottom ? bottom(z) : top(z);
  }
};

// Q(I; x, y): every same-level product of translates lands in I.
inline bool q_criterion(const Functor& F, const LevelIdealOracle& I, const Elem& x,
                        const Elem& y) {
  TranslateSet tx = translates(F, x);
  TranslateSet ty = translates(F, y);
  for (const auto& a : tx.bottom)
    for (const auto& b : ty.bottom)
      if (!I.bottom(F.mul(a, b))) return false;
  for (const auto& a : tx.top)
    for (const auto& b : ty.top)
      if (!I.top(F.mul(a, b))) return false;
  return true;
}

// --- ghost version ---------------------------------------------------------

using GElem = std::variant<Elem, GhostTop>;  // Elem must be bottom-level

struct GhostTranslateSet {
  std::vector<Elem> bottom;
  std::vector<GhostTop> top;
};

inline GhostTranslateSet ghost_translates(const Ghost& G, const GElem& z) {
  const Functor& F = G.base();
  GhostTranslateSet out;
  if (const auto* b = std::get_if<Elem>(&z)) {
    if (b->level != Level::Bottom)
      throw LevelError("ghost_translates: element-level ghost data must sit at the bottom");
    for (std::uint64_t i = 0; i < F.p(); ++i)
      out.bottom.push_back(F.conj(*b, static_cast<std::uint32_t>(i)));
    out.top.push_back(G.nm(*b));
    return out;
  }
  const GhostTop& t = std::get<GhostTop>(z);
  out.top.push_back(t);
  Elem r = G.res(t);
  out.top.push_back(G.nm(r));
  for (std::uint64_t i = 0; i < F.p(); ++i)
    out.bottom.push_back(F.conj(r, static_cast<std::uint32_t>(i)));
  return out;
}

struct GhostIdealOracle {
  std::function<bool(const Elem&)> bottom;
  std::function<bool(const GhostTop&)> top;
  bool member(const Ghost& G, const GElem& z) const {
    (void)G;
    if (const auto* b = std::get_if<Elem>(&z)) return bottom(*b);
    return top(std::get<GhostTop>(z));
  }
};

inline bool ghost_q_criterion(const Ghost& G, const GhostIdealOracle& I, const GElem& x,
                              const GElem& y) {
  const Functor& F = G.base();
  GhostTranslateSet tx = ghost_translates(G, x);
  GhostTranslateSet ty = ghost_translates(G, y);
  for (const auto& a : tx.bottom)
    for (const auto& b : ty.bottom)
      if (!I.bottom(F.mul(a, b))) return false;
  for (const auto& a : tx.top)
    for (const auto& b : ty.top)
      if (!I.top(G.mul(a, b))) return false;
  return true;
}

// --- seeded sampling -------------------------------------------------------

struct QProbeReport {
  std::uint64_t pairs_checked = 0;
  std::optional<std::string> counterexample;  // set when primality fails
  bool prime_consistent() const { return !counterexample.has_value(); }
};

// Samples random element pairs and searches for a violation of the prime
// condition: Q(I; x, y) true with neither factor in I.  A returned
// counterexample proves the pair is not prime; an empty report is sampling
// evidence only.
inline QProbeReport is_prime_sampled(const Functor& F, const LevelIdealOracle& I,
                                     std::uint32_t trials, std::uint64_t seed,
                                     const SampleBounds& bounds = {}) {
  Rng rng(seed);
  QProbeReport rep;
  for (std::uint32_t i = 0; i < trials; ++i) {
    Level lx = rng.range(0, 1) == 0 ? Level::Bottom : Level::Top;
    Level ly = rng.range(0, 1) == 0 ? Level::Bottom : Level::Top;
    Elem x = F.random_elem(rng, lx, bounds);
    Elem y = F.random_elem(rng, ly, bounds);
    ++rep.pairs_checked;
    if (q_criterion(F, I, x, y) && !I.member(x) && !I.member(y)) {
      rep.counterexample = "x = " + F.print(x) + ", y = " + F.print(y);
      return rep;
    }
  }
  return rep;
}

}  // namespace nakaoka
