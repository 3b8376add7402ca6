#pragma once
#include <cstdlib>
#include <string>
#include <vector>

#include "nakaoka/poly.hpp"

namespace nakaoka {

inline std::uint32_t gb_degree_cap() {
  if (const char* env = std::getenv("NAKAOKA_GB_CAP")) {
    long v = std::atol(env);
    if (v > 0) return static_cast<std::uint32_t>(v);
  }
  return 40;
}

enum class CoeffRing { Z, Q, Fq };

namespace detail {

inline void check_cap(const MultiPoly& p, std::uint32_t cap) {
  if (p.total_degree() > cap)
    throw ResourceError("Groebner degree cap " + std::to_string(cap) +
                        " exceeded (override with NAKAOKA_GB_CAP)");
}

}  // namespace detail

// Remainder of f on division by the (not necessarily Groebner) family basis.
inline MultiPoly normal_form(const MultiPoly& f, const std::vector<MultiPoly>& basis,
                             Order ord) {
  MultiPoly r(f.nvars(), f.chr());
  MultiPoly p = f;
  while (!p.is_zero()) {
    auto [lm, lc] = p.leading(ord);
    bool reduced = false;
    for (const auto& g : basis) {
      if (g.is_zero()) continue;
      auto [gm, gc] = g.leading(ord);
      if (!mono_divides(gm, lm)) continue;
      p -= g.scaled(lc / gc) *
           MultiPoly::monomial(f.nvars(), f.chr(), mono_div(lm, gm), Coeff::one(f.chr()));
      reduced = true;
      break;
    }
    if (!reduced) {
      r.add_term(lm, lc);
      p.add_term(lm, -lc);
    }
  }
  return r;
}

// Reduced Groebner basis by Buchberger's algorithm with the coprime-leading-
// monomial skip. Coefficients must be field-valued: characteristic 0 runs over
// Q, characteristic q over F_q. Degree growth beyond the cap raises ResourceError.
inline std::vector<MultiPoly> groebner_basis(std::vector<MultiPoly> gens, Order ord,
                                             std::uint32_t cap = gb_degree_cap()) {
  std::vector<MultiPoly> basis;
  for (auto& g : gens) {
    if (g.is_zero()) continue;
    detail::check_cap(g, cap);
    basis.push_back(g);
  }
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  auto queue_with_all = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i) pairs.emplace_back(i, j);
  };
  for (std::size_t j = 0; j < basis.size(); ++j) queue_with_all(j);

  while (!pairs.empty()) {
    auto [i, j] = pairs.back();
    pairs.pop_back();
    auto [mi, ci] = basis[i].leading(ord);
    auto [mj, cj] = basis[j].leading(ord);
    Mono lcm = mono_lcm(mi, mj);
    if (lcm == mono_mul(mi, mj)) continue;  // coprime leading monomials
    auto mono_of = [&](const Mono& m) {
      return MultiPoly::monomial(basis[i].nvars(), basis[i].chr(), m,
                                 Coeff::one(basis[i].chr()));
    };
    MultiPoly s = basis[i].scaled(Coeff::one(ci.chr()) / ci) * mono_of(mono_div(lcm, mi)) -
                  basis[j].scaled(Coeff::one(cj.chr()) / cj) * mono_of(mono_div(lcm, mj));
    detail::check_cap(s, cap);
    MultiPoly r = normal_form(s, basis, ord);
    if (r.is_zero()) continue;
    detail::check_cap(r, cap);
    basis.push_back(r);
    queue_with_all(basis.size() - 1);
  }

  // Interreduce: monic generators, minimal leading terms, fully reduced tails.
  std::vector<MultiPoly> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    auto [mi, ci] = basis[i].leading(ord);
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (i == j) continue;
      auto [mj, cj] = basis[j].leading(ord);
      if (mono_divides(mj, mi) && !(mj == mi && j > i)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) minimal.push_back(basis[i].scaled(Coeff::one(ci.chr()) / ci));
  }
  std::vector<MultiPoly> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<MultiPoly> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    MultiPoly r = normal_form(minimal[i], others, ord);
    if (!r.is_zero()) {
      auto [m, c] = r.leading(ord);
      reduced.push_back(r.scaled(Coeff::one(c.chr()) / c));
    }
  }
  std::sort(reduced.begin(), reduced.end(), [&](const MultiPoly& a, const MultiPoly& b) {
    return order_less(b.leading(ord).first, a.leading(ord).first, ord);
  });
  return reduced;
}

// Public entry mirroring the engine contract: the coefficient ring must be a
// field; requesting a basis over Z is a structured error, not a silent Q run.
inline std::vector<MultiPoly> groebner(const std::vector<MultiPoly>& gens, CoeffRing ring,
                                       Order ord = Order::Grlex,
                                       std::uint32_t cap = gb_degree_cap()) {
  if (ring == CoeffRing::Z)
    throw UnsupportedError("Groebner bases over Z are not supported; use Q or F_q");
  return groebner_basis(gens, ord, cap);
}

inline bool ideal_member(const MultiPoly& f, const std::vector<MultiPoly>& gens,
                         Order ord = Order::Grlex, std::uint32_t cap = gb_degree_cap()) {
  if (f.is_zero()) return true;
  auto gb = groebner_basis(gens, ord, cap);
  return normal_form(f, gb, ord).is_zero();
}

// Generators of I ∩ k[x_keep, ..., x_{n-1}]: lex basis with the eliminated
// block (variables 0 .. keep_from-1) ranked highest, filtered to the subring.
inline std::vector<MultiPoly> elim_intersection(const std::vector<MultiPoly>& gens,
                                                std::uint32_t keep_from,
                                                std::uint32_t cap = gb_degree_cap()) {
  auto gb = groebner_basis(gens, Order::Lex, cap);
  std::vector<MultiPoly> out;
  for (const auto& g : gb) {
    bool in_subring = true;
    for (auto& [m, c] : g.terms())
      for (std::uint32_t i = 0; i < keep_from && in_subring; ++i)
        if (m[i] > 0) in_subring = false;
    if (in_subring) out.push_back(g);
  }
  return out;
}

}  // namespace nakaoka
