#pragma once
#include <map>
#include <string>
#include <vector>

#include "nakaoka/tambara.hpp"

namespace nakaoka {

// Seeded law checker for the level structure of a catalog functor: additivity
// of the transfer, multiplicativity of the norm, the two composite formulas
// res∘tr and res∘nm, ring-map laws for res and the bottom action, Frobenius
// reciprocity, and the reciprocity residue for norms of sums.
struct AxiomReport {
  FunctorSpec fn;
  std::uint64_t trials = 0;
  std::uint64_t checks = 0;
  std::map<std::string, std::uint64_t> law_counts;  // checks per law
  std::vector<std::string> violations;              // empty on a clean run
  bool ok() const { return violations.empty(); }
};

namespace detail {

inline void note(AxiomReport& rep, const Functor& F, const std::string& law,
                 const Elem& lhs, const Elem& rhs) {
  ++rep.checks;
  ++rep.law_counts[law];
  if (F.eq(lhs, rhs)) return;
  if (rep.violations.size() < 8)
    rep.violations.push_back(law + ": " + F.print(lhs) + " != " + F.print(rhs));
  else if (rep.violations.size() == 8)
    rep.violations.push_back("(further violations suppressed)");
}

inline void note_flag(AxiomReport& rep, bool ok, const std::string& law) {
  ++rep.checks;
  ++rep.law_counts[law];
  if (!ok && rep.violations.size() < 8) rep.violations.push_back(law);
}

}  // namespace detail

inline AxiomReport check_axioms(const FunctorSpec& spec, std::uint64_t trials,
                                std::uint64_t seed, SampleBounds bounds = {}) {
  Functor F(spec);
  Rng rng(seed);
  AxiomReport rep;
  rep.fn = spec;
  rep.trials = trials;
  const std::uint32_t p = spec.p;

  // Keep norm inputs small enough that the orbit-word expansion of nm on a
  // product of two samples stays cheap at p = 5.
  SampleBounds nm_bounds = bounds;
  nm_bounds.max_terms = p >= 5 ? 2 : 3;

  using detail::note;
  using detail::note_flag;

  for (std::uint64_t trial = 0; trial < trials; ++trial) {
    Elem f = F.random_elem(rng, Level::Bottom, bounds);
    Elem g = F.random_elem(rng, Level::Bottom, bounds);
    Elem z = F.random_elem(rng, Level::Top, bounds);
    Elem w = F.random_elem(rng, Level::Top, bounds);
    Elem fs = F.random_elem(rng, Level::Bottom, nm_bounds);
    Elem gs = F.random_elem(rng, Level::Bottom, nm_bounds);

    // transfer is additive and conjugation-invariant
    note(rep, F, "tr(f+g) = tr(f) + tr(g)", F.tr(F.add(f, g)), F.add(F.tr(f), F.tr(g)));
    note(rep, F, "tr(conj f) = tr(f)", F.tr(F.conj(f)), F.tr(f));

    // norm is multiplicative, normalized, and conjugation-invariant
    note(rep, F, "nm(f*g) = nm(f) nm(g)", F.nm(F.mul(fs, gs)), F.mul(F.nm(fs), F.nm(gs)));
    note(rep, F, "nm(1) = 1", F.nm(F.one(Level::Bottom)), F.one(Level::Top));
    note(rep, F, "nm(conj f) = nm(f)", F.nm(F.conj(fs)), F.nm(fs));

    // restriction is a ring map
    note(rep, F, "res(z+w) = res z + res w", F.res(F.add(z, w)), F.add(F.res(z), F.res(w)));
    note(rep, F, "res(z*w) = res z * res w", F.res(F.mul(z, w)), F.mul(F.res(z), F.res(w)));
    note(rep, F, "res(1) = 1", F.res(F.one(Level::Top)), F.one(Level::Bottom));
    note(rep, F, "conj(res z) = res z", F.conj(F.res(z)), F.res(z));

    // the bottom action is by ring maps of order p
    note(rep, F, "conj(f+g) = conj f + conj g", F.conj(F.add(f, g)), F.add(F.conj(f), F.conj(g)));
    note(rep, F, "conj(f*g) = conj f * conj g", F.conj(F.mul(f, g)), F.mul(F.conj(f), F.conj(g)));
    Elem cycled = f;
    for (std::uint32_t i = 0; i < p; ++i) cycled = F.conj(cycled);
    note(rep, F, "conj^p = id", cycled, f);

    // Frobenius reciprocity
    note(rep, F, "tr(f) z = tr(f res z)", F.mul(F.tr(f), z), F.tr(F.mul(f, F.res(z))));

    // double-coset composites
    Elem orbit_sum = F.zero(Level::Bottom);
    Elem orbit_prod = F.one(Level::Bottom);
    for (std::uint32_t i = 0; i < p; ++i) {
      orbit_sum = F.add(orbit_sum, F.conj(f, i));
      orbit_prod = F.mul(orbit_prod, F.conj(fs, i));
    }
    note(rep, F, "res tr f = sum of conjugates", F.res(F.tr(f)), orbit_sum);
    note(rep, F, "res nm f = product of conjugates", F.res(F.nm(fs)), orbit_prod);

    // the transfer lands in tau, and the norm of a sum deviates from the sum
    // of norms only by a transfer class
    note_flag(rep, F.tau_member(F.tr(f)), "tr(f) lies in tau");
    Elem dev = F.sub(F.nm(F.add(fs, gs)), F.add(F.nm(fs), F.nm(gs)));
    note_flag(rep, F.phi(dev).is_zero(), "phi(nm(f+g) - nm f - nm g) = 0");
  }
  return rep;
}

// Every catalog functor available at a given prime.
inline std::vector<FunctorSpec> catalog(std::uint32_t p) {
  std::vector<FunctorSpec> out{
      make_functor(FunctorKind::Burnside, p),
      make_functor(FunctorKind::FreeFixed, p),
      make_functor(FunctorKind::FreeUnderlying, p),
      make_functor(FunctorKind::RU, p),
      make_functor(FunctorKind::ModPBurnside, p),
      make_functor(FunctorKind::FixedPoint, p, FPKind::ZModP),
  };
  if (p == 2) out.push_back(make_functor(FunctorKind::FixedPoint, p, FPKind::SwapPoly));
  if (p <= 3) out.push_back(make_functor(FunctorKind::FixedPoint, p, FPKind::CyclicPoly));
  return out;
}

}  // namespace nakaoka
