#pragma once
#include <string>
#include <vector>

#include "nakaoka/tambara.hpp"

namespace nakaoka {

// Ghost construction over a catalog functor T: the ghost has the same bottom
// level, and its top level is Fix(bottom) x Phi with coordinatewise ring
// structure. The ghost map sends a top class z to (res z, phi z) and is the
// identity downstairs.
struct GhostTop {
  MultiPoly fix;  // invariant element of the bottom ring
  MultiPoly phi;  // canonical element of the Phi ring
  bool operator==(const GhostTop& o) const { return fix == o.fix && phi == o.phi; }
};

// Iterated ghost representatives. The middle coordinates live in the quotient
// of the fixed subring by the image of the bottom transfer and are stored as
// canonical representatives.
struct Ghost2Top {
  MultiPoly x1;
  MultiPoly x2;  // canonical mod the transfer image
  MultiPoly phi;
  bool operator==(const Ghost2Top& o) const {
    return x1 == o.x1 && x2 == o.x2 && phi == o.phi;
  }
};
struct Ghost3Top {
  MultiPoly x1;
  MultiPoly x2;  // canonical
  MultiPoly x3;  // canonical
  MultiPoly phi;
};

class Ghost {
 public:
  explicit Ghost(FunctorSpec fn) : T_(fn) {}

  const Functor& base() const { return T_; }

  GhostTop make(MultiPoly fix, MultiPoly phi) const {
    RingDesc br = T_.bottom_ring();
    if (fix.nvars() != br.nvars || fix.chr() != br.chr)
      throw LevelError("ghost fix coordinate lives in the wrong ring");
    if (!T_.bottom_fixed(fix)) throw LevelError("ghost fix coordinate must be invariant");
    return GhostTop{std::move(fix), T_.phi_canon(phi)};
  }

  GhostTop zero() const { return from_int(0); }
  GhostTop one() const { return from_int(1); }
  GhostTop from_int(long long v) const {
    RingDesc br = T_.bottom_ring(), pr = T_.phi_ring();
    return GhostTop{MultiPoly::from_int(br.nvars, br.chr, v),
                    MultiPoly::from_int(pr.nvars, pr.chr, v)};
  }

  GhostTop add(const GhostTop& a, const GhostTop& b) const {
    return make(a.fix + b.fix, a.phi + b.phi);
  }
  GhostTop neg(const GhostTop& a) const { return make(-a.fix, -a.phi); }
  GhostTop sub(const GhostTop& a, const GhostTop& b) const { return add(a, neg(b)); }
  GhostTop mul(const GhostTop& a, const GhostTop& b) const {
    return make(a.fix * b.fix, a.phi * b.phi);
  }
  GhostTop scale(long long k, const GhostTop& a) const {
    RingDesc br = T_.bottom_ring(), pr = T_.phi_ring();
    return make(a.fix.scaled(Coeff::from_int(k, br.chr)),
                a.phi.scaled(Coeff::from_int(k, pr.chr)));
  }

  // structure maps of the ghost functor
  Elem res(const GhostTop& z) const { return T_.bottom(z.fix); }
  GhostTop tr(const Elem& b) const {
    MultiPoly f = bottom_poly(b);
    RingDesc pr = T_.phi_ring();
    return make(T_.bottom_orbit_sum(f), MultiPoly(pr.nvars, pr.chr));
  }
  GhostTop nm(const Elem& b) const {
    MultiPoly f = bottom_poly(b);
    return make(T_.bottom_orbit_product(f), T_.psi_poly(f));
  }

  // the ghost map on the top level
  GhostTop ghost_map(const Elem& z) const {
    Elem r = T_.res(z);
    return make(bottom_poly(r), T_.phi(z));
  }

  bool is_zero(const GhostTop& z) const { return z.fix.is_zero() && z.phi.is_zero(); }

  std::string print(const GhostTop& z) const {
    RingDesc br = T_.bottom_ring(), pr = T_.phi_ring();
    return "(" + z.fix.str(br.names) + " ; " + z.phi.str(pr.names) + ")";
  }

  GhostTop random_top(Rng& rng, const SampleBounds& b) const {
    RingDesc pr = T_.phi_ring();
    return make(T_.random_fixed(rng, b), T_.random_poly(rng, pr, b));
  }

  // --- the iterated ghost and its monad structure ---------------------------

  // unit 1: the ghost map of the ghost functor itself
  Ghost2Top eta1(const GhostTop& z) const {
    return Ghost2Top{z.fix, T_.fix_mod_rho(z.fix), z.phi};
  }
  // unit 2: the ghost construction applied to the ghost map of T; the middle
  // coordinate restricts a top-level representative of the phi coordinate
  Ghost2Top eta2(const GhostTop& z) const {
    Elem y = T_.phi_section(z.phi);
    MultiPoly ry = bottom_poly(T_.res(y));
    return Ghost2Top{z.fix, T_.fix_mod_rho(ry), z.phi};
  }
  GhostTop mu(const Ghost2Top& z) const { return make(z.x1, z.phi); }

  Ghost2Top g2_add(const Ghost2Top& a, const Ghost2Top& b) const {
    return Ghost2Top{a.x1 + b.x1, T_.fix_mod_rho(a.x2 + b.x2),
                     T_.phi_canon(a.phi + b.phi)};
  }
  Ghost2Top g2_mul(const Ghost2Top& a, const Ghost2Top& b) const {
    return Ghost2Top{a.x1 * b.x1, T_.fix_mod_rho(a.x2 * b.x2),
                     T_.phi_canon(a.phi * b.phi)};
  }

  // multiplication applied at the outer and inner layer of the triple ghost
  Ghost2Top mu_outer(const Ghost3Top& z) const { return Ghost2Top{z.x1, z.x3, z.phi}; }
  Ghost2Top mu_inner(const Ghost3Top& z) const { return Ghost2Top{z.x1, z.x2, z.phi}; }

  Ghost3Top random_g3(Rng& rng, const SampleBounds& b) const {
    RingDesc pr = T_.phi_ring();
    return Ghost3Top{T_.random_fixed(rng, b), T_.fix_mod_rho(T_.random_fixed(rng, b)),
                     T_.fix_mod_rho(T_.random_fixed(rng, b)),
                     T_.phi_canon(T_.random_poly(rng, pr, b))};
  }

 private:
  static const MultiPoly& bottom_poly(const Elem& e) {
    return std::get<PolyElem>(e.pay).f;
  }

  Functor T_;
};

// --- kernel analysis ---------------------------------------------------------

// What is known, and checked, about the kernel of the ghost map on the top
// level: for the mod-p pair functor the kernel is exactly the transfer image
// and satisfies pK = 0 and K^2 = 0; for every other catalog functor the ghost
// map is injective, which the probe confirms on samples together with the
// Frobenius collapse (tr(1) - p) tr(f) = 0 that kills the candidate torsion.
struct KernelReport {
  FunctorSpec fn;
  bool kernel_is_transfer_image = false;  // mod-p pair functor only
  std::uint64_t samples = 0;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

inline KernelReport ghost_kernel_probe(const FunctorSpec& spec, std::uint64_t trials,
                                       std::uint64_t seed, SampleBounds bounds = {}) {
  Functor T(spec);
  Ghost G(spec);
  Rng rng(seed);
  KernelReport rep;
  rep.fn = spec;
  auto flag = [&](bool ok, const std::string& what) {
    if (!ok && rep.violations.size() < 8) rep.violations.push_back(what);
  };

  if (spec.kind == FunctorKind::ModPBurnside) {
    rep.kernel_is_transfer_image = true;
    for (std::uint64_t i = 0; i < trials; ++i) {
      Elem b = T.random_elem(rng, Level::Bottom, bounds);
      Elem b2 = T.random_elem(rng, Level::Bottom, bounds);
      Elem z = T.tr(b), z2 = T.tr(b2);
      ++rep.samples;
      flag(G.is_zero(G.ghost_map(z)), "transfer class escapes the kernel");
      // pK = 0 and K^2 = 0, exactly
      Elem pz = T.zero(Level::Top);
      for (std::uint32_t k = 0; k < spec.p; ++k) pz = T.add(pz, z);
      flag(T.is_zero(pz), "p K != 0");
      flag(T.is_zero(T.mul(z, z2)), "K^2 != 0");
      // completeness: a random top class is in the kernel iff it is a transfer
      Elem w = T.random_elem(rng, Level::Top, bounds);
      bool in_ker = G.is_zero(G.ghost_map(w));
      flag(in_ker == T.tau_member(w), "kernel differs from the transfer image");
    }
    return rep;
  }

  for (std::uint64_t i = 0; i < trials; ++i) {
    Elem z = T.random_elem(rng, Level::Top, bounds);
    Elem w = T.random_elem(rng, Level::Top, bounds);
    ++rep.samples;
    if (!T.eq(z, w))
      flag(!(G.ghost_map(z) == G.ghost_map(w)), "ghost map identified distinct classes");
    // the candidate torsion collapses: (tr(1) - p) tr(f) = 0
    Elem f = T.random_elem(rng, Level::Bottom, bounds);
    Elem lhs = T.mul(T.sub(T.tr(T.one(Level::Bottom)), T.from_int(Level::Top, spec.p)),
                     T.tr(f));
    flag(T.is_zero(lhs), "(tr(1) - p) tr(f) != 0");
  }
  return rep;
}

}  // namespace nakaoka
