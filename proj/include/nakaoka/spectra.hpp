#pragma once

// Spectrum-level constructions over the functor catalog:
//   * windowed spectra of the pair functor and the group-ring functor, as
//     fully decided containment posets (SpecPoset),
//   * Krull-dimension certificates: explicit strict chains with per-link
//     strictness witnesses, verified against the membership oracles,
//   * the domain criterion for the zero ideal, with explicit counterexample
//     pairs where the answer is negative,
//   * the linearization morphism from the pair functor into the group-ring
//     functor and the induced pullback bijection of windowed spectra,
//   * fixed-point functor spectra checks (conjugate ideals, orbit meets,
//     level identities),
//   * the four induced maps between the spectra of the two free functors
//     (diagonal, additive-generator, multiplicative-generator, rotation).

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nakaoka/poset.hpp"
#include "nakaoka/qcrit.hpp"

namespace nakaoka {

// ---------------------------------------------------------------------------
// characteristic windows
// ---------------------------------------------------------------------------

// Sorted, deduplicated window of characteristics; every entry must be 0 or a
// rational prime.
inline std::vector<std::uint64_t> normalize_window(std::vector<std::uint64_t> w) {
  std::sort(w.begin(), w.end());
  w.erase(std::unique(w.begin(), w.end()), w.end());
  for (std::uint64_t q : w)
    if (q != 0 && !is_prime_u64(q))
      throw LevelError("window entries must be 0 or prime, got " + std::to_string(q));
  return w;
}

namespace specdetail {

inline std::uint64_t pow_mod_u64(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  unsigned __int128 acc = 1, base = b % m;
  while (e) {
    if (e & 1) acc = acc * base % m;
    base = base * base % m;
    e >>= 1;
  }
  return static_cast<std::uint64_t>(acc);
}

inline std::vector<std::string> coord_names(std::size_t n) {
  std::vector<std::string> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back("x" + std::to_string(i));
  return out;
}

// Elementary symmetric polynomial e_k in nv variables.
inline MultiPoly elem_sym(std::size_t nv, std::uint32_t chr, std::size_t k) {
  if (k == 0) return MultiPoly::from_int(nv, chr, 1);
  if (k > nv) return MultiPoly(nv, chr);
  MultiPoly out(nv, chr);
  std::vector<std::size_t> c(k);
  for (std::size_t i = 0; i < k; ++i) c[i] = i;
  while (true) {
    MultiPoly term = MultiPoly::from_int(nv, chr, 1);
    for (std::size_t i : c) term *= MultiPoly::variable(nv, chr, i);
    out += term;
    // advance to the next k-combination of {0, ..., nv-1}
    std::size_t i = k;
    while (i > 0 && c[i - 1] == nv - k + (i - 1)) --i;
    if (i == 0) break;
    ++c[i - 1];
    for (std::size_t j = i; j < k; ++j) c[j] = c[j - 1] + 1;
  }
  return out;
}

}  // namespace specdetail

// ---------------------------------------------------------------------------
// windowed spectra of the two pair-shaped functors
// ---------------------------------------------------------------------------

// The spectrum of the pair functor over a characteristic window: two points
// over every characteristic except p (a fixed-level point "(q;q)" strictly
// below an underlying-level point "(q;Z)"), and a single glued point over p.
inline SpecPoset spec_burnside(std::uint64_t p, std::vector<std::uint64_t> window) {
  FunctorSpec spec = make_functor(FunctorKind::Burnside, p);
  window = normalize_window(std::move(window));
  std::vector<SpecNode> nodes;
  for (std::uint64_t q : window) {
    const std::string qs = std::to_string(q);
    if (q == p) {
      TambaraPrime pr = TambaraPrime::type2(spec, PhiPrime(ZPrime::rational(q)));
      nodes.push_back({"(" + qs + ";" + qs + ")=(" + qs + ";Z)", pr,
                       {{"q", qs}, {"role", "glued"}}});
      continue;
    }
    ZPrime z = q == 0 ? ZPrime::zero() : ZPrime::rational(q);
    std::string zs = q == 0 ? "0" : qs;
    nodes.push_back({"(" + zs + ";" + zs + ")",
                     TambaraPrime::type2(spec, PhiPrime(z)),
                     {{"q", qs}, {"role", "s"}}});
    nodes.push_back({"(" + zs + ";Z)", TambaraPrime::type1(spec, BottomPrime(z)),
                     {{"q", qs}, {"role", "l"}}});
  }
  return SpecPoset(std::move(nodes));
}

// The spectrum of the group-ring functor over a window: a fixed-level point
// "(q,s)" (the canonical cyclotomic factor; collapse multiplicity recorded as
// metadata) below an underlying-level point "(q,l)" for q != p, glued at p.
inline SpecPoset spec_ru(std::uint64_t p, std::vector<std::uint64_t> window) {
  FunctorSpec spec = make_functor(FunctorKind::RU, p);
  window = normalize_window(std::move(window));
  std::vector<SpecNode> nodes;
  for (std::uint64_t q : window) {
    const std::string qs = std::to_string(q);
    if (q == p) {
      TambaraPrime pr = TambaraPrime::type2(spec, PhiPrime(RUPhiPrime::canonical(p, p)));
      nodes.push_back({"(" + qs + ",s)=(" + qs + ",l)", pr,
                       {{"q", qs}, {"role", "glued"}}});
      continue;
    }
    if (q == 0) {
      nodes.push_back({"(0,s)",
                       TambaraPrime::type2(spec, PhiPrime(RUPhiPrime::zero_ideal(p))),
                       {{"q", "0"}, {"role", "s"}}});
      nodes.push_back({"(0,l)", TambaraPrime::type1(spec, BottomPrime(ZPrime::zero())),
                       {{"q", "0"}, {"role", "l"}}});
      continue;
    }
    RUPhiPrime b = RUPhiPrime::canonical(p, q);
    nodes.push_back({"(" + qs + ",s)", TambaraPrime::type2(spec, PhiPrime(b)),
                     {{"q", qs},
                      {"role", "s"},
                      {"f", std::to_string(b.residue_degree())},
                      {"e", std::to_string(b.factor_count())}}});
    nodes.push_back({"(" + qs + ",l)",
                     TambaraPrime::type1(spec, BottomPrime(ZPrime::rational(q))),
                     {{"q", qs}, {"role", "l"}}});
  }
  return SpecPoset(std::move(nodes));
}

// ---------------------------------------------------------------------------
// Krull-dimension certificates
// ---------------------------------------------------------------------------

struct KrullCertificate {
  FunctorSpec spec;
  std::uint64_t q = 0;                // auxiliary characteristic used by the chain
  std::vector<TambaraPrime> chain;    // strictly increasing
  std::vector<Elem> witnesses;        // witnesses[i] in chain[i+1] minus chain[i]
  std::size_t dim = 0;                // number of strict links
  std::string upper_bound;
  bool verified = false;              // every link LE forward, NOT-LE backward,
                                      // and every witness oracle-validated
  std::vector<std::string> notes;
};

namespace specdetail {

inline bool verify_chain(KrullCertificate& cert) {
  if (cert.chain.size() < 2 || cert.witnesses.size() + 1 != cert.chain.size()) return false;
  for (std::size_t i = 0; i + 1 < cert.chain.size(); ++i) {
    ContainsResult fw = contains(cert.chain[i], cert.chain[i + 1]);
    ContainsResult bw = contains(cert.chain[i + 1], cert.chain[i]);
    if (fw.status != ContainsStatus::LE) {
      cert.notes.push_back("link " + std::to_string(i) + ": forward containment failed");
      return false;
    }
    if (bw.status == ContainsStatus::LE) {
      cert.notes.push_back("link " + std::to_string(i) + ": links compare equal");
      return false;
    }
    // the witness is itself the strictness certificate: it lies in the upper
    // prime and not the lower one
    const Elem& w = cert.witnesses[i];
    if (!cert.chain[i + 1].member(w) || cert.chain[i].member(w)) {
      cert.notes.push_back("link " + std::to_string(i) + ": witness not separating");
      return false;
    }
  }
  return true;
}

}  // namespace specdetail

// A maximal strict chain with verified witnesses.  `q` is the auxiliary
// characteristic (any prime different from p); 0 picks the smallest one.
inline KrullCertificate krull_certificate(const FunctorSpec& spec, std::uint64_t q = 0) {
  if (q == 0) q = spec.p == 2 ? 3 : 2;
  if (!is_prime_u64(q) || q == spec.p)
    throw LevelError("krull_certificate: auxiliary characteristic must be a prime different from p");
  const long long qp = static_cast<long long>(q) - static_cast<long long>(spec.p);
  KrullCertificate cert;
  cert.spec = spec;
  cert.q = q;
  Functor F(spec);
  switch (spec.kind) {
    case FunctorKind::Burnside: {
      ZPrime zq = ZPrime::rational(q);
      cert.chain = {TambaraPrime::type2(spec, PhiPrime(ZPrime::zero())),
                    TambaraPrime::type2(spec, PhiPrime(zq)),
                    TambaraPrime::type1(spec, BottomPrime(zq))};
      cert.witnesses = {F.from_int(Level::Bottom, static_cast<long long>(q)),
                        F.add(F.from_int(Level::Top, qp), F.tr(F.one(Level::Bottom)))};
      cert.upper_bound =
          "2: strict chains embed into the two-coordinate ghost poset over the integers";
      break;
    }
    case FunctorKind::RU: {
      cert.chain = {TambaraPrime::type2(spec, PhiPrime(RUPhiPrime::zero_ideal(spec.p))),
                    TambaraPrime::type2(spec, PhiPrime(RUPhiPrime::canonical(spec.p, q))),
                    TambaraPrime::type1(spec, BottomPrime(ZPrime::rational(q)))};
      cert.witnesses = {F.from_int(Level::Bottom, static_cast<long long>(q)),
                        F.add(F.from_int(Level::Top, qp), F.tr(F.one(Level::Bottom)))};
      cert.upper_bound =
          "2: strict chains embed into the ghost poset over the integer and cyclotomic levels";
      break;
    }
    case FunctorKind::FreeFixed: {
      MultiPoly x = MultiPoly::variable(2, 0, 0);
      MultiPoly n = MultiPoly::variable(2, 0, 1);
      auto T2g = [&](std::uint32_t chr, std::vector<MultiPoly> gens) {
        return TambaraPrime::type2(spec,
                                   PhiPrime(GenIdeal(2, chr, std::move(gens), {"x", "n"})));
      };
      auto qc = static_cast<std::uint32_t>(q);
      cert.chain = {T2g(0, {}), T2g(qc, {}), T2g(qc, {x}), T2g(qc, {x, n}),
                    TambaraPrime::type1(
                        spec, BottomPrime(SymPrime1::maximal(q, MultiPoly::variable(1, 0, 0))))};
      Elem xt = F.top_ff(x, MultiPoly(1, 0));
      Elem nt = F.top_ff(n, MultiPoly(1, 0));
      Elem u = F.add(F.from_int(Level::Top, qp), F.tr(F.one(Level::Bottom)));
      // the x-witness is the unit-gap multiple of x: bare x is not a member of
      // the <q, x> link because its norm is n, which escapes that fixed ideal
      cert.witnesses = {F.from_int(Level::Bottom, static_cast<long long>(q)), F.mul(xt, u),
                        nt, u};
      cert.upper_bound =
          "4: strict chains inject into the classified two-family ghost poset, whose longest "
          "chain has four links";
      break;
    }
    case FunctorKind::FreeUnderlying: {
      const auto np = static_cast<std::size_t>(spec.p);
      auto names = specdetail::coord_names(np);
      auto qc = static_cast<std::uint32_t>(q);
      auto T1c = [&](CpPrime c) { return TambaraPrime::type1(spec, BottomPrime(std::move(c))); };
      cert.chain.push_back(T1c(CpPrime::invariant(spec, GenIdeal(np, 0, {}, names))));
      cert.chain.push_back(T1c(CpPrime::invariant(spec, GenIdeal(np, qc, {}, names))));
      for (std::size_t k = 1; k <= np; ++k) {
        std::vector<MultiPoly> gens;
        for (std::size_t i = 0; i < k; ++i) gens.push_back(MultiPoly::variable(np, 0, i));
        cert.chain.push_back(T1c(CpPrime::orbit_meet(spec, GenIdeal(np, qc, std::move(gens), names))));
      }
      cert.witnesses.push_back(F.from_int(Level::Bottom, static_cast<long long>(q)));
      for (std::size_t k = 1; k <= np; ++k)
        cert.witnesses.push_back(F.bottom(specdetail::elem_sym(np, 0, np - k + 1)));
      cert.upper_bound = std::to_string(spec.p + 1) +
                         ": the bottom level's invariant subring has this dimension and "
                         "bounds every strict chain of the rank-p functor";
      break;
    }
    case FunctorKind::ModPBurnside: {
      // one characteristic only: the glued point over p is the whole spectrum
      cert.chain = {TambaraPrime::type2(spec, PhiPrime(ZPrime::zero()))};
      cert.witnesses = {};
      cert.dim = 0;
      cert.upper_bound = "0: a single point";
      cert.verified = true;
      return cert;
    }
    case FunctorKind::FixedPoint:
      throw UnsupportedError(
          "krull_certificate: fixed-point functors are handled by their own spectrum routine");
  }
  cert.dim = cert.chain.size() - 1;
  cert.verified = specdetail::verify_chain(cert);
  return cert;
}

// ---------------------------------------------------------------------------
// domain criterion: is the zero ideal a prime of the whole functor?
// ---------------------------------------------------------------------------

struct DomainReport {
  FunctorSpec spec;
  bool domain = false;
  std::uint64_t samples = 0;  // prime-condition probes run against the zero ideal
  // nonzero bottom element killed by the norm-to-fixed-level composite
  std::optional<Elem> norm_collapse;
  // pair (x, y) with every generalized product zero and neither factor zero
  std::optional<std::pair<Elem, Elem>> violation;
  std::string note;
};

inline DomainReport is_domain(const FunctorSpec& spec, std::uint64_t seed = 1,
                              std::uint32_t trials = 150) {
  Functor F(spec);
  DomainReport rep;
  rep.spec = spec;
  LevelIdealOracle zero{[&F](const Elem& z) { return F.is_zero(z); },
                        [&F](const Elem& z) { return F.is_zero(z); }};

  auto record_violation = [&](const Elem& x, const Elem& y) {
    if (F.is_zero(x) || F.is_zero(y)) return false;
    if (!q_criterion(F, zero, x, y)) return false;
    rep.violation = std::make_pair(x, y);
    return true;
  };

  switch (spec.kind) {
    case FunctorKind::FreeUnderlying: {
      const auto np = static_cast<std::size_t>(spec.p);
      MultiPoly diff =
          MultiPoly::variable(np, 0, 0) - MultiPoly::variable(np, 0, 1);
      Elem x = F.bottom(diff);
      Elem y = F.sub(F.tr(F.one(Level::Bottom)),
                     F.from_int(Level::Top, static_cast<long long>(spec.p)));
      if (F.psi_poly(diff).is_zero()) rep.norm_collapse = x;
      if (record_violation(x, y)) {
        rep.domain = false;
        rep.note =
            "a coordinate difference is killed by the norm-to-fixed-level composite, and "
            "together with (transfer of 1) - p it makes every generalized product vanish";
        return rep;
      }
      break;
    }
    case FunctorKind::ModPBurnside: {
      Elem t = F.tr(F.one(Level::Bottom));
      if (record_violation(t, t)) {
        rep.domain = false;
        rep.note = "the transfer of 1 squares to zero in characteristic p";
        return rep;
      }
      break;
    }
    default:
      break;
  }

  QProbeReport probe = is_prime_sampled(F, zero, trials, seed);
  rep.samples = probe.pairs_checked;
  if (probe.counterexample) {
    rep.domain = false;
    rep.note = "sampled prime-condition violation at the zero ideal: " + *probe.counterexample;
    return rep;
  }
  rep.domain = true;
  switch (spec.kind) {
    case FunctorKind::Burnside:
    case FunctorKind::RU:
      rep.note =
          "both levels embed into integral domains through the mark/character coordinates and "
          "the norm-to-fixed-level composite is injective";
      break;
    case FunctorKind::FreeFixed:
      rep.note =
          "both level rings are polynomial rings over the integers and the norm-to-fixed-level "
          "composite sends f(x) to f(n), which is injective";
      break;
    case FunctorKind::FixedPoint:
      rep.note = "both level rings are integral domains, so generalized products of nonzero "
                 "elements never vanish";
      break;
    default:
      rep.note = "no prime-condition violation found at the zero ideal";
      break;
  }
  return rep;
}

// ---------------------------------------------------------------------------
// linearization: pair functor -> group-ring functor
// ---------------------------------------------------------------------------

// The morphism fixing both bottom levels (the integers) and sending a top
// pair (a, b) to a + b * (1 + x + ... + x^{p-1}).
inline Elem linearize(const Functor& A, const Functor& R, const Elem& z) {
  if (A.spec().kind != FunctorKind::Burnside || R.spec().kind != FunctorKind::RU ||
      A.p() != R.p())
    throw LevelError("linearize: expects the pair functor and the group-ring functor at one p");
  if (!(z.fn == A.spec()))
    throw LevelError("linearize: element belongs to a different functor");
  if (z.level == Level::Bottom) {
    const MultiPoly& f = std::get<PolyElem>(z.pay).f;
    return R.bottom(MultiPoly::constant(0, 0, f.constant_value()));
  }
  const auto& pr = std::get<PairAB>(z.pay);
  MultiPoly w = MultiPoly::constant(1, 0, pr.a);
  MultiPoly xv = MultiPoly::variable(1, 0, 0);
  MultiPoly pw = MultiPoly::constant(1, 0, pr.b);
  for (std::uint32_t i = 0; i < A.p(); ++i) {
    w += pw;
    pw *= xv;
  }
  return R.top_ru(w);
}

struct LinearizationReport {
  std::uint64_t p = 0;
  std::vector<std::uint64_t> window;
  std::uint64_t hom_checks = 0;
  std::uint64_t agreement_checks = 0;
  // (group-ring node label, pair-functor node label)
  std::vector<std::pair<std::string, std::string>> pairing;
  bool bijective = false;
  bool order_isomorphic = false;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty() && bijective && order_isomorphic; }
};

// Verifies on samples that linearize respects all four operations, then pulls
// every windowed group-ring prime back to a unique windowed pair-functor
// prime and checks the pairing is an order isomorphism.
inline LinearizationReport linearization_pullback(std::uint64_t p,
                                                  std::vector<std::uint64_t> window,
                                                  std::uint64_t seed,
                                                  std::uint32_t trials = 40) {
  Functor A(make_functor(FunctorKind::Burnside, p));
  Functor R(make_functor(FunctorKind::RU, p));
  LinearizationReport rep;
  rep.p = p;
  rep.window = normalize_window(std::move(window));
  Rng rng(seed);
  SampleBounds sb;

  auto note = [&](const std::string& s) {
    if (rep.violations.size() < 8) rep.violations.push_back(s);
  };

  // 1. the morphism laws, sampled
  for (std::uint32_t i = 0; i < trials; ++i) {
    Elem zt = A.random_elem(rng, Level::Top, sb);
    Elem wt = A.random_elem(rng, Level::Top, sb);
    Elem kb = A.random_elem(rng, Level::Bottom, sb);
    auto L = [&](const Elem& e) { return linearize(A, R, e); };
    struct Law {
      const char* name;
      Elem lhs, rhs;
    };
    std::vector<Law> laws = {
        {"add", L(A.add(zt, wt)), R.add(L(zt), L(wt))},
        {"mul", L(A.mul(zt, wt)), R.mul(L(zt), L(wt))},
        {"res", L(A.res(zt)), R.res(L(zt))},
        {"tr", L(A.tr(kb)), R.tr(L(kb))},
        {"nm", L(A.nm(kb)), R.nm(L(kb))},
    };
    for (const auto& law : laws) {
      ++rep.hom_checks;
      if (!R.eq(law.lhs, law.rhs))
        note(std::string("linearize does not respect ") + law.name + " on " + A.print(zt));
    }
  }

  // 2. the two windowed spectra
  SpecPoset SA = spec_burnside(p, rep.window);
  SpecPoset SR = spec_ru(p, rep.window);
  if (SA.size() != SR.size())
    note("windowed spectra have different sizes: " + std::to_string(SA.size()) + " vs " +
         std::to_string(SR.size()));

  // 3. a separating element pool on the pair-functor side: structured member
  // seeds for every node, every containment witness (which by construction
  // separates each strictly related or incomparable node pair), and randoms.
  std::vector<Elem> pool;
  for (std::size_t i = 0; i < SA.size(); ++i) {
    auto seeds = primedetail::member_seed_elems(SA.node(i).prime, rng, sb);
    for (auto& s : seeds) pool.push_back(std::move(s));
    for (std::size_t j = 0; j < SA.size(); ++j)
      if (i != j && SA.relation(i, j).witness) pool.push_back(*SA.relation(i, j).witness);
  }
  for (std::uint32_t i = 0; i < trials; ++i) {
    pool.push_back(A.random_elem(rng, Level::Bottom, sb));
    pool.push_back(A.random_elem(rng, Level::Top, sb));
  }

  // 4. pull each group-ring node back across the pool
  std::vector<std::size_t> match(SR.size(), SIZE_MAX);
  for (std::size_t j = 0; j < SR.size(); ++j) {
    std::vector<std::size_t> candidates;
    for (std::size_t i = 0; i < SA.size(); ++i) {
      bool agree = true;
      for (const Elem& z : pool) {
        ++rep.agreement_checks;
        if (SA.node(i).prime.member(z) != SR.node(j).prime.member(linearize(A, R, z))) {
          agree = false;
          break;
        }
      }
      if (agree) candidates.push_back(i);
    }
    if (candidates.size() != 1) {
      note("pullback of " + SR.node(j).label + " matched " +
           std::to_string(candidates.size()) + " candidates");
      continue;
    }
    match[j] = candidates[0];
    rep.pairing.emplace_back(SR.node(j).label, SA.node(candidates[0]).label);
  }

  // 5. bijectivity and order isomorphism
  std::vector<bool> hit(SA.size(), false);
  rep.bijective = true;
  for (std::size_t j = 0; j < SR.size(); ++j) {
    if (match[j] == SIZE_MAX || hit[match[j]]) {
      rep.bijective = false;
      break;
    }
    hit[match[j]] = true;
  }
  rep.bijective = rep.bijective && SA.size() == SR.size();
  rep.order_isomorphic = rep.bijective;
  if (rep.bijective) {
    for (std::size_t i = 0; i < SR.size() && rep.order_isomorphic; ++i)
      for (std::size_t j = 0; j < SR.size(); ++j)
        if (SR.le(i, j) != SA.le(match[i], match[j])) {
          rep.order_isomorphic = false;
          note("pullback breaks the order between " + SR.node(i).label + " and " +
               SR.node(j).label);
          break;
        }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// fixed-point functor spectra
// ---------------------------------------------------------------------------

struct FixedPointReport {
  FunctorSpec spec;
  bool singleton = false;  // constant-coefficient case: one-point spectrum
  std::uint64_t checks = 0;
  std::vector<std::string> violations;
  std::string note;
  bool ok() const { return violations.empty(); }
};

// Validates the fixed-point spectrum correspondence on the supported catalog:
// for the constant functor the spectrum is a single point; for polynomial
// coefficients the sample prime <x0> generates conjugates whose meet is an
// invariant prime with the expected orbit products, level identity, and
// norm round-trip.
inline FixedPointReport fixed_point_spec(const FunctorSpec& spec, std::uint64_t seed,
                                         std::uint32_t trials = 60) {
  if (spec.kind != FunctorKind::FixedPoint)
    throw UnsupportedError("fixed_point_spec: expects a fixed-point functor");
  Functor F(spec);
  FixedPointReport rep;
  rep.spec = spec;
  Rng rng(seed);
  SampleBounds sb;
  auto note = [&](const std::string& s) {
    if (rep.violations.size() < 8) rep.violations.push_back(s);
  };
  auto expect = [&](bool cond, const std::string& what) {
    ++rep.checks;
    if (!cond) note(what);
  };

  if (spec.fp == FPKind::ZModP) {
    rep.singleton = true;
    expect(F.is_zero(F.tr(F.one(Level::Bottom))), "transfer of 1 should vanish");
    for (std::uint64_t k = 0; k < spec.p; ++k) {
      Elem kb = F.from_int(Level::Bottom, static_cast<long long>(k));
      Elem kt = F.from_int(Level::Top, static_cast<long long>(k));
      expect(F.eq(F.nm(kb), kt), "norm should fix every constant (Frobenius)");
      expect(F.is_zero(F.res(kt)) == (k == 0), "restriction should be injective");
    }
    LevelIdealOracle zero{[&F](const Elem& z) { return F.is_zero(z); },
                          [&F](const Elem& z) { return F.is_zero(z); }};
    QProbeReport probe = is_prime_sampled(F, zero, trials, seed + 1);
    rep.checks += probe.pairs_checked;
    if (probe.counterexample)
      note("zero ideal fails the prime condition: " + *probe.counterexample);
    rep.note = "one-point spectrum: the zero ideal is the only prime";
    return rep;
  }

  // polynomial coefficients with the rotation (or swap) action
  const RingDesc br = F.bottom_ring();
  const auto nv = br.nvars;
  MultiPoly x0 = MultiPoly::variable(nv, br.chr, 0);
  std::vector<GenIdeal> conj;
  for (std::uint32_t j = 0; j < spec.p; ++j)
    conj.push_back(GenIdeal(nv, br.chr, {F.poly_conj(x0, j)}, br.names));
  auto meet_member = [&](const MultiPoly& f) {
    for (const auto& I : conj)
      if (!I.member(f)) return false;
    return true;
  };

  // orbit product lies in the meet; single coordinates do not
  MultiPoly orbit = F.bottom_orbit_product(x0);
  expect(meet_member(orbit), "orbit product of x0 should lie in the conjugate meet");
  expect(!meet_member(x0), "x0 alone should not lie in the conjugate meet");

  std::vector<MultiPoly> pool;
  pool.push_back(x0);
  pool.push_back(F.poly_conj(x0, 1));
  pool.push_back(orbit);
  pool.push_back(F.bottom_orbit_sum(x0));
  pool.push_back(x0 - F.poly_conj(x0, 1));
  for (std::uint32_t i = 0; i < trials; ++i) {
    Elem z = F.random_elem(rng, Level::Bottom, sb);
    pool.push_back(std::get<PolyElem>(z.pay).f);
  }

  for (const MultiPoly& f : pool) {
    // the meet is invariant under the action
    expect(meet_member(f) == meet_member(F.poly_conj(f, 1)),
           "conjugate meet should be action-invariant");
    // norm round-trip: the orbit product lands in the meet exactly when some
    // conjugate ideal already holds the element
    bool some = false;
    for (const auto& I : conj) some = some || I.member(f);
    expect(meet_member(F.bottom_orbit_product(f)) == some,
           "orbit product membership should match membership in some conjugate");
    // level identity on invariant elements: the top part of the sample prime
    // is the fixed subring intersected with the meet, which for invariant
    // elements is membership in the base ideal itself
    MultiPoly inv = F.bottom_orbit_sum(f);
    expect(meet_member(inv) == conj[0].member(inv),
           "invariant elements should lie in the meet exactly when in the base ideal");
  }

  // sampled orbit-prime condition: if f * (every conjugate of g) lies in the
  // meet, one of the factors already does
  for (std::uint32_t i = 0; i < trials; ++i) {
    Elem ze = F.random_elem(rng, Level::Bottom, sb);
    Elem we = F.random_elem(rng, Level::Bottom, sb);
    MultiPoly f = std::get<PolyElem>(ze.pay).f;
    MultiPoly g = std::get<PolyElem>(we.pay).f;
    bool all = true;
    for (std::uint32_t j = 0; j < spec.p && all; ++j)
      all = meet_member(f * F.poly_conj(g, j));
    ++rep.checks;
    if (all && !meet_member(f) && !meet_member(g))
      note("orbit-prime condition failed for " + f.str(br.names) + " and " + g.str(br.names));
  }

  rep.note = "conjugate meets of coordinate primes behave as invariant primes";
  return rep;
}

// ---------------------------------------------------------------------------
// the four induced maps between the free functors' spectra
// ---------------------------------------------------------------------------

enum class CoopKind {
  Cores,  // classifies the restricted generator: fixed-generator -> rank-p spectra map
  Cotr,   // classifies the transferred generator: rank-p -> fixed-generator
  Conm,   // classifies the normed generator: rank-p -> fixed-generator
  Coc     // classifies the rotated generator: the identity on the rank-p spectrum
};

namespace specdetail {

// Contraction of a bottom ideal along x |-> image(x0, ..., x_{p-1}):
// eliminate the p coordinates from <base, y - image> and classify the
// univariate survivors.
inline SymPrime1 contract_univar(const GenIdeal& base, const MultiPoly& image) {
  const std::uint32_t q = base.chr();
  const std::size_t nv = base.nvars();
  std::vector<std::size_t> keep_map(nv);
  for (std::size_t i = 0; i < nv; ++i) keep_map[i] = i;
  std::vector<MultiPoly> gens;
  for (const auto& g : base.gens_with_char()) {
    MultiPoly h = q != 0 ? g.reduce_mod(q) : g;
    if (h.is_zero()) continue;
    gens.push_back(primedetail::remap_vars(h, keep_map, nv + 1, h.chr()));
  }
  MultiPoly img = q != 0 ? image.reduce_mod(q) : image;
  MultiPoly rel = MultiPoly::variable(nv + 1, img.chr(), nv) -
                  primedetail::remap_vars(img, keep_map, nv + 1, img.chr());
  gens.push_back(rel);
  std::vector<MultiPoly> kept = elim_intersection(gens, static_cast<std::uint32_t>(nv));
  std::vector<MultiPoly> nonzero;
  for (auto& k : kept)
    if (!k.is_zero()) nonzero.push_back(std::move(k));
  auto to_univar = [&](const MultiPoly& f) {
    return primedetail::remap_vars(f, std::vector<std::size_t>(nv + 1, 0), 1, f.chr());
  };
  if (q != 0) {
    if (nonzero.empty()) return SymPrime1::rational(q);
    if (nonzero.size() == 1) {
      MultiPoly u = to_univar(nonzero[0]);
      return SymPrime1::maximal(q, primedetail::lift_univar(fqx::monic(fqx::to_dense(u), q), q));
    }
  } else {
    if (nonzero.empty()) return SymPrime1::zero_ideal();
    if (nonzero.size() == 1)
      return SymPrime1::principal(primedetail::make_primitive(to_univar(nonzero[0])),
                                  /*trust_irreducible=*/true);
  }
  throw LevelError("coop: unexpected non-principal contraction");
}

}  // namespace specdetail

// The map induced on spectra by the morphism classifying, respectively, the
// restriction, transfer, norm, or rotation of a free generator.  Cores takes
// a fixed-generator prime to a rank-p prime; Cotr and Conm go the other way;
// Coc is the identity.
inline TambaraPrime coop_map(CoopKind kind, const TambaraPrime& P) {
  const std::uint64_t p = P.spec().p;
  if (kind == CoopKind::Cores) {
    if (P.spec().kind != FunctorKind::FreeFixed)
      throw LevelError("coop: the diagonal map starts from the fixed-generator functor");
    FunctorSpec fu = make_functor(FunctorKind::FreeUnderlying, p);
    if (P.kind() == PrimeKind::Type1) {
      // contraction along x_i |-> x of a univariate shape: the diagonal
      // differences plus the generator evaluated at any one coordinate
      const auto& s = std::get<SymPrime1>(P.bottom_prime());
      const auto np = static_cast<std::size_t>(p);
      std::vector<MultiPoly> gens = eps_gens(p);
      if (s.shape() == SymShape::Irr || s.shape() == SymShape::Max)
        gens.push_back(primedetail::remap_vars(s.poly_gen(), {0}, np, 0));
      GenIdeal base(np, s.chr(), std::move(gens), specdetail::coord_names(np));
      return TambaraPrime::type1(fu, BottomPrime(CpPrime::invariant(fu, std::move(base))));
    }
    // fixed-level contraction: intersect with the norm-variable subring
    const auto& g = std::get<GenIdeal>(P.phi_prime());
    return TambaraPrime::type2(fu, PhiPrime(primedetail::norm_preimage_ff_elim(g)));
  }

  if (P.spec().kind != FunctorKind::FreeUnderlying)
    throw LevelError("coop: this map starts from the rank-p functor");
  if (kind == CoopKind::Coc) return P;  // rotation induces the identity

  FunctorSpec ff = make_functor(FunctorKind::FreeFixed, p);
  const auto np = static_cast<std::size_t>(p);

  if (P.kind() == PrimeKind::Type1) {
    // contract the bottom prime along x |-> (sum of coordinates) for the
    // transfer map, x |-> (product of coordinates) for the norm map; orbit
    // meets contract like their base since the image is invariant.
    const auto& c = std::get<CpPrime>(P.bottom_prime());
    MultiPoly image = kind == CoopKind::Cotr ? specdetail::elem_sym(np, 0, 1)
                                             : specdetail::elem_sym(np, 0, np);
    SymPrime1 s = specdetail::contract_univar(c.base(), image);
    return TambaraPrime::type1(ff, BottomPrime(std::move(s)));
  }

  // fixed-level closed forms: contraction along x |-> 0, n |-> p n for the
  // transfer map, x |-> n, n |-> n^p for the norm map
  const auto& s = std::get<SymPrime1>(P.phi_prime());
  MultiPoly x = MultiPoly::variable(2, 0, 0);
  MultiPoly n = MultiPoly::variable(2, 0, 1);
  auto T2g = [&](std::uint32_t chr, std::vector<MultiPoly> gens) {
    return TambaraPrime::type2(ff, PhiPrime(GenIdeal(2, chr, std::move(gens), {"x", "n"})));
  };

  if (kind == CoopKind::Cotr) {
    switch (s.shape()) {
      case SymShape::Zero:
        return T2g(0, {x});
      case SymShape::P:
        if (s.chr() == p) return T2g(static_cast<std::uint32_t>(p), {x, n});
        return T2g(s.chr(), {x});
      case SymShape::Irr: {
        // scale-substitute: sum a_i p^{d-i} n^i, primitivized
        const MultiPoly& h = s.poly_gen();
        const std::size_t d = static_cast<std::size_t>(h.total_degree());
        MultiPoly acc(2, 0);
        for (const auto& [m, c] : h.terms()) {
          MultiPoly term = MultiPoly::constant(2, 0, c);
          for (std::size_t i = 0; i < m[0]; ++i) term *= n;
          for (std::size_t i = m[0]; i < d; ++i)
            term *= MultiPoly::from_int(2, 0, static_cast<long long>(p));
          acc += term;
        }
        return T2g(0, {x, primedetail::make_primitive(acc)});
      }
      case SymShape::Max: {
        if (s.chr() == p) return T2g(static_cast<std::uint32_t>(p), {x, n});
        // substitute n |-> (inverse of p mod q) n, then monic-normalize
        const std::uint32_t q = s.chr();
        std::uint64_t inv = specdetail::pow_mod_u64(p % q, q - 2, q);
        auto dense = primedetail::dense_mod(s.poly_gen(), q);
        std::uint64_t scale = 1;
        for (std::size_t i = 0; i < dense.size(); ++i) {
          dense[i] = static_cast<std::uint64_t>(
              (unsigned __int128)dense[i] * scale % q);
          scale = static_cast<std::uint64_t>((unsigned __int128)scale * inv % q);
        }
        MultiPoly lift = primedetail::lift_univar(fqx::monic(dense, q), q);
        return T2g(q, {x, primedetail::remap_vars(lift, {1}, 2, 0)});
      }
    }
  }

  // norm map: kernel generator n - x^p plus the generator moved to the
  // x-variable
  MultiPoly ker = n;
  {
    MultiPoly xp = MultiPoly::from_int(2, 0, 1);
    for (std::uint64_t i = 0; i < p; ++i) xp *= x;
    ker = n - xp;
  }
  switch (s.shape()) {
    case SymShape::Zero:
      return T2g(0, {ker});
    case SymShape::P:
      return T2g(s.chr(), {ker});
    case SymShape::Irr:
      return T2g(0, {ker, primedetail::remap_vars(s.poly_gen(), {0}, 2, 0)});
    case SymShape::Max:
      return T2g(s.chr(), {ker, primedetail::remap_vars(s.poly_gen(), {0}, 2, 0)});
  }
  throw LevelError("coop: unreachable");
}

}  // namespace nakaoka
