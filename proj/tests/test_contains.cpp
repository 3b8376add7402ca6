#include <catch2/catch_amalgamated.hpp>

#include <string>
#include <utility>
#include <vector>

#include "nakaoka/contains.hpp"
#include "nakaoka/primes.hpp"

using namespace nakaoka;

namespace {

MultiPoly V(std::uint32_t nv, std::uint32_t i, std::uint32_t e = 1) {
  return MultiPoly::variable(nv, 0, i, e);
}
MultiPoly Cst(std::uint32_t nv, long long v) { return MultiPoly::from_int(nv, 0, v); }

using CO = CompareOutcome;

struct Row {
  std::size_t i, j;
  CO o;
};

struct GridStats {
  int notle = 0;
  int validated = 0;
};

// Run compare_primes over every tabulated pair, check the expected outcome,
// and validate every NotLE witness by live membership on both sides.
void run_grid(const std::vector<std::pair<std::string, TambaraPrime>>& P,
              const std::vector<Row>& rows, GridStats& st) {
  for (const auto& row : rows) {
    const auto& la = P[row.i].first;
    const auto& lb = P[row.j].first;
    const TambaraPrime& A = P[row.i].second;
    const TambaraPrime& B = P[row.j].second;
    INFO(la << "  vs  " << lb);
    CompareResult r = compare_primes(A, B);
    INFO("forward: " << r.forward.note << " | backward: " << r.backward.note);
    CHECK(outcome_str(r.outcome) == outcome_str(row.o));
    for (int dir = 0; dir < 2; ++dir) {
      const ContainsResult& c = dir == 0 ? r.forward : r.backward;
      const TambaraPrime& S = dir == 0 ? A : B;
      const TambaraPrime& T = dir == 0 ? B : A;
      if (c.status != ContainsStatus::NotLE) continue;
      ++st.notle;
      REQUIRE(c.witness.has_value());
      CHECK(S.member(*c.witness));
      CHECK_FALSE(T.member(*c.witness));
      ++st.validated;
    }
  }
}

int expected_notle(const std::vector<Row>& rows) {
  int n = 0;
  for (const auto& r : rows) {
    if (r.o == CO::Incomparable) n += 2;
    else if (r.o == CO::LessThan || r.o == CO::GreaterThan) n += 1;
  }
  return n;
}

// For an asserted inclusion A <= B: structured members of A (generators,
// transfers, sections) and random multiples of them must all land in B.
int le_implication_violations(const TambaraPrime& A, const TambaraPrime& B,
                              std::uint64_t seed, int trials) {
  const Functor& F = A.functor();
  Rng rng(seed);
  SampleBounds sb;
  sb.max_terms = 3;
  sb.max_exp = 2;
  int bad = 0;
  auto seeds = primedetail::member_seed_elems(A, rng, sb);
  for (const auto& s : seeds) {
    if (!A.member(s)) continue;
    if (!B.member(s)) ++bad;
    for (int i = 0; i < trials; ++i) {
      Elem w = F.mul(s, F.random_elem(rng, s.level, sb));
      if (A.member(w) && !B.member(w)) ++bad;
    }
  }
  return bad;
}

}  // namespace

TEST_CASE("pair-functor primes compare as expected") {
  auto spec = make_functor(FunctorKind::Burnside, 2);
  auto T1 = [&](ZPrime a) { return TambaraPrime::type1(spec, BottomPrime(a)); };
  auto T2 = [&](ZPrime b) { return TambaraPrime::type2(spec, PhiPrime(b)); };

  std::vector<std::pair<std::string, TambaraPrime>> P;
  P.emplace_back("fixed-zero", T2(ZPrime::zero()));      // 0
  P.emplace_back("under-zero", T1(ZPrime::zero()));      // 1
  P.emplace_back("fixed-3", T2(ZPrime::rational(3)));    // 2
  P.emplace_back("under-3", T1(ZPrime::rational(3)));    // 3
  P.emplace_back("fixed-5", T2(ZPrime::rational(5)));    // 4
  P.emplace_back("under-5", T1(ZPrime::rational(5)));    // 5
  P.emplace_back("glued-2", T1(ZPrime::rational(2)));    // 6

  std::vector<Row> rows = {
      {0, 1, CO::LessThan},     {0, 2, CO::LessThan},     {0, 3, CO::LessThan},
      {0, 4, CO::LessThan},     {0, 5, CO::LessThan},     {0, 6, CO::LessThan},
      {1, 2, CO::Incomparable}, {1, 3, CO::LessThan},     {1, 4, CO::Incomparable},
      {1, 5, CO::LessThan},     {1, 6, CO::LessThan},     {2, 3, CO::LessThan},
      {2, 4, CO::Incomparable}, {2, 5, CO::Incomparable}, {2, 6, CO::Incomparable},
      {3, 4, CO::Incomparable}, {3, 5, CO::Incomparable}, {3, 6, CO::Incomparable},
      {4, 5, CO::LessThan},     {4, 6, CO::Incomparable}, {5, 6, CO::Incomparable},
  };
  GridStats st;
  run_grid(P, rows, st);
  CHECK(st.notle == expected_notle(rows));
  CHECK(st.validated == st.notle);
  CHECK(st.notle >= 20);

  // the glued characteristic-p point has equal presentations
  CHECK(compare_primes(P[6].second, T2(ZPrime::rational(2))).outcome == CO::Equal);
}

TEST_CASE("group-ring primes compare as expected") {
  auto spec = make_functor(FunctorKind::RU, 3);
  MultiPoly x = V(1, 0);
  auto T1 = [&](ZPrime a) { return TambaraPrime::type1(spec, BottomPrime(a)); };
  auto T2 = [&](RUPhiPrime b) { return TambaraPrime::type2(spec, PhiPrime(b)); };

  std::vector<std::pair<std::string, TambaraPrime>> P;
  P.emplace_back("fixed-zero", T2(RUPhiPrime::zero_ideal(3)));             // 0
  P.emplace_back("under-zero", T1(ZPrime::zero()));                        // 1
  P.emplace_back("fixed-7a", T2(RUPhiPrime::canonical(3, 7)));             // 2
  P.emplace_back("fixed-7b", T2(RUPhiPrime::factor(3, 7, x + Cst(1, 3)))); // 3
  P.emplace_back("under-7", T1(ZPrime::rational(7)));                      // 4
  P.emplace_back("glued-3", T1(ZPrime::rational(3)));                      // 5
  P.emplace_back("fixed-13", T2(RUPhiPrime::canonical(3, 13)));            // 6
  P.emplace_back("under-13", T1(ZPrime::rational(13)));                    // 7

  std::vector<Row> rows = {
      {0, 1, CO::LessThan},     {0, 2, CO::LessThan},     {0, 3, CO::LessThan},
      {0, 4, CO::LessThan},     {0, 5, CO::LessThan},     {0, 6, CO::LessThan},
      {0, 7, CO::LessThan},     {1, 2, CO::Incomparable}, {1, 3, CO::Incomparable},
      {1, 4, CO::LessThan},     {1, 5, CO::LessThan},     {1, 6, CO::Incomparable},
      {1, 7, CO::LessThan},     {2, 3, CO::Incomparable}, {2, 4, CO::LessThan},
      {2, 5, CO::Incomparable}, {2, 6, CO::Incomparable}, {2, 7, CO::Incomparable},
      {3, 4, CO::LessThan},     {3, 5, CO::Incomparable}, {3, 6, CO::Incomparable},
      {3, 7, CO::Incomparable}, {4, 5, CO::Incomparable}, {4, 6, CO::Incomparable},
      {4, 7, CO::Incomparable}, {5, 6, CO::Incomparable}, {5, 7, CO::Incomparable},
      {6, 7, CO::LessThan},
  };
  GridStats st;
  run_grid(P, rows, st);
  CHECK(st.notle == expected_notle(rows));
  CHECK(st.validated == st.notle);
  CHECK(st.notle >= 20);

  CHECK(compare_primes(P[5].second, T2(RUPhiPrime::canonical(3, 3))).outcome == CO::Equal);
}

TEST_CASE("fixed-ring primes compare as expected") {
  auto spec = make_functor(FunctorKind::FreeFixed, 2);
  MultiPoly x = V(2, 0), n = V(2, 1);
  MultiPoly x1 = V(1, 0);
  MultiPoly nker = n - x * x;  // the norm-kernel generator n - x^p at p = 2
  auto T2g = [&](std::uint32_t chr, std::vector<MultiPoly> gens) {
    return TambaraPrime::type2(spec, PhiPrime(GenIdeal(2, chr, std::move(gens), {"x", "n"})));
  };
  auto T1s = [&](SymPrime1 a) { return TambaraPrime::type1(spec, BottomPrime(a)); };

  std::vector<std::pair<std::string, TambaraPrime>> P;
  P.emplace_back("fixed-zero", T2g(0, {}));                         // 0
  P.emplace_back("fixed-ker", T2g(0, {nker}));                      // 1
  P.emplace_back("under-p", T1s(SymPrime1::rational(2)));           // 2
  P.emplace_back("fixed-p-ker", T2g(2, {nker}));                    // 3
  P.emplace_back("fixed-p-x", T2g(2, {x}));                         // 4
  P.emplace_back("under-p-max", T1s(SymPrime1::maximal(2, x1)));    // 5
  P.emplace_back("fixed-3", T2g(3, {}));                            // 6
  P.emplace_back("fixed-3-x", T2g(3, {x}));                         // 7
  P.emplace_back("fixed-3-x-n", T2g(3, {x, n}));                    // 8
  P.emplace_back("under-3-max", T1s(SymPrime1::maximal(3, x1)));    // 9
  P.emplace_back("under-irr-x", T1s(SymPrime1::principal(x1)));     // 10
  P.emplace_back("under-3", T1s(SymPrime1::rational(3)));           // 11

  std::vector<Row> rows = {
      {0, 1, CO::LessThan},      {0, 2, CO::LessThan},      {0, 3, CO::LessThan},
      {0, 4, CO::LessThan},      {0, 5, CO::LessThan},      {0, 6, CO::LessThan},
      {0, 7, CO::LessThan},      {0, 8, CO::LessThan},      {0, 9, CO::LessThan},
      {0, 10, CO::LessThan},     {0, 11, CO::LessThan},     {1, 2, CO::LessThan},
      {1, 3, CO::LessThan},      {1, 4, CO::Incomparable},  {1, 5, CO::LessThan},
      {1, 6, CO::Incomparable},  {1, 7, CO::Incomparable},  {1, 8, CO::LessThan},
      {1, 9, CO::LessThan},      {1, 10, CO::LessThan},     {1, 11, CO::LessThan},
      {2, 3, CO::Equal},         {2, 4, CO::GreaterThan},   {2, 5, CO::LessThan},
      {2, 6, CO::Incomparable},  {2, 7, CO::Incomparable},  {2, 8, CO::Incomparable},
      {2, 9, CO::Incomparable},  {2, 10, CO::Incomparable}, {2, 11, CO::Incomparable},
      {3, 4, CO::GreaterThan},   {3, 5, CO::LessThan},      {3, 6, CO::Incomparable},
      {3, 7, CO::Incomparable},  {3, 8, CO::Incomparable},  {3, 9, CO::Incomparable},
      {3, 10, CO::Incomparable}, {3, 11, CO::Incomparable}, {4, 5, CO::LessThan},
      {4, 6, CO::Incomparable},  {4, 7, CO::Incomparable},  {4, 8, CO::Incomparable},
      {4, 9, CO::Incomparable},  {4, 10, CO::Incomparable}, {4, 11, CO::Incomparable},
      {5, 6, CO::Incomparable},  {5, 7, CO::Incomparable},  {5, 8, CO::Incomparable},
      {5, 9, CO::Incomparable},  {5, 10, CO::GreaterThan},  {5, 11, CO::Incomparable},
      {6, 7, CO::LessThan},      {6, 8, CO::LessThan},      {6, 9, CO::LessThan},
      {6, 10, CO::Incomparable}, {6, 11, CO::LessThan},     {7, 8, CO::LessThan},
      {7, 9, CO::LessThan},      {7, 10, CO::Incomparable}, {7, 11, CO::LessThan},
      {8, 9, CO::LessThan},      {8, 10, CO::Incomparable}, {8, 11, CO::Incomparable},
      {9, 10, CO::GreaterThan},  {9, 11, CO::GreaterThan},  {10, 11, CO::Incomparable},
  };
  GridStats st;
  run_grid(P, rows, st);
  CHECK(st.notle == expected_notle(rows));
  CHECK(st.validated == st.notle);
  CHECK(st.notle >= 20);

  // coincidence pairs at characteristic p
  CHECK(compare_primes(P[5].second, T2g(2, {nker, x})).outcome == CO::Equal);
  MultiPoly f2 = x1 * x1 + x1 + Cst(1, 1);
  MultiPoly f2xn = x * x + x + Cst(2, 1);
  CHECK(compare_primes(T1s(SymPrime1::maximal(2, f2)), T2g(2, {nker, f2xn})).outcome ==
        CO::Equal);
}

TEST_CASE("rank-p primes compare as expected") {
  auto spec = make_functor(FunctorKind::FreeUnderlying, 2);
  MultiPoly x0 = V(2, 0), x1 = V(2, 1);
  MultiPoly nvar = V(1, 0);  // fixed-level coordinate
  auto inv = [&](std::uint32_t chr, std::vector<MultiPoly> gens) {
    return TambaraPrime::type1(
        spec, BottomPrime(CpPrime::invariant(spec, GenIdeal(2, chr, std::move(gens)))));
  };
  auto meet = [&](std::uint32_t chr, std::vector<MultiPoly> gens) {
    return TambaraPrime::type1(
        spec, BottomPrime(CpPrime::orbit_meet(spec, GenIdeal(2, chr, std::move(gens)))));
  };
  auto T2s = [&](SymPrime1 b) { return TambaraPrime::type2(spec, PhiPrime(b)); };

  std::vector<std::pair<std::string, TambaraPrime>> P;
  P.emplace_back("under-zero", inv(0, {}));                       // 0
  P.emplace_back("fixed-zero", T2s(SymPrime1::zero_ideal()));     // 1
  P.emplace_back("diag-ker", inv(0, {x0 - x1}));                  // 2
  P.emplace_back("under-3", inv(3, {}));                          // 3
  P.emplace_back("orbit-3-1", meet(3, {x0}));                     // 4
  P.emplace_back("orbit-3-2", meet(3, {x0, x1}));                 // 5
  P.emplace_back("fixed-3", T2s(SymPrime1::rational(3)));         // 6
  P.emplace_back("fixed-3-max", T2s(SymPrime1::maximal(3, nvar))); // 7
  P.emplace_back("diag-3", inv(3, {x0 - x1}));                    // 8
  P.emplace_back("diag-3-max", inv(3, {x0 - x1, x0}));            // 9
  P.emplace_back("diag-2", inv(2, {x0 - x1}));                    // 10

  std::vector<Row> rows = {
      {0, 1, CO::Incomparable},  {0, 2, CO::LessThan},      {0, 3, CO::LessThan},
      {0, 4, CO::LessThan},      {0, 5, CO::LessThan},      {0, 6, CO::Incomparable},
      {0, 7, CO::Incomparable},  {0, 8, CO::LessThan},      {0, 9, CO::LessThan},
      {0, 10, CO::LessThan},     {1, 2, CO::LessThan},      {1, 3, CO::Incomparable},
      {1, 4, CO::Incomparable},  {1, 5, CO::LessThan},      {1, 6, CO::LessThan},
      {1, 7, CO::LessThan},      {1, 8, CO::LessThan},      {1, 9, CO::LessThan},
      {1, 10, CO::LessThan},     {2, 3, CO::Incomparable},  {2, 4, CO::Incomparable},
      {2, 5, CO::LessThan},      {2, 6, CO::Incomparable},  {2, 7, CO::Incomparable},
      {2, 8, CO::LessThan},      {2, 9, CO::LessThan},      {2, 10, CO::LessThan},
      {3, 4, CO::LessThan},      {3, 5, CO::LessThan},      {3, 6, CO::Incomparable},
      {3, 7, CO::Incomparable},  {3, 8, CO::LessThan},      {3, 9, CO::LessThan},
      {3, 10, CO::Incomparable}, {4, 5, CO::LessThan},      {4, 6, CO::Incomparable},
      {4, 7, CO::Incomparable},  {4, 8, CO::Incomparable},  {4, 9, CO::LessThan},
      {4, 10, CO::Incomparable}, {5, 6, CO::GreaterThan},   {5, 7, CO::GreaterThan},
      {5, 8, CO::GreaterThan},   {5, 9, CO::Equal},         {5, 10, CO::Incomparable},
      {6, 7, CO::LessThan},      {6, 8, CO::LessThan},      {6, 9, CO::LessThan},
      {6, 10, CO::Incomparable}, {7, 8, CO::Incomparable},  {7, 9, CO::LessThan},
      {7, 10, CO::Incomparable}, {8, 9, CO::LessThan},      {8, 10, CO::Incomparable},
      {9, 10, CO::Incomparable},
  };
  GridStats st;
  run_grid(P, rows, st);
  CHECK(st.notle == expected_notle(rows));
  CHECK(st.validated == st.notle);
  CHECK(st.notle >= 20);

  // coincidence pairs at characteristic p
  CHECK(compare_primes(P[10].second, T2s(SymPrime1::rational(2))).outcome == CO::Equal);
  CHECK(compare_primes(inv(2, {x0 - x1, x0}), T2s(SymPrime1::maximal(2, nvar))).outcome ==
        CO::Equal);
}

TEST_CASE("rank-p primes compare as expected at p = 3") {
  auto spec = make_functor(FunctorKind::FreeUnderlying, 3);
  MultiPoly x0 = V(3, 0), x1 = V(3, 1), x2 = V(3, 2);
  auto meet = [&](std::uint32_t chr, std::vector<MultiPoly> gens) {
    return TambaraPrime::type1(
        spec, BottomPrime(CpPrime::orbit_meet(spec, GenIdeal(3, chr, std::move(gens)))));
  };
  auto inv = [&](std::uint32_t chr, std::vector<MultiPoly> gens) {
    return TambaraPrime::type1(
        spec, BottomPrime(CpPrime::invariant(spec, GenIdeal(3, chr, std::move(gens)))));
  };

  TambaraPrime o1 = meet(5, {x0});
  TambaraPrime o2 = meet(5, {x0, x1});
  TambaraPrime o3 = meet(5, {x0, x1, x2});
  TambaraPrime q5 = inv(5, {});

  GridStats st;
  std::vector<std::pair<std::string, TambaraPrime>> P;
  P.emplace_back("under-5", q5);   // 0
  P.emplace_back("orbit-1", o1);   // 1
  P.emplace_back("orbit-2", o2);   // 2
  P.emplace_back("orbit-3", o3);   // 3
  std::vector<Row> rows = {
      {0, 1, CO::LessThan}, {0, 2, CO::LessThan}, {0, 3, CO::LessThan},
      {1, 2, CO::LessThan}, {1, 3, CO::LessThan}, {2, 3, CO::LessThan},
  };
  run_grid(P, rows, st);
  CHECK(st.validated == st.notle);

  // the full coordinate ideal is rotation-invariant: both presentations agree
  CHECK(compare_primes(o3, inv(5, {x0, x1, x2})).outcome == CO::Equal);

  // elementary symmetric separators between consecutive orbit ideals
  MultiPoly e2 = x0 * x1 + x1 * x2 + x2 * x0;
  MultiPoly e1 = x0 + x1 + x2;
  CHECK(o2.member(o2.functor().bottom(e2)));
  CHECK_FALSE(o1.member(o1.functor().bottom(e2)));
  CHECK(o3.member(o3.functor().bottom(e1)));
  CHECK_FALSE(o2.member(o2.functor().bottom(e1)));

  // coincidence at characteristic p for the rank-3 functor
  MultiPoly y0 = V(3, 0), y1 = V(3, 1), y2 = V(3, 2);
  TambaraPrime g3 = inv(3, {y0 - y1, y1 - y2});
  CHECK(compare_primes(g3, TambaraPrime::type2(spec, PhiPrime(SymPrime1::rational(3))))
            .outcome == CO::Equal);
}

TEST_CASE("characteristic-p pair functor in residue form glues to a point") {
  auto spec = make_functor(FunctorKind::ModPBurnside, 3);
  TambaraPrime a = TambaraPrime::type1(spec, BottomPrime(ZPrime::zero()));
  TambaraPrime b = TambaraPrime::type2(spec, PhiPrime(ZPrime::zero()));
  CHECK(compare_primes(a, b).outcome == CO::Equal);
  // the ideal (p) is the zero ideal of the residue ring: same point
  TambaraPrime c = TambaraPrime::type1(spec, BottomPrime(ZPrime::rational(3)));
  CHECK(c.structurally_eq(a));
  CHECK(compare_primes(c, b).outcome == CO::Equal);
}

TEST_CASE("maximal-fiber families order by generator containment") {
  SECTION("fixed-ring family over q = 3") {
    auto spec = make_functor(FunctorKind::FreeFixed, 2);
    MultiPoly x = V(2, 0), n = V(2, 1);
    int checked = 0;
    for (long long a = 0; a < 3; ++a) {
      TambaraPrime src =
          TambaraPrime::type2(spec, PhiPrime(GenIdeal(2, 3, {x - Cst(2, a)}, {"x", "n"})));
      for (long long a2 = 0; a2 < 3; ++a2) {
        for (long long c = 0; c < 3; ++c) {
          TambaraPrime dst = TambaraPrime::type2(
              spec, PhiPrime(GenIdeal(2, 3, {x - Cst(2, a2), n - Cst(2, c)}, {"x", "n"})));
          bool expect = (a == a2);
          INFO("a=" << a << " a2=" << a2 << " c=" << c);
          ContainsResult r = contains(src, dst);
          CHECK(r.le() == expect);
          if (!expect) {
            REQUIRE(r.status == ContainsStatus::NotLE);
            REQUIRE(r.witness.has_value());
            CHECK(src.member(*r.witness));
            CHECK_FALSE(dst.member(*r.witness));
          }
          ++checked;
        }
      }
    }
    CHECK(checked == 27);
  }

  SECTION("group-ring family over split primes") {
    auto spec = make_functor(FunctorKind::RU, 3);
    MultiPoly x = V(1, 0);
    std::vector<RUPhiPrime> bs = {
        RUPhiPrime::zero_ideal(3),
        RUPhiPrime::canonical(3, 7),                  // (7, x + 5)
        RUPhiPrime::factor(3, 7, x + Cst(1, 3)),      // (7, x + 3)
        RUPhiPrime::canonical(3, 13),                 // (13, x + 10)
        RUPhiPrime::factor(3, 13, x + Cst(1, 4)),     // (13, x + 4)
    };
    int checked = 0;
    for (std::size_t i = 0; i < bs.size(); ++i) {
      for (std::size_t j = 0; j < bs.size(); ++j) {
        TambaraPrime A = TambaraPrime::type2(spec, PhiPrime(bs[i]));
        TambaraPrime B = TambaraPrime::type2(spec, PhiPrime(bs[j]));
        bool expect = (i == j) || i == 0;  // distinct maximal fibers never nest
        INFO("i=" << i << " j=" << j);
        ContainsResult r = contains(A, B);
        CHECK(r.le() == expect);
        if (!expect) {
          REQUIRE(r.status == ContainsStatus::NotLE);
          REQUIRE(r.witness.has_value());
          CHECK(A.member(*r.witness));
          CHECK_FALSE(B.member(*r.witness));
        }
        ++checked;
      }
    }
    CHECK(checked == 25);
  }

  SECTION("rank-p fixed-level shapes over q = 3") {
    auto spec = make_functor(FunctorKind::FreeUnderlying, 2);
    MultiPoly nvar = V(1, 0);
    std::vector<SymPrime1> bs = {
        SymPrime1::zero_ideal(),
        SymPrime1::rational(3),
        SymPrime1::maximal(3, nvar),
        SymPrime1::maximal(3, nvar - Cst(1, 1)),
        SymPrime1::maximal(3, nvar - Cst(1, 2)),
    };
    // expected order: zero below all, (3) below the maximal shapes, maximal
    // shapes pairwise distinct
    auto expect_le = [&](std::size_t i, std::size_t j) {
      if (i == j || i == 0) return true;
      if (i == 1) return j >= 2;
      return false;
    };
    int checked = 0;
    for (std::size_t i = 0; i < bs.size(); ++i) {
      for (std::size_t j = 0; j < bs.size(); ++j) {
        TambaraPrime A = TambaraPrime::type2(spec, PhiPrime(bs[i]));
        TambaraPrime B = TambaraPrime::type2(spec, PhiPrime(bs[j]));
        INFO("i=" << i << " j=" << j);
        ContainsResult r = contains(A, B);
        CHECK(r.le() == expect_le(i, j));
        if (!expect_le(i, j)) {
          REQUIRE(r.status == ContainsStatus::NotLE);
          REQUIRE(r.witness.has_value());
          CHECK(A.member(*r.witness));
          CHECK_FALSE(B.member(*r.witness));
        }
        ++checked;
      }
    }
    CHECK(checked == 25);

    // cross-kind: a fixed-level maximal shape sits under the full coordinate
    // point exactly when its residue is zero
    MultiPoly x0 = V(2, 0), x1 = V(2, 1);
    TambaraPrime top = TambaraPrime::type1(
        spec, BottomPrime(CpPrime::orbit_meet(spec, GenIdeal(2, 3, {x0, x1}))));
    for (long long c = 0; c < 3; ++c) {
      TambaraPrime A = TambaraPrime::type2(
          spec, PhiPrime(SymPrime1::maximal(3, nvar - Cst(1, c))));
      CHECK(contains(A, top).le() == (c == 0));
    }
  }
}

TEST_CASE("containment verdicts respect sampled membership") {
  struct LePair {
    TambaraPrime A, B;
  };
  std::vector<LePair> pairs;

  {
    auto spec = make_functor(FunctorKind::Burnside, 2);
    pairs.push_back({TambaraPrime::type2(spec, PhiPrime(ZPrime::zero())),
                     TambaraPrime::type2(spec, PhiPrime(ZPrime::rational(3)))});
    pairs.push_back({TambaraPrime::type2(spec, PhiPrime(ZPrime::rational(3))),
                     TambaraPrime::type1(spec, BottomPrime(ZPrime::rational(3)))});
  }
  {
    auto spec = make_functor(FunctorKind::RU, 3);
    pairs.push_back({TambaraPrime::type2(spec, PhiPrime(RUPhiPrime::zero_ideal(3))),
                     TambaraPrime::type2(spec, PhiPrime(RUPhiPrime::canonical(3, 7)))});
    pairs.push_back({TambaraPrime::type2(spec, PhiPrime(RUPhiPrime::canonical(3, 7))),
                     TambaraPrime::type1(spec, BottomPrime(ZPrime::rational(7)))});
  }
  {
    auto spec = make_functor(FunctorKind::FreeFixed, 2);
    MultiPoly x = V(2, 0), n = V(2, 1);
    pairs.push_back(
        {TambaraPrime::type2(spec, PhiPrime(GenIdeal(2, 0, {n - x * x}, {"x", "n"}))),
         TambaraPrime::type2(spec, PhiPrime(GenIdeal(2, 3, {x, n}, {"x", "n"})))});
    pairs.push_back(
        {TambaraPrime::type2(spec, PhiPrime(GenIdeal(2, 3, {x}, {"x", "n"}))),
         TambaraPrime::type2(spec, PhiPrime(GenIdeal(2, 3, {x, n}, {"x", "n"})))});
    pairs.push_back(
        {TambaraPrime::type2(spec, PhiPrime(GenIdeal(2, 2, {x}, {"x", "n"}))),
         TambaraPrime::type2(spec, PhiPrime(GenIdeal(2, 2, {n - x * x}, {"x", "n"})))});
  }
  {
    auto spec = make_functor(FunctorKind::FreeUnderlying, 2);
    MultiPoly x0 = V(2, 0), x1 = V(2, 1), nvar = V(1, 0);
    pairs.push_back({TambaraPrime::type2(spec, PhiPrime(SymPrime1::rational(3))),
                     TambaraPrime::type2(spec, PhiPrime(SymPrime1::maximal(3, nvar)))});
    pairs.push_back(
        {TambaraPrime::type1(spec, BottomPrime(CpPrime::invariant(spec, GenIdeal(2, 3, {})))),
         TambaraPrime::type1(
             spec, BottomPrime(CpPrime::orbit_meet(spec, GenIdeal(2, 3, {x0}))))});
    pairs.push_back(
        {TambaraPrime::type1(
             spec, BottomPrime(CpPrime::orbit_meet(spec, GenIdeal(2, 3, {x0})))),
         TambaraPrime::type1(
             spec, BottomPrime(CpPrime::orbit_meet(spec, GenIdeal(2, 3, {x0, x1}))))});
  }

  std::uint64_t seed = 97;
  for (const auto& pr : pairs) {
    REQUIRE(contains(pr.A, pr.B).le());
    CHECK(le_implication_violations(pr.A, pr.B, seed++, 20) == 0);
  }
}

TEST_CASE("comparisons across functors are rejected") {
  auto sa = make_functor(FunctorKind::Burnside, 2);
  auto sb = make_functor(FunctorKind::Burnside, 3);
  TambaraPrime A = TambaraPrime::type1(sa, BottomPrime(ZPrime::rational(5)));
  TambaraPrime B = TambaraPrime::type1(sb, BottomPrime(ZPrime::rational(5)));
  CHECK_THROWS_AS(contains(A, B), LevelError);
}
