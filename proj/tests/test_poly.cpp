#include <catch2/catch_amalgamated.hpp>

#include "nakaoka/groebner.hpp"
#include "nakaoka/numbertheory.hpp"
#include "nakaoka/poly.hpp"

using namespace nakaoka;

namespace {

MultiPoly var(std::uint32_t nvars, std::uint32_t chr, std::uint32_t i, std::uint32_t e = 1) {
  return MultiPoly::variable(nvars, chr, i, e);
}
MultiPoly ci(std::uint32_t nvars, std::uint32_t chr, long long n) {
  return MultiPoly::from_int(nvars, chr, n);
}

}  // namespace

TEST_CASE("scalar arithmetic is exact in both characteristics") {
  Coeff a = Coeff::from_rat(BigRat(1, 3));
  Coeff b = Coeff::from_rat(BigRat(1, 6));
  CHECK(a + b == Coeff::from_rat(BigRat(1, 2)));
  CHECK((a / b) == Coeff::from_int(2, 0));
  CHECK_FALSE(a.is_integer());

  Coeff x = Coeff::from_int(3, 7), y = Coeff::from_int(5, 7);
  CHECK(x * y == Coeff::from_int(1, 7));
  CHECK(Coeff::one(7) / x == y);
  CHECK(Coeff::from_int(-1, 7) == Coeff::from_int(6, 7));
  CHECK_THROWS_AS(x + a, LevelError);
}

TEST_CASE("polynomial arithmetic and canonical printing") {
  auto x = var(2, 0, 0), y = var(2, 0, 1);
  auto f = (x + y) * (x + y);
  CHECK(f == x.pow(2) + x * y.scaled(Coeff::from_int(2, 0)) + y.pow(2));
  CHECK(f.str({"x", "y"}) == "x^2 + 2*x*y + y^2");

  auto g = x * x - y - ci(2, 0, 3);
  CHECK(g.str({"x", "y"}) == "x^2 - y - 3");
  CHECK((-g).str({"x", "y"}) == "-x^2 + y + 3");
  CHECK(MultiPoly(2, 0).str({"x", "y"}) == "0");

  CHECK(g.total_degree() == 2);
  CHECK(g.degree_in(1) == 1);
  CHECK(g.coeff_of(Mono{0, 0}) == Coeff::from_int(-3, 0));
}

TEST_CASE("substitution works across rings") {
  auto x = var(2, 0, 0), y = var(2, 0, 1);
  auto f = x.pow(2) + y;
  auto swapped = f.substitute({y, x}, 2, 0);
  CHECK(swapped == y.pow(2) + x);

  // Reduce 6x + 4 into F_5 via substitution images.
  auto g = x.scaled(Coeff::from_int(6, 0)) + ci(2, 0, 4);
  auto mod5 = g.reduce_mod(5);
  CHECK(mod5 == var(2, 5, 0) + ci(2, 5, 4));

  auto one_var = f.substitute({var(1, 0, 0), ci(1, 0, 2)}, 1, 0);
  CHECK(one_var == var(1, 0, 0).pow(2) + ci(1, 0, 2));
}

TEST_CASE("content and primitive part") {
  auto x = var(1, 0, 0);
  auto f = x.scaled(Coeff::from_int(6, 0)) + ci(1, 0, 4);
  CHECK(f.content() == 2);
  CHECK(f.primitive_part() == x.scaled(Coeff::from_int(3, 0)) + ci(1, 0, 2));
  CHECK(MultiPoly(1, 0).content() == 0);
}

TEST_CASE("division and Groebner bases over Q") {
  auto x = var(2, 0, 0), y = var(2, 0, 1);
  std::vector<MultiPoly> gens{x.pow(2) - y, x.pow(3) - x};
  CHECK(ideal_member(x * y - x, gens));
  CHECK_FALSE(ideal_member(x, gens));
  CHECK_FALSE(ideal_member(y, gens));
  CHECK(ideal_member((x * y - x) * (y + ci(2, 0, 7)), gens));

  auto gb = groebner_basis(gens, Order::Grlex);
  for (auto& g : gb) {
    CHECK(ideal_member(g, gens));             // basis stays inside the ideal
    CHECK(normal_form(g, gb, Order::Grlex).is_zero());
  }
  CHECK_FALSE(normal_form(x, gb, Order::Grlex).is_zero());
}

TEST_CASE("Groebner bases over F_q and the Z refusal") {
  auto x = var(1, 2, 0);
  std::vector<MultiPoly> gens{x.pow(2) + x};
  CHECK(ideal_member(x.pow(4) + x.pow(2), gens));
  CHECK_FALSE(ideal_member(x.pow(3), gens));

  CHECK_THROWS_AS(groebner({var(1, 0, 0)}, CoeffRing::Z), UnsupportedError);
  CHECK_NOTHROW(groebner({var(1, 0, 0)}, CoeffRing::Q));
}

TEST_CASE("degree cap raises a structured resource error") {
  auto x = var(1, 0, 0);
  CHECK_THROWS_AS(groebner_basis({x.pow(50) - ci(1, 0, 1)}, Order::Grlex, 5), ResourceError);
}

TEST_CASE("elimination computes subring intersections") {
  // Var 0 is eliminated; lex ranks it highest.
  auto x = var(2, 0, 0), y = var(2, 0, 1);
  auto inter = elim_intersection({x * y - ci(2, 0, 1), y.pow(2) - ci(2, 0, 1)}, 1);
  REQUIRE(inter.size() == 1);
  CHECK(inter[0] == y.pow(2) - ci(2, 0, 1));

  CHECK(elim_intersection({x - y.pow(2)}, 1).empty());

  // <n - x^p> meets Q[n] trivially (p = 2 instance).
  auto n = var(2, 0, 1);
  CHECK(elim_intersection({n - x.pow(2)}, 1).empty());
}

TEST_CASE("primality and multiplicative orders") {
  CHECK(is_prime_u64(2));
  CHECK(is_prime_u64(47));
  CHECK_FALSE(is_prime_u64(1));
  CHECK_FALSE(is_prime_u64(49));

  CHECK(multiplicative_order(2, 3) == std::pair<std::uint32_t, std::uint32_t>{2, 1});
  CHECK(multiplicative_order(7, 3) == std::pair<std::uint32_t, std::uint32_t>{1, 2});
  CHECK(multiplicative_order(2, 5) == std::pair<std::uint32_t, std::uint32_t>{4, 1});
  CHECK(multiplicative_order(19, 5) == std::pair<std::uint32_t, std::uint32_t>{2, 2});
  CHECK_THROWS_AS(multiplicative_order(5, 5), UnsupportedError);
}

TEST_CASE("irreducibility over F_q") {
  auto x = var(1, 0, 0);
  CHECK(irreducible_mod_q(x.pow(2) + ci(1, 0, 1), 3));
  CHECK_FALSE(irreducible_mod_q(x.pow(2) + ci(1, 0, 1), 5));
  CHECK(irreducible_mod_q(x.pow(2) + x + ci(1, 0, 1), 2));
  CHECK_FALSE(irreducible_mod_q(x.pow(2) + ci(1, 0, 1), 2));
  CHECK(irreducible_mod_q(x - ci(1, 0, 4), 7));
  CHECK(irreducible_mod_q(x.pow(3) + x + ci(1, 0, 1), 2));       // no roots in F_2
  CHECK_FALSE(irreducible_mod_q(x.pow(4) + x.pow(2) + ci(1, 0, 1), 2));  // (x^2+x+1)^2
}

TEST_CASE("integer polynomial divisibility") {
  auto x = var(1, 0, 0);
  CHECK(divides_over_Z(x - ci(1, 0, 1), x.pow(2) - ci(1, 0, 1)));
  CHECK_FALSE(divides_over_Z(x.scaled(Coeff::from_int(2, 0)) - ci(1, 0, 2),
                             x.pow(2) - ci(1, 0, 1)));
  CHECK(divides_over_Z(x + ci(1, 0, 1), x.pow(3) + ci(1, 0, 1)));
  CHECK_FALSE(divides_over_Z(x + ci(1, 0, 2), x.pow(3) + ci(1, 0, 1)));
  CHECK(divides_over_Z(ci(1, 0, 3), ci(1, 0, 9)));
  CHECK_FALSE(divides_over_Z(ci(1, 0, 2), x + ci(1, 0, 1)));
}

TEST_CASE("cyclotomic factor tables") {
  CHECK(cyclotomic(3).str({"x"}) == "x^2 + x + 1");

  auto c37 = factor_cyclotomic_mod(3, 7);
  CHECK(c37.f == 1);
  CHECK(c37.e == 2);
  REQUIRE(c37.factors.size() == 2);
  // Roots of x^2+x+1 mod 7 are 2 and 4; canonical order is ascending root.
  CHECK(c37.factors[0] == var(1, 7, 0) + ci(1, 7, 5));
  CHECK(c37.factors[1] == var(1, 7, 0) + ci(1, 7, 3));

  auto c32 = factor_cyclotomic_mod(3, 2);
  CHECK(c32.f == 2);
  CHECK(c32.e == 1);
  CHECK(c32.factors[0] == cyclotomic(3).reduce_mod(2));

  auto c519 = factor_cyclotomic_mod(5, 19);
  CHECK(c519.f == 2);
  CHECK(c519.e == 2);
  REQUIRE(c519.factors.size() == 2);
  for (auto& g : c519.factors) {
    CHECK(g.degree_in(0) == 2);
    CHECK(irreducible_mod_q(g, 19));
  }

  auto c511 = factor_cyclotomic_mod(5, 11);
  CHECK(c511.f == 1);
  CHECK(c511.e == 4);
  CHECK(c511.factors.size() == 4);
}
