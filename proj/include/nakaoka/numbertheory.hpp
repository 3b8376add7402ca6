#pragma once
#include <cstdint>
#include <utility>
#include <vector>

#include "nakaoka/poly.hpp"

namespace nakaoka {

inline bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull,
                          31ull, 37ull}) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) d >>= 1, ++s;
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull,
                          31ull, 37ull}) {
    std::uint64_t x = mod_pow(a % n, d, n);
    if (x == 0 || x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int r = 1; r < s; ++r) {
      x = mod_mul(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

// Order f of q in (Z/p)^* together with e = (p-1)/f.
inline std::pair<std::uint32_t, std::uint32_t> multiplicative_order(std::uint64_t q,
                                                                    std::uint32_t p) {
  if (!is_prime_u64(q) || !is_prime_u64(p)) throw LevelError("multiplicative_order needs primes");
  if (q == p) throw UnsupportedError("multiplicative_order is undefined at q = p");
  std::uint64_t x = q % p, acc = x;
  std::uint32_t f = 1;
  while (acc != 1) {
    acc = mod_mul(acc, x, p);
    ++f;
  }
  return {f, (p - 1) / f};
}

// 1 + x + ... + x^{p-1} over Z.
inline MultiPoly cyclotomic(std::uint32_t p) {
  MultiPoly f(1, 0);
  for (std::uint32_t i = 0; i < p; ++i) f += MultiPoly::variable(1, 0, 0, i);
  return f;
}

namespace fqx {
// Dense little-endian univariate arithmetic over F_q.

inline std::vector<std::uint64_t> trim(std::vector<std::uint64_t> a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

inline std::vector<std::uint64_t> to_dense(const MultiPoly& f) {
  if (f.nvars() != 1 || f.chr() == 0) throw LevelError("dense form needs univariate mod-q input");
  std::vector<std::uint64_t> a(f.degree_in(0) + 1, 0);
  for (auto& [m, c] : f.terms()) a[m[0]] = c.residue();
  return trim(a);
}

inline MultiPoly from_dense(const std::vector<std::uint64_t>& a, std::uint32_t q) {
  MultiPoly f(1, q);
  for (std::size_t i = 0; i < a.size(); ++i)
    f.add_term(Mono{static_cast<std::uint32_t>(i)}, Coeff::from_int(a[i], q));
  return f;
}

inline std::vector<std::uint64_t> mul(const std::vector<std::uint64_t>& a,
                                      const std::vector<std::uint64_t>& b, std::uint64_t q) {
  if (a.empty() || b.empty()) return {};
  std::vector<std::uint64_t> r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = (r[i + j] + mod_mul(a[i], b[j], q)) % q;
  return trim(r);
}

// Remainder of a mod b (b nonzero).
inline std::vector<std::uint64_t> rem(std::vector<std::uint64_t> a,
                                      const std::vector<std::uint64_t>& b, std::uint64_t q) {
  if (b.empty()) throw LevelError("division by zero polynomial");
  std::uint64_t inv_lead = mod_inv(b.back(), q);
  while (a.size() >= b.size()) {
    std::uint64_t c = mod_mul(a.back(), inv_lead, q);
    std::size_t shift = a.size() - b.size();
    if (c != 0)
      for (std::size_t i = 0; i < b.size(); ++i)
        a[shift + i] = (a[shift + i] + q - mod_mul(c, b[i], q)) % q;
    a = trim(std::move(a));
    if (a.size() < b.size()) break;
  }
  return a;
}

inline bool divides(const std::vector<std::uint64_t>& b, const std::vector<std::uint64_t>& a,
                    std::uint64_t q) {  // b | a
  if (b.empty()) return a.empty();
  return rem(a, b, q).empty();
}

inline std::vector<std::uint64_t> monic(std::vector<std::uint64_t> a, std::uint64_t q) {
  if (a.empty()) return a;
  std::uint64_t inv = mod_inv(a.back(), q);
  for (auto& c : a) c = mod_mul(c, inv, q);
  return a;
}

inline std::vector<std::uint64_t> gcd(std::vector<std::uint64_t> a,
                                      std::vector<std::uint64_t> b, std::uint64_t q) {
  a = trim(std::move(a));
  b = trim(std::move(b));
  while (!b.empty()) {
    auto r = rem(a, b, q);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(std::move(a), q);
}

inline std::vector<std::uint64_t> pow_mod(std::vector<std::uint64_t> base, BigInt e,
                                          const std::vector<std::uint64_t>& f,
                                          std::uint64_t q) {
  std::vector<std::uint64_t> r{1};
  base = rem(std::move(base), f, q);
  while (e > 0) {
    if ((e & 1) != 0) r = rem(mul(r, base, q), f, q);
    base = rem(mul(base, base, q), f, q);
    e >>= 1;
  }
  return r;
}

}  // namespace fqx

// Irreducibility of f over F_q (f given over Z or F_q, univariate, degree >= 1):
// x^{q^d} = x mod f, and gcd(x^{q^{d/r}} - x, f) = 1 for every prime r | d.
inline bool irreducible_mod_q(const MultiPoly& f_in, std::uint32_t q) {
  MultiPoly fq = f_in.chr() == 0 ? f_in.reduce_mod(q) : f_in;
  if (fq.chr() != q) throw LevelError("irreducibility test: characteristic mismatch");
  auto f = fqx::to_dense(fq);
  if (f.size() < 2) return false;  // constants are not irreducible
  std::uint32_t d = static_cast<std::uint32_t>(f.size() - 1);
  if (d == 1) return true;
  auto xpoly = std::vector<std::uint64_t>{0, 1};
  auto qpow = [&](std::uint32_t k) {  // x^{q^k} mod f
    BigInt e = 1;
    for (std::uint32_t i = 0; i < k; ++i) e *= q;
    return fqx::pow_mod(xpoly, e, f, q);
  };
  auto sub_x = [&](std::vector<std::uint64_t> g) {
    if (g.size() < 2) g.resize(2, 0);
    g[1] = (g[1] + q - 1) % q;
    return fqx::trim(std::move(g));
  };
  if (!sub_x(qpow(d)).empty()) return false;
  std::uint32_t m = d;
  for (std::uint32_t r = 2; r <= m; ++r) {
    if (m % r != 0) continue;
    auto g = fqx::gcd(sub_x(qpow(d / r)), f, q);
    if (g.size() != 1) return false;
    while (m % r == 0) m /= r;
  }
  return true;
}

// Exact divisibility g | f in Z[x] (univariate integer polynomials).
inline bool divides_over_Z(const MultiPoly& g, const MultiPoly& f) {
  if (g.nvars() != 1 || f.nvars() != 1 || g.chr() != 0 || f.chr() != 0 ||
      !g.is_integer_poly() || !f.is_integer_poly())
    throw LevelError("divides_over_Z needs univariate integer polynomials");
  if (g.is_zero()) return f.is_zero();
  if (f.is_zero()) return true;
  std::uint32_t dg = g.degree_in(0), df = f.degree_in(0);
  if (dg > df) return false;
  std::vector<BigRat> a(df + 1), b(dg + 1);
  for (auto& [m, c] : f.terms()) a[m[0]] = c.rat();
  for (auto& [m, c] : g.terms()) b[m[0]] = c.rat();
  std::vector<BigRat> quot(df - dg + 1);
  for (std::int64_t k = df - dg; k >= 0; --k) {
    BigRat c = a[k + dg] / b[dg];
    quot[k] = c;
    for (std::uint32_t i = 0; i <= dg; ++i) a[k + i] -= c * b[i];
  }
  for (auto& c : a)
    if (c != 0) return false;
  for (auto& c : quot)
    if (boost::multiprecision::denominator(c) != 1) return false;
  return true;
}

// Canonical factor data of the p-th cyclotomic polynomial mod q (q != p):
// f = multiplicative order of q mod p, e = (p-1)/f irreducible factors, each of
// degree f; `factors` lists them monic in a deterministic canonical order
// (ascending root for split factors, ascending coefficient tuple otherwise).
struct CyclotomicFactors {
  std::uint32_t f = 0, e = 0;
  std::vector<MultiPoly> factors;  // over F_q
};

inline CyclotomicFactors factor_cyclotomic_mod(std::uint32_t p, std::uint64_t q) {
  auto [f, e] = multiplicative_order(q, p);
  CyclotomicFactors out;
  out.f = f;
  out.e = e;
  MultiPoly phi = cyclotomic(p).reduce_mod(static_cast<std::uint32_t>(q));
  auto target = fqx::to_dense(phi);
  if (f == p - 1) {
    out.factors.push_back(phi);
    return out;
  }
  if (f == 1) {
    for (std::uint64_t a = 0; a < q && out.factors.size() < e; ++a) {
      std::uint64_t val = 0, xp = 1;
      for (std::uint32_t i = 0; i < p; ++i) {
        val = (val + xp) % q;
        xp = mod_mul(xp, a, q);
      }
      if (val == 0)
        out.factors.push_back(fqx::from_dense({(q - a) % q, 1}, static_cast<std::uint32_t>(q)));
    }
  } else {
    // Enumerate monic degree-f divisors in ascending coefficient-tuple order.
    std::uint64_t total = 1;
    for (std::uint32_t i = 0; i < f; ++i) total *= q;
    for (std::uint64_t code = 0; code < total && out.factors.size() < e; ++code) {
      std::vector<std::uint64_t> cand(f + 1, 0);
      cand[f] = 1;
      std::uint64_t c = code;
      for (std::uint32_t i = 0; i < f; ++i) {
        cand[i] = c % q;
        c /= q;
      }
      if (fqx::divides(cand, target, q) &&
          irreducible_mod_q(fqx::from_dense(cand, static_cast<std::uint32_t>(q)),
                            static_cast<std::uint32_t>(q)))
        out.factors.push_back(fqx::from_dense(cand, static_cast<std::uint32_t>(q)));
    }
  }
  if (out.factors.size() != e)
    throw LevelError("cyclotomic factor count does not match (p-1)/f");
  auto prod = std::vector<std::uint64_t>{1};
  for (auto& g : out.factors) prod = fqx::mul(prod, fqx::to_dense(g), q);
  if (fqx::trim(prod) != target) throw LevelError("cyclotomic factorization check failed");
  return out;
}

}  // namespace nakaoka
