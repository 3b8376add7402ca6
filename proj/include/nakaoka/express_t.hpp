#pragma once
#include <map>
#include <string>
#include <vector>

#include "nakaoka/tambara.hpp"

namespace nakaoka {

// Expression of an arbitrary transfer class t_v of the free-underlying functor
// as a polynomial in the finite generator set
//
//   p = 2:  n, t[0,0], t[1,0], t[1,1], t[2,0]
//   p = 3:  n and all orbit representatives t_v with |v| <= 3
//
// The formula lives in an auxiliary polynomial ring with one variable per
// generator (variable 0 is n); evaluate() expands it back through actual
// free-underlying arithmetic, which is the correctness oracle.
struct TExpression {
  std::uint32_t p = 2;
  Mono target;                       // canonical orbit representative
  std::vector<Mono> gens;            // t-generator orbit representatives
  MultiPoly formula{1, 0};           // in vars [n, t_{gens[0]}, t_{gens[1]}, ...]

  std::vector<std::string> var_names() const {
    std::vector<std::string> names{"n"};
    for (const Mono& g : gens) {
      std::string s = "t[";
      for (std::size_t i = 0; i < g.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(g[i]);
      }
      names.push_back(s + "]");
    }
    return names;
  }

  std::string str() const { return formula.str(var_names()); }

  Elem evaluate(const Functor& fu) const {
    Elem acc = fu.zero(Level::Top);
    for (auto& [m, c] : formula.terms()) {
      Elem term = fu.top_fu(MultiPoly::constant(1, 0, c), {});
      if (m[0] > 0) {
        Elem n = fu.top_fu(MultiPoly::variable(1, 0, 0), {});
        term = fu.mul(term, fu.pow(n, m[0]));
      }
      for (std::size_t i = 0; i < gens.size(); ++i)
        if (m[1 + i] > 0) term = fu.mul(term, fu.pow(fu.fu_t(gens[i]), m[1 + i]));
      acc = fu.add(acc, term);
    }
    return acc;
  }
};

namespace detail {

class TExpressEngine {
 public:
  explicit TExpressEngine(std::uint32_t p) : p_(p), fu_(make_functor(FunctorKind::FreeUnderlying, p)) {
    if (p != 2 && p != 3)
      throw UnsupportedError("generator expressions are implemented for p = 2 and p = 3");
    if (p == 2) {
      gens_ = {{0, 0}, {1, 0}, {1, 1}, {2, 0}};
    } else {
      // all orbit representatives with |v| <= 3, ordered by degree then lex
      std::vector<Mono> all;
      for (std::uint32_t a = 0; a <= 3; ++a)
        for (std::uint32_t b = 0; b <= 3; ++b)
          for (std::uint32_t c = 0; a + b + c <= 3; ++c) {
            Mono v{a, b, c};
            if (fu_.canon_rot(v) == v) all.push_back(v);
          }
      std::sort(all.begin(), all.end(), [](const Mono& x, const Mono& y) {
        return grlex_less(x, y);
      });
      gens_ = std::move(all);
    }
    nvars_ = static_cast<std::uint32_t>(1 + gens_.size());
  }

  const std::vector<Mono>& gens() const { return gens_; }
  std::uint32_t nvars() const { return nvars_; }

  MultiPoly express(const Mono& v, int depth = 0) {
    if (depth > 200) throw ResourceError("generator expression recursion too deep");
    Mono key = fu_.canon_rot(v);
    auto hit = memo_.find(key);
    if (hit != memo_.end()) return hit->second;
    MultiPoly out = compute(key, depth);
    memo_.emplace(key, out);
    return out;
  }

 private:
  MultiPoly compute(const Mono& key, int depth) {
    for (std::size_t i = 0; i < gens_.size(); ++i)
      if (gens_[i] == key) return MultiPoly::variable(nvars_, 0, static_cast<std::uint32_t>(1 + i));
    if (p_ == 2) return compute2(key, depth);
    return compute3(key, depth);
  }

  MultiPoly var_n() const { return MultiPoly::variable(nvars_, 0, 0); }

  // v with every entry >= 1: t_v = n * t_{v - (1,...,1)}.
  MultiPoly rule_diag(const Mono& v, int depth) {
    Mono down = v;
    for (auto& e : down) --e;
    return var_n() * express(down, depth + 1);
  }

  MultiPoly compute2(const Mono& key, int depth) {
    std::uint32_t i = key[0], j = key[1];
    if (j >= 1) return rule_diag(key, depth);
    // t_{(K,0)} = t_{(K-1,0)} t_{(1,0)} - t_{(K-1,1)} for K >= 3
    std::uint32_t K = i;
    return express({K - 1, 0}, depth + 1) * express({1, 0}, depth + 1) -
           express({K - 1, 1}, depth + 1);
  }

  MultiPoly compute3(const Mono& key, int depth) {
    int zeros = 0;
    for (auto e : key)
      if (e == 0) ++zeros;
    if (zeros == 0) return rule_diag(key, depth);

    // rotate so the form ends in 0 (and starts nonzero when two entries vanish)
    Mono v = key;
    for (std::uint32_t r = 0; r < 3; ++r) {
      if (v[2] == 0 && v[0] != 0) break;
      Mono w(3);
      for (std::uint32_t k = 0; k < 3; ++k) w[(k + 1) % 3] = v[k];
      v = w;
    }
    std::uint32_t a = v[0], b = v[1];

    if (zeros == 2) {
      // t_{(K,0,0)} = t_{(K-1,0,0)} t_{(1,0,0)} - t_{(K-1,1,0)} - t_{(K-1,0,1)}
      std::uint32_t K = a;
      return express({K - 1, 0, 0}, depth + 1) * express({1, 0, 0}, depth + 1) -
             express({K - 1, 1, 0}, depth + 1) - express({K - 1, 0, 1}, depth + 1);
    }
    if (a >= 2 && b >= 2) {
      // t_{(a,b,0)} = t_{(a-1,b-1,0)} t_{(1,1,0)} - t_{(a-1,b,1)} - t_{(a,b-1,1)}
      return express({a - 1, b - 1, 0}, depth + 1) * express({1, 1, 0}, depth + 1) -
             express({a - 1, b, 1}, depth + 1) - express({a, b - 1, 1}, depth + 1);
    }
    if (b == 1) {
      // t_{(0,a,1)} = t_{(0,a-1,1)} t_{(0,1,0)} - t_{(0,a-1,2)} - t_{(1,a-1,1)}
      return express({0, a - 1, 1}, depth + 1) * express({0, 1, 0}, depth + 1) -
             express({0, a - 1, 2}, depth + 1) - express({1, a - 1, 1}, depth + 1);
    }
    // a == 1: t_{(0,1,b)} = t_{(0,1,b-1)} t_{(0,0,1)} - t_{(1,1,b-1)} - t_{(0,2,b-1)}
    return express({0, 1, b - 1}, depth + 1) * express({0, 0, 1}, depth + 1) -
           express({1, 1, b - 1}, depth + 1) - express({0, 2, b - 1}, depth + 1);
  }

  std::uint32_t p_;
  Functor fu_;
  std::vector<Mono> gens_;
  std::uint32_t nvars_ = 0;
  std::map<Mono, MultiPoly> memo_;
};

}  // namespace detail

inline TExpression express_t(std::uint32_t p, const Mono& v) {
  if (v.size() != p) throw LevelError("transfer vector arity mismatch");
  detail::TExpressEngine eng(p);
  Functor fu(make_functor(FunctorKind::FreeUnderlying, p));
  TExpression out;
  out.p = p;
  out.target = fu.canon_rot(v);
  out.gens = eng.gens();
  out.formula = eng.express(v);
  return out;
}

}  // namespace nakaoka
