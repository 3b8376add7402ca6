#pragma once
#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>

#include "nakaoka/error.hpp"

namespace nakaoka {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

inline std::uint64_t mod_reduce(const BigInt& x, std::uint64_t q) {
  BigInt r = x % q;
  if (r < 0) r += q;
  return r.convert_to<std::uint64_t>();
}

inline std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b, std::uint64_t q) {
  return (static_cast<unsigned __int128>(a) * b) % q;
}

inline std::uint64_t mod_pow(std::uint64_t b, std::uint64_t e, std::uint64_t q) {
  std::uint64_t r = 1 % q;
  b %= q;
  while (e) {
    if (e & 1) r = mod_mul(r, b, q);
    b = mod_mul(b, b, q);
    e >>= 1;
  }
  return r;
}

// Inverse mod a prime q.
inline std::uint64_t mod_inv(std::uint64_t a, std::uint64_t q) {
  a %= q;
  if (a == 0) throw LevelError("division by zero in F_q");
  return mod_pow(a, q - 2, q);
}

// Exact scalar: a rational (characteristic 0) or an element of F_q
// (characteristic q, q prime). Arithmetic requires matching characteristics.
class Coeff {
 public:
  Coeff() = default;  // zero in characteristic 0

  static Coeff zero(std::uint32_t chr) { return from_int(0, chr); }
  static Coeff one(std::uint32_t chr) { return from_int(1, chr); }

  static Coeff from_int(long long n, std::uint32_t chr) {
    return from_bigint(BigInt(n), chr);
  }

  static Coeff from_bigint(const BigInt& n, std::uint32_t chr) {
    Coeff c;
    c.chr_ = chr;
    if (chr == 0)
      c.r_ = n;
    else
      c.v_ = mod_reduce(n, chr);
    return c;
  }

  static Coeff from_rat(const BigRat& r) {
    Coeff c;
    c.chr_ = 0;
    c.r_ = r;
    return c;
  }

  std::uint32_t chr() const { return chr_; }

  bool is_zero() const { return chr_ == 0 ? r_ == 0 : v_ == 0; }
  bool is_one() const { return chr_ == 0 ? r_ == 1 : v_ == 1 % chr_; }

  // Characteristic 0 only: integrality and integer value.
  bool is_integer() const {
    return chr_ != 0 || boost::multiprecision::denominator(r_) == 1;
  }
  BigInt as_bigint() const {
    if (chr_ != 0) return BigInt(v_);
    if (!is_integer()) throw LevelError("coefficient is not an integer");
    return boost::multiprecision::numerator(r_);
  }
  const BigRat& rat() const {
    if (chr_ != 0) throw LevelError("rational view of a mod-q coefficient");
    return r_;
  }
  std::uint64_t residue() const {
    if (chr_ == 0) throw LevelError("residue view of a characteristic-0 coefficient");
    return v_;
  }

  // Map a characteristic-0 coefficient into F_q (denominator must be a unit).
  Coeff reduce_to(std::uint32_t q) const {
    if (chr_ == q) return *this;
    if (chr_ != 0) throw LevelError("cannot change positive characteristic");
    std::uint64_t num = mod_reduce(boost::multiprecision::numerator(r_), q);
    std::uint64_t den = mod_reduce(boost::multiprecision::denominator(r_), q);
    Coeff c;
    c.chr_ = q;
    c.v_ = mod_mul(num, mod_inv(den, q), q);
    return c;
  }

  // Canonical lift of an F_q value to characteristic 0 (representative in [0,q)).
  Coeff lift() const {
    if (chr_ == 0) return *this;
    return from_bigint(BigInt(v_), 0);
  }

  Coeff operator-() const {
    Coeff c = *this;
    if (chr_ == 0)
      c.r_ = -c.r_;
    else if (c.v_ != 0)
      c.v_ = chr_ - c.v_;
    return c;
  }

  Coeff& operator+=(const Coeff& o) {
    check(o);
    if (chr_ == 0)
      r_ += o.r_;
    else
      v_ = (v_ + o.v_) % chr_;
    return *this;
  }
  Coeff& operator-=(const Coeff& o) { return *this += -o; }
  Coeff& operator*=(const Coeff& o) {
    check(o);
    if (chr_ == 0)
      r_ *= o.r_;
    else
      v_ = mod_mul(v_, o.v_, chr_);
    return *this;
  }
  Coeff& operator/=(const Coeff& o) {
    check(o);
    if (chr_ == 0) {
      if (o.r_ == 0) throw LevelError("division by zero");
      r_ /= o.r_;
    } else {
      v_ = mod_mul(v_, mod_inv(o.v_, chr_), chr_);
    }
    return *this;
  }

  friend Coeff operator+(Coeff a, const Coeff& b) { return a += b; }
  friend Coeff operator-(Coeff a, const Coeff& b) { return a -= b; }
  friend Coeff operator*(Coeff a, const Coeff& b) { return a *= b; }
  friend Coeff operator/(Coeff a, const Coeff& b) { return a /= b; }

  Coeff pow(unsigned e) const {
    Coeff r = one(chr_), b = *this;
    while (e) {
      if (e & 1) r *= b;
      b *= b;
      e >>= 1;
    }
    return r;
  }

  bool operator==(const Coeff& o) const {
    return chr_ == o.chr_ && (chr_ == 0 ? r_ == o.r_ : v_ == o.v_);
  }
  bool operator!=(const Coeff& o) const { return !(*this == o); }

  // True if the char-0 value is negative (used only for printing).
  bool is_negative() const { return chr_ == 0 && r_ < 0; }

  std::string str() const {
    if (chr_ != 0) return std::to_string(v_);
    return r_.str();
  }

 private:
  void check(const Coeff& o) const {
    if (chr_ != o.chr_) throw LevelError("coefficient characteristic mismatch");
  }

  std::uint32_t chr_ = 0;
  BigRat r_;
  std::uint64_t v_ = 0;
};

}  // namespace nakaoka
