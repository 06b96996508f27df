#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>

namespace lieinv {

// thin value wrapper over mpq_class; always canonical
class Rational {
 public:
  Rational() = default;
  Rational(int v) : v_(v) {}
  Rational(long v) : v_(v) {}
  Rational(long num, long den);
  explicit Rational(const mpz_class& z) : v_(z) {}
  Rational(const mpz_class& num, const mpz_class& den);
  explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

  static Rational parse(std::string_view text);  // "12", "-3/4"

  const mpq_class& get() const { return v_; }
  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }
  Rational abs() const { return Rational(mpq_class(::abs(v_))); }
  Rational inverse() const;
  std::string str() const { return v_.get_str(); }
  std::size_t hash() const;
  // fits in long, integer only
  bool fits_long() const { return is_integer() && v_.get_num().fits_slong_p(); }
  long to_long() const { return v_.get_num().get_si(); }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }

 private:
  mpq_class v_;
};

Rational pow(const Rational& base, long e);
mpz_class lcm_den(const Rational& a, const mpz_class& acc);

// seeded exact sampler; numerators uniform in [-bound, bound], denominator 1
class RationalSampler {
 public:
  explicit RationalSampler(std::uint64_t seed, long bound = 10000) : rng_(seed), bound_(bound) {}
  Rational next();
  Rational next_nonzero();
  long next_int(long lo, long hi);
  long bound() const { return bound_; }

 private:
  std::mt19937_64 rng_;
  long bound_;
};

}  // namespace lieinv
