#include "lieinv/rational.hpp"

#include "lieinv/error.hpp"

#include <functional>

namespace lieinv {

Rational::Rational(long num, long den) : v_(num, den) {
  if (den == 0) throw DivisionByZero();
  v_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) : v_(num, den) {
  if (den == 0) throw DivisionByZero();
  v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  auto slash = s.find('/');
  mpz_class n, d = 1;
  if (n.set_str(s.substr(0, slash), 10) != 0) throw Error("bad rational: " + s);
  if (slash != std::string::npos && d.set_str(s.substr(slash + 1), 10) != 0) throw Error("bad rational: " + s);
  return Rational(n, d);
}

Rational Rational::inverse() const {
  if (is_zero()) throw DivisionByZero();
  return Rational(mpq_class(1 / v_));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DivisionByZero();
  v_ /= o.v_;
  return *this;
}

std::size_t Rational::hash() const {
  std::size_t h = std::hash<long>()(mpz_get_si(v_.get_num_mpz_t()));
  return h * 31 + std::hash<long>()(mpz_get_si(v_.get_den_mpz_t()));
}

Rational pow(const Rational& base, long e) {
  if (e < 0) return pow(base.inverse(), -e);
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), base.get().get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(d.get_mpz_t(), base.get().get_den_mpz_t(), static_cast<unsigned long>(e));
  return Rational(n, d);
}

mpz_class lcm_den(const Rational& a, const mpz_class& acc) {
  mpz_class r;
  mpz_lcm(r.get_mpz_t(), acc.get_mpz_t(), a.get().get_den_mpz_t());
  return r;
}

Rational RationalSampler::next() {
  std::uniform_int_distribution<long> d(-bound_, bound_);
  return Rational(d(rng_));
}

Rational RationalSampler::next_nonzero() {
  for (;;) {
    Rational r = next();
    if (!r.is_zero()) return r;
  }
}

long RationalSampler::next_int(long lo, long hi) {
  std::uniform_int_distribution<long> d(lo, hi);
  return d(rng_);
}

}  // namespace lieinv
