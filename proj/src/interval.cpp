#include "hkdyn/interval.hpp"

#include <algorithm>
#include <utility>

#include "hkdyn/error.hpp"

namespace hkdyn {

namespace {

Integer scaled_floor(const Rational& r, unsigned bits) {
  Integer num = r.get_num();
  mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(), bits);
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), r.get_den_mpz_t());
  return q;
}

Integer scaled_ceil(const Rational& r, unsigned bits) {
  Integer num = r.get_num();
  mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(), bits);
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), num.get_mpz_t(), r.get_den_mpz_t());
  return q;
}

Rational dyadic(const Integer& numerator, unsigned bits) {
  Integer den = 1;
  mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), bits);
  Rational r(numerator, den);
  r.canonicalize();
  return r;
}

}  // namespace

RationalInterval::RationalInterval(Rational lower, Rational upper)
    : lower_(std::move(lower)), upper_(std::move(upper)) {
  if (upper_ < lower_) {
    throw Error(ErrorKind::kPrecondition, "interval with upper < lower");
  }
}

RationalInterval RationalInterval::coarsened(unsigned bits) const {
  return {dyadic(scaled_floor(lower_, bits), bits), dyadic(scaled_ceil(upper_, bits), bits)};
}

RationalInterval RationalInterval::reciprocal() const {
  if (contains_zero()) {
    throw Error(ErrorKind::kPrecondition, "reciprocal of an interval containing 0");
  }
  return {1 / upper_, 1 / lower_};
}

RationalInterval RationalInterval::pow(long exponent, unsigned bits) const {
  if (exponent < 0) return reciprocal().coarsened(bits).pow(-exponent, bits);
  RationalInterval result = point(1);
  RationalInterval base = *this;
  unsigned long e = static_cast<unsigned long>(exponent);
  while (e > 0) {
    if (e & 1UL) result = (result * base).coarsened(bits);
    e >>= 1;
    if (e > 0) base = (base * base).coarsened(bits);
  }
  return result;
}

RationalInterval RationalInterval::sqrt(unsigned bits) const {
  if (lower_ < 0) throw Error(ErrorKind::kPrecondition, "sqrt of a negative interval");
  Integer lo = scaled_floor(lower_, 2 * bits);
  mpz_sqrt(lo.get_mpz_t(), lo.get_mpz_t());
  const Integer target = scaled_ceil(upper_, 2 * bits);
  Integer hi;
  mpz_sqrt(hi.get_mpz_t(), target.get_mpz_t());
  if (hi * hi < target) hi += 1;
  return {dyadic(lo, bits), dyadic(hi, bits)};
}

RationalInterval operator+(const RationalInterval& a, const RationalInterval& b) {
  return {a.lower_ + b.lower_, a.upper_ + b.upper_};
}

RationalInterval operator*(const RationalInterval& a, const RationalInterval& b) {
  const Rational p[4] = {a.lower_ * b.lower_, a.lower_ * b.upper_, a.upper_ * b.lower_,
                         a.upper_ * b.upper_};
  return {*std::min_element(p, p + 4), *std::max_element(p, p + 4)};
}

}  // namespace hkdyn
