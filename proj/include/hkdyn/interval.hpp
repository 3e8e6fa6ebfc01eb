#pragma once

#include "hkdyn/numeric.hpp"

namespace hkdyn {

// Closed interval [lower, upper] with rational endpoints. Every operation
// returns an enclosure of the exact result set.
class RationalInterval {
 public:
  RationalInterval() = default;
  RationalInterval(Rational lower, Rational upper);
  static RationalInterval point(const Rational& value) { return {value, value}; }

  const Rational& lower() const { return lower_; }
  const Rational& upper() const { return upper_; }
  Rational width() const { return upper_ - lower_; }
  Rational midpoint() const { return (lower_ + upper_) / 2; }
  bool contains(const Rational& value) const { return lower_ <= value && value <= upper_; }
  bool contains_zero() const { return lower_ <= 0 && upper_ >= 0; }
  double lower_double() const { return lower_.get_d(); }
  double upper_double() const { return upper_.get_d(); }
  double midpoint_double() const { return midpoint().get_d(); }

  // Outward rounding of both endpoints to multiples of 2^-bits.
  RationalInterval coarsened(unsigned bits) const;

  RationalInterval reciprocal() const;
  // Integer power; negative exponents go through reciprocal().
  RationalInterval pow(long exponent, unsigned bits) const;
  // Requires lower() >= 0.
  RationalInterval sqrt(unsigned bits) const;

  friend RationalInterval operator+(const RationalInterval& a, const RationalInterval& b);
  friend RationalInterval operator*(const RationalInterval& a, const RationalInterval& b);
  friend RationalInterval operator/(const RationalInterval& a, const RationalInterval& b) {
    return a * b.reciprocal();
  }

 private:
  Rational lower_ = 0;
  Rational upper_ = 0;
};

}  // namespace hkdyn
