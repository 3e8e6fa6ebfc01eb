#pragma once

#include "hkdyn/interval.hpp"
#include "hkdyn/numeric.hpp"
#include "hkdyn/polynomial.hpp"

namespace hkdyn {

// A real algebraic number pinned down by its minimal polynomial and a
// rational isolating interval (lower, upper] holding exactly one real root,
// certified by a Sturm count at construction.
//
// Irreducibility of the polynomial is the caller's claim; the classifier only
// produces polynomials for which it is proved. Nothing here depends on it:
// every exact identity below holds for any polynomial vanishing at the root.
class AlgebraicNumber {
 public:
  AlgebraicNumber(IntPoly minpoly, Rational lower, Rational upper);

  const IntPoly& minpoly() const { return minpoly_; }
  const Rational& lower() const { return lower_; }
  const Rational& upper() const { return upper_; }
  // Midpoint of an interval refined to about 64 relative bits.
  double approx() const { return approx_; }

  // Same root with an isolating interval of width at most `max_width`.
  AlgebraicNumber refined(const Rational& max_width) const;
  // Closed enclosure [lower, upper].
  RationalInterval enclosure() const { return {lower_, upper_}; }

  // Exact sign of (root - value).
  int compare(const Rational& value) const;

 private:
  AlgebraicNumber(IntPoly minpoly, Rational lower, Rational upper, double approx);

  IntPoly minpoly_;
  Rational lower_;
  Rational upper_;
  double approx_ = 0.0;
};

// Unique root of `p` in (lower, upper], narrowed by Sturm bisection until the
// interval width is at most `max_width`.
RationalInterval isolate_root(const IntPoly& p, Rational lower, Rational upper,
                              const Rational& max_width);

}  // namespace hkdyn
