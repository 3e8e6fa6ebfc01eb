#include "hkdyn/algebraic.hpp"

#include <cmath>
#include <utility>

#include "hkdyn/error.hpp"

namespace hkdyn {

namespace {

Rational relative_width(const Rational& lower, const Rational& upper) {
  Rational scale = abs(lower) > abs(upper) ? abs(lower) : abs(upper);
  if (scale < 1) scale = 1;
  Integer den = 1;
  mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), 64);
  return scale / Rational(den);
}

}  // namespace

RationalInterval isolate_root(const IntPoly& p, Rational lower, Rational upper,
                              const Rational& max_width) {
  const SturmSequence sturm(p);
  if (sturm.count_roots(lower, upper) != 1) {
    throw Error(ErrorKind::kInvalidAlgebraicNumber,
                "interval (" + to_string(lower) + ", " + to_string(upper) +
                    "] does not isolate exactly one root of " + p.to_string());
  }
  while (upper - lower > max_width) {
    const Rational mid = (lower + upper) / 2;
    if (sturm.count_roots(lower, mid) == 1) {
      upper = mid;
    } else {
      lower = mid;
    }
  }
  return {std::move(lower), std::move(upper)};
}

AlgebraicNumber::AlgebraicNumber(IntPoly minpoly, Rational lower, Rational upper)
    : minpoly_(std::move(minpoly)), lower_(std::move(lower)), upper_(std::move(upper)) {
  if (minpoly_.degree() < 1 || !minpoly_.is_monic()) {
    throw Error(ErrorKind::kInvalidAlgebraicNumber,
                "minimal polynomial must be monic of positive degree");
  }
  if (!(lower_ < upper_)) {
    throw Error(ErrorKind::kInvalidAlgebraicNumber, "isolating interval is empty");
  }
  const RationalInterval fine =
      isolate_root(minpoly_, lower_, upper_, relative_width(lower_, upper_));
  approx_ = fine.midpoint_double();
}

AlgebraicNumber::AlgebraicNumber(IntPoly minpoly, Rational lower, Rational upper, double approx)
    : minpoly_(std::move(minpoly)),
      lower_(std::move(lower)),
      upper_(std::move(upper)),
      approx_(approx) {}

AlgebraicNumber AlgebraicNumber::refined(const Rational& max_width) const {
  RationalInterval r = isolate_root(minpoly_, lower_, upper_, max_width);
  return AlgebraicNumber(minpoly_, r.lower(), r.upper(), approx_);
}

int AlgebraicNumber::compare(const Rational& value) const {
  if (value <= lower_) return 1;
  if (value > upper_) return -1;
  if (minpoly_.sign_at(value) == 0) return 0;
  const SturmSequence sturm(minpoly_);
  return sturm.count_roots(lower_, value) == 1 ? -1 : 1;
}

}  // namespace hkdyn
