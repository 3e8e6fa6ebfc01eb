#include "hkdyn/spectrum.hpp"

#include <cmath>
#include <map>
#include <utility>

#include "hkdyn/error.hpp"

namespace hkdyn {

namespace {

constexpr unsigned kIntervalBits = 320;

void require_valid(const HodgeDiamond& hd) {
  const auto violations = validate_diamond(hd);
  if (!violations.empty()) throw Error(ErrorKind::kInvalidDiamond, violations.front());
}

void require_degree(const HodgeDiamond& hd, unsigned m) {
  if (m > hd.top_degree()) {
    throw Error(ErrorKind::kDegreeOutOfRange,
                "degree " + std::to_string(m) + " outside [0, " +
                    std::to_string(hd.top_degree()) + "]");
  }
}

void require_expanding(const AlgebraicNumber& alpha) {
  if (alpha.compare(Rational(1)) <= 0) {
    throw Error(ErrorKind::kAlphaNotExpanding, "alpha must exceed 1");
  }
}

std::string hpq(int p, int q) {
  return "h^{" + std::to_string(p) + "," + std::to_string(q) + "}";
}

// Arithmetic in Q[z]/(f) for monic f; elements are coefficient vectors of
// length deg f.
class QuotientRing {
 public:
  explicit QuotientRing(const IntPoly& f) : f_(f), d_(static_cast<std::size_t>(f.degree())) {}

  std::vector<Rational> one() const {
    std::vector<Rational> e(d_, Rational(0));
    e[0] = 1;
    return e;
  }

  std::vector<Rational> generator() const {
    if (d_ == 1) return {Rational(-f_.coeff(0))};
    std::vector<Rational> e(d_, Rational(0));
    e[1] = 1;
    return e;
  }

  // z^-1 = -(z^{d-1} + c_{d-1} z^{d-2} + ... + c_1) / c_0.
  std::optional<std::vector<Rational>> generator_inverse() const {
    const Rational c0(f_.coeff(0));
    if (c0 == 0) return std::nullopt;
    std::vector<Rational> e(d_, Rational(0));
    for (std::size_t i = 0; i < d_; ++i) e[i] = -Rational(f_.coeff(i + 1)) / c0;
    return e;
  }

  std::vector<Rational> multiply(const std::vector<Rational>& a,
                                 const std::vector<Rational>& b) const {
    std::vector<Rational> prod(2 * d_ - 1, Rational(0));
    for (std::size_t i = 0; i < d_; ++i)
      for (std::size_t j = 0; j < d_; ++j) prod[i + j] += a[i] * b[j];
    for (std::size_t top = prod.size() - 1; top >= d_; --top) {
      const Rational lead = prod[top];
      if (lead != 0) {
        for (std::size_t i = 0; i < d_; ++i) prod[top - d_ + i] -= lead * Rational(f_.coeff(i));
      }
      prod[top] = 0;
    }
    prod.resize(d_);
    return prod;
  }

  std::vector<Rational> power(std::vector<Rational> base, unsigned long e) const {
    std::vector<Rational> result = one();
    while (e > 0) {
      if (e & 1UL) result = multiply(result, base);
      e >>= 1;
      if (e > 0) base = multiply(base, base);
    }
    return result;
  }

 private:
  IntPoly f_;
  std::size_t d_;
};

}  // namespace

std::int64_t HodgeDiamond::at(int p, int q) const {
  const int top = static_cast<int>(dimension());
  if (p < 0 || q < 0 || p > top || q > top) return 0;
  return h[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)];
}

std::int64_t HodgeDiamond::betti(unsigned m) const {
  std::int64_t total = 0;
  for (int p = 0; p <= static_cast<int>(m); ++p) total += at(p, static_cast<int>(m) - p);
  return total;
}

std::vector<std::string> validate_diamond(const HodgeDiamond& hd) {
  std::vector<std::string> violations;
  if (hd.n == 0) {
    violations.push_back("n must be positive");
    return violations;
  }
  const std::size_t size = hd.dimension() + 1;
  if (hd.h.size() != size) {
    violations.push_back("table must have " + std::to_string(size) + " rows");
    return violations;
  }
  for (const auto& row : hd.h) {
    if (row.size() != size) {
      violations.push_back("every row must have " + std::to_string(size) + " entries");
      return violations;
    }
  }
  const int top = static_cast<int>(hd.dimension());
  for (int p = 0; p <= top; ++p) {
    for (int q = 0; q <= top; ++q) {
      if (hd.at(p, q) < 0) violations.push_back(hpq(p, q) + " must be nonnegative");
    }
  }
  if (hd.at(0, 0) != 1) violations.push_back("h^{0,0} must be 1");
  if (hd.at(1, 0) != 0) violations.push_back("h^{1,0} must be 0");
  if (hd.at(2, 0) != 1) violations.push_back("h^{2,0} must be 1");
  for (int p = 0; p <= top; ++p) {
    for (int q = p + 1; q <= top; ++q) {
      if (hd.at(p, q) != hd.at(q, p)) {
        violations.push_back("h^{p,q} = h^{q,p} fails at p=" + std::to_string(p) +
                             ", q=" + std::to_string(q));
      }
    }
  }
  for (int p = 0; p <= top; ++p) {
    for (int q = 0; q <= top; ++q) {
      if (p * (top + 1) + q >= (top - p) * (top + 1) + (top - q)) continue;
      if (hd.at(p, q) != hd.at(top - p, top - q)) {
        violations.push_back("h^{p,q} = h^{2n-p,2n-q} fails at p=" + std::to_string(p) +
                             ", q=" + std::to_string(q));
      }
    }
  }
  return violations;
}

DegreeSpectrum degree_spectrum(const HodgeDiamond& hd, unsigned m) {
  require_valid(hd);
  require_degree(hd, m);
  std::map<int, std::int64_t, std::greater<>> merged;
  const int deg = static_cast<int>(m);
  for (int p = 0; p <= deg; ++p) {
    const std::int64_t count = hd.at(p, deg - p);
    if (count > 0) merged[p - (deg - p)] += count;
  }
  DegreeSpectrum out;
  for (const auto& [k, mult] : merged) out.push_back({k, mult});
  return out;
}

std::vector<DegreeSpectrum> spectral_profile(const HodgeDiamond& hd) {
  std::vector<DegreeSpectrum> all;
  for (unsigned m = 0; m <= hd.top_degree(); ++m) all.push_back(degree_spectrum(hd, m));
  return all;
}

std::optional<MaxExponent> max_exponent(const HodgeDiamond& hd, unsigned m) {
  const DegreeSpectrum spectrum = degree_spectrum(hd, m);
  if (spectrum.empty()) return std::nullopt;
  return MaxExponent{spectrum.front().k, spectrum.front().mult};
}

namespace {

RationalInterval fine_enclosure(const AlgebraicNumber& alpha) {
  Integer den = 1;
  mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), kIntervalBits);
  return alpha.refined(Rational(1) / Rational(den)).enclosure();
}

RationalInterval power_of(const RationalInterval& alpha, long half_exponent) {
  if (half_exponent % 2 == 0) return alpha.pow(half_exponent / 2, kIntervalBits);
  return alpha.sqrt(kIntervalBits).pow(half_exponent, kIntervalBits);
}

}  // namespace

RationalInterval alpha_power(const AlgebraicNumber& alpha, long half_exponent) {
  return power_of(fine_enclosure(alpha), half_exponent);
}

TraceValue trace_majorant(const HodgeDiamond& hd, const AlgebraicNumber& alpha, unsigned N) {
  require_valid(hd);
  require_expanding(alpha);
  if (N == 0) throw Error(ErrorKind::kPrecondition, "N must be positive");
  const int top = static_cast<int>(hd.dimension());

  std::map<long, std::int64_t> weights;  // N (p - q) -> total Hodge number
  for (int p = 0; p <= top; ++p) {
    for (int q = 0; q <= top; ++q) {
      if (hd.at(p, q) != 0) weights[static_cast<long>(N) * (p - q)] += hd.at(p, q);
    }
  }

  const RationalInterval fine = fine_enclosure(alpha);
  RationalInterval sum = RationalInterval::point(0);
  bool integral = true;
  for (const auto& [half_exponent, weight] : weights) {
    if (half_exponent % 2 != 0) integral = false;
    sum = sum + RationalInterval::point(Rational(weight)) * power_of(fine, half_exponent);
  }

  TraceValue out{sum, std::nullopt};
  if (integral) {
    const QuotientRing ring(alpha.minpoly());
    if (auto inverse = ring.generator_inverse()) {
      std::vector<Rational> total(static_cast<std::size_t>(alpha.minpoly().degree()), Rational(0));
      for (const auto& [half_exponent, weight] : weights) {
        const long e = half_exponent / 2;
        const auto term = e >= 0 ? ring.power(ring.generator(), static_cast<unsigned long>(e))
                                 : ring.power(*inverse, static_cast<unsigned long>(-e));
        for (std::size_t i = 0; i < total.size(); ++i) total[i] += Rational(weight) * term[i];
      }
      bool constant = true;
      for (std::size_t i = 1; i < total.size(); ++i) {
        if (total[i] != 0) constant = false;
      }
      if (constant) out.exact = total[0];
    }
  }
  return out;
}

GrowthExponent growth_exponent(const HodgeDiamond& hd, const AlgebraicNumber& alpha) {
  require_valid(hd);
  require_expanding(alpha);
  const std::int64_t mult = hd.at(static_cast<int>(hd.dimension()), 0);
  if (mult != 1) {
    throw Error(ErrorKind::kInvalidDiamond,
                "dominant term " + hpq(static_cast<int>(hd.dimension()), 0) + " must be 1");
  }
  return {static_cast<double>(hd.n) * std::log(alpha.approx()), hd.dimension(), 0, mult};
}

PeriodicPointEstimate periodic_point_estimate(const HodgeDiamond& hd,
                                              const AlgebraicNumber& alpha, unsigned k) {
  if (k == 0) throw Error(ErrorKind::kPrecondition, "period must be positive");
  TraceValue majorant = trace_majorant(hd, alpha, k);
  const RationalInterval asymptotic =
      alpha_power(alpha, 2 * static_cast<long>(hd.n) * static_cast<long>(k));
  return {asymptotic, asymptotic.midpoint_double(), std::move(majorant)};
}

}  // namespace hkdyn
