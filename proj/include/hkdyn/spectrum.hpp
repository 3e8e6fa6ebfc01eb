#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hkdyn/algebraic.hpp"
#include "hkdyn/interval.hpp"

namespace hkdyn {

// Hodge numbers h^{p,q}, 0 <= p,q <= 2n, of a hyperkähler manifold of complex
// dimension 2n. Row p, column q.
struct HodgeDiamond {
  unsigned n = 1;
  std::vector<std::vector<std::int64_t>> h;

  unsigned dimension() const { return 2 * n; }
  unsigned top_degree() const { return 4 * n; }
  std::int64_t at(int p, int q) const;
  std::int64_t betti(unsigned m) const;
};

// Named violations of the diamond invariants; empty means valid.
std::vector<std::string> validate_diamond(const HodgeDiamond& hd);

// One eigenvalue modulus alpha^(k/2) with its multiplicity.
struct SpectrumEntry {
  int k = 0;
  std::int64_t mult = 0;

  friend bool operator==(const SpectrumEntry&, const SpectrumEntry&) = default;
};
using DegreeSpectrum = std::vector<SpectrumEntry>;

// Entries (p - q, h^{p,q}) for p + q = m, merged by k, sorted by descending k.
DegreeSpectrum degree_spectrum(const HodgeDiamond& hd, unsigned m);

// degree_spectrum for every degree 0..4n.
std::vector<DegreeSpectrum> spectral_profile(const HodgeDiamond& hd);

struct MaxExponent {
  int k = 0;
  std::int64_t multiplicity = 0;

  friend bool operator==(const MaxExponent&, const MaxExponent&) = default;
};

// Largest k in degree m with its multiplicity; nullopt for an empty degree.
std::optional<MaxExponent> max_exponent(const HodgeDiamond& hd, unsigned m);

// Enclosure of alpha^(half_exponent / 2).
RationalInterval alpha_power(const AlgebraicNumber& alpha, long half_exponent);

struct TraceValue {
  RationalInterval enclosure;
  // Present when the sum reduces to a rational number in Q(alpha).
  std::optional<Rational> exact;
};

// T(N) = sum h^{p,q} alpha^{N (p - q) / 2}.
TraceValue trace_majorant(const HodgeDiamond& hd, const AlgebraicNumber& alpha, unsigned N);

struct GrowthExponent {
  double value = 0.0;  // n log(alpha)
  unsigned dominant_p = 0;
  unsigned dominant_q = 0;
  std::int64_t multiplicity = 0;
};

GrowthExponent growth_exponent(const HodgeDiamond& hd, const AlgebraicNumber& alpha);

struct PeriodicPointEstimate {
  RationalInterval asymptotic;  // alpha^(n k)
  double asymptotic_approx = 0.0;
  TraceValue majorant;          // T(k)
};

PeriodicPointEstimate periodic_point_estimate(const HodgeDiamond& hd,
                                              const AlgebraicNumber& alpha, unsigned k);

}  // namespace hkdyn
