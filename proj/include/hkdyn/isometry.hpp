#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "hkdyn/algebraic.hpp"
#include "hkdyn/lattice.hpp"
#include "hkdyn/matrix.hpp"
#include "hkdyn/polynomial.hpp"

namespace hkdyn {

// Integer matrix preserving the form of its lattice; checked on construction
// (kNotIsometry otherwise).
class IntegralIsometry {
 public:
  IntegralIsometry(IntMatrix matrix, GramLattice lattice);

  const IntMatrix& matrix() const { return matrix_; }
  const GramLattice& lattice() const { return lattice_; }

 private:
  IntMatrix matrix_;
  GramLattice lattice_;
};

// det(x I - m) by Faddeev-LeVerrier; every division is exact over Z.
IntPoly char_poly(const IntMatrix& m);
inline IntPoly char_poly(const IntegralIsometry& iso) { return char_poly(iso.matrix()); }

// Minimal k with m^k = I, or nullopt when m has infinite order.
std::optional<unsigned long> matrix_order(const IntMatrix& m);

struct Elliptic {
  unsigned long order = 1;
};
struct Parabolic {};
struct Hyperbolic {
  // Modulus of the expanding eigenvalue; always > 1.
  AlgebraicNumber alpha;
  // Sign of the expanding eigenvalue itself (-1 when the root is -alpha).
  int root_sign = 1;
};
using IsometryClass = std::variant<Elliptic, Parabolic, Hyperbolic>;

// Root counts of a polynomial whose root multiset is closed under z -> 1/z,
// split by modulus. Throws kUnexpectedSpectrum when the closure fails.
struct ModulusCounts {
  int outside = 0;       // |z| > 1, with multiplicity
  int outside_real = 0;  // real roots among them
  int on_circle = 0;
  int inside = 0;
};
ModulusCounts count_by_modulus(const IntPoly& p);

// Polynomial T with T(z + 1/z) z^m = R(z) for a palindromic R of degree 2m.
IntPoly trace_polynomial(const IntPoly& palindromic);

// True when the root multiset of the monic polynomial is closed under z -> 1/z.
bool is_reciprocal_closed(const IntPoly& p);

IsometryClass classify(const IntegralIsometry& iso);

struct ExpandingCount {
  int count = 0;
  bool all_real = true;
};

// Number of eigenvalues of modulus > 1. Requires signature (1,n) or (3,n);
// raises kPropositionViolated when more than one appears or one is not real.
ExpandingCount expanding_count(const IntegralIsometry& iso);

// Eigenvalue modulus alpha^power with its multiplicity.
struct ModulusMultiplicity {
  int alpha_power = 0;
  std::size_t multiplicity = 0;

  friend bool operator==(const ModulusMultiplicity&, const ModulusMultiplicity&) = default;
};

// {alpha:1, alpha^-1:1, 1:rank-2} for a hyperbolic isometry (kNotHyperbolic
// otherwise), certified from the exact factorization of the characteristic
// polynomial into the alpha factor and cyclotomic factors.
std::vector<ModulusMultiplicity> modulus_profile(const IntegralIsometry& iso);

}  // namespace hkdyn
