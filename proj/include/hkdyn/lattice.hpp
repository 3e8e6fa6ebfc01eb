#pragma once

#include <cstddef>

#include "hkdyn/matrix.hpp"
#include "hkdyn/numeric.hpp"

namespace hkdyn {

struct Signature {
  std::size_t plus = 0;
  std::size_t minus = 0;

  friend bool operator==(const Signature&, const Signature&) = default;
};

// Integral lattice with a nondegenerate symmetric bilinear form given by its
// Gram matrix. Construction rejects asymmetric (kNotSymmetric) and singular
// (kDegenerateForm) input, so every instance satisfies both invariants.
class GramLattice {
 public:
  explicit GramLattice(IntMatrix gram);

  std::size_t rank() const { return gram_.rows(); }
  const IntMatrix& gram() const { return gram_; }
  const Integer& determinant() const { return determinant_; }
  bool even() const { return even_; }

  Integer pairing(const IntVector& x, const IntVector& y) const;
  Integer norm(const IntVector& x) const { return pairing(x, x); }

  // Orthogonal direct sum with `other`.
  GramLattice direct_sum(const GramLattice& other) const;

 private:
  IntMatrix gram_;
  Integer determinant_;
  bool even_ = false;
};

// Exact inertia of the form via symmetric elimination over Q.
Signature signature(const GramLattice& lattice);

// Inertia of an arbitrary symmetric rational matrix; the zero count is
// returned separately so callers can detect degeneracy.
struct Inertia {
  std::size_t plus = 0;
  std::size_t minus = 0;
  std::size_t zero = 0;
};
Inertia inertia(const RatMatrix& symmetric);

bool is_isometry(const IntMatrix& m, const GramLattice& lattice);

// Reflection x -> x - (2<x,v>/<v,v>) v, as the matrix acting on columns.
IntMatrix reflection(const IntVector& v, const GramLattice& lattice);

// c * q(a)^n.
Rational fujiki_volume(const Rational& c, unsigned n, const GramLattice& lattice,
                       const IntVector& a);

}  // namespace hkdyn
