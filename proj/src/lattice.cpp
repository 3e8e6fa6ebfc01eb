#include "hkdyn/lattice.hpp"

#include <utility>

namespace hkdyn {

GramLattice::GramLattice(IntMatrix gram) : gram_(std::move(gram)) {
  if (!gram_.square() || gram_.rows() == 0) {
    throw Error(ErrorKind::kDimensionMismatch, "Gram matrix must be square and nonempty");
  }
  if (!gram_.is_symmetric()) {
    throw Error(ErrorKind::kNotSymmetric, "Gram matrix is not symmetric");
  }
  determinant_ = hkdyn::determinant(gram_);
  if (determinant_ == 0) {
    throw Error(ErrorKind::kDegenerateForm, "Gram matrix has determinant 0");
  }
  even_ = true;
  for (std::size_t i = 0; i < gram_.rows(); ++i) {
    if (!mpz_even_p(gram_(i, i).get_mpz_t())) even_ = false;
  }
}

Integer GramLattice::pairing(const IntVector& x, const IntVector& y) const {
  if (x.size() != rank() || y.size() != rank()) {
    throw Error(ErrorKind::kDimensionMismatch, "vector length differs from lattice rank");
  }
  const IntVector gy = multiply(gram_, y);
  Integer acc = 0;
  for (std::size_t i = 0; i < rank(); ++i) acc += x[i] * gy[i];
  return acc;
}

GramLattice GramLattice::direct_sum(const GramLattice& other) const {
  const std::size_t n = rank();
  const std::size_t m = other.rank();
  IntMatrix g(n + m, n + m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g(i, j) = gram_(i, j);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) g(n + i, n + j) = other.gram_(i, j);
  return GramLattice(std::move(g));
}

Inertia inertia(const RatMatrix& symmetric) {
  if (!symmetric.is_symmetric()) {
    throw Error(ErrorKind::kNotSymmetric, "inertia of a non-symmetric matrix");
  }
  Inertia out;
  RatMatrix a = symmetric;
  std::size_t n = a.rows();

  // Removes index `k` (and `l` if given) by taking the Schur complement of the
  // pivot block; the remaining indices are compacted in order.
  auto schur_1x1 = [&](std::size_t k) {
    RatMatrix next(n - 1, n - 1);
    const Rational pivot = a(k, k);
    std::size_t ii = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k) continue;
      std::size_t jj = 0;
      for (std::size_t j = 0; j < n; ++j) {
        if (j == k) continue;
        next(ii, jj) = a(i, j) - a(i, k) * a(k, j) / pivot;
        ++jj;
      }
      ++ii;
    }
    a = std::move(next);
    --n;
  };

  auto schur_2x2 = [&](std::size_t k, std::size_t l) {
    // Pivot block [[a_kk, a_kl], [a_lk, a_ll]] with nonzero determinant.
    const Rational p = a(k, k), q = a(k, l), r = a(l, l);
    const Rational det = p * r - q * q;
    RatMatrix next(n - 2, n - 2);
    std::size_t ii = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || i == l) continue;
      std::size_t jj = 0;
      for (std::size_t j = 0; j < n; ++j) {
        if (j == k || j == l) continue;
        // B^T P^{-1} B with P^{-1} = [[r, -q], [-q, p]] / det.
        const Rational& bik = a(i, k);
        const Rational& bil = a(i, l);
        const Rational& bkj = a(k, j);
        const Rational& blj = a(l, j);
        const Rational correction = (bik * (r * bkj - q * blj) + bil * (p * blj - q * bkj)) / det;
        next(ii, jj) = a(i, j) - correction;
        ++jj;
      }
      ++ii;
    }
    a = std::move(next);
    n -= 2;
  };

  while (n > 0) {
    std::size_t diag = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (a(i, i) != 0) {
        diag = i;
        break;
      }
    }
    if (diag < n) {
      if (a(diag, diag) > 0) {
        ++out.plus;
      } else {
        ++out.minus;
      }
      schur_1x1(diag);
      continue;
    }
    // Zero diagonal: look for a hyperbolic 2x2 block [[0, b], [b, 0]].
    std::size_t k = n, l = n;
    for (std::size_t i = 0; i < n && k == n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (a(i, j) != 0) {
          k = i;
          l = j;
          break;
        }
      }
    }
    if (k == n) {
      out.zero += n;
      break;
    }
    ++out.plus;
    ++out.minus;
    schur_2x2(k, l);
  }
  return out;
}

Signature signature(const GramLattice& lattice) {
  RatMatrix g(lattice.rank(), lattice.rank());
  for (std::size_t i = 0; i < lattice.rank(); ++i)
    for (std::size_t j = 0; j < lattice.rank(); ++j) g(i, j) = Rational(lattice.gram()(i, j));
  const Inertia in = inertia(g);
  if (in.zero != 0) {
    throw Error(ErrorKind::kDegenerateForm, "form has a nontrivial radical");
  }
  return {in.plus, in.minus};
}

bool is_isometry(const IntMatrix& m, const GramLattice& lattice) {
  if (!m.square() || m.rows() != lattice.rank()) {
    throw Error(ErrorKind::kDimensionMismatch, "matrix size differs from lattice rank");
  }
  return m.transposed() * lattice.gram() * m == lattice.gram();
}

IntMatrix reflection(const IntVector& v, const GramLattice& lattice) {
  const Integer vv = lattice.norm(v);
  if (vv == 0) {
    throw Error(ErrorKind::kIsotropicVector, "reflection in an isotropic vector");
  }
  const IntVector gv = multiply(lattice.gram(), v);
  const std::size_t n = lattice.rank();
  IntMatrix s = IntMatrix::identity(n);
  for (std::size_t j = 0; j < n; ++j) {
    const Integer twice = 2 * gv[j];
    if (!mpz_divisible_p(twice.get_mpz_t(), vv.get_mpz_t())) {
      throw Error(ErrorKind::kNonIntegral,
                  "<v,v> does not divide 2<e_" + std::to_string(j) + ",v>");
    }
    Integer factor;
    mpz_divexact(factor.get_mpz_t(), twice.get_mpz_t(), vv.get_mpz_t());
    for (std::size_t i = 0; i < n; ++i) s(i, j) -= factor * v[i];
  }
  return s;
}

Rational fujiki_volume(const Rational& c, unsigned n, const GramLattice& lattice,
                       const IntVector& a) {
  if (c <= 0) {
    throw Error(ErrorKind::kPrecondition, "Fujiki constant must be positive");
  }
  const Integer q = lattice.norm(a);
  Integer power;
  mpz_pow_ui(power.get_mpz_t(), q.get_mpz_t(), n);
  return c * Rational(power);
}

}  // namespace hkdyn
