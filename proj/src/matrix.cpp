#include "hkdyn/matrix.hpp"

#include <utility>

namespace hkdyn {

IntMatrix matrix_power(const IntMatrix& m, unsigned long exponent) {
  if (!m.square()) {
    throw Error(ErrorKind::kDimensionMismatch, "matrix power of a non-square matrix");
  }
  IntMatrix result = IntMatrix::identity(m.rows());
  IntMatrix base = m;
  while (exponent > 0) {
    if (exponent & 1UL) result = result * base;
    exponent >>= 1;
    if (exponent > 0) base = base * base;
  }
  return result;
}

IntVector multiply(const IntMatrix& m, const IntVector& v) {
  if (m.cols() != v.size()) {
    throw Error(ErrorKind::kDimensionMismatch, "matrix-vector shape mismatch");
  }
  IntVector out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Integer acc = 0;
    for (std::size_t j = 0; j < m.cols(); ++j) acc += m(i, j) * v[j];
    out[i] = acc;
  }
  return out;
}

Integer determinant(const IntMatrix& m) {
  if (!m.square()) {
    throw Error(ErrorKind::kDimensionMismatch, "determinant of a non-square matrix");
  }
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Integer previous = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && a(swap_row, k) == 0) ++swap_row;
      if (swap_row == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(swap_row, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / previous;
      }
      a(i, k) = 0;
    }
    previous = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

}  // namespace hkdyn
