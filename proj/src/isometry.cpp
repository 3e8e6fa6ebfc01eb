#include "hkdyn/isometry.hpp"

#include <string>
#include <utility>

#include "hkdyn/error.hpp"

namespace hkdyn {

IntegralIsometry::IntegralIsometry(IntMatrix matrix, GramLattice lattice)
    : matrix_(std::move(matrix)), lattice_(std::move(lattice)) {
  if (!is_isometry(matrix_, lattice_)) {
    throw Error(ErrorKind::kNotIsometry, "matrix does not preserve the Gram form");
  }
}

IntPoly char_poly(const IntMatrix& m) {
  if (!m.square()) {
    throw Error(ErrorKind::kDimensionMismatch, "characteristic polynomial of a non-square matrix");
  }
  const std::size_t n = m.rows();
  std::vector<Integer> c(n + 1);
  c[n] = 1;
  IntMatrix acc(n, n);  // M_0 = 0
  for (std::size_t k = 1; k <= n; ++k) {
    IntMatrix next = m * acc;
    for (std::size_t i = 0; i < n; ++i) next(i, i) += c[n - k + 1];
    acc = std::move(next);
    const IntMatrix am = m * acc;
    Integer trace = 0;
    for (std::size_t i = 0; i < n; ++i) trace += am(i, i);
    Integer q;
    mpz_divexact_ui(q.get_mpz_t(), trace.get_mpz_t(), k);
    c[n - k] = -q;
  }
  return IntPoly(std::move(c));
}

std::optional<unsigned long> matrix_order(const IntMatrix& m) {
  if (!m.square()) {
    throw Error(ErrorKind::kDimensionMismatch, "order of a non-square matrix");
  }
  const CyclotomicSplit split = split_cyclotomic(char_poly(m));
  if (split.remainder.degree() > 0) return std::nullopt;
  unsigned long bound = 1;
  for (const auto& [k, mult] : split.cyclotomic_factors) {
    bound = lcm(Integer(bound), Integer(k)).get_ui();
  }
  if (!matrix_power(m, bound).is_identity()) return std::nullopt;
  // Strip prime factors while the power stays the identity.
  unsigned long order = bound;
  unsigned long rest = bound;
  for (unsigned long p = 2; rest > 1; ++p) {
    if (rest % p != 0) continue;
    while (rest % p == 0) rest /= p;
    while (order % p == 0 && matrix_power(m, order / p).is_identity()) order /= p;
  }
  return order;
}

IntPoly trace_polynomial(const IntPoly& palindromic) {
  const int degree = palindromic.degree();
  if (degree < 0 || degree % 2 != 0) {
    throw Error(ErrorKind::kUnexpectedSpectrum, "trace polynomial needs an even degree");
  }
  const std::size_t m = static_cast<std::size_t>(degree / 2);
  // D_k(x) = z^k + z^-k with x = z + 1/z.
  IntPoly d_prev{2};
  IntPoly d_cur{0, 1};
  IntPoly t{};
  t = t + IntPoly(std::vector<Integer>{palindromic.coeff(m)});
  for (std::size_t k = 1; k <= m; ++k) {
    t = t + palindromic.coeff(m + k) * d_cur;
    IntPoly d_next = IntPoly{0, 1} * d_cur - d_prev;
    d_prev = std::move(d_cur);
    d_cur = std::move(d_next);
  }
  return t;
}

bool is_reciprocal_closed(const IntPoly& p) {
  if (p.is_zero() || p.coeff(0) == 0) return false;
  // Reversal has the inverted roots; compare after scaling to a monic form.
  return p.reversed() == p.coeff(0) * p && (p.coeff(0) == 1 || p.coeff(0) == -1);
}

namespace {

unsigned strip_factor(IntPoly& p, const IntPoly& factor) {
  unsigned mult = 0;
  while (p.degree() >= factor.degree()) {
    auto q = divide_exact(p, factor);
    if (!q) break;
    p = std::move(*q);
    ++mult;
  }
  return mult;
}

std::string signature_text(const Signature& s) {
  return "(" + std::to_string(s.plus) + "," + std::to_string(s.minus) + ")";
}

}  // namespace

ModulusCounts count_by_modulus(const IntPoly& p) {
  if (!p.is_monic()) {
    throw Error(ErrorKind::kUnexpectedSpectrum, "expected a monic polynomial");
  }
  IntPoly r = p;
  const unsigned at_one = strip_factor(r, IntPoly{-1, 1});
  const unsigned at_minus_one = strip_factor(r, IntPoly{1, 1});
  if (r.reversed() != r) {
    throw Error(ErrorKind::kUnexpectedSpectrum,
                "root multiset of " + p.to_string() + " is not closed under z -> 1/z");
  }
  ModulusCounts counts;
  counts.on_circle = static_cast<int>(at_one + at_minus_one);
  if (r.degree() == 0) return counts;
  const IntPoly t = trace_polynomial(r);
  const int m = t.degree();
  // x in (-2, 2) <-> z on the circle; x = +-2 never occurs once +-1 is stripped.
  const int in_band = count_roots_with_multiplicity(t, Rational(-2), Rational(2));
  const int real = count_real_roots_with_multiplicity(t);
  counts.on_circle += 2 * in_band;
  counts.outside = m - in_band;
  counts.inside = counts.outside;
  counts.outside_real = real - in_band;
  return counts;
}

IsometryClass classify(const IntegralIsometry& iso) {
  const IntPoly p = char_poly(iso);
  const ModulusCounts counts = count_by_modulus(p);
  if (counts.outside == 0) {
    if (auto order = matrix_order(iso.matrix())) return Elliptic{*order};
    return Parabolic{};
  }
  if (counts.outside > 1 || counts.outside_real != 1) {
    throw Error(ErrorKind::kUnexpectedSpectrum,
                std::to_string(counts.outside) + " eigenvalues lie outside the unit circle (" +
                    std::to_string(counts.outside_real) + " real); at most one is expected");
  }
  // The non-cyclotomic part is irreducible: any proper factor would carry a
  // root off the circle on its own, and a single expanding root leaves room
  // for exactly one such factor, closed under z -> 1/z.
  const IntPoly salem = split_cyclotomic(p).remainder;
  if (salem.reversed() != salem) {
    throw Error(ErrorKind::kUnexpectedSpectrum, "expanding factor is not self-reciprocal");
  }
  const Rational bound = root_bound(salem);
  const SturmSequence sturm(salem);
  if (sturm.count_roots(Rational(1), bound) == 1) {
    return Hyperbolic{AlgebraicNumber(salem, Rational(1), bound), 1};
  }
  IntPoly mirrored = salem.negated_argument();
  if (!mirrored.is_monic()) mirrored = -mirrored;
  return Hyperbolic{AlgebraicNumber(mirrored, Rational(1), bound), -1};
}

ExpandingCount expanding_count(const IntegralIsometry& iso) {
  const Signature sig = signature(iso.lattice());
  if (sig.plus != 1 && sig.plus != 3) {
    throw Error(ErrorKind::kUnsupportedSignature,
                "expanding_count covers signatures (1,n) and (3,n), got " + signature_text(sig));
  }
  const ModulusCounts counts = count_by_modulus(char_poly(iso));
  if (counts.outside > 1 || counts.outside_real != counts.outside) {
    std::string message = std::to_string(counts.outside) +
                          " eigenvalues of modulus > 1 (" + std::to_string(counts.outside_real) +
                          " real) on signature " + signature_text(sig);
    if (sig.plus == 3) {
      message += "; for (3,n) forms the bound needs an isometry preserving a positive 2-plane, "
                 "which cannot be checked here";
    }
    throw Error(ErrorKind::kPropositionViolated, message);
  }
  return {counts.outside, counts.outside_real == counts.outside};
}

std::vector<ModulusMultiplicity> modulus_profile(const IntegralIsometry& iso) {
  if (!std::holds_alternative<Hyperbolic>(classify(iso))) {
    throw Error(ErrorKind::kNotHyperbolic, "modulus profile needs a hyperbolic isometry");
  }
  const IntPoly p = char_poly(iso);
  const CyclotomicSplit split = split_cyclotomic(p);
  const ModulusCounts expanding = count_by_modulus(split.remainder);
  int cyclotomic_degree = 0;
  for (const auto& [k, mult] : split.cyclotomic_factors) {
    cyclotomic_degree += static_cast<int>(euler_phi(k) * mult);
  }
  const int rank = static_cast<int>(iso.lattice().rank());
  if (expanding.outside != 1 || expanding.inside != 1 ||
      expanding.on_circle + 2 + cyclotomic_degree != rank) {
    throw Error(ErrorKind::kUnexpectedSpectrum, "factorization does not account for the spectrum");
  }
  std::vector<ModulusMultiplicity> profile{{1, 1}, {-1, 1}};
  if (rank > 2) profile.push_back({0, static_cast<std::size_t>(rank - 2)});
  return profile;
}

}  // namespace hkdyn
