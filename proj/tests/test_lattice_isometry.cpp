#include <cmath>
#include <random>
#include <variant>

#include "doctest.h"
#include "hkdyn/error.hpp"
#include "hkdyn/isometry.hpp"
#include "hkdyn/lattice.hpp"
#include "hkdyn/suites.hpp"
#include "oracles.hpp"

using namespace hkdyn;

namespace {

const GramLattice kPellLattice(IntMatrix{{1, 0}, {0, -2}});
const GramLattice kUm2(IntMatrix{{0, 1, 0}, {1, 0, 0}, {0, 0, -2}});
const IntMatrix kPell{{3, 4}, {2, 3}};

template <typename F>
ErrorKind kind_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::kParse;
}

// Companion-style integral symmetric matrix with random entries.
IntMatrix random_symmetric(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<long> entry(-4, 4);
  IntMatrix g(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) g(i, j) = g(j, i) = entry(rng);
  return g;
}

// Bareiss determinant of t I - m at integer t, independent of Faddeev-LeVerrier.
Integer char_poly_at(const IntMatrix& m, long t) {
  IntMatrix a(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) a(i, j) = (i == j ? Integer(t) : Integer(0)) - m(i, j);
  return determinant(a);
}

}  // namespace

TEST_CASE("signature of small forms") {
  CHECK(signature(kPellLattice) == Signature{1, 1});
  CHECK(signature(GramLattice(IntMatrix{{0, 1}, {1, 0}})) == Signature{1, 1});
  CHECK(signature(kUm2) == Signature{1, 2});
}

TEST_CASE("signature matches floating eigenvalue signs") {
  std::mt19937_64 rng(21);
  int checked = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const IntMatrix g = random_symmetric(rng, 2 + trial % 6);
    if (determinant(g) == 0) continue;
    const auto signs = oracle::symmetric_signs(g);
    REQUIRE(signs.zero == 0);
    const Signature s = signature(GramLattice(g));
    CHECK(static_cast<int>(s.plus) == signs.plus);
    CHECK(static_cast<int>(s.minus) == signs.minus);
    ++checked;
  }
  CHECK(checked > 100);
}

TEST_CASE("inertia reports zeros on degenerate input") {
  RatMatrix g(3, 3);
  g(0, 1) = g(1, 0) = 1;  // U plus a null direction
  const Inertia in = inertia(g);
  CHECK(in.plus == 1);
  CHECK(in.minus == 1);
  CHECK(in.zero == 1);
}

TEST_CASE("lattice construction rejects bad Gram matrices") {
  CHECK(kind_of([] { GramLattice(IntMatrix{{1, 2}, {0, 1}}); }) == ErrorKind::kNotSymmetric);
  CHECK(kind_of([] { GramLattice(IntMatrix{{1, 1}, {1, 1}}); }) == ErrorKind::kDegenerateForm);
  CHECK(kind_of([] { GramLattice(IntMatrix{{1, 0, 0}, {0, 1, 0}}); }) ==
        ErrorKind::kDimensionMismatch);
}

TEST_CASE("lattice accessors") {
  CHECK(kPellLattice.determinant() == -2);
  CHECK_FALSE(kPellLattice.even());
  CHECK(kUm2.even());
  CHECK(kPellLattice.norm({2, 1}) == 2);
  const GramLattice sum = kPellLattice.direct_sum(GramLattice(IntMatrix{{-2}}));
  CHECK(sum.rank() == 3);
  CHECK(sum.gram()(2, 2) == -2);
  CHECK(sum.gram()(0, 2) == 0);
}

TEST_CASE("signature is a congruence invariant") {
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<long> shift(-3, 3);
  for (int trial = 0; trial < 50; ++trial) {
    IntMatrix p = IntMatrix::identity(3);
    for (int step = 0; step < 5; ++step) {
      IntMatrix e = IntMatrix::identity(3);
      e(step % 3, (step + 1) % 3) = shift(rng);
      p = p * e;
    }
    REQUIRE(determinant(p) == 1);
    CHECK(signature(GramLattice(p.transposed() * kUm2.gram() * p)) == signature(kUm2));
  }
}

TEST_CASE("is_isometry") {
  CHECK(is_isometry(IntMatrix::identity(2), kPellLattice));
  CHECK(is_isometry(kPell, kPellLattice));
  // Direct check of m^T G m = G.
  CHECK(kPell.transposed() * kPellLattice.gram() * kPell == kPellLattice.gram());
  CHECK_FALSE(is_isometry(IntMatrix{{2, 0}, {0, 2}}, kPellLattice));
  CHECK(kind_of([] { is_isometry(IntMatrix::identity(3), kPellLattice); }) ==
        ErrorKind::kDimensionMismatch);
}

TEST_CASE("reflections") {
  CHECK(reflection({0, 0, 1}, kUm2) == IntMatrix{{1, 0, 0}, {0, 1, 0}, {0, 0, -1}});
  const IntMatrix swap = reflection({1, -1, 0}, kUm2);
  CHECK(swap == IntMatrix{{0, 1, 0}, {1, 0, 0}, {0, 0, 1}});
  CHECK((swap * swap).is_identity());
  CHECK(reflection({1, 0}, kPellLattice) == IntMatrix{{-1, 0}, {0, 1}});
  CHECK(kind_of([] { reflection({1, 0, 0}, kUm2); }) == ErrorKind::kIsotropicVector);
  CHECK(kind_of([] { reflection({2, 1, 0}, kUm2); }) == ErrorKind::kNonIntegral);
}

TEST_CASE("random reflections are involutive isometries with det -1") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 100; ++trial) {
    const IntMatrix r = random_reflection(kUm2, rng);
    CHECK((r * r).is_identity());
    CHECK(is_isometry(r, kUm2));
    CHECK(determinant(r) == -1);
  }
}

TEST_CASE("fujiki_volume") {
  CHECK(fujiki_volume(Rational(1), 1, kPellLattice, {1, 0}) == 1);
  CHECK(fujiki_volume(Rational(1), 1, kPellLattice, {2, 1}) == 2);
  CHECK(fujiki_volume(Rational(3), 2, kPellLattice, {2, 1}) == 12);
  CHECK(fujiki_volume(Rational(5, 2), 3, kUm2, {1, 0, 0}) == 0);
  CHECK(kind_of([] { fujiki_volume(Rational(0), 1, kPellLattice, {1, 0}); }) ==
        ErrorKind::kPrecondition);
  CHECK(kind_of([] { fujiki_volume(Rational(1), 1, kPellLattice, {1, 0, 0}); }) ==
        ErrorKind::kDimensionMismatch);
}

TEST_CASE("char_poly examples") {
  CHECK(char_poly(IntMatrix::identity(2)) == IntPoly{1, -2, 1});
  CHECK(char_poly(kPell) == IntPoly::from_descending({1, -6, 1}));
  CHECK(char_poly(IntMatrix{{1, 0, 0}, {0, 1, 0}, {0, 0, -1}}) ==
        IntPoly{-1, 1} * IntPoly{-1, 1} * IntPoly{1, 1});
}

TEST_CASE("char_poly agrees with det(tI - m) at integer points") {
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<long> entry(-5, 5);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + trial % 7;
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = entry(rng);
    const IntPoly p = char_poly(m);
    CHECK(p.degree() == static_cast<int>(n));
    // n + 1 points determine a degree-n polynomial.
    for (long t = -3; t <= static_cast<long>(n) - 2; ++t) {
      CHECK(p.eval(Rational(t)) == Rational(char_poly_at(m, t)));
    }
  }
}

TEST_CASE("matrix_order") {
  CHECK(matrix_order(IntMatrix::identity(3)) == 1UL);
  CHECK(matrix_order(IntMatrix{{1, 0, 0}, {0, 1, 0}, {0, 0, -1}}) == 2UL);
  CHECK_FALSE(matrix_order(IntMatrix{{1, 1}, {0, 1}}).has_value());
  CHECK_FALSE(matrix_order(kPell).has_value());
  CHECK(matrix_order(IntMatrix{{0, -1}, {1, 1}}) == 6UL);
  CHECK(matrix_order(IntMatrix{{0, 0, 1}, {1, 0, 0}, {0, 1, 0}}) == 3UL);
}

TEST_CASE("classify the Pell isometry") {
  const IntegralIsometry iso(kPell, kPellLattice);
  const IsometryClass cls = classify(iso);
  REQUIRE(std::holds_alternative<Hyperbolic>(cls));
  const auto& h = std::get<Hyperbolic>(cls);
  CHECK(h.root_sign == 1);
  CHECK(h.alpha.minpoly() == IntPoly::from_descending({1, -6, 1}));
  const double quadratic = 3.0 + 2.0 * std::sqrt(2.0);
  CHECK(std::abs(h.alpha.approx() - quadratic) < 1e-12);
  // alpha * alpha^-1 = 1: the minimal polynomial is its own reciprocal.
  CHECK(h.alpha.minpoly().reversed() == h.alpha.minpoly());
}

TEST_CASE("classify elliptic and parabolic") {
  CHECK(std::get<Elliptic>(classify(IntegralIsometry(IntMatrix::identity(3), kUm2))).order == 1);
  const IntMatrix composite = reflection({1, -1, 0}, kUm2) * reflection({0, 0, 1}, kUm2);
  const IsometryClass cls = classify(IntegralIsometry(composite, kUm2));
  REQUIRE(std::holds_alternative<Elliptic>(cls));
  CHECK(std::get<Elliptic>(cls).order == 2);
  // Unipotent isometry of U + <-2>: Eichler transvection.
  const IntMatrix eichler{{1, 1, 2}, {0, 1, 0}, {0, 1, 1}};
  REQUIRE(is_isometry(eichler, kUm2));
  CHECK(std::holds_alternative<Parabolic>(classify(IntegralIsometry(eichler, kUm2))));
}

TEST_CASE("negative expanding root reports its sign") {
  IntMatrix neg = kPell;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) neg(i, j) = -neg(i, j);
  const IsometryClass cls = classify(IntegralIsometry(neg, kPellLattice));
  REQUIRE(std::holds_alternative<Hyperbolic>(cls));
  const auto& h = std::get<Hyperbolic>(cls);
  CHECK(h.root_sign == -1);
  CHECK(h.alpha.approx() == doctest::Approx(3.0 + 2.0 * std::sqrt(2.0)));
}

TEST_CASE("non-isometries are rejected at construction") {
  CHECK(kind_of([] { IntegralIsometry(IntMatrix{{2, 0}, {0, 2}}, kPellLattice); }) ==
        ErrorKind::kNotIsometry);
}

TEST_CASE("expanding_count") {
  const ExpandingCount pell = expanding_count(IntegralIsometry(kPell, kPellLattice));
  CHECK(pell.count == 1);
  CHECK(pell.all_real);
  const ExpandingCount id = expanding_count(IntegralIsometry(IntMatrix::identity(3), kUm2));
  CHECK(id.count == 0);
  CHECK(id.all_real);
  const GramLattice definite(IntMatrix{{-1, 0}, {0, -1}});
  CHECK(kind_of([&] { expanding_count(IntegralIsometry(IntMatrix::identity(2), definite)); }) ==
        ErrorKind::kUnsupportedSignature);
}

TEST_CASE("two expanding roots on a (2,2) form are rejected") {
  // Pell isometry on each summand of diag(1,-2) + diag(1,-2).
  const GramLattice twice = kPellLattice.direct_sum(kPellLattice);
  IntMatrix m(4, 4);
  for (std::size_t b = 0; b < 4; b += 2)
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) m(b + i, b + j) = kPell(i, j);
  const IntegralIsometry iso(m, twice);
  CHECK(kind_of([&] { classify(iso); }) == ErrorKind::kUnexpectedSpectrum);
  CHECK(kind_of([&] { expanding_count(iso); }) == ErrorKind::kUnsupportedSignature);
}

TEST_CASE("modulus_profile") {
  const auto p = modulus_profile(IntegralIsometry(kPell, kPellLattice));
  CHECK(p == std::vector<ModulusMultiplicity>{{1, 1}, {-1, 1}});
  const GramLattice extended = kPellLattice.direct_sum(GramLattice(IntMatrix{{-2}}));
  const IntMatrix block{{3, 4, 0}, {2, 3, 0}, {0, 0, 1}};
  CHECK(modulus_profile(IntegralIsometry(block, extended)) ==
        std::vector<ModulusMultiplicity>{{1, 1}, {-1, 1}, {0, 1}});
  CHECK(kind_of([] { modulus_profile(IntegralIsometry(IntMatrix::identity(3), kUm2)); }) ==
        ErrorKind::kNotHyperbolic);
}

TEST_CASE("count_by_modulus agrees with floating eigenvalues") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    const IntMatrix m = random_reflection_product(kUm2, rng, 6);
    const ModulusCounts counts = count_by_modulus(char_poly(m));
    // Jordan blocks at +-1 scatter floating eigenvalues by about eps^(1/3), while
    // an expanding root of an integral isometry exceeds 1.17; 1e-3 separates both.
    int outside = 0;
    int inside = 0;
    for (const auto& z : oracle::eigenvalues(m)) {
      const double r = std::abs(z);
      if (r > 1 + 1e-3) ++outside;
      if (r < 1 - 1e-3) ++inside;
    }
    CHECK(counts.outside == outside);
    CHECK(counts.inside == inside);
    CHECK(counts.on_circle == 3 - outside - inside);
  }
}

TEST_CASE("trace polynomial") {
  // z^2 - 6z + 1 = z (t - 6) with t = z + 1/z.
  CHECK(trace_polynomial(IntPoly::from_descending({1, -6, 1})) == IntPoly{-6, 1});
  // z^4 + 1 = z^2 (t^2 - 2).
  CHECK(trace_polynomial(IntPoly{1, 0, 0, 0, 1}) == IntPoly{-2, 0, 1});
}

TEST_CASE("reciprocal closure") {
  CHECK(is_reciprocal_closed(IntPoly::from_descending({1, -6, 1})));
  CHECK(is_reciprocal_closed(IntPoly{-1, 1} * IntPoly{1, 1}));
  CHECK(is_reciprocal_closed(IntPoly{-1, 3, -3, 1}));
  CHECK_FALSE(is_reciprocal_closed(IntPoly{-2, 1}));
  CHECK_FALSE(is_reciprocal_closed(IntPoly{1, 1, 1, 1, 0, 1}));
}

TEST_CASE("K3 lattice reflection products") {
  IntMatrix g(22, 22);
  const long e8[8][8] = {{2, 0, -1, 0, 0, 0, 0, 0},  {0, 2, 0, -1, 0, 0, 0, 0},
                         {-1, 0, 2, -1, 0, 0, 0, 0}, {0, -1, -1, 2, -1, 0, 0, 0},
                         {0, 0, 0, -1, 2, -1, 0, 0}, {0, 0, 0, 0, -1, 2, -1, 0},
                         {0, 0, 0, 0, 0, -1, 2, -1}, {0, 0, 0, 0, 0, 0, -1, 2}};
  for (std::size_t u = 0; u < 3; ++u) g(2 * u, 2 * u + 1) = g(2 * u + 1, 2 * u) = 1;
  for (std::size_t b = 6; b < 22; b += 8)
    for (std::size_t i = 0; i < 8; ++i)
      for (std::size_t j = 0; j < 8; ++j) g(b + i, b + j) = -e8[i][j];
  const GramLattice k3(g);
  CHECK(k3.determinant() == -1);
  CHECK(k3.even());
  CHECK(signature(k3) == Signature{3, 19});
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 10; ++trial) {
    const IntMatrix m = random_reflection_product(k3, rng, 3);
    CHECK(is_isometry(m, k3));
    CHECK(is_reciprocal_closed(char_poly(m)));
  }
}
