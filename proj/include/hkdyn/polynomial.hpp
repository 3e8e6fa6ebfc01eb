#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hkdyn/numeric.hpp"

namespace hkdyn {

// Univariate polynomial with integer coefficients, stored lowest degree
// first. The zero polynomial has no coefficients and degree -1.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Integer> coeffs);
  IntPoly(std::initializer_list<long> coeffs);

  // Builds from coefficients listed highest degree first.
  static IntPoly from_descending(const std::vector<Integer>& coeffs);
  static IntPoly monomial(unsigned degree, const Integer& coeff = 1);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_monic() const { return !is_zero() && coeffs_.back() == 1; }
  const Integer& leading() const { return coeffs_.back(); }
  Integer coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : Integer(0);
  }
  const std::vector<Integer>& coeffs() const { return coeffs_; }
  std::vector<Integer> descending() const;

  Rational eval(const Rational& x) const;
  int sign_at(const Rational& x) const;

  IntPoly derivative() const;
  // x^deg * p(1/x).
  IntPoly reversed() const;
  // p(-x).
  IntPoly negated_argument() const;
  Integer content() const;
  // Divides by the content and makes the leading coefficient positive.
  IntPoly primitive_part() const;

  friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const Integer& c, const IntPoly& p);
  friend IntPoly operator-(const IntPoly& p);
  friend bool operator==(const IntPoly& a, const IntPoly& b) {
    return a.coeffs_ == b.coeffs_;
  }

  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Integer> coeffs_;
};

// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b.
IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b);

// Quotient a / b when b divides a exactly in Z[x].
std::optional<IntPoly> divide_exact(const IntPoly& a, const IntPoly& b);

// Primitive gcd with positive leading coefficient.
IntPoly gcd(const IntPoly& a, const IntPoly& b);

// Yun decomposition: p = c * prod factors[i]^(i+1), each factor squarefree
// and primitive, pairwise coprime. Trailing unit factors are kept as 1.
std::vector<IntPoly> squarefree_decomposition(const IntPoly& p);

// Sturm chain p0 = p, p1 = p', p_{i+1} = -rem(p_{i-1}, p_i), with each term
// scaled by a positive constant to stay in Z[x].
class SturmSequence {
 public:
  explicit SturmSequence(const IntPoly& p);

  // Number of distinct real roots in the half-open interval (lo, hi].
  int count_roots(const Rational& lo, const Rational& hi) const;
  int count_all_roots() const;
  int count_above(const Rational& lo) const;
  int count_below_or_at(const Rational& hi) const;

 private:
  int variations_at(const Rational& x) const;
  int variations_at_plus_infinity() const;
  int variations_at_minus_infinity() const;

  std::vector<IntPoly> chain_;
};

// Real roots of p with multiplicity in (lo, hi].
int count_roots_with_multiplicity(const IntPoly& p, const Rational& lo,
                                  const Rational& hi);
int count_real_roots_with_multiplicity(const IntPoly& p);

// Cauchy bound: every complex root has modulus strictly below the result.
Rational root_bound(const IntPoly& p);

// k-th cyclotomic polynomial.
IntPoly cyclotomic(unsigned k);

unsigned long euler_phi(unsigned long k);

struct CyclotomicSplit {
  // (k, multiplicity) for each Phi_k dividing the input.
  std::vector<std::pair<unsigned, unsigned>> cyclotomic_factors;
  // Input divided by all cyclotomic factors.
  IntPoly remainder;
};

// Strips every cyclotomic factor from a monic integer polynomial.
CyclotomicSplit split_cyclotomic(const IntPoly& p);

}  // namespace hkdyn
