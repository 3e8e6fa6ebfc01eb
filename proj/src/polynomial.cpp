#include "hkdyn/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "hkdyn/error.hpp"

namespace hkdyn {

namespace {

int sign_of(const Integer& v) { return v > 0 ? 1 : (v == 0 ? 0 : -1); }

int sign_of(const Rational& v) { return v > 0 ? 1 : (v == 0 ? 0 : -1); }

}  // namespace

IntPoly::IntPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

IntPoly IntPoly::from_descending(const std::vector<Integer>& coeffs) {
  return IntPoly(std::vector<Integer>(coeffs.rbegin(), coeffs.rend()));
}

IntPoly IntPoly::monomial(unsigned degree, const Integer& coeff) {
  std::vector<Integer> c(degree + 1, Integer(0));
  c[degree] = coeff;
  return IntPoly(std::move(c));
}

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::vector<Integer> IntPoly::descending() const {
  return {coeffs_.rbegin(), coeffs_.rend()};
}

Rational IntPoly::eval(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * x + Rational(*it);
  }
  return acc;
}

int IntPoly::sign_at(const Rational& x) const { return sign_of(eval(x)); }

IntPoly IntPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Integer> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<long>(i);
  return IntPoly(std::move(d));
}

IntPoly IntPoly::reversed() const {
  return IntPoly(std::vector<Integer>(coeffs_.rbegin(), coeffs_.rend()));
}

IntPoly IntPoly::negated_argument() const {
  std::vector<Integer> c = coeffs_;
  for (std::size_t i = 1; i < c.size(); i += 2) c[i] = -c[i];
  return IntPoly(std::move(c));
}

Integer IntPoly::content() const {
  Integer g = 0;
  for (const auto& c : coeffs_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  }
  return g;
}

IntPoly IntPoly::primitive_part() const {
  if (is_zero()) return {};
  Integer g = content();
  if (leading() < 0) g = -g;
  std::vector<Integer> c = coeffs_;
  for (auto& v : c) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  return IntPoly(std::move(c));
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  std::vector<Integer> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Integer(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
  return IntPoly(std::move(c));
}

IntPoly operator-(const IntPoly& p) {
  std::vector<Integer> c = p.coeffs_;
  for (auto& v : c) v = -v;
  return IntPoly(std::move(c));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) { return a + (-b); }

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> c(a.coeffs_.size() + b.coeffs_.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return IntPoly(std::move(c));
}

IntPoly operator*(const Integer& k, const IntPoly& p) {
  std::vector<Integer> c = p.coeffs_;
  for (auto& v : c) v *= k;
  return IntPoly(std::move(c));
}

std::string IntPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int d = degree(); d >= 0; --d) {
    const Integer& c = coeffs_[static_cast<std::size_t>(d)];
    if (c == 0) continue;
    Integer mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    if (mag != 1 || d == 0) out << mag.get_str();
    if (d >= 1) out << var;
    if (d >= 2) out << "^" << d;
    first = false;
  }
  return out.str();
}

IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw Error(ErrorKind::kDimensionMismatch, "pseudo-remainder by zero");
  if (a.degree() < b.degree()) return a;
  std::vector<Integer> r = a.coeffs();
  const int db = b.degree();
  const Integer& lb = b.leading();
  const int steps = a.degree() - db + 1;
  for (int s = 0; s < steps; ++s) {
    const int dr = static_cast<int>(r.size()) - 1 - s;
    const Integer lead = r[static_cast<std::size_t>(dr)];
    for (auto& v : r) v *= lb;
    if (lead != 0) {
      const int shift = dr - db;
      for (int i = 0; i <= db; ++i) {
        r[static_cast<std::size_t>(shift + i)] -= lead * b.coeffs()[static_cast<std::size_t>(i)];
      }
    }
  }
  r.resize(static_cast<std::size_t>(db));
  return IntPoly(std::move(r));
}

std::optional<IntPoly> divide_exact(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw Error(ErrorKind::kDimensionMismatch, "division by the zero polynomial");
  if (a.is_zero()) return IntPoly{};
  if (a.degree() < b.degree()) return std::nullopt;
  std::vector<Integer> r = a.coeffs();
  const int db = b.degree();
  const int dq = a.degree() - db;
  std::vector<Integer> q(static_cast<std::size_t>(dq + 1));
  for (int k = dq; k >= 0; --k) {
    Integer& lead = r[static_cast<std::size_t>(k + db)];
    if (lead == 0) continue;
    if (!mpz_divisible_p(lead.get_mpz_t(), b.leading().get_mpz_t())) return std::nullopt;
    Integer t;
    mpz_divexact(t.get_mpz_t(), lead.get_mpz_t(), b.leading().get_mpz_t());
    q[static_cast<std::size_t>(k)] = t;
    for (int i = 0; i <= db; ++i) {
      r[static_cast<std::size_t>(k + i)] -= t * b.coeffs()[static_cast<std::size_t>(i)];
    }
  }
  for (const auto& v : r) {
    if (v != 0) return std::nullopt;
  }
  return IntPoly(std::move(q));
}

IntPoly gcd(const IntPoly& a, const IntPoly& b) {
  IntPoly x = a.primitive_part();
  IntPoly y = b.primitive_part();
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    IntPoly r = pseudo_remainder(x, y).primitive_part();
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

namespace {

IntPoly must_divide(const IntPoly& a, const IntPoly& b) {
  auto q = divide_exact(a, b);
  if (!q) throw Error(ErrorKind::kDimensionMismatch, "internal: inexact polynomial division");
  return *q;
}

}  // namespace

std::vector<IntPoly> squarefree_decomposition(const IntPoly& p) {
  if (p.degree() <= 0) return {};
  const IntPoly f = p.primitive_part();
  const IntPoly df = f.derivative();
  const IntPoly a0 = gcd(f, df);
  IntPoly b = must_divide(f, a0);
  IntPoly c = must_divide(df, a0);
  IntPoly d = c - b.derivative();
  std::vector<IntPoly> factors;
  while (b.degree() > 0) {
    IntPoly a = gcd(b, d);
    factors.push_back(a);
    b = must_divide(b, a);
    c = must_divide(d, a);
    d = c - b.derivative();
  }
  while (!factors.empty() && factors.back().degree() == 0) factors.pop_back();
  return factors;
}

SturmSequence::SturmSequence(const IntPoly& p) {
  if (p.is_zero()) throw Error(ErrorKind::kDimensionMismatch, "Sturm sequence of zero");
  IntPoly f = p.primitive_part();
  if (f.degree() > 0) {
    f = must_divide(f, gcd(f, f.derivative()));
  }
  chain_.push_back(f);
  if (f.degree() <= 0) return;
  chain_.push_back(f.derivative().primitive_part());
  while (chain_.back().degree() > 0) {
    const IntPoly& a = chain_[chain_.size() - 2];
    const IntPoly& b = chain_.back();
    IntPoly r = pseudo_remainder(a, b);
    const int delta = a.degree() - b.degree();
    // prem carries lc(b)^(delta+1); undo its sign before negating.
    const bool flip = b.leading() < 0 && (delta + 1) % 2 == 1;
    if (!flip) r = -r;
    if (r.is_zero()) break;
    const Integer content = r.content();
    std::vector<Integer> c = r.coeffs();
    for (auto& v : c) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), content.get_mpz_t());
    chain_.emplace_back(std::move(c));
  }
}

int SturmSequence::variations_at(const Rational& x) const {
  int count = 0;
  int last = 0;
  for (const auto& p : chain_) {
    const int s = p.sign_at(x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

int SturmSequence::variations_at_plus_infinity() const {
  int count = 0;
  int last = 0;
  for (const auto& p : chain_) {
    const int s = sign_of(p.leading());
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

int SturmSequence::variations_at_minus_infinity() const {
  int count = 0;
  int last = 0;
  for (const auto& p : chain_) {
    int s = sign_of(p.leading());
    if (p.degree() % 2 == 1) s = -s;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

int SturmSequence::count_roots(const Rational& lo, const Rational& hi) const {
  if (hi <= lo) return 0;
  return variations_at(lo) - variations_at(hi);
}

int SturmSequence::count_all_roots() const {
  return variations_at_minus_infinity() - variations_at_plus_infinity();
}

int SturmSequence::count_above(const Rational& lo) const {
  return variations_at(lo) - variations_at_plus_infinity();
}

int SturmSequence::count_below_or_at(const Rational& hi) const {
  return variations_at_minus_infinity() - variations_at(hi);
}

int count_roots_with_multiplicity(const IntPoly& p, const Rational& lo, const Rational& hi) {
  const auto factors = squarefree_decomposition(p);
  int total = 0;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (factors[i].degree() <= 0) continue;
    total += static_cast<int>(i + 1) * SturmSequence(factors[i]).count_roots(lo, hi);
  }
  return total;
}

int count_real_roots_with_multiplicity(const IntPoly& p) {
  const auto factors = squarefree_decomposition(p);
  int total = 0;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (factors[i].degree() <= 0) continue;
    total += static_cast<int>(i + 1) * SturmSequence(factors[i]).count_all_roots();
  }
  return total;
}

Rational root_bound(const IntPoly& p) {
  if (p.degree() <= 0) return 1;
  Rational worst = 0;
  const Rational lead = abs(Rational(p.leading()));
  for (int i = 0; i < p.degree(); ++i) {
    const Rational r = abs(Rational(p.coeffs()[static_cast<std::size_t>(i)])) / lead;
    if (r > worst) worst = r;
  }
  return worst + 1;
}

unsigned long euler_phi(unsigned long k) {
  unsigned long result = k;
  unsigned long n = k;
  for (unsigned long q = 2; q * q <= n; ++q) {
    if (n % q == 0) {
      while (n % q == 0) n /= q;
      result -= result / q;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

namespace {

int mobius(unsigned long k) {
  int sign = 1;
  for (unsigned long q = 2; q * q <= k; ++q) {
    if (k % q == 0) {
      k /= q;
      if (k % q == 0) return 0;
      sign = -sign;
    }
  }
  if (k > 1) sign = -sign;
  return sign;
}

}  // namespace

IntPoly cyclotomic(unsigned k) {
  if (k == 0) throw Error(ErrorKind::kDimensionMismatch, "cyclotomic index must be positive");
  // Phi_k = prod_{d | k} (x^d - 1)^mu(k/d).
  IntPoly numerator{1};
  IntPoly denominator{1};
  for (unsigned d = 1; d <= k; ++d) {
    if (k % d != 0) continue;
    const int mu = mobius(k / d);
    if (mu == 0) continue;
    const IntPoly term = IntPoly::monomial(d) - IntPoly{1};
    if (mu > 0) {
      numerator = numerator * term;
    } else {
      denominator = denominator * term;
    }
  }
  return must_divide(numerator, denominator);
}

CyclotomicSplit split_cyclotomic(const IntPoly& p) {
  CyclotomicSplit split{{}, p};
  if (p.degree() <= 0) return split;
  const unsigned long bound = 2UL * static_cast<unsigned long>(p.degree()) *
                                  static_cast<unsigned long>(p.degree()) + 2;
  for (unsigned k = 1; k <= bound && split.remainder.degree() > 0; ++k) {
    if (euler_phi(k) > static_cast<unsigned long>(split.remainder.degree())) continue;
    const IntPoly phi = cyclotomic(k);
    unsigned mult = 0;
    while (split.remainder.degree() >= phi.degree()) {
      auto q = divide_exact(split.remainder, phi);
      if (!q) break;
      split.remainder = std::move(*q);
      ++mult;
    }
    if (mult > 0) split.cyclotomic_factors.emplace_back(k, mult);
  }
  return split;
}

}  // namespace hkdyn
