#include "hkdyn/numeric.hpp"

#include <cctype>
#include <cmath>

#include "hkdyn/error.hpp"

namespace hkdyn {

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' ||
      den.front() == '+') {
    throw Error(ErrorKind::kParse, "malformed rational '" + std::string(text) + "'");
  }
  Integer n(std::string(num.front() == '+' ? num.substr(1) : num));
  Integer d{std::string(den)};
  if (d == 0) {
    throw Error(ErrorKind::kParse, "zero denominator in '" + std::string(text) + "'");
  }
  Rational r(n, d);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& value) { return value.get_str(); }

std::string to_string(const Integer& value) { return value.get_str(); }

Integer lcm(const Integer& a, const Integer& b) {
  Integer r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

double log_of(const Rational& value) {
  if (value <= 0) throw Error(ErrorKind::kPrecondition, "logarithm of a nonpositive number");
  long num_exp = 0;
  long den_exp = 0;
  const double num = mpz_get_d_2exp(&num_exp, value.get_num_mpz_t());
  const double den = mpz_get_d_2exp(&den_exp, value.get_den_mpz_t());
  return std::log(num / den) + static_cast<double>(num_exp - den_exp) * std::log(2.0);
}

}  // namespace hkdyn
