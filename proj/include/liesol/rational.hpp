#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace liesol {

/// Exact rational scalar used on every verification path.
using Rational = mpq_class;
using Integer = mpz_class;

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline int sign(const Rational& q) { return sgn(q); }

inline double to_double(const Rational& q) { return q.get_d(); }

/// Parses "p", "-p" or "p/q" (base 10). Returns nullopt for anything else,
/// including floating-point literals; exact-path inputs must stay rational.
inline std::optional<Rational> parse_rational(const std::string& text) {
  if (text.empty()) return std::nullopt;
  const auto slash = text.find('/');
  const std::string num_part = slash == std::string::npos ? text : text.substr(0, slash);
  const std::string den_part = slash == std::string::npos ? "1" : text.substr(slash + 1);
  Integer num, den;
  if (num.set_str(num_part, 10) != 0) return std::nullopt;
  if (den.set_str(den_part, 10) != 0) return std::nullopt;
  if (den == 0) return std::nullopt;
  Rational q(num, den);
  q.canonicalize();
  return q;
}

/// Exact square root when the argument is a perfect rational square.
inline std::optional<Rational> exact_sqrt(const Rational& q) {
  if (sign(q) < 0) return std::nullopt;
  const Integer num = q.get_num();
  const Integer den = q.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
    return std::nullopt;
  Integer rnum, rden;
  mpz_sqrt(rnum.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rden.get_mpz_t(), den.get_mpz_t());
  return Rational(rnum, rden);
}

}  // namespace liesol
