#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

#include "liesol/rational.hpp"

namespace liesol {

/// Element of the real quadratic field Q(sqrt(s)): value = rat + coef * sqrt(rad).
///
/// The radicand is canonicalized to a non-square positive integer, so zero has
/// a unique representation and division is always defined for nonzero values.
/// Values with different radicands cannot be mixed (all irrational scalars in
/// one computation come from a single solved alpha^2).
class Quad {
 public:
  Quad() : rat_(0), coef_(0), rad_(0) {}
  Quad(int v) : rat_(v), coef_(0), rad_(0) {}                    // NOLINT(runtime/explicit)
  Quad(const Rational& v) : rat_(v), coef_(0), rad_(0) {}        // NOLINT(runtime/explicit)
  Quad(Rational r, Rational c, Integer rad)
      : rat_(std::move(r)), coef_(std::move(c)), rad_(std::move(rad)) {
    if (coef_ == 0) rad_ = 0;
  }

  /// sqrt(s) for rational s >= 0, exact. Perfect squares collapse to rationals.
  static Quad sqrt(const Rational& s) {
    if (sign(s) < 0) throw std::domain_error("Quad::sqrt of negative rational");
    if (s == 0) return Quad();
    if (auto root = exact_sqrt(s)) return Quad(*root);
    // sqrt(p/q) = sqrt(p*q)/q with integer radicand p*q.
    const Integer num = s.get_num();
    const Integer den = s.get_den();
    return Quad(Rational(0), Rational(1, den), num * den);
  }

  const Rational& rational_part() const { return rat_; }
  const Rational& radical_coef() const { return coef_; }
  const Integer& radicand() const { return rad_; }
  bool is_rational() const { return coef_ == 0; }

  /// Exact only for rational values; throws otherwise.
  Rational as_rational() const {
    if (!is_rational()) throw std::domain_error("Quad value is irrational: " + str());
    return rat_;
  }

  double to_double() const {
    double v = liesol::to_double(rat_);
    if (coef_ != 0) v += liesol::to_double(coef_) * std::sqrt(rad_.get_d());
    return v;
  }

  friend Quad operator+(const Quad& x, const Quad& y) {
    const Integer rad = merged_radicand(x, y);
    return Quad(x.rat_ + y.rat_, x.coef_ + y.coef_, rad);
  }
  friend Quad operator-(const Quad& x, const Quad& y) {
    const Integer rad = merged_radicand(x, y);
    return Quad(x.rat_ - y.rat_, x.coef_ - y.coef_, rad);
  }
  Quad operator-() const { return Quad(-rat_, -coef_, rad_); }
  friend Quad operator*(const Quad& x, const Quad& y) {
    const Integer rad = merged_radicand(x, y);
    return Quad(x.rat_ * y.rat_ + x.coef_ * y.coef_ * Rational(rad),
                x.rat_ * y.coef_ + x.coef_ * y.rat_, rad);
  }
  friend Quad operator/(const Quad& x, const Quad& y) {
    const Integer rad = merged_radicand(x, y);
    // (a + b r)^-1 = (a - b r) / (a^2 - b^2 rad); the norm is nonzero because
    // the radicand is never a perfect square.
    const Rational norm = y.rat_ * y.rat_ - y.coef_ * y.coef_ * Rational(rad);
    if (norm == 0) throw std::domain_error("Quad division by zero");
    return Quad((x.rat_ * y.rat_ - x.coef_ * y.coef_ * Rational(rad)) / norm,
                (x.coef_ * y.rat_ - x.rat_ * y.coef_) / norm, rad);
  }

  Quad& operator+=(const Quad& y) { return *this = *this + y; }
  Quad& operator-=(const Quad& y) { return *this = *this - y; }
  Quad& operator*=(const Quad& y) { return *this = *this * y; }
  Quad& operator/=(const Quad& y) { return *this = *this / y; }

  friend bool operator==(const Quad& x, const Quad& y) {
    return x.rat_ == y.rat_ && x.coef_ == y.coef_ && (x.coef_ == 0 || x.rad_ == y.rad_);
  }
  friend bool operator!=(const Quad& x, const Quad& y) { return !(x == y); }

  /// Sign under the real embedding with sqrt(rad) > 0.
  int sgn() const {
    const int sa = sign(rat_);
    const int sb = sign(coef_);
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // Opposite signs: compare |rat|^2 against coef^2 * rad. Equality cannot
    // happen for a canonical (non-square) radicand.
    const Rational lhs = rat_ * rat_;
    const Rational rhs = coef_ * coef_ * Rational(rad_);
    return lhs > rhs ? sa : sb;
  }

  friend bool operator<(const Quad& x, const Quad& y) { return (x - y).sgn() < 0; }
  friend bool operator>(const Quad& x, const Quad& y) { return (x - y).sgn() > 0; }
  friend bool operator<=(const Quad& x, const Quad& y) { return (x - y).sgn() <= 0; }
  friend bool operator>=(const Quad& x, const Quad& y) { return (x - y).sgn() >= 0; }

  std::string str() const {
    if (coef_ == 0) return to_string(rat_);
    std::string radical = "sqrt(" + rad_.get_str() + ")";
    std::string tail = coef_ == 1 ? radical : to_string(coef_) + "*" + radical;
    if (rat_ == 0) return tail;
    if (sign(coef_) < 0) {
      Rational mc = -coef_;
      tail = (mc == 1 ? radical : to_string(mc) + "*" + radical);
      return to_string(rat_) + " - " + tail;
    }
    return to_string(rat_) + " + " + tail;
  }

 private:
  static Integer merged_radicand(const Quad& x, const Quad& y) {
    if (x.coef_ == 0) return y.rad_;
    if (y.coef_ == 0) return x.rad_;
    if (x.rad_ != y.rad_)
      throw std::logic_error("Quad arithmetic across different radicands: " + x.str() + " vs " +
                             y.str());
    return x.rad_;
  }

  Rational rat_;
  Rational coef_;
  Integer rad_;
};

inline int sign(const Quad& q) { return q.sgn(); }
inline std::string to_string(const Quad& q) { return q.str(); }

}  // namespace liesol
