#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <stdexcept>
#include <string>

namespace pricesched {

/// Thrown for undefined arithmetic (inf - inf, finite / inf, division by zero, ...).
struct ArithmeticError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Exact rational extended with a single positive infinity. Finite values are
// always kept canonical (reduced fraction, positive denominator), so == is
// structural equality. inf compares greater than every finite value and equal
// to itself. inf + x = inf, inf - finite = inf; inf - inf, finite - inf,
// finite / inf and 0 * inf all throw ArithmeticError.
class Rational {
 public:
  Rational() : value_(0) {}
  Rational(long n) : value_(n) {}  // implicit: integer literals are rationals
  Rational(long num, long den);

  static Rational inf() {
    Rational r;
    r.infinite_ = true;
    return r;
  }

  // Accepts "num/den", "num" and "inf". Signs allowed on num and den.
  static Rational parse(const std::string& text);

  bool is_inf() const { return infinite_; }
  bool is_zero() const { return !infinite_ && sgn(value_) == 0; }
  // -1, 0, +1; inf is positive.
  int sign() const { return infinite_ ? 1 : sgn(value_); }

  // Always "num/den" for finite values (e.g. "135/68", "0/1") or "inf".
  std::string str() const;

  std::string num_str() const { return value_.get_num().get_str(); }
  std::string den_str() const { return value_.get_den().get_str(); }

  // Nearest double, for human-facing report columns only.
  double approx() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
    return a.value_ == b.value_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    if (a.infinite_) return false;
    if (b.infinite_) return true;
    return a.value_ < b.value_;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  mpq_class value_;
  bool infinite_ = false;
};

inline Rational min(const Rational& a, const Rational& b) { return a < b ? a : b; }
inline Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

}  // namespace pricesched
