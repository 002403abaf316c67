#include "pricesched/rational.hpp"

#include <cctype>
#include <limits>
#include <ostream>

namespace pricesched {

Rational::Rational(long num, long den) : value_(num, den) {
  if (den == 0) throw ArithmeticError("rational with zero denominator");
  value_.canonicalize();
}

Rational Rational::parse(const std::string& text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s == "inf") return inf();
  if (s.empty()) throw ParseError("empty rational literal");
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw ParseError("bad rational literal: '" + text + "'");
  if (sgn(q.get_den()) == 0) throw ParseError("zero denominator: '" + text + "'");
  q.canonicalize();
  Rational r;
  r.value_ = q;
  return r;
}

std::string Rational::str() const {
  if (infinite_) return "inf";
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

double Rational::approx() const {
  if (infinite_) return std::numeric_limits<double>::infinity();
  return value_.get_d();
}

Rational Rational::operator-() const {
  if (infinite_) throw ArithmeticError("negating inf");
  Rational r;
  r.value_ = -value_;
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  if (infinite_ || o.infinite_) {
    infinite_ = true;
    value_ = 0;
    return *this;
  }
  value_ += o.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  if (o.infinite_) throw ArithmeticError(infinite_ ? "inf - inf" : "finite - inf");
  if (infinite_) return *this;  // inf - finite = inf
  value_ -= o.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  if (infinite_ || o.infinite_) {
    // Only positive * inf is meaningful here (e.g. scaling an inf processing time).
    if (sign() <= 0 || o.sign() <= 0) throw ArithmeticError("inf * nonpositive");
    infinite_ = true;
    value_ = 0;
    return *this;
  }
  value_ *= o.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.infinite_) throw ArithmeticError("division by inf");
  if (o.is_zero()) throw ArithmeticError("division by zero");
  if (infinite_) {
    if (o.sign() < 0) throw ArithmeticError("inf / negative");
    return *this;
  }
  value_ /= o.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace pricesched
