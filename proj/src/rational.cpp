#include "tck/rational.hpp"

#include <numeric>
#include <ostream>
#include <stdexcept>

namespace tck {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r))
    throw std::overflow_error("integer overflow in addition");
  return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r))
    throw std::overflow_error("integer overflow in subtraction");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r))
    throw std::overflow_error("integer overflow in multiplication");
  return r;
}

Rational::Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
  if (den_ == 0) throw std::domain_error("Rational: zero denominator");
  reduce();
}

void Rational::reduce() {
  if (den_ < 0) {
    num_ = checked_sub(0, num_);
    den_ = checked_sub(0, den_);
  }
  const std::int64_t g = std::gcd(num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
  if (num_ == 0) den_ = 1;
}

std::int64_t Rational::as_integer() const {
  if (den_ != 1) throw std::domain_error("Rational: " + str() + " is not an integer");
  return num_;
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::operator-() const {
  Rational r;
  r.num_ = checked_sub(0, num_);
  r.den_ = den_;
  return r;
}

Rational operator+(const Rational& x, const Rational& y) {
  return Rational(checked_add(checked_mul(x.num_, y.den_), checked_mul(y.num_, x.den_)),
                  checked_mul(x.den_, y.den_));
}

Rational operator-(const Rational& x, const Rational& y) {
  return x + (-y);
}

Rational operator*(const Rational& x, const Rational& y) {
  return Rational(checked_mul(x.num_, y.num_), checked_mul(x.den_, y.den_));
}

Rational operator/(const Rational& x, const Rational& y) {
  if (y.is_zero()) throw std::domain_error("Rational: division by zero");
  return Rational(checked_mul(x.num_, y.den_), checked_mul(x.den_, y.num_));
}

std::strong_ordering operator<=>(const Rational& x, const Rational& y) {
  // Denominators are positive, so cross-multiplication preserves order.
  return checked_mul(x.num_, y.den_) <=> checked_mul(y.num_, x.den_);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

}  // namespace tck
