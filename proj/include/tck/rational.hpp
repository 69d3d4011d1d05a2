#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace tck {

// Overflow-checked signed 64-bit arithmetic. Every enumeration and divisor
// computation in the library goes through these; wraparound raises
// std::overflow_error instead of producing a silently wrong invariant.
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_sub(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

// Exact rational number. Stored reduced with denominator > 0, so two equal
// values always have identical representations and operator== is exact.
//
// All the divisor coefficients and orbit actions in this library are
// rationals with small numerators; the checked 64-bit arithmetic leaves many
// orders of magnitude of headroom at the supported input sizes.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t value) : num_(value) {}  // integers embed in Q
  Rational(std::int64_t num, std::int64_t den);

  std::int64_t numerator() const { return num_; }
  std::int64_t denominator() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  bool is_positive() const { return num_ > 0; }

  // Exact conversion; throws std::domain_error when the value is not integral.
  std::int64_t as_integer() const;

  // "5", "-2/3"
  std::string str() const;

  Rational operator-() const;

  friend Rational operator+(const Rational& x, const Rational& y);
  friend Rational operator-(const Rational& x, const Rational& y);
  friend Rational operator*(const Rational& x, const Rational& y);
  friend Rational operator/(const Rational& x, const Rational& y);

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& x, const Rational& y) = default;
  friend std::strong_ordering operator<=>(const Rational& x, const Rational& y);

 private:
  void reduce();

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace tck
