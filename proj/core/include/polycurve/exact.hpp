#pragma once

#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <vector>

#include <gmpxx.h>

namespace polycurve {

using Integer = mpz_class;
using Rational = mpq_class;

/// Integer vectors carry exponents, directions and facet normals.
using IntegerVector = std::vector<std::int64_t>;
using IntegerMatrix = std::vector<IntegerVector>;

/// Raised by CheckedInt when a result leaves the int64 range.
class ArithmeticOverflow : public std::overflow_error {
 public:
  ArithmeticOverflow() : std::overflow_error("int64 arithmetic overflow") {}
};

/// int64 that throws instead of wrapping. Lets the exact kernels run on
/// machine words and fall back to GMP only when coordinates grow.
class CheckedInt {
 public:
  constexpr CheckedInt(std::int64_t v = 0) : value_(v) {}  // NOLINT

  constexpr std::int64_t value() const { return value_; }

  friend CheckedInt operator+(CheckedInt a, CheckedInt b) {
    std::int64_t r;
    if (__builtin_add_overflow(a.value_, b.value_, &r)) throw ArithmeticOverflow();
    return r;
  }
  friend CheckedInt operator-(CheckedInt a, CheckedInt b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a.value_, b.value_, &r)) throw ArithmeticOverflow();
    return r;
  }
  friend CheckedInt operator*(CheckedInt a, CheckedInt b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a.value_, b.value_, &r)) throw ArithmeticOverflow();
    return r;
  }
  friend CheckedInt operator/(CheckedInt a, CheckedInt b) { return a.value_ / b.value_; }
  CheckedInt operator-() const { return CheckedInt(0) - *this; }
  CheckedInt& operator+=(CheckedInt b) { return *this = *this + b; }
  CheckedInt& operator-=(CheckedInt b) { return *this = *this - b; }
  CheckedInt& operator*=(CheckedInt b) { return *this = *this * b; }
  CheckedInt& operator/=(CheckedInt b) { return *this = *this / b; }

  friend auto operator<=>(CheckedInt, CheckedInt) = default;

 private:
  std::int64_t value_;
};

inline int sign(CheckedInt a) { return (a.value() > 0) - (a.value() < 0); }
inline int sign(const Integer& a) { return sgn(a); }

inline CheckedInt gcd(CheckedInt a, CheckedInt b) {
  if (a.value() == INT64_MIN || b.value() == INT64_MIN) throw ArithmeticOverflow();
  return std::gcd(a.value(), b.value());
}

inline std::int64_t to_int64(CheckedInt a) { return a.value(); }
inline std::int64_t to_int64(const Integer& a) {
  if (!a.fits_slong_p()) throw ArithmeticOverflow();
  return a.get_si();
}

inline Integer to_integer(CheckedInt a) { return Integer(static_cast<long>(a.value())); }
inline Integer to_integer(const Integer& a) { return a; }

/// gcd of the absolute values; 0 for the zero vector.
std::int64_t content(std::span<const std::int64_t> v);

/// Divides by the content. The zero vector is returned unchanged.
IntegerVector primitive(IntegerVector v);

std::int64_t dot(std::span<const std::int64_t> a, std::span<const std::int64_t> b);

}  // namespace polycurve
