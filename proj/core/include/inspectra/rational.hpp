#pragma once

#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace inspectra {

// Exact rational on int64 with __int128 intermediates. Covers the small
// fractions that appear in strategy construction and ceiling arithmetic;
// throws on overflow rather than silently wrapping.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t num, std::int64_t den = 1) : num_(num), den_(den) {
    if (den_ == 0) throw std::domain_error("rational with zero denominator");
    normalize();
  }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  Rational operator+(const Rational& o) const {
    return from128(i128(num_) * o.den_ + i128(o.num_) * den_, i128(den_) * o.den_);
  }
  Rational operator-(const Rational& o) const {
    return from128(i128(num_) * o.den_ - i128(o.num_) * den_, i128(den_) * o.den_);
  }
  Rational operator*(const Rational& o) const {
    return from128(i128(num_) * o.num_, i128(den_) * o.den_);
  }
  Rational operator/(const Rational& o) const {
    if (o.num_ == 0) throw std::domain_error("rational division by zero");
    return from128(i128(num_) * o.den_, i128(den_) * o.num_);
  }
  Rational& operator+=(const Rational& o) { return *this = *this + o; }

  bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const Rational& o) const { return !(*this == o); }
  bool operator<(const Rational& o) const { return i128(num_) * o.den_ < i128(o.num_) * den_; }
  bool operator<=(const Rational& o) const { return i128(num_) * o.den_ <= i128(o.num_) * den_; }
  bool operator>(const Rational& o) const { return o < *this; }
  bool operator>=(const Rational& o) const { return o <= *this; }

 private:
  using i128 = __int128;

  static Rational from128(i128 n, i128 d) {
    if (d < 0) { n = -n; d = -d; }
    i128 g = gcd128(n < 0 ? -n : n, d);
    if (g > 1) { n /= g; d /= g; }
    if (n > INT64_MAX || n < INT64_MIN || d > INT64_MAX) {
      throw std::overflow_error("rational overflow");
    }
    Rational r;
    r.num_ = static_cast<std::int64_t>(n);
    r.den_ = static_cast<std::int64_t>(d);
    return r;
  }

  static i128 gcd128(i128 a, i128 b) {
    while (b != 0) { i128 t = a % b; a = b; b = t; }
    return a == 0 ? 1 : a;
  }

  void normalize() {
    if (den_ < 0) { num_ = -num_; den_ = -den_; }
    std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) { num_ /= g; den_ /= g; }
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

// Exact ceil(alpha * n) treating the double alpha as the binary rational it
// is. Avoids 0.75 * 4 -> 2.999... ceiling accidents.
inline long ceil_scale(double alpha, long n) {
  if (!(alpha >= 0.0) || !std::isfinite(alpha)) {
    throw std::domain_error("ceil_scale: nonnegative finite scale required");
  }
  if (n < 0) throw std::domain_error("ceil_scale: negative count");
  int exp = 0;
  double frac = std::frexp(alpha, &exp);  // alpha = frac * 2^exp, frac in [0.5, 1)
  auto mant = static_cast<__int128>(std::ldexp(frac, 53));
  int e2 = exp - 53;  // alpha = mant * 2^e2 exactly
  __int128 num = mant * n;
  __int128 den = 1;
  if (e2 >= 0) {
    for (int i = 0; i < e2; ++i) num *= 2;
  } else {
    for (int i = 0; i < -e2; ++i) den *= 2;
  }
  __int128 q = num / den;
  if (q * den != num) q += 1;  // num, den >= 0 here
  if (q > INT64_MAX) throw std::overflow_error("ceil_scale overflow");
  return static_cast<long>(q);
}

}  // namespace inspectra
