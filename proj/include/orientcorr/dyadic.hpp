#pragma once

// Exact arithmetic on dyadic rationals num / 2^exp.
//
// Every probability in the random-orientation model is dyadic: each edge is a
// fair coin, so an event over m edges has probability count / 2^m. Values are
// kept normalized (num odd, or num == 0 with exp == 0) so equality is
// structural.

#include <compare>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace orientcorr {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt pow2(unsigned k) { return BigInt{1} << k; }

/// 2^k for any integer k, as an exact rational.
inline Rational pow2_rational(long k) {
  return k >= 0 ? Rational(pow2(static_cast<unsigned>(k)))
                : Rational(BigInt{1}, pow2(static_cast<unsigned>(-k)));
}

/// Approximates num / 2^exp without overflowing for large operands.
inline double ldexp_big(BigInt num, long exp) {
  if (num == 0)
    return 0.0;
  const bool negative = num < 0;
  if (negative)
    num = -num;
  const auto width = static_cast<long>(boost::multiprecision::msb(num)) + 1;
  if (width > 64) {
    num >>= static_cast<unsigned>(width - 64);
    exp -= width - 64;
  }
  const double mag =
      std::ldexp(static_cast<double>(num.convert_to<std::uint64_t>()),
                 static_cast<int>(-exp));
  return negative ? -mag : mag;
}

inline double to_double(const Rational &r) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::msb;
  using boost::multiprecision::numerator;
  if (numerator(r) == 0)
    return 0.0;
  // Scale so the integer quotient carries at least 64 significant bits.
  const BigInt &num = numerator(r);
  const BigInt &den = denominator(r);
  const long shift = static_cast<long>(msb(den)) -
                     static_cast<long>(msb(num < 0 ? BigInt(-num) : num)) + 64;
  BigInt scaled = shift >= 0 ? BigInt(num << static_cast<unsigned>(shift))
                             : BigInt(num >> static_cast<unsigned>(-shift));
  return ldexp_big(BigInt(scaled / den), shift);
}

/// Signed dyadic rational num / 2^exp.
class Dyadic {
public:
  Dyadic() = default;
  Dyadic(BigInt num, unsigned exp) : num_(std::move(num)), exp_(exp) {
    normalize();
  }
  Dyadic(long long value) : Dyadic(BigInt(value), 0) {} // NOLINT

  /// 2^-k.
  static Dyadic half_pow(unsigned k) { return Dyadic(1, k); }

  const BigInt &num() const noexcept { return num_; }
  unsigned exp() const noexcept { return exp_; }
  int sign() const noexcept { return num_.sign(); }

  Dyadic operator-() const { return Dyadic(-num_, exp_); }

  friend Dyadic operator+(const Dyadic &x, const Dyadic &y) {
    const unsigned e = std::max(x.exp_, y.exp_);
    return Dyadic((x.num_ << (e - x.exp_)) + (y.num_ << (e - y.exp_)), e);
  }
  friend Dyadic operator-(const Dyadic &x, const Dyadic &y) { return x + -y; }
  friend Dyadic operator*(const Dyadic &x, const Dyadic &y) {
    return Dyadic(x.num_ * y.num_, x.exp_ + y.exp_);
  }
  Dyadic &operator+=(const Dyadic &y) { return *this = *this + y; }

  friend bool operator==(const Dyadic &, const Dyadic &) = default;
  friend std::strong_ordering operator<=>(const Dyadic &x, const Dyadic &y) {
    const int s = (x - y).sign();
    return s < 0 ? std::strong_ordering::less
                 : s > 0 ? std::strong_ordering::greater
                         : std::strong_ordering::equal;
  }

  /// Exact value times 2^k, which must be an integer.
  BigInt scaled_by_pow2(unsigned k) const {
    if (k < exp_)
      throw std::domain_error("value is not an integer multiple of 2^-" +
                              std::to_string(k));
    return num_ << (k - exp_);
  }

  Rational to_rational() const { return Rational(num_, pow2(exp_)); }
  double to_double() const { return ldexp_big(num_, exp_); }

  /// "NUM/2^EXP", with a leading '-' for negative values.
  std::string to_string() const {
    return num_.str() + "/2^" + std::to_string(exp_);
  }

private:
  void normalize() {
    if (num_ == 0) {
      exp_ = 0;
      return;
    }
    const auto zeros = static_cast<unsigned>(
        boost::multiprecision::lsb(num_ < 0 ? BigInt(-num_) : num_));
    const unsigned shift = std::min(zeros, exp_);
    if (shift) {
      num_ >>= shift;
      exp_ -= shift;
    }
  }

  BigInt num_ = 0;
  unsigned exp_ = 0;
};

/// A dyadic value constrained to [0, 1].
class DyadicProb {
public:
  DyadicProb() = default;
  DyadicProb(BigInt num, unsigned exp) : DyadicProb(Dyadic(std::move(num), exp)) {}
  explicit DyadicProb(Dyadic value) : value_(std::move(value)) {
    if (value_.sign() < 0 || value_ > Dyadic(1))
      throw std::domain_error("probability out of [0,1]: " + value_.to_string());
  }

  /// count / 2^exp.
  static DyadicProb from_count(const BigInt &count, unsigned exp) {
    return DyadicProb(count, exp);
  }
  static DyadicProb one() { return DyadicProb(1, 0); }
  static DyadicProb zero() { return DyadicProb(0, 0); }

  const Dyadic &value() const noexcept { return value_; }
  operator const Dyadic &() const noexcept { return value_; } // NOLINT
  const BigInt &num() const noexcept { return value_.num(); }
  unsigned exp() const noexcept { return value_.exp(); }
  bool is_zero() const { return value_.sign() == 0; }

  friend DyadicProb operator*(const DyadicProb &x, const DyadicProb &y) {
    return DyadicProb(x.value_ * y.value_);
  }

  friend bool operator==(const DyadicProb &, const DyadicProb &) = default;
  friend auto operator<=>(const DyadicProb &x, const DyadicProb &y) {
    return x.value_ <=> y.value_;
  }

  Rational to_rational() const { return value_.to_rational(); }
  double to_double() const { return value_.to_double(); }
  std::string to_string() const { return value_.to_string(); }

private:
  Dyadic value_;
};

/// Sign and magnitude of a dyadic covariance. sign == 0 iff magnitude == 0.
struct SignedDyadic {
  int sign = 0;
  DyadicProb magnitude;

  static SignedDyadic from(const Dyadic &v) {
    const int s = v.sign();
    return {s, DyadicProb(s < 0 ? -v : v)};
  }

  Dyadic value() const {
    return sign < 0 ? -magnitude.value() : magnitude.value();
  }
  double to_double() const { return value().to_double(); }
  std::string to_string() const { return value().to_string(); }
  char sign_char() const { return sign < 0 ? '-' : sign > 0 ? '+' : '0'; }

  friend bool operator==(const SignedDyadic &, const SignedDyadic &) = default;
};

// ---------------------------------------------------------------------------
// Rational helpers

/// Decimal rendering of r with exactly `digits` fractional digits, rounded
/// half to even.
inline std::string format_fixed(const Rational &r, unsigned digits) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  BigInt scale = 1;
  for (unsigned i = 0; i < digits; ++i)
    scale *= 10;
  const Rational scaled = r * scale;
  const bool negative = scaled < 0;
  const BigInt num = negative ? BigInt(-numerator(scaled)) : numerator(scaled);
  const BigInt &den = denominator(scaled);
  BigInt q = num / den;
  const BigInt twice_rem = 2 * (num % den);
  if (twice_rem > den || (twice_rem == den && (q & 1) != 0))
    ++q;

  std::string digits_str = q.str();
  if (digits_str.size() <= digits)
    digits_str.insert(0, digits + 1 - digits_str.size(), '0');
  std::string out = negative && q != 0 ? "-" : "";
  out += digits_str.substr(0, digits_str.size() - digits);
  if (digits)
    out += "." + digits_str.substr(digits_str.size() - digits);
  return out;
}

/// "p/q" or "p" when the denominator is 1.
inline std::string rational_to_string(const Rational &r) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  if (denominator(r) == 1)
    return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

inline BigInt binomial(unsigned n, unsigned k) {
  if (k > n)
    return 0;
  k = std::min(k, n - k);
  BigInt result = 1;
  for (unsigned i = 1; i <= k; ++i)
    result = result * (n - k + i) / i;
  return result;
}

} // namespace orientcorr

namespace orientcorr {

/// Inverse of Dyadic::to_string: parses "NUM/2^EXP".
inline Dyadic parse_dyadic(const std::string &text) {
  const auto slash = text.find("/2^");
  if (slash == std::string::npos || slash == 0 || slash + 3 >= text.size())
    throw std::invalid_argument("not a dyadic literal: " + text);
  const std::string num = text.substr(0, slash);
  const std::string exp = text.substr(slash + 3);
  const bool digits_ok =
      num.find_first_not_of("0123456789", num[0] == '-' ? 1 : 0) ==
          std::string::npos &&
      num != "-" && exp.find_first_not_of("0123456789") == std::string::npos;
  if (!digits_ok || exp.size() > 9)
    throw std::invalid_argument("not a dyadic literal: " + text);
  return Dyadic(BigInt(num), static_cast<unsigned>(std::stoul(exp)));
}

} // namespace orientcorr
