#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "spinnet/errors.hpp"

namespace spinnet {

using BigInt = boost::multiprecision::cpp_int;

/// An SU(2) angular-momentum label j, stored as the integer 2j.
class Spin {
 public:
  constexpr Spin() = default;

  /// Throws InvalidSpin for negative input.
  static Spin from_twice(int twice);

  /// Accepts "n" or "n/2" (e.g. "0", "3/2", "2").
  static Spin parse(std::string_view text);

  constexpr int twice() const noexcept { return twice_; }
  constexpr int dimension() const noexcept { return twice_ + 1; }
  constexpr bool is_integer() const noexcept { return twice_ % 2 == 0; }

  /// "3/2", "1", "0".
  std::string to_string() const;

  friend constexpr auto operator<=>(Spin, Spin) = default;

 private:
  explicit constexpr Spin(int twice) : twice_(twice) {}

  int twice_ = 0;
};

Spin spin_from_twice(int twice);

/// Exact rational number, always in lowest terms with a positive denominator.
class Rational {
 public:
  using value_type = boost::multiprecision::cpp_rational;

  Rational() = default;
  Rational(long long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(const BigInt& value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  /// Throws std::domain_error on a zero denominator.
  Rational(const BigInt& numerator, const BigInt& denominator);

  BigInt numerator() const { return boost::multiprecision::numerator(value_); }
  BigInt denominator() const { return boost::multiprecision::denominator(value_); }

  int sign() const { return value_.sign(); }
  bool is_zero() const { return value_.is_zero(); }
  double to_double() const { return value_.convert_to<double>(); }

  /// Always "p/q", e.g. "-1/6", "0/1".
  std::string to_string() const;
  /// Accepts "p/q" or "p".
  static Rational parse(std::string_view text);

  Rational operator-() const { return Rational(value_type(-value_)); }
  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (a.value_ > b.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  const value_type& raw() const noexcept { return value_; }

 private:
  explicit Rational(value_type v) : value_(std::move(v)) {}

  value_type value_;
};

/// Splits a positive integer m into root^2 * squarefree.
struct SquareSplit {
  BigInt root;
  BigInt squarefree;
};
SquareSplit split_square(const BigInt& m);

/// Exact value coeff * sqrt(radicand).
///
/// Canonical form: the radicand is a square-free positive integer (stored as
/// a Rational with denominator 1), and zero is 0 * sqrt(1). Two equal values
/// always have identical fields. The type is closed under multiplication but
/// only under addition of like radicals.
class SqrtRational {
 public:
  SqrtRational() : coeff_(0), radicand_(1) {}
  explicit SqrtRational(Rational value) : coeff_(std::move(value)), radicand_(1) {}
  /// Normalizes; throws std::domain_error for a negative radicand.
  SqrtRational(Rational coeff, const Rational& radicand);

  const Rational& coeff() const noexcept { return coeff_; }
  const Rational& radicand() const noexcept { return radicand_; }

  bool is_zero() const { return coeff_.is_zero(); }
  bool is_rational() const { return radicand_ == Rational(1); }
  int sign() const { return coeff_.sign(); }
  /// The exact square of the value.
  Rational square() const { return coeff_ * coeff_ * radicand_; }
  /// Display-only conversion.
  double to_double() const;

  /// "p/q*sqrt(r/s)", e.g. "-1/6*sqrt(1/1)".
  std::string to_string() const;
  static SqrtRational parse(std::string_view text);

  SqrtRational operator-() const;
  friend SqrtRational operator*(const SqrtRational& u, const SqrtRational& v);
  friend SqrtRational operator*(const SqrtRational& u, const Rational& q);
  /// Throws IncompatibleRadicands unless radicands match or one side is zero.
  friend SqrtRational operator+(const SqrtRational& u, const SqrtRational& v);
  friend SqrtRational operator-(const SqrtRational& u, const SqrtRational& v) { return u + (-v); }
  SqrtRational& operator+=(const SqrtRational& v) { return *this = *this + v; }

  friend bool operator==(const SqrtRational&, const SqrtRational&) = default;

 private:
  struct Normalized {};
  SqrtRational(Normalized, Rational coeff, Rational radicand)
      : coeff_(std::move(coeff)), radicand_(std::move(radicand)) {}

  Rational coeff_;
  Rational radicand_;
};

SqrtRational sqrt_rational_mul(const SqrtRational& u, const SqrtRational& v);
SqrtRational sqrt_rational_add(const SqrtRational& u, const SqrtRational& v);

/// n! from a process-wide memo table. Safe for concurrent use. The table
/// grows on demand up to the cap read from SPINNET_FACT_CACHE (entries);
/// larger arguments are computed without being cached.
BigInt factorial(unsigned n);

/// Current number of memoized factorials (for tests and diagnostics).
std::size_t factorial_cache_size();

}  // namespace spinnet
