#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace rsdm {

enum class Rounding { HalfEven, HalfUp, Down, Floor, Ceiling };

/// Arbitrary-precision decimal number, value = coefficient * 10^exponent.
///
/// Addition, subtraction, multiplication and integer powers are exact and
/// never round. Division and roots take an explicit number of significant
/// digits. Rounding only happens where the caller asks for it (settlement).
class Decimal {
 public:
  static constexpr int kDefaultPrecision = 34;
  static constexpr int kSettlementPlaces = 9;

  Decimal() = default;
  Decimal(long value);  // NOLINT(google-explicit-constructor)
  Decimal(int value) : Decimal(static_cast<long>(value)) {}  // NOLINT
  Decimal(mpz_class coefficient, std::int64_t exponent);

  /// Parses `[+-]digits[.digits][(e|E)[+-]digits]`. Throws ParseError.
  static Decimal parse(std::string_view text);
  /// Exact decimal expansion of a binary double. Test and display use only.
  static Decimal from_double(double value);

  const mpz_class& coefficient() const { return coefficient_; }
  std::int64_t exponent() const { return exponent_; }

  int sign() const { return sgn(coefficient_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const;
  /// Number of digits after the decimal point in the normalized form.
  std::int64_t decimal_places() const;

  Decimal operator-() const;
  Decimal abs() const;
  Decimal& operator+=(const Decimal& rhs);
  Decimal& operator-=(const Decimal& rhs);
  Decimal& operator*=(const Decimal& rhs);
  friend Decimal operator+(Decimal lhs, const Decimal& rhs) { return lhs += rhs; }
  friend Decimal operator-(Decimal lhs, const Decimal& rhs) { return lhs -= rhs; }
  friend Decimal operator*(Decimal lhs, const Decimal& rhs) { return lhs *= rhs; }

  friend std::strong_ordering operator<=>(const Decimal& lhs, const Decimal& rhs);
  friend bool operator==(const Decimal& lhs, const Decimal& rhs) {
    return (lhs <=> rhs) == std::strong_ordering::equal;
  }

  /// Exact power by repeated squaring.
  Decimal pow(std::uint64_t exponent) const;

  /// Quotient rounded to `significant_digits` significant digits.
  /// Division by zero throws DomainError.
  static Decimal divide(const Decimal& numerator, const Decimal& denominator,
                        int significant_digits = kDefaultPrecision,
                        Rounding mode = Rounding::HalfEven);

  /// Positive real n-th root by Newton iteration, rounded to
  /// `significant_digits`. The radicand must be positive.
  Decimal nth_root(std::uint32_t n, int significant_digits = kDefaultPrecision) const;

  /// Rounds to `places` digits after the decimal point.
  Decimal round(std::int64_t places, Rounding mode = Rounding::HalfEven) const;
  Decimal round_significant(int digits, Rounding mode = Rounding::HalfEven) const;
  mpz_class floor() const;
  mpz_class ceil() const;

  /// Strips trailing zeros of the coefficient.
  Decimal normalized() const;

  /// Shortest exact plain rendering ("0.5", "-12", "84000000000000").
  std::string to_string() const;
  /// Rounded (half-even) rendering with exactly `places` fractional digits.
  std::string to_fixed(std::int64_t places) const;
  double to_double() const;

 private:
  mpz_class coefficient_{0};
  std::int64_t exponent_{0};
};

std::ostream& operator<<(std::ostream& os, const Decimal& value);

/// Power of ten as an integer, 10^n for n >= 0.
mpz_class pow10(std::uint64_t n);

/// floor(numerator / denominator), exact. Throws DomainError on a zero denominator.
mpz_class floor_quotient(const Decimal& numerator, const Decimal& denominator);

}  // namespace rsdm
