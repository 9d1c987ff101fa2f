#include "rsdm/decimal.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <ostream>

#include "rsdm/errors.hpp"

namespace rsdm {
namespace {

std::size_t digit_count(const mpz_class& value) {
  if (value == 0) return 1;
  mpz_class magnitude = ::abs(value);
  std::size_t estimate = mpz_sizeinbase(magnitude.get_mpz_t(), 10);
  // mpz_sizeinbase may overshoot by one for base 10.
  if (estimate > 1 && magnitude < pow10(estimate - 1)) --estimate;
  return estimate;
}

// numerator / denominator rounded to an integer; denominator must be > 0.
mpz_class divide_rounded(const mpz_class& numerator, const mpz_class& denominator,
                         Rounding mode) {
  mpz_class quotient;
  mpz_class remainder;
  mpz_fdiv_qr(quotient.get_mpz_t(), remainder.get_mpz_t(), numerator.get_mpz_t(),
              denominator.get_mpz_t());
  if (remainder == 0) return quotient;
  switch (mode) {
    case Rounding::Floor:
      return quotient;
    case Rounding::Ceiling:
      return quotient + 1;
    case Rounding::Down:
      return numerator >= 0 ? quotient : quotient + 1;
    case Rounding::HalfUp:
    case Rounding::HalfEven: {
      const int half = cmp(mpz_class(remainder * 2), denominator);
      if (half > 0) return quotient + 1;
      if (half < 0) return quotient;
      if (mode == Rounding::HalfUp) return numerator >= 0 ? quotient + 1 : quotient;
      return mpz_even_p(quotient.get_mpz_t()) ? quotient : quotient + 1;
    }
  }
  return quotient;
}

mpz_class scale_up(const mpz_class& value, std::int64_t places) {
  return places == 0 ? value : mpz_class(value * pow10(static_cast<std::uint64_t>(places)));
}

}  // namespace

mpz_class pow10(std::uint64_t n) {
  // Decayed weights carry exponents in the tens of thousands and align against
  // the same few scales repeatedly.
  constexpr std::uint64_t kCacheFrom = 512;
  constexpr std::size_t kCacheSlots = 8;
  struct Slot {
    std::uint64_t n = 0;
    mpz_class value;
  };
  thread_local std::array<Slot, kCacheSlots> cache;
  thread_local std::size_t next_slot = 0;
  if (n >= kCacheFrom) {
    for (const Slot& slot : cache) {
      if (slot.n == n) return slot.value;
    }
  }
  mpz_class result;
  mpz_ui_pow_ui(result.get_mpz_t(), 10, n);
  if (n >= kCacheFrom) {
    cache[next_slot] = {n, result};
    next_slot = (next_slot + 1) % kCacheSlots;
  }
  return result;
}

mpz_class floor_quotient(const Decimal& numerator, const Decimal& denominator) {
  if (denominator.is_zero()) throw DomainError("division by zero");
  const std::int64_t common = std::min(numerator.exponent(), denominator.exponent());
  const mpz_class n = scale_up(numerator.coefficient(), numerator.exponent() - common);
  const mpz_class d = scale_up(denominator.coefficient(), denominator.exponent() - common);
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  return q;
}

Decimal::Decimal(long value) : coefficient_(value), exponent_(0) {}

Decimal::Decimal(mpz_class coefficient, std::int64_t exponent)
    : coefficient_(std::move(coefficient)), exponent_(exponent) {}

Decimal Decimal::parse(std::string_view text) {
  const std::string_view original = text;
  auto fail = [&]() -> ParseError {
    return ParseError("invalid decimal literal '" + std::string(original) + "'");
  };
  if (text.empty()) throw fail();
  bool negative = false;
  if (text.front() == '+' || text.front() == '-') {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  std::string digits;
  std::int64_t exponent = 0;
  bool seen_point = false;
  bool seen_digit = false;
  std::size_t i = 0;
  for (; i < text.size(); ++i) {
    const char c = text[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digits.push_back(c);
      seen_digit = true;
      if (seen_point) --exponent;
    } else if (c == '.' && !seen_point) {
      seen_point = true;
    } else {
      break;
    }
  }
  if (!seen_digit) throw fail();
  if (i < text.size()) {
    if (text[i] != 'e' && text[i] != 'E') throw fail();
    std::string_view tail = text.substr(i + 1);
    if (tail.empty()) throw fail();
    bool exp_negative = false;
    if (tail.front() == '+' || tail.front() == '-') {
      exp_negative = tail.front() == '-';
      tail.remove_prefix(1);
    }
    if (tail.empty() || tail.size() > 9) throw fail();
    std::int64_t shift = 0;
    for (char c : tail) {
      if (!std::isdigit(static_cast<unsigned char>(c))) throw fail();
      shift = shift * 10 + (c - '0');
    }
    exponent += exp_negative ? -shift : shift;
  }
  mpz_class coefficient(digits, 10);
  if (negative) coefficient = -coefficient;
  return Decimal(std::move(coefficient), exponent);
}

Decimal Decimal::from_double(double value) {
  if (!std::isfinite(value)) throw DomainError("non-finite double has no decimal value");
  if (value == 0.0) return Decimal();
  int binary_exponent = 0;
  const double mantissa = std::frexp(value, &binary_exponent);
  // 53-bit integer mantissa.
  const auto scaled = static_cast<long long>(std::ldexp(mantissa, 53));
  binary_exponent -= 53;
  mpz_class coefficient(static_cast<long>(scaled));
  if (binary_exponent >= 0) {
    coefficient <<= binary_exponent;
    return Decimal(coefficient, 0).normalized();
  }
  const auto k = static_cast<unsigned long>(-binary_exponent);
  mpz_class five;
  mpz_ui_pow_ui(five.get_mpz_t(), 5, k);
  return Decimal(coefficient * five, -static_cast<std::int64_t>(k)).normalized();
}

bool Decimal::is_integer() const {
  if (exponent_ >= 0) return true;
  return mpz_divisible_p(coefficient_.get_mpz_t(),
                         pow10(static_cast<std::uint64_t>(-exponent_)).get_mpz_t()) != 0;
}

std::int64_t Decimal::decimal_places() const {
  const Decimal n = normalized();
  return n.exponent_ < 0 ? -n.exponent_ : 0;
}

Decimal Decimal::operator-() const { return Decimal(-coefficient_, exponent_); }

Decimal Decimal::abs() const { return Decimal(::abs(coefficient_), exponent_); }

Decimal& Decimal::operator+=(const Decimal& rhs) {
  if (rhs.is_zero()) return *this;
  if (is_zero()) return *this = rhs;
  if (exponent_ == rhs.exponent_) {
    coefficient_ += rhs.coefficient_;
  } else if (exponent_ < rhs.exponent_) {
    coefficient_ += scale_up(rhs.coefficient_, rhs.exponent_ - exponent_);
  } else {
    coefficient_ = scale_up(coefficient_, exponent_ - rhs.exponent_) + rhs.coefficient_;
    exponent_ = rhs.exponent_;
  }
  return *this;
}

Decimal& Decimal::operator-=(const Decimal& rhs) { return *this += -rhs; }

Decimal& Decimal::operator*=(const Decimal& rhs) {
  coefficient_ *= rhs.coefficient_;
  exponent_ += rhs.exponent_;
  return *this;
}

std::strong_ordering operator<=>(const Decimal& lhs, const Decimal& rhs) {
  const int ls = lhs.sign();
  const int rs = rhs.sign();
  if (ls != rs) return ls <=> rs;
  if (ls == 0) return std::strong_ordering::equal;
  // |x| lies in [10^(s-2+e), 10^(s+e)) where s is mpz_sizeinbase(x, 10).
  const auto lsize = static_cast<std::int64_t>(mpz_sizeinbase(lhs.coefficient_.get_mpz_t(), 10));
  const auto rsize = static_cast<std::int64_t>(mpz_sizeinbase(rhs.coefficient_.get_mpz_t(), 10));
  if (lsize - 2 + lhs.exponent_ >= rsize + rhs.exponent_) return ls <=> 0;
  if (rsize - 2 + rhs.exponent_ >= lsize + lhs.exponent_) return 0 <=> ls;
  int c = 0;
  if (lhs.exponent_ == rhs.exponent_) {
    c = cmp(lhs.coefficient_, rhs.coefficient_);
  } else if (lhs.exponent_ < rhs.exponent_) {
    c = cmp(lhs.coefficient_, scale_up(rhs.coefficient_, rhs.exponent_ - lhs.exponent_));
  } else {
    c = cmp(scale_up(lhs.coefficient_, lhs.exponent_ - rhs.exponent_), rhs.coefficient_);
  }
  return c <=> 0;
}

Decimal Decimal::pow(std::uint64_t exponent) const {
  Decimal result(1);
  Decimal base = *this;
  while (exponent != 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent != 0) base *= base;
  }
  return result;
}

Decimal Decimal::divide(const Decimal& numerator, const Decimal& denominator,
                        int significant_digits, Rounding mode) {
  if (denominator.is_zero()) throw DomainError("division by zero");
  if (significant_digits < 1) throw DomainError("precision must be at least one digit");
  if (numerator.is_zero()) return Decimal();

  mpz_class n = numerator.coefficient_;
  mpz_class d = denominator.coefficient_;
  if (d < 0) {
    n = -n;
    d = -d;
  }
  // Shift so the integer quotient carries at least `significant_digits` digits.
  const std::int64_t shift = significant_digits + 1 -
                             (static_cast<std::int64_t>(digit_count(n)) -
                              static_cast<std::int64_t>(digit_count(d)));
  if (shift > 0) {
    n = scale_up(n, shift);
  } else if (shift < 0) {
    d = scale_up(d, -shift);
  }
  std::int64_t exponent = numerator.exponent_ - denominator.exponent_ - shift;

  mpz_class truncated = ::abs(n) / d;
  const auto have = static_cast<std::int64_t>(digit_count(truncated));
  const std::int64_t extra = have - significant_digits;
  if (extra > 0) {
    d = scale_up(d, extra);
    exponent += extra;
  }
  return Decimal(divide_rounded(n, d, mode), exponent);
}

Decimal Decimal::nth_root(std::uint32_t n, int significant_digits) const {
  if (n == 0) throw DomainError("zeroth root is undefined");
  if (sign() <= 0) throw DomainError("root requires a positive radicand");
  if (n == 1) return round_significant(significant_digits);

  const int working = significant_digits + 10;
  const Decimal order(static_cast<long>(n));
  const Decimal order_less_one(static_cast<long>(n) - 1);

  double seed = std::pow(to_double(), 1.0 / n);
  if (!std::isfinite(seed) || seed <= 0.0) seed = 1.0;
  Decimal x = from_double(seed).round_significant(17);

  const Decimal tolerance(mpz_class(1), -static_cast<std::int64_t>(working) + 2);
  for (int iteration = 0; iteration < 200; ++iteration) {
    const Decimal power = x.pow(n - 1).round_significant(working);
    const Decimal next =
        divide(order_less_one * x + divide(*this, power, working), order, working);
    const Decimal step = (next - x).abs();
    x = next;
    if (step <= tolerance * x) break;
  }
  return x.round_significant(significant_digits);
}

Decimal Decimal::round(std::int64_t places, Rounding mode) const {
  const std::int64_t target = -places;
  if (exponent_ >= target) return *this;
  const mpz_class divisor = pow10(static_cast<std::uint64_t>(target - exponent_));
  return Decimal(divide_rounded(coefficient_, divisor, mode), target);
}

Decimal Decimal::round_significant(int digits, Rounding mode) const {
  if (is_zero()) return Decimal();
  const auto length = static_cast<std::int64_t>(digit_count(coefficient_));
  return round(static_cast<std::int64_t>(digits) - length - exponent_, mode);
}

mpz_class Decimal::floor() const {
  if (exponent_ >= 0) return scale_up(coefficient_, exponent_);
  return divide_rounded(coefficient_, pow10(static_cast<std::uint64_t>(-exponent_)),
                        Rounding::Floor);
}

mpz_class Decimal::ceil() const {
  if (exponent_ >= 0) return scale_up(coefficient_, exponent_);
  return divide_rounded(coefficient_, pow10(static_cast<std::uint64_t>(-exponent_)),
                        Rounding::Ceiling);
}

Decimal Decimal::normalized() const {
  if (is_zero()) return Decimal();
  mpz_class c = coefficient_;
  std::int64_t e = exponent_;
  while (mpz_divisible_ui_p(c.get_mpz_t(), 10) != 0) {
    c /= 10;
    ++e;
  }
  return Decimal(std::move(c), e);
}

std::string Decimal::to_string() const {
  const Decimal n = normalized();
  const bool negative = n.sign() < 0;
  std::string digits = mpz_class(::abs(n.coefficient_)).get_str(10);
  if (n.exponent_ >= 0) {
    digits.append(static_cast<std::size_t>(n.exponent_), '0');
  } else {
    const auto places = static_cast<std::size_t>(-n.exponent_);
    if (digits.size() <= places) digits.insert(0, places - digits.size() + 1, '0');
    digits.insert(digits.size() - places, 1, '.');
  }
  return negative ? "-" + digits : digits;
}

std::string Decimal::to_fixed(std::int64_t places) const {
  if (places < 0) throw DomainError("negative number of places");
  const Decimal r = round(places);
  mpz_class c = r.coefficient_;
  if (r.exponent_ > -places) c = scale_up(c, r.exponent_ + places);
  const bool negative = c < 0;
  std::string digits = mpz_class(::abs(c)).get_str(10);
  if (places > 0) {
    const auto p = static_cast<std::size_t>(places);
    if (digits.size() <= p) digits.insert(0, p - digits.size() + 1, '0');
    digits.insert(digits.size() - p, 1, '.');
  }
  return negative ? "-" + digits : digits;
}

double Decimal::to_double() const {
  const Decimal n = normalized();
  const std::string text = mpz_class(n.coefficient_).get_str(10) + "e" +
                           std::to_string(n.exponent_);
  return std::strtod(text.c_str(), nullptr);
}

std::ostream& operator<<(std::ostream& os, const Decimal& value) {
  return os << value.to_string();
}

}  // namespace rsdm
