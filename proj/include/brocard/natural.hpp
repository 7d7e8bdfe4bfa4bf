#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace brocard {

/// Arbitrary-precision non-negative integer.
///
/// Thin value type over GMP's mpz_class. Every public constructor and
/// arithmetic operator keeps the value non-negative; subtraction that would
/// go below zero throws DomainError instead of wrapping. GMP's integer
/// representation is canonical, so equality is plain value equality.
class Natural {
 public:
  Natural() = default;
  Natural(std::uint64_t value);  // NOLINT: implicit by design of the literal API

  /// Adopts a signed GMP value; throws DomainError when negative.
  static Natural from_mpz(mpz_class value);

  /// Parses a plain decimal string (digits only, no sign, no whitespace).
  static Natural parse(std::string_view decimal);

  static Natural pow(const Natural& base, unsigned long exponent);
  static Natural pow10(std::size_t exponent);

  const mpz_class& mpz() const noexcept { return value_; }

  bool is_zero() const noexcept { return sgn(value_) == 0; }
  bool is_odd() const noexcept { return mpz_odd_p(value_.get_mpz_t()) != 0; }

  /// Number of significant bits; 0 for zero.
  std::size_t bit_length() const noexcept;

  /// Exact count of decimal digits; 1 for zero.
  std::size_t decimal_length() const;

  /// Largest e with 2^e dividing the value; 0 for zero.
  std::size_t two_adic_valuation() const noexcept;

  std::optional<std::uint64_t> to_u64() const noexcept;
  std::string to_string() const { return value_.get_str(10); }

  /// Residue modulo a machine word; modulus must be nonzero.
  std::uint64_t mod_u64(std::uint64_t modulus) const;

  Natural& operator+=(const Natural& rhs);
  Natural& operator-=(const Natural& rhs);
  Natural& operator*=(const Natural& rhs);
  Natural& operator/=(const Natural& rhs);
  Natural& operator%=(const Natural& rhs);
  Natural& operator<<=(std::size_t bits);
  Natural& operator>>=(std::size_t bits);

  friend Natural operator+(Natural lhs, const Natural& rhs) { return lhs += rhs; }
  friend Natural operator-(Natural lhs, const Natural& rhs) { return lhs -= rhs; }
  friend Natural operator*(Natural lhs, const Natural& rhs) { return lhs *= rhs; }
  friend Natural operator/(Natural lhs, const Natural& rhs) { return lhs /= rhs; }
  friend Natural operator%(Natural lhs, const Natural& rhs) { return lhs %= rhs; }
  friend Natural operator<<(Natural lhs, std::size_t bits) { return lhs <<= bits; }
  friend Natural operator>>(Natural lhs, std::size_t bits) { return lhs >>= bits; }

  friend bool operator==(const Natural& a, const Natural& b) noexcept {
    return cmp(a.value_, b.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const Natural& a, const Natural& b) noexcept {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  explicit Natural(mpz_class value) : value_(std::move(value)) {}

  mpz_class value_;
};

/// Exact fixed-point decimal: mantissa * 10^(-frac_digits).
struct ScaledDecimal {
  Natural mantissa;
  std::size_t frac_digits = 0;

  Natural integer_part() const;

  /// The frac_digits fractional digits, zero padded on the left.
  std::string fraction_string() const;

  /// "I.FFFF" (or just "I" when frac_digits is 0).
  std::string to_string() const;

  friend bool operator==(const ScaledDecimal&, const ScaledDecimal&) = default;
};

}  // namespace brocard
