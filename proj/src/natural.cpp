#include "brocard/natural.hpp"

#include "brocard/errors.hpp"

#include <algorithm>

namespace brocard {

Natural::Natural(std::uint64_t value) {
  static_assert(sizeof(unsigned long) == sizeof(std::uint64_t),
                "mpz_set_ui must accept a full 64-bit word");
  mpz_set_ui(value_.get_mpz_t(), static_cast<unsigned long>(value));
}

Natural Natural::from_mpz(mpz_class value) {
  if (sgn(value) < 0) throw DomainError("negative value cannot be a Natural");
  return Natural(std::move(value));
}

Natural Natural::parse(std::string_view decimal) {
  if (decimal.empty() ||
      !std::all_of(decimal.begin(), decimal.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw DomainError("not a decimal natural number: '" + std::string(decimal) + "'");
  }
  return Natural(mpz_class(std::string(decimal), 10));
}

Natural Natural::pow(const Natural& base, unsigned long exponent) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), base.value_.get_mpz_t(), exponent);
  return Natural(std::move(r));
}

Natural Natural::pow10(std::size_t exponent) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, exponent);
  return Natural(std::move(r));
}

std::size_t Natural::bit_length() const noexcept {
  return is_zero() ? 0 : mpz_sizeinbase(value_.get_mpz_t(), 2);
}

std::size_t Natural::decimal_length() const {
  // mpz_sizeinbase may overshoot by one for base 10.
  std::size_t len = mpz_sizeinbase(value_.get_mpz_t(), 10);
  if (len > 1) {
    mpz_class bound;
    mpz_ui_pow_ui(bound.get_mpz_t(), 10, len - 1);
    if (value_ < bound) --len;
  }
  return len;
}

std::size_t Natural::two_adic_valuation() const noexcept {
  return is_zero() ? 0 : mpz_scan1(value_.get_mpz_t(), 0);
}

std::optional<std::uint64_t> Natural::to_u64() const noexcept {
  if (!mpz_fits_ulong_p(value_.get_mpz_t())) return std::nullopt;
  return static_cast<std::uint64_t>(mpz_get_ui(value_.get_mpz_t()));
}

std::uint64_t Natural::mod_u64(std::uint64_t modulus) const {
  if (modulus == 0) throw DomainError("modulus must be nonzero");
  return mpz_fdiv_ui(value_.get_mpz_t(), static_cast<unsigned long>(modulus));
}

Natural& Natural::operator+=(const Natural& rhs) {
  value_ += rhs.value_;
  return *this;
}

Natural& Natural::operator-=(const Natural& rhs) {
  if (value_ < rhs.value_) throw DomainError("Natural subtraction underflow");
  value_ -= rhs.value_;
  return *this;
}

Natural& Natural::operator*=(const Natural& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Natural& Natural::operator/=(const Natural& rhs) {
  if (rhs.is_zero()) throw DomainError("division by zero");
  mpz_fdiv_q(value_.get_mpz_t(), value_.get_mpz_t(), rhs.value_.get_mpz_t());
  return *this;
}

Natural& Natural::operator%=(const Natural& rhs) {
  if (rhs.is_zero()) throw DomainError("division by zero");
  mpz_fdiv_r(value_.get_mpz_t(), value_.get_mpz_t(), rhs.value_.get_mpz_t());
  return *this;
}

Natural& Natural::operator<<=(std::size_t bits) {
  mpz_mul_2exp(value_.get_mpz_t(), value_.get_mpz_t(), bits);
  return *this;
}

Natural& Natural::operator>>=(std::size_t bits) {
  mpz_fdiv_q_2exp(value_.get_mpz_t(), value_.get_mpz_t(), bits);
  return *this;
}

Natural ScaledDecimal::integer_part() const {
  return mantissa / Natural::pow10(frac_digits);
}

std::string ScaledDecimal::fraction_string() const {
  if (frac_digits == 0) return {};
  const Natural frac = mantissa % Natural::pow10(frac_digits);
  std::string digits = frac.to_string();
  if (digits.size() < frac_digits) digits.insert(0, frac_digits - digits.size(), '0');
  return digits;
}

std::string ScaledDecimal::to_string() const {
  std::string out = integer_part().to_string();
  if (frac_digits > 0) {
    out += '.';
    out += fraction_string();
  }
  return out;
}

}  // namespace brocard
