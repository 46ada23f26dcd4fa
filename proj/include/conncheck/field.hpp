#pragma once

// Exact coefficient fields: the rationals (GMP) and prime fields F_p with a
// word-sized modulus.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <variant>

#include "conncheck/error.hpp"

namespace conncheck {

class FieldElement;

/// Field descriptor. Either Q or F_p for a prime p < 2^63.
class Field {
public:
  static Field rationals() { return Field(0); }

  static Field prime(std::uint64_t p) {
    if (p < 2 || p >= (std::uint64_t{1} << 63))
      throw StructuralError("prime field modulus out of range: " + std::to_string(p));
    for (std::uint64_t d = 2; d <= p / d; ++d)
      if (p % d == 0)
        throw StructuralError("field modulus is not prime: " + std::to_string(p));
    return Field(p);
  }

  bool is_rational() const noexcept { return characteristic_ == 0; }
  std::uint64_t characteristic() const noexcept { return characteristic_; }

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement from_integer(long value) const;
  FieldElement from_rational(const mpq_class& value) const;

  std::string to_string() const {
    return is_rational() ? "Q" : "Fp " + std::to_string(characteristic_);
  }

  friend bool operator==(const Field&, const Field&) = default;

private:
  explicit Field(std::uint64_t characteristic) : characteristic_(characteristic) {}
  std::uint64_t characteristic_;
};

namespace detail {

struct Residue {
  std::uint64_t value;
  std::uint64_t modulus;
  friend bool operator==(const Residue&, const Residue&) = default;
};

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

inline std::uint64_t invmod(std::uint64_t a, std::uint64_t p) {
  // extended Euclid on signed 128-bit to stay clear of overflow
  __int128 r0 = p, r1 = a, s0 = 0, s1 = 1;
  while (r1 != 0) {
    __int128 q = r0 / r1;
    __int128 t = r0 - q * r1;
    r0 = r1;
    r1 = t;
    t = s0 - q * s1;
    s0 = s1;
    s1 = t;
  }
  if (r0 != 1)
    throw StructuralError("element is not invertible modulo " + std::to_string(p));
  if (s0 < 0)
    s0 += p;
  return static_cast<std::uint64_t>(s0);
}

} // namespace detail

/// Exact field value. Rationals are kept canonical (lowest terms, positive
/// denominator); residues live in [0, p).
class FieldElement {
public:
  explicit FieldElement(mpq_class value) : value_(std::move(value)) { std::get<0>(value_).canonicalize(); }
  FieldElement(std::uint64_t residue, std::uint64_t modulus)
      : value_(detail::Residue{residue % modulus, modulus}) {}

  Field field() const {
    return is_rational() ? Field::rationals() : Field::prime(std::get<1>(value_).modulus);
  }
  bool is_rational() const noexcept { return value_.index() == 0; }
  std::uint64_t characteristic() const noexcept {
    return is_rational() ? 0 : std::get<1>(value_).modulus;
  }

  const mpq_class& rational() const { return std::get<0>(value_); }
  std::uint64_t residue() const { return std::get<1>(value_).value; }

  bool is_zero() const {
    return is_rational() ? sgn(rational()) == 0 : residue() == 0;
  }
  bool is_one() const {
    return is_rational() ? rational() == 1 : residue() == 1;
  }

  FieldElement operator-() const {
    if (is_rational())
      return FieldElement(mpq_class(-rational()));
    auto [v, p] = std::get<1>(value_);
    return FieldElement(v == 0 ? 0 : p - v, p);
  }

  FieldElement inverse() const {
    if (is_zero())
      throw StructuralError("division by zero in coefficient field");
    if (is_rational())
      return FieldElement(mpq_class(1 / rational()));
    auto [v, p] = std::get<1>(value_);
    return FieldElement(detail::invmod(v, p), p);
  }

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    a.check_same(b);
    if (a.is_rational())
      return FieldElement(mpq_class(a.rational() + b.rational()));
    const std::uint64_t p = a.characteristic();
    std::uint64_t s = a.residue() + b.residue();
    if (s >= p || s < a.residue())
      s -= p;
    return FieldElement(s, p);
  }
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b) { return a + (-b); }
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    a.check_same(b);
    if (a.is_rational())
      return FieldElement(mpq_class(a.rational() * b.rational()));
    return FieldElement(detail::mulmod(a.residue(), b.residue(), a.characteristic()), a.characteristic());
  }
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b) { return a * b.inverse(); }

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    if (a.value_.index() != b.value_.index())
      return false;
    if (a.is_rational())
      return a.rational() == b.rational();
    return std::get<1>(a.value_) == std::get<1>(b.value_);
  }

  /// Total order used only for canonical sorting (numeric on Q, by residue on F_p).
  friend std::strong_ordering canonical_compare(const FieldElement& a, const FieldElement& b) {
    a.check_same(b);
    if (a.is_rational()) {
      const int c = cmp(a.rational(), b.rational());
      return c < 0 ? std::strong_ordering::less
                   : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }
    return a.residue() <=> b.residue();
  }

  std::string to_string() const {
    return is_rational() ? rational().get_str() : std::to_string(residue());
  }

private:
  void check_same(const FieldElement& other) const {
    if (characteristic() != other.characteristic())
      throw StructuralError("coefficient field mismatch");
  }

  std::variant<mpq_class, detail::Residue> value_;
};

inline FieldElement Field::zero() const { return from_integer(0); }
inline FieldElement Field::one() const { return from_integer(1); }

inline FieldElement Field::from_integer(long value) const {
  if (is_rational())
    return FieldElement(mpq_class(value));
  const auto p = static_cast<__int128>(characteristic_);
  __int128 r = static_cast<__int128>(value) % p;
  if (r < 0)
    r += p;
  return FieldElement(static_cast<std::uint64_t>(r), characteristic_);
}

inline FieldElement Field::from_rational(const mpq_class& value) const {
  if (is_rational())
    return FieldElement(value);
  const mpz_class p(std::to_string(characteristic_));
  mpz_class num = value.get_num() % p;
  mpz_class den = value.get_den() % p;
  if (num < 0)
    num += p;
  if (den == 0)
    throw StructuralError("denominator vanishes in " + to_string());
  const FieldElement n(std::stoull(num.get_str()), characteristic_);
  const FieldElement d(std::stoull(den.get_str()), characteristic_);
  return n / d;
}

} // namespace conncheck
