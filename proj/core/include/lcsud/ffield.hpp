#pragma once

#include <cstdint>
#include <vector>

#include "lcsud/errors.hpp"

namespace lcsud {

/// Default modulus for tests and small runs.
inline constexpr std::uint64_t kDefaultModulus = 65537;
/// Mersenne prime 2^31 - 1, for larger runs.
inline constexpr std::uint64_t kLargeModulus = 2147483647;

/// Deterministic Miller-Rabin, exact for all n < 2^64.
bool is_prime_u64(std::uint64_t n);

class FieldElement;

/// Prime field F_p. Construction verifies primality of p.
class PrimeField {
 public:
  explicit PrimeField(std::uint64_t modulus);

  std::uint64_t modulus() const { return modulus_; }

  /// Canonical element from an unsigned value (reduced mod p).
  FieldElement element(std::uint64_t value) const;
  /// Canonical element from a signed value.
  FieldElement from_signed(long long value) const;
  FieldElement zero() const;
  FieldElement one() const;

  friend bool operator==(const PrimeField& a, const PrimeField& b) {
    return a.modulus_ == b.modulus_;
  }

 private:
  std::uint64_t modulus_;
};

/// Element of a prime field, always the least nonnegative residue.
/// Carries its modulus so cross-field operations can be rejected.
class FieldElement {
 public:
  FieldElement() = default;  // detached zero; usable only after assignment

  std::uint64_t value() const { return value_; }
  std::uint64_t modulus() const { return modulus_; }
  bool is_zero() const { return value_ == 0; }

  friend FieldElement operator+(FieldElement a, FieldElement b);
  friend FieldElement operator-(FieldElement a, FieldElement b);
  friend FieldElement operator*(FieldElement a, FieldElement b);
  FieldElement& operator+=(FieldElement o) { return *this = *this + o; }
  FieldElement& operator-=(FieldElement o) { return *this = *this - o; }
  FieldElement& operator*=(FieldElement o) { return *this = *this * o; }

  FieldElement neg() const;
  FieldElement pow(std::uint64_t exponent) const;
  /// Multiplicative inverse via Fermat's little theorem. Throws DivisionByZero.
  FieldElement inv() const;

  friend bool operator==(FieldElement a, FieldElement b) {
    return a.value_ == b.value_ && a.modulus_ == b.modulus_;
  }
  friend bool operator!=(FieldElement a, FieldElement b) { return !(a == b); }

 private:
  friend class PrimeField;
  FieldElement(std::uint64_t value, std::uint64_t modulus)
      : value_(value), modulus_(modulus) {}

  std::uint64_t value_ = 0;
  std::uint64_t modulus_ = 0;
};

/// Element-wise inversion with one field inversion total (Montgomery's trick).
/// Throws DivisionByZero carrying the index of the first zero entry.
std::vector<FieldElement> batch_inv(const std::vector<FieldElement>& values);

}  // namespace lcsud
