#include "lcsud/ffield.hpp"

#include <array>

namespace lcsud {

namespace {

using u128 = unsigned __int128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

void require_same_field(FieldElement a, FieldElement b) {
  if (a.modulus() != b.modulus()) {
    throw FieldMismatch(a.modulus(), b.modulus());
  }
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                          23ull, 29ull, 31ull, 37ull}) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  std::uint64_t d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  // This witness set is exact for all n < 2^64.
  constexpr std::array<std::uint64_t, 12> witnesses = {2,  3,  5,  7,  11, 13,
                                                       17, 19, 23, 29, 31, 37};
  for (std::uint64_t a : witnesses) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 0; i < r - 1; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint64_t modulus) : modulus_(modulus) {
  if (!is_prime_u64(modulus)) {
    throw std::invalid_argument("modulus " + std::to_string(modulus) +
                                " is not prime");
  }
}

FieldElement PrimeField::element(std::uint64_t value) const {
  return FieldElement(value % modulus_, modulus_);
}

FieldElement PrimeField::from_signed(long long value) const {
  long long m = static_cast<long long>(modulus_);
  long long r = value % m;
  if (r < 0) r += m;
  return FieldElement(static_cast<std::uint64_t>(r), modulus_);
}

FieldElement PrimeField::zero() const { return FieldElement(0, modulus_); }

FieldElement PrimeField::one() const { return FieldElement(1 % modulus_, modulus_); }

FieldElement operator+(FieldElement a, FieldElement b) {
  require_same_field(a, b);
  const std::uint64_t p = a.modulus_;
  // Overflow-safe for any p < 2^64: a >= p - b  <=>  a + b >= p.
  const std::uint64_t threshold = p - b.value_;
  const std::uint64_t r =
      (a.value_ >= threshold) ? (a.value_ - threshold) : (a.value_ + b.value_);
  return FieldElement(r, p);
}

FieldElement operator-(FieldElement a, FieldElement b) {
  require_same_field(a, b);
  const std::uint64_t p = a.modulus_;
  const std::uint64_t r = (a.value_ >= b.value_) ? (a.value_ - b.value_)
                                                 : (p - (b.value_ - a.value_));
  return FieldElement(r, p);
}

FieldElement operator*(FieldElement a, FieldElement b) {
  require_same_field(a, b);
  return FieldElement(mulmod(a.value_, b.value_, a.modulus_), a.modulus_);
}

FieldElement FieldElement::neg() const {
  return FieldElement(value_ == 0 ? 0 : modulus_ - value_, modulus_);
}

FieldElement FieldElement::pow(std::uint64_t exponent) const {
  return FieldElement(powmod(value_, exponent, modulus_), modulus_);
}

FieldElement FieldElement::inv() const {
  if (value_ == 0) throw DivisionByZero();
  return pow(modulus_ - 2);
}

std::vector<FieldElement> batch_inv(const std::vector<FieldElement>& values) {
  const std::size_t n = values.size();
  if (n == 0) return {};
  for (std::size_t i = 0; i < n; ++i) {
    if (values[i].is_zero()) throw DivisionByZero(i);
    require_same_field(values[0], values[i]);
  }
  // Prefix products, one inversion, backward sweep.
  std::vector<FieldElement> prefix(n);
  prefix[0] = values[0];
  for (std::size_t i = 1; i < n; ++i) prefix[i] = prefix[i - 1] * values[i];

  FieldElement running = prefix[n - 1].inv();
  std::vector<FieldElement> out(n);
  for (std::size_t i = n; i-- > 0;) {
    if (i == 0) {
      out[0] = running;
    } else {
      out[i] = running * prefix[i - 1];
      running = running * values[i];
    }
  }
  return out;
}

}  // namespace lcsud
