#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "lcsud/ffield.hpp"
#include "lcsud/matrix.hpp"

namespace lcsud::testing {

// Independent inverse oracle: extended Euclid over signed 128-bit integers.
inline std::uint64_t ext_euclid_inverse(std::uint64_t a, std::uint64_t p) {
  using i128 = __int128;
  i128 old_r = static_cast<i128>(a % p);
  i128 r = static_cast<i128>(p);
  i128 old_s = 1;
  i128 s = 0;
  while (r != 0) {
    const i128 q = old_r / r;
    const i128 tmp_r = old_r - q * r;
    old_r = r;
    r = tmp_r;
    const i128 tmp_s = old_s - q * s;
    old_s = s;
    s = tmp_s;
  }
  i128 inv = old_s % static_cast<i128>(p);
  if (inv < 0) inv += static_cast<i128>(p);
  return static_cast<std::uint64_t>(inv);
}

// Big-integer (128-bit) product oracle.
inline std::uint64_t bigint_mulmod(std::uint64_t a, std::uint64_t b,
                                   std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

inline FieldElement random_element(const PrimeField& field,
                                   std::mt19937_64& rng) {
  return field.element(rng());
}

}  // namespace lcsud::testing
