#include "doctest.h"
#include "helpers.hpp"
#include "lcsud/ffield.hpp"

using namespace lcsud;
using lcsud::testing::bigint_mulmod;
using lcsud::testing::ext_euclid_inverse;

TEST_CASE("primality test") {
  CHECK(is_prime_u64(2));
  CHECK(is_prime_u64(3));
  CHECK(is_prime_u64(7));
  CHECK(is_prime_u64(65537));
  CHECK(is_prime_u64(2147483647));
  CHECK(is_prime_u64(2305843009213693951ull));  // 2^61 - 1
  CHECK_FALSE(is_prime_u64(0));
  CHECK_FALSE(is_prime_u64(1));
  CHECK_FALSE(is_prime_u64(4));
  CHECK_FALSE(is_prime_u64(65536));
  CHECK_FALSE(is_prime_u64(561));  // Carmichael
  CHECK_THROWS_AS(PrimeField(65536), std::invalid_argument);
}

TEST_CASE("field arithmetic examples") {
  const PrimeField f7(7);
  CHECK((f7.element(3) + f7.element(5)).value() == 1);
  for (std::uint64_t x = 0; x < 7; ++x) {
    CHECK(f7.element(1) * f7.element(x) == f7.element(x));
  }

  const PrimeField big(65537);
  // (p-1)^2 mod p, checked against the 128-bit oracle.
  const std::uint64_t expected = bigint_mulmod(65536, 65536, 65537);
  CHECK(expected == 1);
  CHECK((big.element(65536) * big.element(65536)).value() == expected);
}

TEST_CASE("field mismatch is rejected") {
  const PrimeField f7(7);
  const PrimeField f5(5);
  CHECK_THROWS_AS(f7.element(1) + f5.element(1), FieldMismatch);
  CHECK_THROWS_AS(f7.element(2) * f5.element(2), FieldMismatch);
}

TEST_CASE("inverse examples") {
  const PrimeField f7(7);
  CHECK(f7.element(2).inv() == f7.element(4));
  CHECK(f7.element(1).inv() == f7.element(1));
  CHECK_THROWS_AS(f7.zero().inv(), DivisionByZero);

  const PrimeField big(65537);
  const std::uint64_t oracle = ext_euclid_inverse(3, 65537);
  CHECK(oracle == 21846);
  CHECK(bigint_mulmod(3, oracle, 65537) == 1);
  CHECK(big.element(3).inv().value() == oracle);
}

TEST_CASE("batch inversion") {
  const PrimeField f7(7);
  SUBCASE("matches the per-element oracle") {
    const std::vector<FieldElement> in = {f7.element(2), f7.element(3)};
    const std::vector<FieldElement> out = batch_inv(in);
    REQUIRE(out.size() == 2);
    CHECK(out[0] == f7.element(ext_euclid_inverse(2, 7)));
    CHECK(out[1] == f7.element(ext_euclid_inverse(3, 7)));
    CHECK(out[0] == f7.element(4));
    CHECK(out[1] == f7.element(5));
  }
  SUBCASE("identity") {
    const std::vector<FieldElement> out = batch_inv({f7.element(1)});
    CHECK((out == std::vector<FieldElement>{f7.element(1)}));
  }
  SUBCASE("zero entry reports its index") {
    const std::vector<FieldElement> in = {f7.element(2), f7.zero(),
                                          f7.element(3)};
    try {
      batch_inv(in);
      FAIL("expected DivisionByZero");
    } catch (const DivisionByZero& e) {
      REQUIRE(e.index().has_value());
      CHECK(*e.index() == 1);
    }
  }
  SUBCASE("empty input") { CHECK(batch_inv({}).empty()); }
}

TEST_CASE("ring axioms hold on random triples") {
  for (std::uint64_t p : {7ull, 65537ull, 2147483647ull}) {
    const PrimeField field(p);
    std::mt19937_64 rng(2024);
    const int trials = (p == 65537) ? 10000 : 2000;
    for (int i = 0; i < trials; ++i) {
      const FieldElement a = testing::random_element(field, rng);
      const FieldElement b = testing::random_element(field, rng);
      const FieldElement c = testing::random_element(field, rng);
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      CHECK(a * (b + c) == a * b + a * c);
      CHECK((a - b) + b == a);
    }
  }
}

TEST_CASE("inverse property") {
  const PrimeField f7(7);
  for (std::uint64_t x = 1; x < 7; ++x) {
    CHECK(f7.element(x) * f7.element(x).inv() == f7.one());
  }
  const PrimeField big(65537);
  std::mt19937_64 rng(99);
  for (int i = 0; i < 500; ++i) {
    FieldElement a = testing::random_element(big, rng);
    if (a.is_zero()) continue;
    CHECK(a * a.inv() == big.one());
    CHECK(bigint_mulmod(a.value(), a.inv().value(), 65537) == 1);
  }
}

TEST_CASE("batch inversion agrees with element-wise inversion") {
  const PrimeField field(65537);
  std::mt19937_64 rng(7);
  for (int round = 0; round < 50; ++round) {
    std::vector<FieldElement> values;
    for (int i = 0; i < 40; ++i) {
      FieldElement v = testing::random_element(field, rng);
      if (v.is_zero()) v = field.one();
      values.push_back(v);
    }
    const std::vector<FieldElement> batched = batch_inv(values);
    for (std::size_t i = 0; i < values.size(); ++i) {
      CHECK(batched[i] == values[i].inv());
    }
  }
}
