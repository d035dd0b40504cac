#include <doctest.h>

#include "hallverdict/arith.hpp"

using namespace hallverdict;
using arith::Natural;

namespace {

// Brute-force r-part through repeated division, for cross-checking.
Natural brute_r_part(Natural n, const Natural& r) {
  Natural part = 1;
  while (n % r == 0) {
    n /= r;
    part *= r;
  }
  return part;
}

std::vector<int> odd_primes_upto(int bound) {
  std::vector<int> out;
  for (int p = 3; p <= bound; p += 2)
    if (arith::is_prime(p)) out.push_back(p);
  return out;
}

}  // namespace

TEST_CASE("prime_factorization basic values") {
  CHECK(arith::prime_factorization(1).factors.empty());

  auto f168 = arith::prime_factorization(168);
  REQUIRE(f168.factors.size() == 3);
  CHECK(f168.factors[0].prime == 2);
  CHECK(f168.factors[0].exponent == 3);
  CHECK(f168.factors[1].prime == 3);
  CHECK(f168.factors[1].exponent == 1);
  CHECK(f168.factors[2].prime == 7);
  CHECK(f168.factors[2].exponent == 1);

  auto f145 = arith::prime_factorization(145);
  REQUIRE(f145.factors.size() == 2);
  CHECK(f145.factors[0].prime == 5);
  CHECK(f145.factors[1].prime == 29);

  CHECK(arith::prime_factorization(Natural("29120")).value() == 29120);
}

TEST_CASE("prime_factorization reconstructs its input") {
  for (int n = 1; n <= 2000; ++n)
    CHECK(arith::prime_factorization(n).value() == n);
}

TEST_CASE("factorization cap on hard composites") {
  // (2^127 - 1)^2 has no factor below the 128-bit cofactor cap.
  Natural m127 = (Natural(1) << 127) - 1;
  CHECK_THROWS_AS(arith::prime_factorization(m127 * m127),
                  CapExceededError);
}

TEST_CASE("is_prime") {
  CHECK(arith::is_prime(2));
  CHECK(arith::is_prime(3));
  CHECK_FALSE(arith::is_prime(1));
  CHECK_FALSE(arith::is_prime(1000000007LL * 998244353LL));
  CHECK(arith::is_prime(Natural("2305843009213693951")));  // 2^61 - 1
  CHECK(arith::is_prime(Natural("170141183460469231731687303715884105727")));  // 2^127 - 1
  int count = 0;
  for (int n = 2; n < 1000; ++n)
    if (arith::is_prime(n)) ++count;
  CHECK(count == 168);
}

TEST_CASE("r_part") {
  CHECK(arith::r_part(24, 2) == 8);
  CHECK(arith::r_part(24, 5) == 1);
  CHECK(arith::r_part(19684, 7) == 7);
}

TEST_CASE("r_part is multiplicative") {
  for (int r : {2, 3, 5, 7}) {
    for (int m = 1; m <= 60; ++m)
      for (int n = 1; n <= 60; ++n)
        CHECK(arith::r_part(Natural(m) * n, r) ==
              arith::r_part(m, r) * arith::r_part(n, r));
  }
}

TEST_CASE("mult_order") {
  CHECK(arith::mult_order(4, 3) == 1);
  CHECK(arith::mult_order(2, 7) == 3);
  CHECK(arith::mult_order(3, 13) == 3);
  CHECK_THROWS_AS(arith::mult_order(6, 3), InvalidInputError);
  CHECK_THROWS_AS(arith::mult_order(3, 2), InvalidInputError);
  CHECK_THROWS_AS(arith::mult_order(3, 15), InvalidInputError);
}

TEST_CASE("mult_order satisfies Fermat") {
  using boost::multiprecision::powm;
  for (int q = 2; q <= 60; ++q) {
    for (int r : odd_primes_upto(60)) {
      if (q % r == 0) continue;
      Natural e = arith::mult_order(q, r);
      CHECK(powm(Natural(q), e, Natural(r)) == 1);
      CHECK((r - 1) % e == 0);
      // minimality
      for (Natural d = 1; d < e; ++d)
        if (e % d == 0) CHECK(powm(Natural(q), d, Natural(r)) != 1);
    }
  }
}

TEST_CASE("e_star") {
  CHECK(arith::e_star(3) == 6);
  CHECK(arith::e_star(4) == 4);
  CHECK(arith::e_star(6) == 3);
  for (int e = 1; e <= 1000; ++e)
    CHECK(arith::e_star(arith::e_star(e)) == e);
}

TEST_CASE("epsilon_of") {
  CHECK(arith::epsilon_of(5) == 1);
  CHECK(arith::epsilon_of(7) == -1);
  CHECK(arith::epsilon_of(29) == 1);
  CHECK_THROWS_AS(arith::epsilon_of(8), InvalidInputError);
}

TEST_CASE("factorial_r_part") {
  CHECK(arith::factorial_r_part(10, 3) == 81);
  CHECK(arith::factorial_r_part(5, 7) == 1);
  CHECK(arith::factorial_r_part(5, 5) == 5);
}

TEST_CASE("factorial_r_part equals the r-part of n!") {
  for (int r : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47}) {
    Natural fact = 1;
    for (int n = 1; n <= 200; ++n) {
      fact *= n;
      CHECK(arith::factorial_r_part(n, r) == brute_r_part(fact, r));
    }
  }
}

TEST_CASE("prod_r_part spot values") {
  CHECK(arith::prod_r_part(5, 4, 3, false) == 9);
  CHECK(arith::prod_r_part(2, 6, 7, false) == 49);
  CHECK(arith::prod_r_part(2, 1, 5, false) == 1);
  CHECK_THROWS_AS(arith::prod_r_part(6, 4, 3, false), InvalidInputError);
}

TEST_CASE("prod_r_part equals the r-part of the literal product (sample)") {
  for (int q : {2, 3, 5, 7, 10, 12}) {
    for (int r : odd_primes_upto(13)) {
      if (q % r == 0) continue;
      for (bool signed_product : {false, true}) {
        Natural literal = 1;
        for (int n = 1; n <= 30; ++n) {
          Natural term = arith::pow_nat(q, n);
          if (signed_product && n % 2 == 1)
            term += 1;
          else
            term -= 1;
          literal *= brute_r_part(term, r);
          CHECK(arith::prod_r_part(q, n, r, signed_product) == literal);
        }
      }
    }
  }
}

TEST_CASE("fermat_prime_test") {
  CHECK(arith::fermat_prime_test(5));
  CHECK_FALSE(arith::fermat_prime_test(7));
  CHECK(arith::fermat_prime_test(257));
  CHECK(arith::fermat_prime_test(3));
  CHECK(arith::fermat_prime_test(17));
  CHECK(arith::fermat_prime_test(65537));
  CHECK_FALSE(arith::fermat_prime_test(13));
  CHECK_FALSE(arith::fermat_prime_test(4));
  CHECK_FALSE(arith::fermat_prime_test(Natural("4294967297")));  // 641 * 6700417
}
